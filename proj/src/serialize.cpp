#include "skylattice/serialize.hpp"

#include <algorithm>

#include "skylattice/errors.hpp"

namespace skylattice {

namespace {

constexpr const char* kStoreFormat = "skylattice-partial/1";

Json rows_json(const std::vector<RowId>& rows) {
    Json out = Json::array();
    for (auto id : rows) out.push_back(id.value);
    return out;
}

template <class Concept, class ExtensionFn>
Json lattice_json(const ConceptLattice<Concept>& l, const CriterionNames& names, ExtensionFn extension) {
    Json concepts = Json::array();
    for (const auto& c : l.concepts)
        concepts.push_back(Json{{"intension", names.render(c.intension)}, {"extension", extension(c)}});
    Json edges = Json::array();
    for (auto [lo, hi] : l.edges) edges.push_back(Json::array({lo, hi}));
    return Json{{"concepts", std::move(concepts)}, {"edges", std::move(edges)}};
}

template <class T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("store: missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("store: bad field '") + key + "': " + e.what());
    }
}

}  // namespace

Json to_json(const SkylineResult& s, const CriterionNames& names) {
    return Json{{"criteria", names.render(s.criteria)}, {"rows", rows_json(s.rows)}};
}

Json to_json(const AgreeSetFamily& f, const CriterionNames& names) {
    std::vector<std::string> texts;
    for (auto s : f.sets) texts.push_back(names.render(s));
    std::sort(texts.begin(), texts.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return Json(texts);
}

Json to_json(const AgreeLattice& l, const CriterionNames& names) {
    return lattice_json(l, names, [](const AgreeConcept& c) { return c.extension.to_string(); });
}

Json to_json(const SkylineLattice& l, const CriterionNames& names) {
    return lattice_json(l, names, [](const SkylineConcept& c) { return blocks_to_string(c.sky_blocks); });
}

Json to_json(const Skycube& cube) {
    Json cuboids = Json::object();
    for (const auto& c : cube.cuboids()) cuboids[cube.criteria().render(c.criteria)] = rows_json(c.rows);
    return Json{{"relation", cube.relation_name()},
                {"criteria", cube.criteria().names()},
                {"cuboids", std::move(cuboids)}};
}

Json to_json(const Relation& r) {
    Json rows = Json::array();
    for (const auto& t : r.tuples()) rows.push_back(Json{{"dims", t.dims}, {"crits", t.crits}});
    return Json{{"name", r.name()},
                {"dimensions", r.dim_names()},
                {"criteria", r.criteria().names()},
                {"rows", std::move(rows)}};
}

Relation relation_from_json(const Json& j) {
    auto name = field<std::string>(j, "name");
    auto dims = field<std::vector<std::string>>(j, "dimensions");
    auto crits = field<std::vector<std::string>>(j, "criteria");
    if (!j.at("rows").is_array()) throw SchemaError("store: 'rows' must be an array");
    std::vector<Row> rows;
    for (const auto& row : j.at("rows"))
        rows.push_back(Row{field<std::vector<std::string>>(row, "dims"), field<std::vector<double>>(row, "crits")});
    return Relation(std::move(name), std::move(dims), CriterionNames(std::move(crits)), std::move(rows));
}

Json to_json(const PartialSkycube& p) {
    const auto& names = p.relation().criteria();
    Json lattice = to_json(p.lattice(), names);
    return Json{{"format", kStoreFormat},
                {"relation", to_json(p.relation())},
                {"agree_sets", to_json(p.accords(), names)},
                {"concepts", std::move(lattice["concepts"])},
                {"edges", std::move(lattice["edges"])},
                {"bottom", p.lattice().bottom},
                {"top", p.lattice().top}};
}

PartialSkycube partial_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("format") || j.at("format") != kStoreFormat)
        throw SchemaError("not a materialized store (expected format '" + std::string(kStoreFormat) + "')");
    if (!j.contains("relation")) throw SchemaError("store: missing field 'relation'");
    Relation r = relation_from_json(j.at("relation"));
    const auto& names = r.criteria();

    AgreeSetFamily accords{{}, r.name()};
    for (const auto& text : field<std::vector<std::string>>(j, "agree_sets")) accords.sets.push_back(names.parse(text));
    std::sort(accords.sets.begin(), accords.sets.end(), canonical_less);

    SkylineLattice lattice;
    if (!j.at("concepts").is_array()) throw SchemaError("store: 'concepts' must be an array");
    for (const auto& c : j.at("concepts")) {
        auto intension = names.parse(field<std::string>(c, "intension"));
        auto extension = field<std::string>(c, "extension");
        try {
            lattice.concepts.push_back(SkylineConcept{intension, Partition::parse(extension).blocks()});
        } catch (const ContractViolation& e) {
            throw SchemaError(std::string("store: bad extension: ") + e.what());
        }
    }
    for (const auto& e : field<std::vector<std::vector<std::size_t>>>(j, "edges")) {
        if (e.size() != 2 || e[0] >= lattice.concepts.size() || e[1] >= lattice.concepts.size())
            throw SchemaError("store: bad edge");
        lattice.edges.emplace_back(e[0], e[1]);
    }
    lattice.bottom = field<std::size_t>(j, "bottom");
    lattice.top = field<std::size_t>(j, "top");

    for (auto c : all_subsets(r.degree())) {
        if (h_closure(c, accords, r.degree()) == c && !lattice.index_of(c))
            throw SchemaError("store: missing concept for closed set '" + names.render(c) + "'");
    }
    return PartialSkycube(std::move(r), std::move(accords), std::move(lattice));
}

}  // namespace skylattice
