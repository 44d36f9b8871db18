#include "skylattice/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "skylattice/dominance.hpp"
#include "skylattice/errors.hpp"

namespace skylattice {

std::vector<RowId> SkylineConcept::rows() const {
    std::vector<RowId> out;
    for (const auto& b : sky_blocks) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> cover_edges(const std::vector<CriterionSet>& intensions) {
    std::vector<Edge> edges;
    const auto n = intensions.size();
    for (std::size_t lo = 0; lo < n; ++lo) {
        for (std::size_t hi = 0; hi < n; ++hi) {
            if (!intensions[lo].proper_subset_of(intensions[hi])) continue;
            bool covered = true;
            for (std::size_t mid = 0; mid < n && covered; ++mid) {
                covered = !(intensions[lo].proper_subset_of(intensions[mid]) &&
                            intensions[mid].proper_subset_of(intensions[hi]));
            }
            if (covered) edges.emplace_back(lo, hi);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

namespace {

template <class Concept>
void finish_shape(ConceptLattice<Concept>& l, const std::vector<CriterionSet>& closed) {
    l.edges = cover_edges(closed);
    // closed sets come in canonical order: the smallest (h(∅)) first, 𝒞 last
    l.bottom = 0;
    l.top = closed.empty() ? 0 : closed.size() - 1;
}

void require_nonempty(std::span<const AgreeConcept> concepts) {
    if (concepts.empty()) throw ContractViolation("meet/join of an empty family; use lattice_top/lattice_bottom");
}

}  // namespace

AgreeLattice build_agree_lattice(const Relation& r) {
    auto closed = closed_sets(r);
    AgreeLattice l;
    l.concepts.reserve(closed.size());
    for (auto c : closed) l.concepts.push_back(AgreeConcept{c, g_map(c, r)});
    finish_shape(l, closed);
    return l;
}

SkylineLattice build_skyline_lattice(const Relation& r, const AgreeLattice& agree) {
    SkylineLattice l;
    std::vector<CriterionSet> closed;
    l.concepts.reserve(agree.concepts.size());
    for (const auto& c : agree.concepts) {
        closed.push_back(c.intension);
        // The empty intension keeps its whole partition for display; cuboid queries on ∅ answer ∅.
        if (c.intension.is_empty())
            l.concepts.push_back(SkylineConcept{c.intension, c.extension.blocks()});
        else
            l.concepts.push_back(SkylineConcept{c.intension, pi_sky(c.extension, c.intension, r)});
    }
    l.edges = agree.edges;
    l.bottom = agree.bottom;
    l.top = agree.top;
    return l;
}

SkylineLattice build_skyline_lattice(const Relation& r) { return build_skyline_lattice(r, build_agree_lattice(r)); }

AgreeConcept concept_meet(std::span<const AgreeConcept> concepts, const Relation& r) {
    require_nonempty(concepts);
    CriterionSet intension = concepts.front().intension;
    Partition joined = concepts.front().extension;
    for (const auto& c : concepts.subspan(1)) {
        intension = intension & c.intension;
        joined = sum(joined, c.extension);
    }
    return AgreeConcept{intension, h_prime(joined, r)};
}

AgreeConcept concept_join(std::span<const AgreeConcept> concepts, const Relation& r) {
    require_nonempty(concepts);
    CriterionSet intension = concepts.front().intension;
    Partition met = concepts.front().extension;
    for (const auto& c : concepts.subspan(1)) {
        intension = intension | c.intension;
        met = product(met, c.extension);
    }
    return AgreeConcept{h_closure(intension, r), met};
}

AgreeConcept lattice_top(const Relation& r) {
    auto all = r.all_criteria();
    return AgreeConcept{all, g_map(all, r)};
}

AgreeConcept lattice_bottom(const Relation& r) {
    auto c = h_closure(CriterionSet::empty(), r);
    return AgreeConcept{c, g_map(c, r)};
}

namespace {

std::string render_intension(CriterionSet c, const CriterionNames& names) {
    return c.is_empty() ? "∅" : names.render(c);
}

std::string render_blocks(const std::vector<Block>& blocks) {
    return blocks.empty() ? "∅" : blocks_to_string(blocks);
}

std::string escape_dot(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

template <class Concept>
std::string dot_of(const ConceptLattice<Concept>& l, const CriterionNames& names, const char* graph) {
    std::ostringstream out;
    out << "digraph " << graph << " {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < l.concepts.size(); ++i)
        out << "  n" << i << " [label=\"" << escape_dot(concept_label(l.concepts[i], names)) << "\"];\n";
    for (auto [lo, hi] : l.edges) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace

std::string concept_label(const AgreeConcept& c, const CriterionNames& names) {
    return "(" + render_intension(c.intension, names) + ", " + render_blocks(c.extension.blocks()) + ")";
}

std::string concept_label(const SkylineConcept& c, const CriterionNames& names) {
    return "(" + render_intension(c.intension, names) + ", " + render_blocks(c.sky_blocks) + ")";
}

std::string export_dot(const AgreeLattice& l, const CriterionNames& names) {
    return dot_of(l, names, "agree_lattice");
}

std::string export_dot(const SkylineLattice& l, const CriterionNames& names) {
    return dot_of(l, names, "skyline_lattice");
}

}  // namespace skylattice
