#include "skylattice/galois.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "skylattice/errors.hpp"

namespace skylattice {

bool AgreeSetFamily::contains(CriterionSet s) const {
    return std::find(sets.begin(), sets.end(), s) != sets.end();
}

CriterionSet acc_pair(const Tuple& t, const Tuple& t2) {
    if (t.rowid == t2.rowid) throw ContractViolation("acc_pair needs two distinct tuples");
    CriterionSet out;
    for (std::size_t i = 0; i < t.crits.size(); ++i)
        if (t.crits[i] == t2.crits[i]) out = out.with(i);
    return out;
}

CriterionSet acc_set(const Relation& r, std::span<const RowId> ids) {
    if (ids.empty()) throw ContractViolation("acc_set of an empty tuple set");
    const Tuple& first = r.tuple(ids.front());
    CriterionSet out = r.all_criteria();
    for (auto id : ids.subspan(1)) {
        const Tuple& t = r.tuple(id);
        for (std::size_t i = 0; i < t.crits.size(); ++i)
            if (t.crits[i] != first.crits[i]) out = out.without(i);
    }
    return out;
}

AgreeSetFamily agree_sets(const Relation& r) {
    std::unordered_set<CriterionSet> seen;
    const auto& ts = r.tuples();
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j) seen.insert(acc_pair(ts[i], ts[j]));
    AgreeSetFamily out{{seen.begin(), seen.end()}, r.name()};
    std::sort(out.sets.begin(), out.sets.end(), canonical_less);
    return out;
}

std::vector<RowId> equiv_class(const Tuple& t, CriterionSet c, const Relation& r) {
    if (!r.contains(t.rowid) || r.tuple(t.rowid).crits != t.crits)
        throw ContractViolation("equiv_class: tuple is not part of the relation");
    std::vector<RowId> out;
    for (const auto& other : r.tuples())
        if (same_projection(t, other, c)) out.push_back(other.rowid);
    return out;
}

Partition g_map(CriterionSet c, const Relation& r) {
    std::map<std::vector<double>, Block> classes;
    for (const auto& t : r.tuples()) classes[project(t, c)].push_back(t.rowid);
    std::vector<Block> blocks;
    blocks.reserve(classes.size());
    for (auto& [_, b] : classes) blocks.push_back(std::move(b));
    return Partition(std::move(blocks));
}

CriterionSet f_map(const Partition& pi, const Relation& r) {
    if (pi.universe() != r.tid()) throw ContractViolation("f_map: partition does not cover Tid(r)");
    CriterionSet out = r.all_criteria();
    for (const auto& b : pi.blocks()) out = out & acc_set(r, b);
    return out;
}

CriterionSet h_closure(CriterionSet c, const Relation& r) { return f_map(g_map(c, r), r); }

CriterionSet h_closure(CriterionSet c, const AgreeSetFamily& accords, std::size_t degree) {
    CriterionSet out = CriterionSet::full(degree);
    for (auto s : accords.sets)
        if (c.subset_of(s)) out = out & s;
    return out;
}

Partition h_prime(const Partition& pi, const Relation& r) { return g_map(f_map(pi, r), r); }

std::vector<CriterionSet> closed_sets(const Relation& r) {
    auto accords = agree_sets(r);
    std::vector<CriterionSet> out;
    for (auto c : all_subsets(r.degree()))
        if (h_closure(c, accords, r.degree()) == c) out.push_back(c);
    return out;
}

}  // namespace skylattice
