#pragma once

#include <span>
#include <string>
#include <vector>

#include "skylattice/partition.hpp"
#include "skylattice/relation.hpp"

namespace skylattice {

/// Accords(r): the distinct agree sets over all pairs of tuples, in canonical order.
struct AgreeSetFamily {
    std::vector<CriterionSet> sets;
    std::string source;

    bool contains(CriterionSet s) const;
};

/// Acc(t, t2): criteria on which two distinct tuples take equal values.
CriterionSet acc_pair(const Tuple& t, const Tuple& t2);

/// Acc(T) for the tuples with the given ids. A single tuple agrees with itself on every
/// criterion, so Acc({t}) is the full criterion set. Throws on an empty id list.
CriterionSet acc_set(const Relation& r, std::span<const RowId> ids);

/// Pairwise scan; fewer than two tuples give an empty family.
AgreeSetFamily agree_sets(const Relation& r);

/// [t]_C: ids of the tuples sharing t's projection on C.
std::vector<RowId> equiv_class(const Tuple& t, CriterionSet c, const Relation& r);

/// g(C) = π_C, the partition of Tid(r) into C-equivalence classes.
Partition g_map(CriterionSet c, const Relation& r);

/// f(π): intersection of Acc(block) over the blocks of π (singleton blocks contribute 𝒞).
CriterionSet f_map(const Partition& pi, const Relation& r);

/// h(C) = f(g(C)).
CriterionSet h_closure(CriterionSet c, const Relation& r);

/// h(C) as the intersection of the agree sets containing C; 𝒞 when none does.
CriterionSet h_closure(CriterionSet c, const AgreeSetFamily& accords, std::size_t degree);

/// h'(π) = g(f(π)).
Partition h_prime(const Partition& pi, const Relation& r);

/// Fixpoints of h in canonical order; always ends with 𝒞.
std::vector<CriterionSet> closed_sets(const Relation& r);

}  // namespace skylattice
