#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "skylattice/partition.hpp"
#include "skylattice/relation.hpp"

namespace skylattice {

/// SKY_C(r): criteria queried and the ids of the non-dominated tuples, ascending.
struct SkylineResult {
    CriterionSet criteria;
    std::vector<RowId> rows;

    bool operator==(const SkylineResult&) const = default;
};

struct SkylineOptions {
    /// Visit tuples by ascending (sum, projection) so that every strict dominator is
    /// seen first; the result is identical to the pairwise scan.
    bool presort = false;
};

/// Pairwise comparison counter, filled by the skyline kernels when non-null.
struct ComparisonCounter {
    std::uint64_t comparisons = 0;
};

/// Weak dominance t ⪰_C t2: t is <= t2 on every criterion of C. Requires C non-empty.
bool dominates(const Tuple& t, const Tuple& t2, CriterionSet c);

/// Strict dominance t ≻_C t2: weak dominance plus a strictly smaller value somewhere in C.
bool strictly_dominates(const Tuple& t, const Tuple& t2, CriterionSet c);

/// Dominance when no two tuples in play share their projection on C; no check is done
/// (debug builds assert t and t2 differ on C).
bool dominates_under_cna(const Tuple& t, const Tuple& t2, CriterionSet c);

/// SKY_C(r). Empty when C is empty or r is empty.
SkylineResult skyline(const Relation& r, CriterionSet c, SkylineOptions opts = {},
                      ComparisonCounter* counter = nullptr);

/// Skyline of the sub-relation `rows` of r, dominance computed within `rows` only.
SkylineResult skyline_within(const Relation& r, std::span<const RowId> rows, CriterionSet c,
                             SkylineOptions opts = {}, ComparisonCounter* counter = nullptr);

/// Π-SKY_C(pi): blocks of pi whose members belong to SKY_C(r), decided on block
/// representatives (smallest id). Empty when C is empty.
std::vector<Block> pi_sky(const Partition& pi, CriterionSet c, const Relation& r,
                          ComparisonCounter* counter = nullptr);

/// CNA_C: no two distinct tuples share their projection on C. Requires C non-empty.
bool is_cna(const Relation& r, CriterionSet c);
bool is_cna(const Relation& r, std::span<const RowId> rows, CriterionSet c);

}  // namespace skylattice
