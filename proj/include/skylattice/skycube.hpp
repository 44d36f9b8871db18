#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skylattice/dominance.hpp"
#include "skylattice/galois.hpp"
#include "skylattice/lattice.hpp"
#include "skylattice/relation.hpp"

namespace skylattice {

/// Every non-empty cuboid SKY_C(r), in canonical criterion-set order.
class Skycube {
public:
    Skycube() = default;
    Skycube(std::string relation_name, std::size_t relation_size, CriterionNames criteria,
            std::vector<SkylineResult> cuboids);

    const std::string& relation_name() const { return relation_name_; }
    std::size_t relation_size() const { return relation_size_; }
    const CriterionNames& criteria() const { return criteria_; }
    const std::vector<SkylineResult>& cuboids() const { return cuboids_; }

    /// Throws ContractViolation for ∅ or for criteria outside the cube.
    const SkylineResult& at(CriterionSet c) const;

private:
    std::string relation_name_;
    std::size_t relation_size_ = 0;
    CriterionNames criteria_;
    std::vector<SkylineResult> cuboids_;
    std::map<CriterionSet::Mask, std::size_t> index_;
};

/// Computes the 2^d - 1 cuboids, spread over up to `threads` workers.
Skycube build_skycube(const Relation& r, std::size_t threads = 1, SkylineOptions opts = {});

struct ReconstructStats {
    CriterionSet closure;
    bool materialized = false;       // C was closed, served verbatim
    std::size_t representatives = 0;  // tuples examined
    std::uint64_t comparisons = 0;
};

/// Skyline-concept lattice over a relation; only closed cuboids are stored.
class PartialSkycube {
public:
    PartialSkycube() = default;
    PartialSkycube(Relation relation, AgreeSetFamily accords, SkylineLattice lattice);

    const Relation& relation() const { return relation_; }
    const AgreeSetFamily& accords() const { return accords_; }
    const SkylineLattice& lattice() const { return lattice_; }

    /// h(C), from the stored agree sets.
    CriterionSet closure(CriterionSet c) const;

    bool operator==(const PartialSkycube&) const;

private:
    Relation relation_;
    AgreeSetFamily accords_;
    SkylineLattice lattice_;
};

PartialSkycube materialize_partial(const Relation& r);

/// SKY_C(r) from the stored concept of h(C): one representative per stored block,
/// skyline on C among them, surviving blocks expanded.
SkylineResult reconstruct_cuboid(const PartialSkycube& p, CriterionSet c, ReconstructStats* stats = nullptr);

struct CuboidMismatch {
    CriterionSet criteria;
    std::vector<RowId> expected;
    std::vector<RowId> actual;
};

struct EquivalenceReport {
    std::size_t checked = 0;
    std::size_t equal = 0;
    std::vector<CuboidMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

EquivalenceReport verify_equivalence(const PartialSkycube& p, const Skycube& full);

struct StorageStats {
    std::size_t concepts = 0;  // stored skyline concepts, bottom included
    std::size_t cuboids = 0;   // 2^d - 1
    std::size_t closed_cuboids = 0;
    std::size_t stored_rows_partial = 0;  // ids stored across concepts, bottom excluded
    std::size_t stored_rows_full = 0;     // ids stored across all cuboids
    std::size_t reconstructed = 0;        // non-closed cuboids
    std::size_t representatives = 0;      // summed over non-closed cuboids
    std::size_t tuples_full_scan = 0;     // n per non-closed cuboid
    std::uint64_t comparisons_reconstruct = 0;
    std::uint64_t comparisons_full_scan = 0;
};

StorageStats stats(const PartialSkycube& p, const Skycube& full);

}  // namespace skylattice
