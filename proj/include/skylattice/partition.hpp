#pragma once

#include <string>
#include <vector>

#include "skylattice/relation.hpp"

namespace skylattice {

/// A partition of a finite set of row ids, kept in canonical form:
/// ids ascending inside each block, blocks ordered by their smallest id.
/// Two partitions are equal iff their canonical forms are equal.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes `blocks`. Throws ContractViolation on empty or overlapping blocks.
    explicit Partition(std::vector<Block> blocks);

    static Partition single_block(const std::vector<RowId>& universe);
    static Partition discrete(const std::vector<RowId>& universe);

    /// Parses "1|2|35|4". Blocks whose ids need more than one digit use ',' inside
    /// the block ("1,10|2"); single-digit blocks may be written either way.
    static Partition parse(const std::string& text);

    const std::vector<Block>& blocks() const { return blocks_; }
    const std::vector<RowId>& universe() const { return universe_; }
    std::size_t size() const { return blocks_.size(); }
    bool empty() const { return blocks_.empty(); }

    /// Block containing `id`, or nullptr.
    const Block* block_of(RowId id) const;

    std::string to_string() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<Block> blocks_;
    std::vector<RowId> universe_;
};

/// Renders a list of blocks with the partition text syntax (used for filtered partitions too).
std::string blocks_to_string(const std::vector<Block>& blocks);

/// p ⊑ q: every block of p lies inside some block of q.
bool finer_than(const Partition& p, const Partition& q);

/// Infimum: all non-empty pairwise block intersections.
Partition product(const Partition& p, const Partition& q);

/// Supremum, computed by iterating S_0 = max⊆(p ∪ q), S_n = max⊆{R(e, S_{n-1}) | e ∈ E}
/// until a fixpoint is reached.
Partition sum(const Partition& p, const Partition& q);

/// Union of the members of `family` that contain `e` (empty if none do).
Block r_helper(RowId e, const std::vector<Block>& family);

/// Smallest id of each block, ascending.
std::vector<RowId> reps(const Partition& p);

}  // namespace skylattice
