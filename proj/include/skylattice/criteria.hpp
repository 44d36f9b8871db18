#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace skylattice {

inline constexpr std::size_t kMaxCriteria = 63;

/// Position of a criterion in the declared criterion list.
using CriterionId = std::size_t;

/// A subset of the declared criteria, stored as a bit mask (bit i = criterion i).
class CriterionSet {
public:
    using Mask = std::uint64_t;

    constexpr CriterionSet() = default;
    constexpr explicit CriterionSet(Mask mask) : mask_(mask) {}

    static constexpr CriterionSet empty() { return CriterionSet{}; }

    /// All of the first `d` criteria.
    static constexpr CriterionSet full(std::size_t d) {
        return CriterionSet{d == 0 ? Mask{0} : (~Mask{0} >> (64 - d))};
    }

    static constexpr CriterionSet single(CriterionId id) { return CriterionSet{Mask{1} << id}; }

    static CriterionSet of(std::initializer_list<CriterionId> ids) {
        CriterionSet s;
        for (auto id : ids) s = s.with(id);
        return s;
    }

    constexpr Mask mask() const { return mask_; }
    constexpr bool is_empty() const { return mask_ == 0; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr bool contains(CriterionId id) const { return (mask_ >> id) & 1U; }

    constexpr bool subset_of(CriterionSet other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool proper_subset_of(CriterionSet other) const {
        return subset_of(other) && mask_ != other.mask_;
    }

    constexpr CriterionSet with(CriterionId id) const { return CriterionSet{mask_ | (Mask{1} << id)}; }
    constexpr CriterionSet without(CriterionId id) const {
        return CriterionSet{mask_ & ~(Mask{1} << id)};
    }

    constexpr CriterionSet operator&(CriterionSet o) const { return CriterionSet{mask_ & o.mask_}; }
    constexpr CriterionSet operator|(CriterionSet o) const { return CriterionSet{mask_ | o.mask_}; }
    constexpr CriterionSet complement(std::size_t d) const {
        return CriterionSet{~mask_ & full(d).mask_};
    }

    /// Members in ascending id order.
    std::vector<CriterionId> members() const {
        std::vector<CriterionId> out;
        out.reserve(size());
        for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(static_cast<CriterionId>(std::countr_zero(m)));
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (Mask m = mask_; m != 0; m &= m - 1) fn(static_cast<CriterionId>(std::countr_zero(m)));
    }

    constexpr bool operator==(const CriterionSet&) const = default;

private:
    Mask mask_ = 0;
};

/// Canonical order: ascending cardinality, then lexicographic on the ascending member ids.
/// On {P,E,C,V} this lists P, E, C, V, PE, PC, PV, EC, EV, CV, PEC, ...
bool canonical_less(CriterionSet a, CriterionSet b);

/// Every subset of the first `d` criteria (2^d of them), in canonical order.
std::vector<CriterionSet> all_subsets(std::size_t d);

/// Criterion names used to render CriterionSet values.
/// Single-character names render concatenated ("ECV"); otherwise they are joined with ','.
class CriterionNames {
public:
    CriterionNames() = default;
    explicit CriterionNames(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& operator[](CriterionId id) const { return names_[id]; }
    const std::vector<std::string>& names() const { return names_; }
    bool compact() const { return compact_; }

    std::string render(CriterionSet set) const;

    /// Parses either a comma-separated name list or, when every name is a single
    /// character, a concatenated form such as "EC". Throws SchemaError on unknown names.
    CriterionSet parse(const std::string& text) const;

    /// Returns the id of `name`, or size() if not declared.
    CriterionId find(const std::string& name) const;

private:
    std::vector<std::string> names_;
    bool compact_ = true;
};

}  // namespace skylattice

template <>
struct std::hash<skylattice::CriterionSet> {
    std::size_t operator()(skylattice::CriterionSet s) const noexcept {
        return std::hash<std::uint64_t>{}(s.mask());
    }
};
