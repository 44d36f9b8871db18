#include "skylattice/dominance.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "skylattice/errors.hpp"

namespace skylattice {

namespace {

void require_nonempty(CriterionSet c) {
    if (c.is_empty()) throw ContractViolation("dominance needs a non-empty criterion set");
}

bool projection_less(const Tuple& a, const Tuple& b, CriterionSet c) {
    for (auto m = c.mask(); m != 0; m &= m - 1) {
        auto id = static_cast<std::size_t>(std::countr_zero(m));
        if (a.crits[id] != b.crits[id]) return a.crits[id] < b.crits[id];
    }
    return false;
}

double projection_sum(const Tuple& t, CriterionSet c) {
    double s = 0;
    c.for_each([&](CriterionId id) { s += t.crits[id]; });
    return s;
}

bool strict_unchecked(const Tuple& t, const Tuple& t2, CriterionSet c) {
    bool strict = false;
    for (auto m = c.mask(); m != 0; m &= m - 1) {
        auto id = static_cast<std::size_t>(std::countr_zero(m));
        if (t.crits[id] > t2.crits[id]) return false;
        if (t.crits[id] < t2.crits[id]) strict = true;
    }
    return strict;
}

}  // namespace

bool dominates(const Tuple& t, const Tuple& t2, CriterionSet c) {
    require_nonempty(c);
    for (auto m = c.mask(); m != 0; m &= m - 1) {
        auto id = static_cast<std::size_t>(std::countr_zero(m));
        if (t.crits[id] > t2.crits[id]) return false;
    }
    return true;
}

bool strictly_dominates(const Tuple& t, const Tuple& t2, CriterionSet c) {
    require_nonempty(c);
    return strict_unchecked(t, t2, c);
}

bool dominates_under_cna(const Tuple& t, const Tuple& t2, CriterionSet c) {
    assert(!same_projection(t, t2, c) && "CNA violated: equal projections");
    for (auto m = c.mask(); m != 0; m &= m - 1) {
        auto id = static_cast<std::size_t>(std::countr_zero(m));
        if (t.crits[id] > t2.crits[id]) return false;
    }
    return true;
}

SkylineResult skyline_within(const Relation& r, std::span<const RowId> rows, CriterionSet c,
                             SkylineOptions opts, ComparisonCounter* counter) {
    SkylineResult out{c, {}};
    if (c.is_empty() || rows.empty()) return out;
    std::uint64_t comparisons = 0;

    if (!opts.presort) {
        for (auto id : rows) {
            const Tuple& t = r.tuple(id);
            bool dominated = false;
            for (auto other : rows) {
                if (other == id) continue;
                ++comparisons;
                if (strict_unchecked(r.tuple(other), t, c)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) out.rows.push_back(id);
        }
    } else {
        // A strict dominator has a smaller-or-equal sum and a lexicographically smaller
        // projection, so it always precedes the tuple it dominates in this order.
        std::vector<RowId> order(rows.begin(), rows.end());
        std::vector<double> sums(r.size() + 1, 0.0);
        for (auto id : order) sums[id.value] = projection_sum(r.tuple(id), c);
        std::sort(order.begin(), order.end(), [&](RowId a, RowId b) {
            if (sums[a.value] != sums[b.value]) return sums[a.value] < sums[b.value];
            const Tuple& ta = r.tuple(a);
            const Tuple& tb = r.tuple(b);
            if (projection_less(ta, tb, c)) return true;
            if (projection_less(tb, ta, c)) return false;
            return a < b;
        });
        std::vector<RowId> window;
        for (auto id : order) {
            const Tuple& t = r.tuple(id);
            bool dominated = false;
            for (auto w : window) {
                ++comparisons;
                if (strict_unchecked(r.tuple(w), t, c)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) window.push_back(id);
        }
        out.rows = std::move(window);
    }
    std::sort(out.rows.begin(), out.rows.end());
    if (counter) counter->comparisons += comparisons;
    return out;
}

SkylineResult skyline(const Relation& r, CriterionSet c, SkylineOptions opts, ComparisonCounter* counter) {
    auto ids = r.tid();
    return skyline_within(r, ids, c, opts, counter);
}

std::vector<Block> pi_sky(const Partition& pi, CriterionSet c, const Relation& r, ComparisonCounter* counter) {
    if (pi.universe() != r.tid()) throw ContractViolation("pi_sky: partition does not cover Tid(r)");
    std::vector<Block> out;
    if (c.is_empty()) return out;
    auto representatives = reps(pi);
    std::uint64_t comparisons = 0;
    for (std::size_t i = 0; i < representatives.size(); ++i) {
        const Tuple& t = r.tuple(representatives[i]);
        bool dominated = false;
        for (std::size_t j = 0; j < representatives.size() && !dominated; ++j) {
            if (i == j) continue;
            ++comparisons;
            dominated = strict_unchecked(r.tuple(representatives[j]), t, c);
        }
        if (!dominated) out.push_back(pi.blocks()[i]);
    }
    if (counter) counter->comparisons += comparisons;
    return out;
}

bool is_cna(const Relation& r, std::span<const RowId> rows, CriterionSet c) {
    require_nonempty(c);
    std::vector<RowId> order(rows.begin(), rows.end());
    std::sort(order.begin(), order.end(),
              [&](RowId a, RowId b) { return projection_less(r.tuple(a), r.tuple(b), c); });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (same_projection(r.tuple(order[i - 1]), r.tuple(order[i]), c)) return false;
    }
    return true;
}

bool is_cna(const Relation& r, CriterionSet c) {
    auto ids = r.tid();
    return is_cna(r, ids, c);
}

}  // namespace skylattice
