#pragma once

// Shared fixtures and brute-force oracles for the test suites. Nothing here calls
// into the library's skyline, partition or closure code paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "skylattice/criteria.hpp"
#include "skylattice/partition.hpp"
#include "skylattice/relation.hpp"

namespace skytest {

using namespace skylattice;

// Criteria P, E, C, V are ids 0..3.
inline constexpr CriterionId P = 0, E = 1, C = 2, V = 3;

inline CriterionSet crit(std::initializer_list<CriterionId> ids) { return CriterionSet::of(ids); }

inline Relation make_relation(const std::vector<std::vector<double>>& values, std::vector<std::string> names,
                              std::string name = "r") {
    std::vector<Row> rows;
    for (const auto& v : values) rows.push_back(Row{{}, v});
    return Relation(std::move(name), {}, CriterionNames(std::move(names)), std::move(rows));
}

/// The five-row housing relation (price, distance, energy use, neighbours).
inline Relation logements() {
    std::vector<Row> rows = {
        {{"Dupont", "Marseille"}, {220, 15, 275, 5}},
        {{"Dupond", "Paris"}, {100, 15, 85, 1}},
        {{"Martin", "Marseille"}, {220, 7, 180, 1}},
        {{"Sanchez", "Aubagne"}, {340, 7, 85, 3}},
        {{"Durand", "Paris"}, {100, 7, 180, 1}},
    };
    return Relation("logements", {"Proprietaire", "Ville"}, CriterionNames({"P", "E", "C", "V"}), std::move(rows));
}

/// t1 = (0, 1), t2 = (1, 0) over criteria A, B.
inline Relation counterexample() { return make_relation({{0, 1}, {1, 0}}, {"A", "B"}, "counterexample"); }

inline std::vector<RowId> ids(std::initializer_list<std::uint32_t> xs) {
    std::vector<RowId> out;
    for (auto x : xs) out.push_back(RowId{x});
    return out;
}

inline RowId rid(std::uint32_t x) { return RowId{x}; }

inline std::string names_of(const std::vector<RowId>& rows) {
    std::string out;
    for (auto r : rows) out += (out.empty() ? "" : " ") + std::to_string(r.value);
    return out;
}

/// Random relation with integer values in [0, max_value] so that agreements are frequent.
inline Relation random_relation(std::mt19937_64& rng, std::size_t n, std::size_t d, int max_value = 7) {
    std::uniform_int_distribution<int> val(0, max_value);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) names.push_back(std::string(1, static_cast<char>('A' + i)));
    std::vector<std::vector<double>> values(n, std::vector<double>(d));
    for (auto& row : values)
        for (auto& v : row) v = val(rng);
    return make_relation(values, names, "random");
}

/// Random relation drawn from a small pool of distinct rows, so that whole-tuple duplicates abound.
inline Relation duplicate_heavy_relation(std::mt19937_64& rng, std::size_t n, std::size_t d, std::size_t pool) {
    std::uniform_int_distribution<int> val(0, 100);
    std::vector<std::vector<double>> distinct(pool, std::vector<double>(d));
    for (auto& row : distinct)
        for (auto& v : row) v = val(rng);
    std::uniform_int_distribution<std::size_t> pick(0, pool - 1);
    std::vector<std::vector<double>> values;
    for (std::size_t i = 0; i < n; ++i) values.push_back(distinct[pick(rng)]);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i) names.push_back("c" + std::to_string(i));
    return make_relation(values, names, "duplicates");
}

// ---- oracles --------------------------------------------------------------

/// SKY_C(r) straight from the definition: no other tuple is <= everywhere on C and < somewhere.
inline std::vector<RowId> brute_skyline(const Relation& r, CriterionSet c) {
    std::vector<RowId> out;
    if (c.is_empty()) return out;
    auto members = c.members();
    for (const auto& t : r.tuples()) {
        bool dominated = false;
        for (const auto& u : r.tuples()) {
            if (u.rowid == t.rowid) continue;
            bool all_le = true, some_lt = false;
            for (auto k : members) {
                all_le = all_le && u.crits[k] <= t.crits[k];
                some_lt = some_lt || u.crits[k] < t.crits[k];
            }
            if (all_le && some_lt) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(t.rowid);
    }
    return out;
}

/// Skyline of a tuple subset, dominance judged only within the subset.
inline std::vector<RowId> brute_skyline_within(const Relation& r, const std::vector<RowId>& subset, CriterionSet c) {
    std::vector<RowId> out;
    if (c.is_empty()) return out;
    auto members = c.members();
    for (auto ti : subset) {
        const auto& t = r.tuple(ti);
        bool dominated = false;
        for (auto ui : subset) {
            if (ui == ti) continue;
            const auto& u = r.tuple(ui);
            bool all_le = true, some_lt = false;
            for (auto k : members) {
                all_le = all_le && u.crits[k] <= t.crits[k];
                some_lt = some_lt || u.crits[k] < t.crits[k];
            }
            if (all_le && some_lt) dominated = true;
        }
        if (!dominated) out.push_back(ti);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Closure by pair scan: criterion k is in h(C) iff every pair agreeing on C also agrees on k.
inline CriterionSet brute_closure(const Relation& r, CriterionSet c) {
    CriterionSet out = r.all_criteria();
    const auto& ts = r.tuples();
    auto members = c.members();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            bool agree = std::all_of(members.begin(), members.end(),
                                     [&](CriterionId k) { return ts[i].crits[k] == ts[j].crits[k]; });
            if (!agree) continue;
            for (std::size_t k = 0; k < r.degree(); ++k)
                if (ts[i].crits[k] != ts[j].crits[k]) out = out.without(k);
        }
    }
    return out;
}

/// Partition sum by union-find over "same block in either partition".
inline Partition union_find_sum(const Partition& p, const Partition& q) {
    const auto& universe = p.universe();
    std::vector<std::size_t> parent(universe.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto pos = [&](RowId id) {
        return static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), id) - universe.begin());
    };
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto* part : {&p, &q})
        for (const auto& b : part->blocks())
            for (auto id : b) parent[find(pos(id))] = find(pos(b.front()));
    std::vector<std::vector<RowId>> groups(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) groups[find(i)].push_back(universe[i]);
    std::vector<Block> blocks;
    for (auto& g : groups)
        if (!g.empty()) blocks.push_back(std::move(g));
    return Partition(std::move(blocks));
}

/// Every partition of {1..n} via restricted growth strings.
inline std::vector<Partition> all_partitions(std::uint32_t n) {
    std::vector<Partition> out;
    std::vector<std::uint32_t> label(n, 0);
    auto emit = [&] {
        std::uint32_t k = *std::max_element(label.begin(), label.end()) + 1;
        std::vector<Block> blocks(k);
        for (std::uint32_t i = 0; i < n; ++i) blocks[label[i]].push_back(RowId{i + 1});
        out.emplace_back(std::move(blocks));
    };
    // label[0] = 0; label[i] <= 1 + max(label[0..i-1])
    std::vector<std::uint32_t> prefix_max(n, 0);
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t i) {
        if (i == n) {
            emit();
            return;
        }
        std::uint32_t limit = i == 0 ? 0 : prefix_max[i - 1] + 1;
        for (std::uint32_t v = 0; v <= limit; ++v) {
            label[i] = v;
            prefix_max[i] = i == 0 ? v : std::max(prefix_max[i - 1], v);
            rec(i + 1);
        }
    };
    if (n > 0) rec(0);
    return out;
}

/// Refinement straight from the definition: each block of p is a subset of some block of q.
inline bool brute_finer(const Partition& p, const Partition& q) {
    for (const auto& x : p.blocks()) {
        bool inside = false;
        for (const auto& y : q.blocks())
            inside = inside || std::includes(y.begin(), y.end(), x.begin(), x.end());
        if (!inside) return false;
    }
    return true;
}

}  // namespace skytest
