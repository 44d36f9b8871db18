#include "skylattice/skycube.hpp"

#include <algorithm>
#include <thread>

#include "skylattice/errors.hpp"

namespace skylattice {

Skycube::Skycube(std::string relation_name, std::size_t relation_size, CriterionNames criteria,
                 std::vector<SkylineResult> cuboids)
    : relation_name_(std::move(relation_name)),
      relation_size_(relation_size),
      criteria_(std::move(criteria)),
      cuboids_(std::move(cuboids)) {
    for (std::size_t i = 0; i < cuboids_.size(); ++i) index_[cuboids_[i].criteria.mask()] = i;
}

const SkylineResult& Skycube::at(CriterionSet c) const {
    auto it = index_.find(c.mask());
    if (it == index_.end()) throw ContractViolation("no cuboid for criterion set '" + criteria_.render(c) + "'");
    return cuboids_[it->second];
}

Skycube build_skycube(const Relation& r, std::size_t threads, SkylineOptions opts) {
    std::vector<CriterionSet> subsets;
    for (auto c : all_subsets(r.degree()))
        if (!c.is_empty()) subsets.push_back(c);

    std::vector<SkylineResult> cuboids(subsets.size());
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(subsets.size(), 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < subsets.size(); ++i) cuboids[i] = skyline(r, subsets[i], opts);
    } else {
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t i = w; i < subsets.size(); i += threads) cuboids[i] = skyline(r, subsets[i], opts);
            });
        }
    }
    return Skycube(r.name(), r.size(), r.criteria(), std::move(cuboids));
}

PartialSkycube::PartialSkycube(Relation relation, AgreeSetFamily accords, SkylineLattice lattice)
    : relation_(std::move(relation)), accords_(std::move(accords)), lattice_(std::move(lattice)) {}

CriterionSet PartialSkycube::closure(CriterionSet c) const {
    return h_closure(c, accords_, relation_.degree());
}

bool PartialSkycube::operator==(const PartialSkycube& o) const {
    return relation_ == o.relation_ && accords_.sets == o.accords_.sets && lattice_.concepts == o.lattice_.concepts &&
           lattice_.edges == o.lattice_.edges && lattice_.top == o.lattice_.top && lattice_.bottom == o.lattice_.bottom;
}

PartialSkycube materialize_partial(const Relation& r) {
    return PartialSkycube(r, agree_sets(r), build_skyline_lattice(r));
}

SkylineResult reconstruct_cuboid(const PartialSkycube& p, CriterionSet c, ReconstructStats* stats) {
    const Relation& r = p.relation();
    if (!c.subset_of(r.all_criteria())) throw ContractViolation("criterion set contains undeclared criteria");
    ReconstructStats local;
    ReconstructStats& st = stats ? *stats : local;
    st = ReconstructStats{};

    SkylineResult out{c, {}};
    if (c.is_empty()) return out;

    st.closure = p.closure(c);
    const SkylineConcept& stored = p.lattice().at(st.closure);
    if (st.closure == c) {
        st.materialized = true;
        out.rows = stored.rows();
        return out;
    }

    // Stored blocks are classes of π_h(C) = π_C, so representatives never share a
    // projection on C and weak dominance among them is strict dominance.
    const auto& blocks = stored.sky_blocks;
    st.representatives = blocks.size();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Tuple& t = r.tuple(blocks[i].front());
        bool dominated = false;
        for (std::size_t j = 0; j < blocks.size() && !dominated; ++j) {
            if (i == j) continue;
            ++st.comparisons;
            dominated = dominates_under_cna(r.tuple(blocks[j].front()), t, c);
        }
        if (!dominated) out.rows.insert(out.rows.end(), blocks[i].begin(), blocks[i].end());
    }
    std::sort(out.rows.begin(), out.rows.end());
    return out;
}

namespace {

void require_same_relation(const PartialSkycube& p, const Skycube& full) {
    const Relation& r = p.relation();
    if (r.name() != full.relation_name() || r.size() != full.relation_size() ||
        r.criteria().names() != full.criteria().names())
        throw ContractViolation("partial and full skycube come from different relations");
}

}  // namespace

EquivalenceReport verify_equivalence(const PartialSkycube& p, const Skycube& full) {
    require_same_relation(p, full);
    EquivalenceReport report;
    for (const auto& cuboid : full.cuboids()) {
        ++report.checked;
        auto rebuilt = reconstruct_cuboid(p, cuboid.criteria);
        if (rebuilt.rows == cuboid.rows)
            ++report.equal;
        else
            report.mismatches.push_back(CuboidMismatch{cuboid.criteria, cuboid.rows, rebuilt.rows});
    }
    return report;
}

StorageStats stats(const PartialSkycube& p, const Skycube& full) {
    require_same_relation(p, full);
    const Relation& r = p.relation();
    StorageStats s;
    s.concepts = p.lattice().concepts.size();
    s.cuboids = full.cuboids().size();
    for (const auto& c : p.lattice().concepts) {
        if (c.intension.is_empty()) continue;
        ++s.closed_cuboids;
        s.stored_rows_partial += c.rows().size();
    }
    for (const auto& cuboid : full.cuboids()) {
        s.stored_rows_full += cuboid.rows.size();
        ReconstructStats rs;
        reconstruct_cuboid(p, cuboid.criteria, &rs);
        if (rs.materialized) continue;
        ++s.reconstructed;
        s.representatives += rs.representatives;
        s.comparisons_reconstruct += rs.comparisons;
        s.tuples_full_scan += r.size();
        ComparisonCounter counter;
        skyline(r, cuboid.criteria, {}, &counter);
        s.comparisons_full_scan += counter.comparisons;
    }
    return s;
}

}  // namespace skylattice
