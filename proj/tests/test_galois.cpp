#include <doctest.h>

#include "skylattice/errors.hpp"
#include "skylattice/galois.hpp"
#include "support.hpp"

using namespace skytest;

namespace {

Partition pt(const std::string& text) { return Partition::parse(text); }

std::vector<std::string> rendered(const Relation& r, const std::vector<CriterionSet>& sets) {
    std::vector<std::string> out;
    for (auto s : sets) out.push_back(r.criteria().render(s));
    return out;
}

}  // namespace

TEST_CASE("agree sets of pairs and tuple sets") {
    auto r = logements();
    CHECK(acc_pair(r.tuple(rid(2)), r.tuple(rid(5))) == crit({P, V}));
    CHECK(acc_pair(r.tuple(rid(3)), r.tuple(rid(5))) == crit({E, C, V}));
    CHECK(acc_pair(r.tuple(rid(1)), r.tuple(rid(4))) == CriterionSet{});
    CHECK_THROWS_AS(acc_pair(r.tuple(rid(1)), r.tuple(rid(1))), ContractViolation);

    CHECK(acc_set(r, ids({3, 4, 5})) == crit({E}));
    CHECK(acc_set(r, ids({2})) == crit({P, E, C, V}));
    CHECK(acc_set(r, ids({1, 2, 3, 4, 5})) == CriterionSet{});
    CHECK_THROWS_AS(acc_set(r, std::vector<RowId>{}), ContractViolation);
}

TEST_CASE("agree_sets") {
    auto r = logements();
    auto family = agree_sets(r);
    CHECK(rendered(r, family.sets) == std::vector<std::string>{"", "P", "E", "C", "V", "PV", "ECV"});
    CHECK(family.source == "logements");
    CHECK(agree_sets(make_relation({{1, 2}}, {"A", "B"})).sets.empty());
    CHECK(agree_sets(make_relation({{1, 2}, {1, 2}}, {"A", "B"})).sets == std::vector<CriterionSet>{CriterionSet::full(2)});
}

TEST_CASE("equivalence classes") {
    auto r = logements();
    CHECK(equiv_class(r.tuple(rid(2)), crit({P}), r) == ids({2, 5}));
    CHECK(equiv_class(r.tuple(rid(4)), CriterionSet{}, r) == r.tid());
    CHECK(equiv_class(r.tuple(rid(3)), crit({E, C, V}), r) == ids({3, 5}));
    Tuple stranger{rid(9), {}, {1, 2, 3, 4}};
    CHECK_THROWS_AS(equiv_class(stranger, crit({P}), r), ContractViolation);
}

TEST_CASE("g and f") {
    auto r = logements();
    CHECK(g_map(crit({E}), r) == pt("12|345"));
    CHECK(g_map(crit({P, V}), r) == pt("1|25|3|4"));
    CHECK(g_map(CriterionSet{}, r) == pt("12345"));
    CHECK(g_map(crit({E, C}), r) == pt("1|2|35|4"));
    CHECK(g_map(crit({E, C, V}), r) == pt("1|2|35|4"));

    CHECK(f_map(pt("1|2|35|4"), r) == crit({E, C, V}));
    CHECK(f_map(pt("1|2|345"), r) == crit({E}));
    CHECK(f_map(pt("1|2|3|4|5"), r) == crit({P, E, C, V}));
    CHECK_THROWS_AS(f_map(pt("12|34"), r), ContractViolation);
}

TEST_CASE("closures") {
    auto r = logements();
    CHECK(h_closure(crit({E, C}), r) == crit({E, C, V}));
    CHECK(h_closure(crit({E, C, V}), r) == crit({E, C, V}));
    CHECK(h_closure(crit({P, E}), r) == crit({P, E, C, V}));
    auto family = agree_sets(r);
    CHECK(h_closure(crit({P, E}), family, 4) == crit({P, E, C, V}));
    CHECK(h_closure(crit({E, C}), family, 4) == crit({E, C, V}));

    CHECK(h_prime(pt("1|2|35|4"), r) == pt("1|2|35|4"));
    CHECK(h_prime(pt("1|2|345"), r) == pt("12|345"));
    CHECK(h_prime(pt("12345"), r) == pt("12345"));
    CHECK_THROWS_AS(h_prime(pt("1|2"), r), ContractViolation);
}

TEST_CASE("closed sets") {
    auto r = logements();
    auto closed = closed_sets(r);
    CHECK(rendered(r, closed) == std::vector<std::string>{"", "P", "E", "C", "V", "PV", "ECV", "PECV"});
    CHECK(closed.size() == 8);

    auto spread = make_relation({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, {"A", "B", "C"});
    CHECK(closed_sets(spread) == std::vector<CriterionSet>{CriterionSet{}, CriterionSet::full(3)});
    CHECK(closed_sets(make_relation({{4, 4}}, {"A", "B"})) == std::vector<CriterionSet>{CriterionSet::full(2)});
}

TEST_CASE("Galois connection laws on random relations") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t d = 1 + rng() % 5;
        auto r = random_relation(rng, 1 + rng() % 25, d, 3);
        auto family = agree_sets(r);
        auto subsets = all_subsets(d);
        std::vector<Partition> images;
        for (auto c : subsets) images.push_back(g_map(c, r));

        for (std::size_t i = 0; i < subsets.size(); ++i) {
            auto c = subsets[i];
            auto h = h_closure(c, r);
            REQUIRE(h == h_closure(c, family, d));
            REQUIRE(h == brute_closure(r, c));
            REQUIRE(c.subset_of(h));                  // extensive
            REQUIRE(h_closure(h, r) == h);           // idempotent
            REQUIRE(g_map(h, r) == images[i]);       // π_C = π_h(C)
            REQUIRE(g_map(f_map(images[i], r), r) == images[i]);  // g∘f∘g = g

            auto hp = h_prime(images[i], r);
            REQUIRE(finer_than(images[i], hp));
            REQUIRE(h_prime(hp, r) == hp);

            for (std::size_t j = 0; j < subsets.size(); ++j) {
                auto c2 = subsets[j];
                if (c.subset_of(c2)) {
                    REQUIRE(h.subset_of(h_closure(c2, r)));           // isotone
                    REQUIRE(finer_than(images[j], images[i]));        // g antitone
                }
                // adjunction: C ⊆ f(π) ⇔ π ⊑ g(C), for π drawn from the g-images
                REQUIRE(c.subset_of(f_map(images[j], r)) == finer_than(images[j], images[i]));
                if (finer_than(images[i], images[j])) {
                    REQUIRE(f_map(images[j], r).subset_of(f_map(images[i], r)));  // f antitone
                    REQUIRE(finer_than(h_prime(images[i], r), h_prime(images[j], r)));  // h' isotone
                }
                auto fi = f_map(images[i], r);
                REQUIRE(f_map(g_map(fi, r), r) == fi);  // f∘g∘f = f
            }
        }
    }
}

TEST_CASE("h' on arbitrary partitions is extensive, idempotent and isotone") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        auto r = random_relation(rng, 5, 3, 2);
        auto all = all_partitions(5);
        for (const auto& p : all) {
            auto hp = h_prime(p, r);
            REQUIRE(finer_than(p, hp));
            REQUIRE(h_prime(hp, r) == hp);
            for (std::size_t k = 0; k < all.size(); k += 7)
                if (finer_than(p, all[k])) REQUIRE(finer_than(hp, h_prime(all[k], r)));
        }
    }
}
