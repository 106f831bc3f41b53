#include <doctest.h>

#include <random>

#include "polsyz/bowtie.hpp"
#include "polsyz/oracle.hpp"
#include "sweep.hpp"

using namespace polsyz;

namespace {

MonomialSet villa() { return make_monomial_set(3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}}); }

MonomialSet cycle(int n, std::vector<std::pair<int, int>> extra = {}) {
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
    p.emplace_back(0, n - 1);
    p.insert(p.end(), extra.begin(), extra.end());
    return make_monomial_set(n, p);
}

}  // namespace

TEST_CASE("villa: one general looped bow tie between x1^2 and x3^2") {
    auto rep = is_polarizable(villa());
    CHECK_FALSE(rep.polarizable);
    CHECK_FALSE(rep.normal);
    REQUIRE(rep.witnesses.size() == 1);
    auto c = classify_bowtie(rep.witnesses[0]);
    CHECK(c.kind == BowTieKind::General);
    CHECK(c.loops == 2);
    CHECK(rep.witnesses[0].degree() == 5);
    CHECK(bowtie_walk(rep.witnesses[0], villa()).canonical == std::vector<int>{0, 1, 3, 4, 3, 1});
}

TEST_CASE("bow tie kinds") {
    // monedge: two triangles joined by x3x4
    auto mono = make_monomial_set(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    auto rm = is_polarizable(mono);
    CHECK_FALSE(rm.polarizable);
    CHECK(rm.normal);
    REQUIRE(rm.witnesses.size() == 1);
    CHECK(classify_bowtie(rm.witnesses[0]).kind == BowTieKind::Monedge);
    // looped monedge with both ends looped is harmless
    auto loops = make_monomial_set(2, {{0, 0}, {0, 1}, {1, 1}});
    CHECK(is_polarizable(loops).polarizable);
    auto bt = enumerate_induced_bowties(LoopGraph(loops));
    REQUIRE(bt.size() == 1);
    CHECK(classify_bowtie(bt[0]).kind == BowTieKind::Monedge);
    CHECK(classify_bowtie(bt[0]).loops == 2);
    // path-degenerate with one loop is harmless too
    auto pd = make_monomial_set(3, {{0, 0}, {0, 1}, {1, 2}, {0, 2}});
    CHECK(is_polarizable(pd).polarizable);
    // hexagon with chords bd, df
    auto hex = is_polarizable(cycle(6, {{1, 3}, {3, 5}}));
    CHECK_FALSE(hex.polarizable);
    REQUIRE(hex.witnesses.size() == 1);
    CHECK(classify_bowtie(hex.witnesses[0]).kind == BowTieKind::PathDegenerate);
}

TEST_CASE("induced bow ties are exactly the induced ones among all bow ties") {
    std::mt19937 rng(31);
    for (int k = 0; k < 40; ++k) {
        auto f = sweep::random_cohesive(rng, 3 + k % 4, 0.35, 0.25);
        LoopGraph g(f);
        std::set<std::vector<int>> from_all, induced;
        for (const auto& b : enumerate_bowties(g)) {
            auto cs = enumerate_odd_cycles(g, true);
            bool chordless1 = false, chordless2 = false;
            for (const auto& c : cs) {
                chordless1 = chordless1 || c.key() == b.cycle1.key();
                chordless2 = chordless2 || c.key() == b.cycle2.key();
            }
            if (chordless1 && chordless2 && is_induced_bowtie(b, g)) from_all.insert(b.key());
        }
        for (const auto& b : enumerate_induced_bowties(g)) {
            CHECK(is_induced_bowtie(b, g));
            induced.insert(b.key());
        }
        CHECK(from_all == induced);
    }
}

TEST_CASE("bow tie walks are non-split") {
    std::mt19937 rng(37);
    for (int k = 0; k < 30; ++k) {
        auto f = sweep::random_cohesive(rng, 3 + k % 4, 0.35, 0.25);
        for (const auto& b : enumerate_bowties(LoopGraph(f))) {
            auto w = bowtie_walk(b, f);
            CHECK_FALSE(split_decomposition(w));
            CHECK(w.canonical == b.key());
        }
    }
}

TEST_CASE("normality: odd cycle condition against the lattice oracle") {
    // the looped vertex x5 hangs off x1 while the triangle x2x3x4 avoids it
    auto f = make_monomial_set(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 4}});
    auto rep = is_polarizable(f);
    CHECK_FALSE(rep.odd_cycle_condition);
    CHECK_FALSE(rep.normal);
    CHECK(rep.normal_by_bowties);
    auto orc = normality_oracle(f, 8);
    CHECK_FALSE(orc.holds);
    CHECK(*orc.first_failure == Degree{0, 1, 1, 1, 1});
    for (const auto& g : sweep::exhaustive(4)) CHECK(is_normal(g) == normality_oracle(g, 8).holds);
}

TEST_CASE("theorem against the graded oracle on every graph with at most four vertices") {
    for (const auto& f : sweep::exhaustive(4)) {
        auto rep = is_polarizable(f);
        CHECK(rep.polarizable == polarizable_oracle(f, 8).holds);
        if (rep.polarizable) CHECK(rep.normal);
    }
}

TEST_CASE("incohesive input is refused") {
    auto f = make_monomial_set(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(is_polarizable(f), IncohesiveError);
    CHECK_THROWS_AS(odd_cycle_condition(LoopGraph(f)), IncohesiveError);
}
