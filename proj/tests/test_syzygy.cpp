#include <doctest.h>

#include <map>
#include <random>

#include "polsyz/bowtie.hpp"
#include "polsyz/oracle.hpp"
#include "polsyz/syzygy.hpp"
#include "sweep.hpp"

using namespace polsyz;

namespace {

MonomialSet villa() { return make_monomial_set(3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}}); }

using Poly = std::map<std::vector<int>, long long>;

// sum_j v_j * d f_j / d x_i, computed term by term
bool annihilates_differentials(const SyzygyVector& v, const MonomialSet& f) {
    for (int i = 0; i < f.n; ++i) {
        Poly p;
        for (int j = 0; j < f.m(); ++j) {
            const auto& e = v.entries[j];
            if (e.coeff == 0) continue;
            auto x = f.gens[j].exponents(f.n);
            if (x[i] == 0) continue;
            std::vector<int> t = e.exponents;
            for (int k = 0; k < f.n; ++k) t[k] += x[k];
            t[i] -= 1;
            p[t] += e.coeff * x[i];
        }
        for (auto& [mono, c] : p)
            if (c != 0) return false;
    }
    return true;
}

std::vector<int> image(const std::vector<int>& t, const MonomialSet& f) {
    std::vector<int> out(f.n, 0);
    for (int j = 0; j < f.m(); ++j) {
        auto x = f.gens[j].exponents(f.n);
        for (int i = 0; i < f.n; ++i) out[i] += t[j] * x[i];
    }
    return out;
}

}  // namespace

TEST_CASE("villa syzygies") {
    auto f = villa();
    auto w = make_walk(f, {0, 1, 3, 4, 3, 1});
    auto z = z_vector(w, f);
    CHECK(z.multidegree == std::vector<int>{2, 1, 2});
    CHECK(z.coefficients() == std::vector<long long>{1, -2, 0, 2, -1});
    CHECK(z.entries[0].exponents == std::vector<int>{0, 1, 2});
    CHECK(z.entries[3].exponents == std::vector<int>{2, 0, 1});
    auto p = p_binomial(w, f.m());
    CHECK(p.plus == std::vector<int>{1, 0, 0, 2, 0});
    CHECK(p.minus == std::vector<int>{0, 2, 0, 0, 1});
    CHECK(m_factor(w, f) == std::vector<int>{0, 1, 0});
    auto t = t_vector(w, f);
    CHECK(t.entries == multiply(z, {0, 1, 0}).entries);
    CHECK(t.multidegree == std::vector<int>{2, 2, 2});
    CHECK(checked_m_factor(w, f) == std::vector<int>{0, 1, 0});
}

TEST_CASE("walk syzygies are syzygies") {
    std::mt19937 rng(41);
    for (int k = 0; k < 30; ++k) {
        auto f = sweep::random_cohesive(rng, 3 + k % 4, 0.4, 0.25);
        WalkSearch o;
        o.max_len = 8;
        o.non_split_only = false;
        for (const auto& w : enumerate_walks(LoopGraph(f), o)) {
            auto z = z_vector(w, f);
            CHECK(is_homogeneous(z, f));
            CHECK(verify_differential_syzygy(z, f));
            CHECK(annihilates_differentials(z, f));
            auto p = p_binomial(w, f.m());
            CHECK(verify_binomial_relation(p, f));
            CHECK(image(p.plus, f) == image(p.minus, f));
            auto t = t_vector(w, f);
            CHECK(annihilates_differentials(t, f));
            if (!split_decomposition(w)) CHECK_NOTHROW(checked_m_factor(w, f));
        }
    }
}

TEST_CASE("verifiers reject broken vectors") {
    auto f = villa();
    auto z = z_vector(make_walk(f, {0, 1, 3, 4, 3, 1}), f);
    auto bad = z;
    bad.entries[1].coeff = -1;
    CHECK_FALSE(verify_differential_syzygy(bad, f));
    auto inhom = z;
    inhom.entries[0].exponents = {1, 1, 2};
    CHECK_FALSE(is_homogeneous(inhom, f));
    CHECK_THROWS(verify_differential_syzygy(inhom, f));
    Binomial p{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}};
    CHECK_FALSE(verify_binomial_relation(p, f));
    CHECK_THROWS_AS(m_factor(make_walk(f, {0, 1, 2, 3, 4, 3, 2, 1}), f), WalkError);
}

TEST_CASE("generators of Z") {
    auto v = generators_Z(villa());
    CHECK(v.size() == 3);
    std::vector<int> hexes;
    std::vector<std::pair<int, int>> p;
    for (int i = 0; i < 5; ++i) p.emplace_back(i, i + 1);
    p.emplace_back(0, 5);
    p.emplace_back(1, 3);
    p.emplace_back(3, 5);
    auto hex = make_monomial_set(6, p);
    CHECK(generators_Z(hex).size() == 3);
    for (const auto& f : sweep::exhaustive(4)) CHECK(generation_check(generators_Z(f), f, 8).holds);
    std::mt19937 rng(43);
    for (int k = 0; k < 20; ++k) {
        auto f = sweep::random_cohesive(rng, 5 + k % 2, 0.35, 0.2);
        CHECK(generation_check(generators_Z(f), f, 8).holds);
    }
}

TEST_CASE("generic rank") {
    std::mt19937 rng(47);
    for (int k = 0; k < 30; ++k) {
        auto f = sweep::random_cohesive(rng, 2 + k % 6, 0.35, 0.25);
        int expect = f.m() - algebra_dimension(f);
        CHECK(generic_rank(generators_Z(f), f.m()) == expect);
        CHECK(generic_rank(generators_Z(f), f.m(), 99) == expect);
    }
    CHECK(generic_rank({}, 4) == 0);
}

TEST_CASE("same_up_to_sign and add") {
    auto f = villa();
    auto z = z_vector(make_walk(f, {0, 1, 3, 4, 3, 1}), f);
    auto neg = add(z, z, -2);
    CHECK(same_up_to_sign(z, neg));
    CHECK(add(z, z, -1).is_zero());
}
