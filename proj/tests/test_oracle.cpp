#include <doctest.h>

#include <random>
#include <set>

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

// lcm of every subset of generators, by brute force
std::set<Degree> subset_lcms(const MonomialSet& f, int bound) {
    std::set<Degree> out;
    for (unsigned mask = 1; mask < (1u << f.m()); ++mask) {
        Degree b(f.n, 0);
        for (int j = 0; j < f.m(); ++j)
            if (mask >> j & 1) {
                auto x = f.gens[j].exponents(f.n);
                for (int i = 0; i < f.n; ++i) b[i] = std::max(b[i], x[i]);
            }
        if (total_degree(b) <= bound) out.insert(b);
    }
    return out;
}

}  // namespace

TEST_CASE("lcm-closed degrees are the subset lcms") {
    std::mt19937 rng(53);
    for (int k = 0; k < 30; ++k) {
        auto f = sweep::random_cohesive(rng, 2 + k % 4, 0.4, 0.3);
        if (f.m() > 12) continue;
        auto got = lcm_closed_degrees(f, 6);
        CHECK(std::set<Degree>(got.begin(), got.end()) == subset_lcms(f, 6));
        for (std::size_t i = 1; i < got.size(); ++i) CHECK(total_degree(got[i - 1]) <= total_degree(got[i]));
    }
    CHECK(lcm_closed_degrees(villa(), 8).size() == subset_lcms(villa(), 8).size());
}

TEST_CASE("slice bases are kernels of the right size") {
    std::mt19937 rng(59);
    for (int k = 0; k < 20; ++k) {
        auto f = sweep::random_cohesive(rng, 3 + k % 3, 0.4, 0.3);
        for (const auto& b : lcm_closed_degrees(f, 6)) {
            auto basis = z_slice_basis(f, b);
            auto d = divisors(f, b);
            CHECK(static_cast<int>(basis.size()) == z_slice_dim(f, b));
            for (const auto& v : basis)
                for (int i = 0; i < f.n; ++i) {
                    long long s = 0;
                    for (int j = 0; j < f.m(); ++j) s += v[j] * f.gens[j].exponents(f.n)[i];
                    CHECK(s == 0);
                }
            CHECK(rank(basis) == basis.size());
        }
    }
}

TEST_CASE("polar slices: walk span equals the toric span") {
    std::mt19937 rng(61);
    for (int k = 0; k < 25; ++k) {
        auto f = sweep::random_cohesive(rng, 2 + k % 4, 0.4, 0.3);
        auto reports = slice_reports(f, 7);
        for (const auto& r : reports) {
            CHECK(r.dim_P == p_slice_dim(f, r.b));
            CHECK(r.dim_P == p_slice_dim_toric(f, r.b));
            CHECK(r.dim_P <= r.dim_Z);
            CHECK(r.dim_span_Z_gens <= r.dim_Z);
        }
    }
}

TEST_CASE("minimal generator counts") {
    auto mv = mu_Z(villa(), 8);
    CHECK(mv.mu == 3);
    CHECK_FALSE(mv.truncated);
    auto dec = mu_Z(cycle(10, {{1, 7}, {2, 6}}), 12);
    CHECK(dec.mu == 2);
    auto hex = mu_Z(cycle(6, {{1, 3}, {3, 5}}), 12);
    CHECK(hex.mu == 2);
    CHECK(mu_Z(cycle(10, {{1, 7}, {2, 6}}), 8).truncated);
    // a tree has no syzygies
    CHECK(mu_Z(make_monomial_set(4, {{0, 1}, {1, 2}, {1, 3}}), 8).mu == 0);
}

TEST_CASE("oracle verdicts on named inputs") {
    auto v = polarizable_oracle(villa(), 8);
    CHECK_FALSE(v.holds);
    CHECK(*v.first_failure == Degree{2, 1, 2});
    CHECK(polarizable_oracle(cycle(10, {{1, 7}, {2, 6}}), 12).holds);
    CHECK(polarizable_oracle(cycle(8, {{0, 3}}), 12).holds);
    auto bounding = make_monomial_set(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}});
    CHECK(linear_presentation_oracle(bounding, 12).holds);
    CHECK_FALSE(linear_presentation_oracle(villa(), 8).holds);
    auto n = normality_oracle(villa(), 8);
    CHECK_FALSE(n.holds);
    CHECK(*n.first_failure == Degree{1, 0, 1});
}

TEST_CASE("semigroup membership") {
    auto f = villa();
    CHECK(in_semigroup(f, {2, 0, 2}));
    CHECK(in_semigroup(f, {1, 2, 1}));
    CHECK_FALSE(in_semigroup(f, {1, 0, 1}));
    CHECK_FALSE(in_semigroup(f, {1, 0, 0}));
    CHECK(in_semigroup(f, {0, 0, 0}));
}

TEST_CASE("linear presentation: theorem against oracle on random graphs") {
    std::mt19937 rng(67);
    for (int k = 0; k < 40; ++k) {
        auto f = sweep::random_cohesive(rng, 2 + k % 6, 0.5, 0.3);
        CHECK(is_linearly_presented(f) == linear_presentation_oracle(f, 8).holds);
    }
}

TEST_CASE("generation check refuses inhomogeneous vectors") {
    auto f = villa();
    SyzygyVector v;
    v.multidegree = {2, 2, 0};
    v.entries.resize(5);
    v.entries[0] = {1, {0, 1, 0}};
    CHECK_THROWS(generation_check({v}, f, 8));
}
