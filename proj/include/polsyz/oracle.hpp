#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polsyz/graph.hpp"
#include "polsyz/syzygy.hpp"

// Brute-force linear algebra on fine-graded pieces. A syzygy of fine degree b
// has entry j equal to alpha_j x^b / f_j, so every slice is a space of
// coefficient vectors alpha supported on the generators dividing x^b.
namespace polsyz {

using Degree = std::vector<int>;

int total_degree(const Degree& b);
bool divides(const Degree& a, const Degree& b);
std::vector<int> divisors(const MonomialSet& f, const Degree& b);

// Degrees that are the lcm of the generators they admit, 0 < |b| <= bound,
// sorted by total degree then lexicographically. The slices of Z at any other
// degree coincide with one of these.
std::vector<Degree> lcm_closed_degrees(const MonomialSet& f, int bound);

// basis of Z_b as length-m integer coefficient vectors
IntMatrix z_slice_basis(const MonomialSet& f, const Degree& b);
int z_slice_dim(const MonomialSet& f, const Degree& b);
int span_slice_dim(const std::vector<SyzygyVector>& gens, const Degree& b);
// P_b from the polar syzygies of non-split walks visiting each vertex at most b_i times
int p_slice_dim(const MonomialSet& f, const Degree& b);
// P_b from differences of monomials in the T variables with equal image, no walks involved
int p_slice_dim_toric(const MonomialSet& f, const Degree& b);

struct GradedSliceReport {
    Degree b;
    int divisors = 0;
    int dim_Z = 0;
    int dim_span_Z_gens = 0;
    int dim_P = 0;
    int new_min_gens = 0;
};

std::vector<GradedSliceReport> slice_reports(const MonomialSet& f, int bound);

struct MuZ {
    int mu = 0;
    std::vector<std::pair<Degree, int>> generators;  // degree, number of new minimal generators
    bool truncated = false;
};

MuZ mu_Z(const MonomialSet& f, int bound);

struct OracleVerdict {
    bool holds = true;
    std::optional<Degree> first_failure;
    bool truncated = false;  // some relevant degree lies above the bound
};

OracleVerdict polarizable_oracle(const MonomialSet& f, int bound);
OracleVerdict generation_check(const std::vector<SyzygyVector>& gens, const MonomialSet& f, int bound);
OracleVerdict linear_presentation_oracle(const MonomialSet& f, int bound);

// Searches for x^u outside k[f] with (x^u)^2 in k[f], |u| <= bound. Such a
// monomial is integral over k[f]; first_failure holds the smallest u found.
OracleVerdict normality_oracle(const MonomialSet& f, int bound);
// x^u in k[f], i.e. u is a sum of generator exponent vectors
bool in_semigroup(const MonomialSet& f, const Degree& u);

}  // namespace polsyz
