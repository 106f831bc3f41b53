#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polsyz/graph.hpp"
#include "polsyz/walks.hpp"

namespace polsyz {

// a broken internal identity, never a user error
class InvariantBreach : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SignedMonomial {
    long long coeff = 0;
    std::vector<int> exponents;

    friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

// one entry per generator; entry j times f_j equals coeff_j x^multidegree
struct SyzygyVector {
    std::vector<SignedMonomial> entries;
    std::vector<int> multidegree;
    std::vector<int> walk;  // canonical key of the source walk, if any

    std::vector<long long> coefficients() const;
    bool is_zero() const;
};

struct Binomial {
    std::vector<int> plus, minus;  // exponents of the T variables
};

// differential syzygy of a raw cyclic edge sequence, position 0 counted positive
SyzygyVector z_from_sequence(const std::vector<int>& edges, const MonomialSet& f);
SyzygyVector z_vector(const Walk& w, const MonomialSet& f);
Binomial p_binomial(const Walk& w, int m);
SyzygyVector t_vector(const Walk& w, const MonomialSet& f);
// exponent vector of the product of repeated vertices once loop steps are dropped
std::vector<int> m_factor(const Walk& w, const MonomialSet& f);
// m_factor after confirming t = m_factor * z entrywise; throws InvariantBreach otherwise
std::vector<int> checked_m_factor(const Walk& w, const MonomialSet& f);

bool is_homogeneous(const SyzygyVector& v, const MonomialSet& f);
bool verify_differential_syzygy(const SyzygyVector& v, const MonomialSet& f);
bool verify_binomial_relation(const Binomial& p, const MonomialSet& f);

SyzygyVector multiply(const SyzygyVector& v, const std::vector<int>& monomial);
SyzygyVector add(const SyzygyVector& a, const SyzygyVector& b, long long sb = 1);
bool same_up_to_sign(const SyzygyVector& a, const SyzygyVector& b);

std::vector<SyzygyVector> generators_Z(const MonomialSet& f);
std::vector<SyzygyVector> generators_P(const MonomialSet& f, int max_len);

int generic_rank(const std::vector<SyzygyVector>& vs, int m, std::uint64_t seed = 0);

}  // namespace polsyz
