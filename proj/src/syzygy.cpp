#include "polsyz/syzygy.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include <gmpxx.h>

#include "polsyz/bowtie.hpp"

namespace polsyz {

std::vector<long long> SyzygyVector::coefficients() const {
    std::vector<long long> c;
    for (const auto& e : entries) c.push_back(e.coeff);
    return c;
}

bool SyzygyVector::is_zero() const {
    return std::all_of(entries.begin(), entries.end(), [](const SignedMonomial& e) { return e.coeff == 0; });
}

namespace {

std::vector<int> lcm_of(const std::vector<int>& edges, const MonomialSet& f) {
    std::vector<int> l(f.n, 0);
    for (int e : edges) {
        auto x = f.gens[e].exponents(f.n);
        for (int i = 0; i < f.n; ++i) l[i] = std::max(l[i], x[i]);
    }
    return l;
}

// entry j = alpha_j x^deg / f_j
SyzygyVector from_coefficients(const std::vector<long long>& alpha, const std::vector<int>& deg, const MonomialSet& f) {
    SyzygyVector v;
    v.multidegree = deg;
    v.entries.resize(f.m());
    for (int j = 0; j < f.m(); ++j) {
        if (alpha[j] == 0) continue;
        auto x = f.gens[j].exponents(f.n);
        v.entries[j].coeff = alpha[j];
        v.entries[j].exponents.resize(f.n);
        for (int i = 0; i < f.n; ++i) v.entries[j].exponents[i] = deg[i] - x[i];
    }
    return v;
}

std::vector<long long> alternating(const std::vector<int>& edges, int m, int sign0) {
    std::vector<long long> a(m, 0);
    for (std::size_t p = 0; p < edges.size(); ++p) a[edges[p]] += (p % 2 == 0) ? sign0 : -sign0;
    return a;
}

}  // namespace

SyzygyVector z_from_sequence(const std::vector<int>& edges, const MonomialSet& f) {
    return from_coefficients(alternating(edges, f.m(), 1), lcm_of(edges, f), f);
}

SyzygyVector z_vector(const Walk& w, const MonomialSet& f) {
    auto v = from_coefficients(alternating(w.edges, f.m(), w.orientation), lcm_of(w.edges, f), f);
    v.walk = w.canonical;
    return v;
}

Binomial p_binomial(const Walk& w, int m) {
    Binomial p{std::vector<int>(m, 0), std::vector<int>(m, 0)};
    for (int pos = 0; pos < w.length(); ++pos) (w.sign_at(pos) > 0 ? p.plus : p.minus)[w.edges[pos]]++;
    return p;
}

SyzygyVector t_vector(const Walk& w, const MonomialSet& f) {
    std::vector<int> c(f.n, 0);
    for (int pos = 0; pos < w.length(); pos += 2) {
        auto x = f.gens[w.edges[pos]].exponents(f.n);
        for (int i = 0; i < f.n; ++i) c[i] += x[i];
    }
    auto p = p_binomial(w, f.m());
    std::vector<long long> alpha(f.m());
    for (int j = 0; j < f.m(); ++j) alpha[j] = p.plus[j] - p.minus[j];
    auto v = from_coefficients(alpha, c, f);
    v.walk = w.canonical;
    return v;
}

std::vector<int> m_factor(const Walk& w, const MonomialSet& f) {
    if (split_decomposition(w)) throw WalkError("m_factor needs a non-split walk");
    std::vector<int> seq;
    for (int v : w.vertices)
        if (seq.empty() || seq.back() != v) seq.push_back(v);
    while (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
    std::vector<int> count(f.n, 0), m(f.n, 0);
    for (int v : seq) count[v]++;
    for (int i = 0; i < f.n; ++i) m[i] = count[i] >= 2 ? 1 : 0;
    return m;
}

std::vector<int> checked_m_factor(const Walk& w, const MonomialSet& f) {
    auto m = m_factor(w, f);
    auto z = z_vector(w, f);
    auto t = t_vector(w, f);
    if (!(multiply(z, m).entries == t.entries) || multiply(z, m).multidegree != t.multidegree)
        throw InvariantBreach("polar syzygy is not m_factor times the differential syzygy");
    return m;
}

bool is_homogeneous(const SyzygyVector& v, const MonomialSet& f) {
    if (static_cast<int>(v.entries.size()) != f.m() || static_cast<int>(v.multidegree.size()) != f.n) return false;
    for (int j = 0; j < f.m(); ++j) {
        const auto& e = v.entries[j];
        if (e.coeff == 0) continue;
        if (static_cast<int>(e.exponents.size()) != f.n) return false;
        auto x = f.gens[j].exponents(f.n);
        for (int i = 0; i < f.n; ++i)
            if (e.exponents[i] < 0 || e.exponents[i] + x[i] != v.multidegree[i]) return false;
    }
    return true;
}

bool verify_differential_syzygy(const SyzygyVector& v, const MonomialSet& f) {
    if (!is_homogeneous(v, f)) throw std::invalid_argument("syzygy vector is not homogeneous");
    // sum_j entry_j * d(f_j), collected by (dx_i, monomial)
    std::map<std::pair<int, std::vector<int>>, long long> total;
    for (int j = 0; j < f.m(); ++j) {
        const auto& e = v.entries[j];
        if (e.coeff == 0) continue;
        auto x = f.gens[j].exponents(f.n);
        for (int i = 0; i < f.n; ++i) {
            if (x[i] == 0) continue;
            std::vector<int> mono(f.n);
            for (int k = 0; k < f.n; ++k) mono[k] = e.exponents[k] + x[k] - (k == i ? 1 : 0);
            total[{i, mono}] += e.coeff * x[i];
        }
    }
    for (auto& [k, c] : total)
        if (c != 0) return false;
    return true;
}

bool verify_binomial_relation(const Binomial& p, const MonomialSet& f) {
    std::vector<int> a(f.n, 0), b(f.n, 0);
    int da = 0, db = 0;
    for (int j = 0; j < f.m(); ++j) {
        auto x = f.gens[j].exponents(f.n);
        for (int i = 0; i < f.n; ++i) {
            a[i] += p.plus[j] * x[i];
            b[i] += p.minus[j] * x[i];
        }
        da += p.plus[j];
        db += p.minus[j];
    }
    return da == db && a == b;
}

SyzygyVector multiply(const SyzygyVector& v, const std::vector<int>& monomial) {
    SyzygyVector out = v;
    for (std::size_t i = 0; i < monomial.size(); ++i) out.multidegree[i] += monomial[i];
    for (auto& e : out.entries)
        if (e.coeff != 0)
            for (std::size_t i = 0; i < monomial.size(); ++i) e.exponents[i] += monomial[i];
    out.walk.clear();
    return out;
}

SyzygyVector add(const SyzygyVector& a, const SyzygyVector& b, long long sb) {
    if (a.multidegree != b.multidegree) throw std::invalid_argument("adding syzygies of different degrees");
    SyzygyVector out = a;
    out.walk.clear();
    for (std::size_t j = 0; j < out.entries.size(); ++j) {
        auto& e = out.entries[j];
        const auto& o = b.entries[j];
        if (o.coeff == 0) continue;
        if (e.coeff == 0) e.exponents = o.exponents;
        e.coeff += sb * o.coeff;
        if (e.coeff == 0) e.exponents.clear();
    }
    return out;
}

bool same_up_to_sign(const SyzygyVector& a, const SyzygyVector& b) {
    if (a.entries == b.entries && a.multidegree == b.multidegree) return true;
    auto neg = b;
    for (auto& e : neg.entries) e.coeff = -e.coeff;
    return a.entries == neg.entries && a.multidegree == b.multidegree;
}

std::vector<SyzygyVector> generators_Z(const MonomialSet& f) {
    LoopGraph g(f);
    require_cohesive(g);
    std::vector<SyzygyVector> out;
    std::set<std::vector<int>> seen;
    for (const auto& w : enumerate_even_cycles(g, g.n()))
        if (seen.insert(w.canonical).second) out.push_back(z_vector(w, f));
    for (const auto& b : enumerate_induced_bowties(g)) {
        auto w = bowtie_walk(b, f);
        if (seen.insert(w.canonical).second) out.push_back(z_vector(w, f));
    }
    return out;
}

std::vector<SyzygyVector> generators_P(const MonomialSet& f, int max_len) {
    LoopGraph g(f);
    require_cohesive(g);
    std::vector<SyzygyVector> out;
    for (const auto& w : enumerate_non_split_walks(g, max_len)) out.push_back(t_vector(w, f));
    return out;
}

namespace {

std::vector<long> primes_up_to(long limit) {
    std::vector<bool> sieve(limit + 1, true);
    std::vector<long> out;
    for (long p = 2; p <= limit; ++p) {
        if (!sieve[p]) continue;
        out.push_back(p);
        for (long q = p * p; q <= limit; q += p) sieve[q] = false;
    }
    return out;
}

int rank_at(const std::vector<SyzygyVector>& vs, int m, const std::vector<long>& point) {
    // incremental echelon form, stops once the rank is full
    std::vector<QVec> basis;
    std::vector<int> pivot;
    for (const auto& v : vs) {
        QVec row(m, 0);
        bool nonzero = false;
        for (int j = 0; j < m; ++j) {
            const auto& e = v.entries[j];
            if (e.coeff == 0) continue;
            mpz_class val = static_cast<long>(e.coeff);
            for (std::size_t i = 0; i < e.exponents.size(); ++i) {
                mpz_class pw;
                mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(point[i]), static_cast<unsigned long>(e.exponents[i]));
                val *= pw;
            }
            row[j] = val;
            nonzero = true;
        }
        if (!nonzero) continue;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (sgn(row[pivot[b]]) == 0) continue;
            mpq_class factor = row[pivot[b]];
            for (int j = 0; j < m; ++j) row[j] -= factor * basis[b][j];
        }
        int p = -1;
        for (int j = 0; j < m; ++j)
            if (sgn(row[j]) != 0) {
                p = j;
                break;
            }
        if (p < 0) continue;
        mpq_class inv = 1 / row[p];
        for (int j = 0; j < m; ++j) row[j] *= inv;
        for (auto& b : basis) {
            if (sgn(b[p]) == 0) continue;
            mpq_class factor = b[p];
            for (int j = 0; j < m; ++j) b[j] -= factor * row[j];
        }
        basis.push_back(std::move(row));
        pivot.push_back(p);
        if (static_cast<int>(basis.size()) == m) break;
    }
    return static_cast<int>(basis.size());
}

}  // namespace

int generic_rank(const std::vector<SyzygyVector>& vs, int m, std::uint64_t seed) {
    if (vs.empty()) return 0;
    int n = static_cast<int>(vs.front().multidegree.size());
    static const auto primes = primes_up_to(200000);
    std::vector<long> point(primes.begin(), primes.begin() + n);
    int best = rank_at(vs, m, point);
    int ceiling = std::min<int>(m, static_cast<int>(vs.size()));
    std::mt19937_64 rng(seed);
    auto first_large = std::lower_bound(primes.begin(), primes.end(), 1000L) - primes.begin();
    for (int round = 0; round < 2 && best < ceiling; ++round) {
        std::uniform_int_distribution<std::size_t> pick(first_large, primes.size() - 1);
        std::set<long> used;
        for (int i = 0; i < n; ++i) {
            long p;
            do p = primes[pick(rng)];
            while (!used.insert(p).second);
            point[i] = p;
        }
        best = std::max(best, rank_at(vs, m, point));
    }
    return best;
}

}  // namespace polsyz
