#include "polsyz/linalg.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace polsyz {
namespace {

struct Overflow {};

// int64 fraction, always reduced with positive denominator
class Frac {
public:
    Frac(long long n = 0) : num_(n), den_(1) {}
    Frac(long long n, long long d) : num_(n), den_(d) { normalize(); }

    bool is_zero() const { return num_ == 0; }

    friend Frac operator+(const Frac& a, const Frac& b) {
        long long g = std::gcd(a.den_, b.den_);
        long long l, r, n, d;
        if (__builtin_mul_overflow(a.num_, b.den_ / g, &l) ||
            __builtin_mul_overflow(b.num_, a.den_ / g, &r) ||
            __builtin_add_overflow(l, r, &n) ||
            __builtin_mul_overflow(a.den_ / g, b.den_, &d))
            throw Overflow{};
        return Frac(n, d);
    }
    friend Frac operator-(const Frac& a, const Frac& b) {
        if (b.num_ == INT64_MIN) throw Overflow{};
        return a + Frac(-b.num_, b.den_);
    }
    friend Frac operator*(const Frac& a, const Frac& b) {
        long long g1 = std::gcd(a.num_, b.den_);
        long long g2 = std::gcd(b.num_, a.den_);
        if (g1 == 0) g1 = 1;
        if (g2 == 0) g2 = 1;
        long long n, d;
        if (__builtin_mul_overflow(a.num_ / g1, b.num_ / g2, &n) ||
            __builtin_mul_overflow(a.den_ / g2, b.den_ / g1, &d))
            throw Overflow{};
        return Frac(n, d);
    }
    friend Frac operator/(const Frac& a, const Frac& b) {
        if (b.num_ == 0) throw std::domain_error("division by zero");
        if (b.num_ == INT64_MIN) throw Overflow{};
        return a * Frac(b.den_, b.num_);
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

private:
    void normalize() {
        if (den_ < 0) {
            if (num_ == INT64_MIN || den_ == INT64_MIN) throw Overflow{};
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }
    long long num_, den_;
};

bool is_zero(const Frac& x) { return x.is_zero(); }
bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

// in-place reduced row echelon form, returns pivot columns
template <class F>
std::vector<std::size_t> eliminate(std::vector<std::vector<F>>& a, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && is_zero(a[p][col])) ++p;
        if (p == a.size()) continue;
        std::swap(a[row], a[p]);
        F inv = F(1) / a[row][col];
        for (std::size_t c = col; c < ncols; ++c)
            if (!is_zero(a[row][c])) a[row][c] = a[row][c] * inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || is_zero(a[r][col])) continue;
            F factor = a[r][col];
            for (std::size_t c = col; c < ncols; ++c)
                if (!is_zero(a[row][c])) a[r][c] = a[r][c] - factor * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    a.resize(row);
    return pivots;
}

std::size_t width(const IntMatrix& rows) {
    std::size_t w = 0;
    for (const auto& r : rows) w = std::max(w, r.size());
    return w;
}

template <class F>
std::vector<std::vector<F>> convert(const IntMatrix& rows, std::size_t ncols) {
    std::vector<std::vector<F>> a(rows.size(), std::vector<F>(ncols, F(0)));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) a[r][c] = F(static_cast<long>(rows[r][c]));
    return a;
}

template <class F>
std::vector<std::vector<F>> kernel_basis(std::vector<std::vector<F>> a, std::size_t ncols) {
    auto pivots = eliminate(a, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(ncols, F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F(0) - a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

long long to_ll(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("nullspace entry exceeds int64");
    return z.get_si();
}

IntVec primitive(const std::vector<Frac>& v) {
    long long l = 1;
    for (const auto& x : v) {
        long long g = std::gcd(l, x.den());
        long long next;
        if (__builtin_mul_overflow(l / g, x.den(), &next)) throw Overflow{};
        l = next;
    }
    IntVec out(v.size());
    long long g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (__builtin_mul_overflow(v[i].num(), l / v[i].den(), &out[i])) throw Overflow{};
        g = std::gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

IntVec primitive(const QVec& v) {
    mpz_class l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> ints(v.size());
    mpz_class g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (l / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_ll(g > 1 ? mpz_class(ints[i] / g) : ints[i]);
    return out;
}

}  // namespace

std::size_t rank(const IntMatrix& rows) {
    std::size_t n = width(rows);
    try {
        auto a = convert<Frac>(rows, n);
        return eliminate(a, n).size();
    } catch (const Overflow&) {
        auto a = convert<mpq_class>(rows, n);
        return eliminate(a, n).size();
    }
}

std::size_t rank(const QMatrix& rows) {
    std::size_t n = 0;
    for (const auto& r : rows) n = std::max(n, r.size());
    QMatrix a(rows.size(), QVec(n, 0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) a[r][c] = rows[r][c];
    return eliminate(a, n).size();
}

QMatrix rref(const QMatrix& rows) {
    std::size_t n = 0;
    for (const auto& r : rows) n = std::max(n, r.size());
    QMatrix a(rows.size(), QVec(n, 0));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) a[r][c] = rows[r][c];
    eliminate(a, n);
    return a;
}

IntMatrix nullspace(const IntMatrix& a, std::size_t ncols) {
    IntMatrix out;
    try {
        for (const auto& v : kernel_basis(convert<Frac>(a, ncols), ncols)) out.push_back(primitive(v));
    } catch (const Overflow&) {
        out.clear();
        for (const auto& v : kernel_basis(convert<mpq_class>(a, ncols), ncols)) out.push_back(primitive(v));
    }
    return out;
}

}  // namespace polsyz
