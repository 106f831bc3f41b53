#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace polsyz {

using IntVec = std::vector<long long>;
using IntMatrix = std::vector<IntVec>;
using QVec = std::vector<mpq_class>;
using QMatrix = std::vector<QVec>;

// Exact rank of the row space. Integer input runs on checked int64
// fractions first and redoes the elimination with GMP on overflow.
std::size_t rank(const IntMatrix& rows);
std::size_t rank(const QMatrix& rows);

// Basis of {x in Q^ncols : a x = 0}, each vector scaled to a primitive
// integer vector. Throws std::overflow_error if an entry leaves int64.
IntMatrix nullspace(const IntMatrix& a, std::size_t ncols);

QMatrix rref(const QMatrix& rows);

}  // namespace polsyz
