#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "flab/fpgroup/integer_matrix.hpp"

namespace flab::fourfold {

using fpgroup::IntegerMatrix;
using fpgroup::IntVector;
using RationalMatrix = std::vector<std::vector<mpq_class>>;
using RationalVector = std::vector<mpq_class>;

RationalMatrix to_rational(const IntegerMatrix& m);

/// Inertia of a symmetric integer form over Q.
struct Inertia {
  std::size_t positive = 0, negative = 0, zero = 0;
  std::int64_t signature() const { return static_cast<std::int64_t>(positive) - static_cast<std::int64_t>(negative); }
  std::size_t rank() const { return positive + negative; }
};

/// Congruence diagonalization over Q. When no diagonal pivot is left,
/// e_i is replaced by e_i + e_j for the first nonzero off-diagonal entry.
Inertia inertia(const IntegerMatrix& q);
std::int64_t signature(const IntegerMatrix& q);
std::size_t rank(const IntegerMatrix& m);
mpz_class determinant(const IntegerMatrix& m);
bool is_even(const IntegerMatrix& q);

/// Solves A x = b over Q when A is square and invertible.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);
/// Row indices of a maximal linearly independent subset, chosen greedily in order.
std::vector<std::size_t> independent_rows(const RationalMatrix& rows);

}  // namespace flab::fourfold
