#pragma once

#include <gmpxx.h>

#include "flab/fpgroup/integer_matrix.hpp"

namespace flab::swenum {

using fpgroup::IntegerMatrix;
using fpgroup::IntVector;

/// (Q v)_i = Q_ii mod 2 for every i. Throws DimensionMismatch.
bool is_characteristic(const IntVector& v, const IntegerMatrix& q);

struct SwDimension {
  mpq_class value;
  bool integral = true;
};

/// (beta^T Q beta - 2e - 3 sigma) / 4, exactly.
SwDimension sw_dimension(const IntVector& beta, std::int64_t euler, std::int64_t signature, const IntegerMatrix& q);

}  // namespace flab::swenum
