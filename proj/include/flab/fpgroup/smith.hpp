#pragma once

#include "flab/fpgroup/integer_matrix.hpp"

namespace flab::fpgroup {

struct SmithForm {
  IntegerMatrix d;  // diagonal, d11 | d22 | ..., all >= 0
  IntegerMatrix u;  // unimodular, rows x rows
  IntegerMatrix v;  // unimodular, cols x cols
  /// Diagonal entries, min(rows, cols) of them.
  IntVector diagonal() const;
  std::size_t rank() const;
};

/// D = U M V. Pivot: smallest nonzero absolute value in the active block,
/// first in row-major order on ties; the pivot column is cleared with row
/// operations before the pivot row is cleared with column operations.
/// Deterministic, so golden output is stable. The elimination runs in exact
/// integers; U and V are then shrunk by lattice reduction within the choices
/// that keep D, and ArithmeticOverflow is thrown only if they still do not
/// fit in 64 bits.
SmithForm smith_normal_form(const IntegerMatrix& m);

}  // namespace flab::fpgroup
