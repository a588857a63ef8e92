#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace flab::fpgroup {

using IntVector = std::vector<std::int64_t>;

/// Dense row-major matrix of int64 with overflow-checked arithmetic.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntegerMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;
  IntegerMatrix transpose() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntegerMatrix&) const = default;

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_diagonal() const;
  /// Block diagonal sum.
  static IntegerMatrix direct_sum(const IntegerMatrix& a, const IntegerMatrix& b);
  /// Submatrix on the given row and column index lists.
  IntegerMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  // Elementary operations, used by the Smith reduction.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t target, std::size_t source, std::int64_t k);  // row_t += k row_s
  void add_col_multiple(std::size_t target, std::size_t source, std::int64_t k);  // col_t += k col_s
  void negate_row(std::size_t i);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> a_;
};

std::int64_t dot(const IntVector& a, const IntVector& b);
/// v^T Q w
std::int64_t bilinear(const IntegerMatrix& q, const IntVector& v, const IntVector& w);

}  // namespace flab::fpgroup
