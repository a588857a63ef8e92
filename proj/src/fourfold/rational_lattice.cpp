#include "flab/fourfold/rational_lattice.hpp"

#include <utility>

#include "flab/error.hpp"

namespace flab::fourfold {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), RationalVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = mpq_class(static_cast<long>(m(i, j)));
  return r;
}

Inertia inertia(const IntegerMatrix& q) {
  if (!q.is_symmetric()) throw Error(ErrorCode::DimensionMismatch, "inertia of a non-symmetric matrix");
  RationalMatrix a = to_rational(q);
  const std::size_t n = a.size();
  Inertia in;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // No diagonal pivot: find a_ij != 0 and replace e_i by e_i + e_j.
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = k; i < n && !off; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            off = {i, j};
            break;
          }
      if (!off) {
        in.zero += n - k;
        break;
      }
      auto [i, j] = *off;
      for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
      for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
      p = i;
    }
    if (p != k) {
      std::swap(a[p], a[k]);
      for (auto& row : a) std::swap(row[p], row[k]);
    }
    const mpq_class piv = a[k][k];
    (piv > 0 ? in.positive : in.negative)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      mpq_class f = a[i][k] / piv;
      for (std::size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
      for (std::size_t r = k; r < n; ++r) a[r][i] -= f * a[r][k];
    }
  }
  return in;
}

std::int64_t signature(const IntegerMatrix& q) { return inertia(q).signature(); }

std::size_t rank(const IntegerMatrix& m) { return independent_rows(to_rational(m)).size(); }

mpz_class determinant(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

bool is_even(const IntegerMatrix& q) {
  for (std::size_t i = 0; i < q.rows(); ++i)
    if (q(i, i) % 2 != 0) return false;
  return true;
}

std::optional<RationalVector> solve(const RationalMatrix& a0, const RationalVector& b0) {
  const std::size_t n = a0.size();
  if (b0.size() != n) throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side length");
  RationalMatrix a = a0;
  RationalVector b = b0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k].size() != n) throw Error(ErrorCode::DimensionMismatch, "solve: matrix not square");
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[k]);
    std::swap(b[p], b[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      mpq_class f = a[i][k] / a[k][k];
      for (std::size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
      b[i] -= f * b[k];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::vector<std::size_t> independent_rows(const RationalMatrix& rows) {
  std::vector<std::size_t> picked;
  std::vector<RationalVector> echelon;  // reduced copies of picked rows
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    RationalVector v = rows[r];
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      if (v[pivots[k]] == 0) continue;
      mpq_class f = v[pivots[k]] / echelon[k][pivots[k]];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * echelon[k][c];
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) continue;
    picked.push_back(r);
    echelon.push_back(std::move(v));
    pivots.push_back(piv);
  }
  return picked;
}

}  // namespace flab::fourfold
