#include "flab/fpgroup/smith.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "flab/error.hpp"

namespace flab::fpgroup {

IntVector SmithForm::diagonal() const {
  IntVector out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

std::size_t SmithForm::rank() const {
  auto diag = diagonal();
  return static_cast<std::size_t>(std::count_if(diag.begin(), diag.end(), [](std::int64_t x) { return x != 0; }));
}

namespace {

// The reduction runs on arbitrary-precision integers; only the final
// matrices have to fit in int64.
using Row = std::vector<mpz_class>;
using Mat = std::vector<Row>;

Mat to_mat(const IntegerMatrix& m) {
  Mat a(m.rows(), Row(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = static_cast<long>(m(i, j));
  return a;
}

Mat identity(std::size_t n) {
  Mat a(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

IntegerMatrix from_mat(const Mat& a, std::size_t rows, std::size_t cols) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (!a[i][j].fits_slong_p()) throw Error(ErrorCode::ArithmeticOverflow, "Smith transform entry exceeds 64 bits");
      m(i, j) = a[i][j].get_si();
    }
  return m;
}

void add_row(Mat& a, std::size_t target, std::size_t source, const mpz_class& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < a[target].size(); ++j) a[target][j] += k * a[source][j];
}

void add_col(Mat& a, std::size_t target, std::size_t source, const mpz_class& k) {
  if (k == 0) return;
  for (auto& r : a) r[target] += k * r[source];
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), Row(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

void swap_cols(Mat& a, std::size_t i, std::size_t j) {
  for (auto& r : a) std::swap(r[i], r[j]);
}

// Quotient rounded to nearest.
mpz_class nearest_quotient(const mpz_class& a, const mpz_class& p) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  if (2 * abs(r) > abs(p)) q += 1;
  return q;
}

mpz_class round_q(const mpq_class& x) {
  mpq_class h = x + mpq_class(1, 2);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return q;
}

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const Mat& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  mpz_class best_abs;
  for (std::size_t i = t; i < d.size(); ++i)
    for (std::size_t j = t; j < d[i].size(); ++j) {
      if (d[i][j] == 0) continue;
      mpz_class a = abs(d[i][j]);
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

// LLL reduction (delta 3/4, exact arithmetic) of n vectors read through
// `get`. `op(k, j, q)` applies b_k -= q b_j, or swaps b_k and b_j when q is 0;
// `mirror` receives the same steps so dependent data can follow.
template <typename Get, typename Op, typename Mirror>
void lll(std::size_t n, Get get, Op op, Mirror mirror) {
  if (n < 2) return;
  auto dot = [&](std::size_t a, std::size_t b) {
    mpz_class s = 0;
    const auto va = get(a), vb = get(b);
    for (std::size_t i = 0; i < va.size(); ++i) s += va[i] * vb[i];
    return s;
  };
  // Exact Gram-Schmidt data: mu and squared norms of the orthogonalized vectors.
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> bb(n);
  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      bb[i] = dot(i, i);
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class s = dot(i, j);
        for (std::size_t k = 0; k < j; ++k) s -= mu[j][k] * mu[i][k] * bb[k];
        mu[i][j] = bb[j] == 0 ? mpq_class(0) : mpq_class(s / bb[j]);
        bb[i] -= mu[i][j] * mu[i][j] * bb[j];
      }
    }
  };
  const mpq_class delta(3, 4);
  std::size_t k = 1;
  gram_schmidt();
  while (k < n) {
    for (std::size_t j = k; j-- > 0;) {
      const mpz_class q = round_q(mu[k][j]);
      if (q == 0) continue;
      op(k, j, q);
      mirror(k, j, q);
      gram_schmidt();
    }
    if (bb[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bb[k - 1]) {
      ++k;
    } else {
      op(k, k - 1, mpz_class(0));  // q = 0 means swap
      mirror(k, k - 1, mpz_class(0));
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
}

// Shrinks U and V without changing D = U M V. Columns of V with the same
// diagonal value can be recombined by any unimodular E as long as the
// matching rows of U take E^-1; kernel columns (zero diagonal) and left
// kernel rows need no compensation at all, and may also be subtracted from
// the other columns and rows freely.
void reduce_transforms(Mat& u, Mat& v, const std::vector<mpz_class>& diag) {
  const std::size_t rows = u.size(), cols = v.size();
  std::size_t r = 0;
  while (r < diag.size() && diag[r] != 0) ++r;

  auto column = [&](std::size_t base) {
    return [&v, base](std::size_t i) {
      Row c(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) c[k] = v[k][base + i];
      return c;
    };
  };
  auto row = [&](std::size_t base) { return [&u, base](std::size_t i) { return u[base + i]; }; };

  for (std::size_t a = 0; a < r;) {
    std::size_t b = a;
    while (b < r && diag[b] == diag[a]) ++b;
    lll(
        b - a, column(a),
        [&](std::size_t k, std::size_t j, const mpz_class& q) {
          if (q == 0) swap_cols(v, a + k, a + j);
          else add_col(v, a + k, a + j, -q);
        },
        [&](std::size_t k, std::size_t j, const mpz_class& q) {
          if (q == 0) std::swap(u[a + k], u[a + j]);
          else add_row(u, a + j, a + k, q);
        });
    a = b;
  }
  // A column may also absorb (d_j / d_i) times an earlier column i, with
  // row i of U absorbing the opposite multiple of row j. Babai rounding
  // against the scaled earlier columns.
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<std::size_t> earlier;
    for (std::size_t i = 0; i < j; ++i)
      if (diag[i] != diag[j]) earlier.push_back(i);
    if (earlier.empty()) continue;
    std::vector<std::vector<mpq_class>> star;
    std::vector<mpz_class> scale;
    for (std::size_t i : earlier) {
      const mpz_class f = diag[j] / diag[i];
      scale.push_back(f);
      std::vector<mpq_class> sv(cols);
      for (std::size_t k = 0; k < cols; ++k) sv[k] = mpq_class(f * v[k][i]);
      const auto raw = sv;
      for (const auto& t : star) {
        mpq_class num = 0, den = 0;
        for (std::size_t k = 0; k < cols; ++k) {
          num += raw[k] * t[k];
          den += t[k] * t[k];
        }
        if (den != 0) {
          const mpq_class c = num / den;
          for (std::size_t k = 0; k < cols; ++k) sv[k] -= c * t[k];
        }
      }
      star.push_back(std::move(sv));
    }
    for (std::size_t e = earlier.size(); e-- > 0;) {
      mpq_class num = 0, den = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        num += mpq_class(v[k][j]) * star[e][k];
        den += star[e][k] * star[e][k];
      }
      if (den == 0) continue;
      const mpz_class q = round_q(num / den);
      if (q == 0) continue;
      add_col(v, j, earlier[e], -q * scale[e]);
      add_row(u, earlier[e], j, q);
    }
  }

  auto none = [](std::size_t, std::size_t, const mpz_class&) {};
  if (cols > r) {
    lll(
        cols - r, column(r),
        [&](std::size_t k, std::size_t j, const mpz_class& q) {
          if (q == 0) swap_cols(v, r + k, r + j);
          else add_col(v, r + k, r + j, -q);
        },
        none);
  }
  if (rows > r) {
    lll(
        rows - r, row(r),
        [&](std::size_t k, std::size_t j, const mpz_class& q) {
          if (q == 0) std::swap(u[r + k], u[r + j]);
          else add_row(u, r + k, r + j, -q);
        },
        none);
  }

  // Size-reduce the remaining columns of V against the kernel columns, and
  // the remaining rows of U against the left kernel rows.
  auto size_reduce = [](std::size_t count, auto get, auto sub, std::size_t first_kernel, std::size_t kernel_count) {
    if (kernel_count == 0) return;
    // Gram-Schmidt of the kernel vectors.
    std::vector<std::vector<mpq_class>> star;
    for (std::size_t i = 0; i < kernel_count; ++i) {
      const auto b = get(first_kernel + i);
      std::vector<mpq_class> s(b.begin(), b.end());
      for (const auto& t : star) {
        mpq_class num = 0, den = 0;
        for (std::size_t k = 0; k < s.size(); ++k) {
          num += mpq_class(b[k]) * t[k];
          den += t[k] * t[k];
        }
        if (den == 0) continue;
        const mpq_class c = num / den;
        for (std::size_t k = 0; k < s.size(); ++k) s[k] -= c * t[k];
      }
      star.push_back(std::move(s));
    }
    for (std::size_t x = 0; x < count; ++x) {
      for (std::size_t i = kernel_count; i-- > 0;) {
        const auto w = get(x);
        mpq_class num = 0, den = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
          num += mpq_class(w[k]) * star[i][k];
          den += star[i][k] * star[i][k];
        }
        if (den == 0) continue;
        const mpz_class q = round_q(num / den);
        if (q != 0) sub(x, first_kernel + i, q);
      }
    }
  };
  size_reduce(
      r, column(0), [&](std::size_t x, std::size_t k, const mpz_class& q) { add_col(v, x, k, -q); }, r, cols - r);
  size_reduce(
      r, row(0), [&](std::size_t x, std::size_t k, const mpz_class& q) { add_row(u, x, k, -q); }, r, rows - r);
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  Mat d = to_mat(m), u = identity(m.rows()), v = identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      auto piv = smallest_entry(d, t);
      if (!piv) break;  // active block is zero
      std::swap(d[t], d[piv->first]);
      std::swap(u[t], u[piv->first]);
      swap_cols(d, t, piv->second);
      swap_cols(v, t, piv->second);
      const mpz_class p = d[t][t];

      bool residue = false;
      for (std::size_t i = t + 1; i < d.size(); ++i) {
        if (d[i][t] == 0) continue;
        const mpz_class q = nearest_quotient(d[i][t], p);
        add_row(d, i, t, -q);
        add_row(u, i, t, -q);
        residue = residue || d[i][t] != 0;
      }
      if (residue) continue;

      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (d[t][j] == 0) continue;
        const mpz_class q = nearest_quotient(d[t][j], p);
        add_col(d, j, t, -q);
        add_col(v, j, t, -q);
        residue = residue || d[t][j] != 0;
      }
      if (residue) continue;

      // Divisibility: pull an offending row into the pivot row and go again.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < d.size() && !bad; ++i)
        for (std::size_t j = t + 1; j < m.cols(); ++j)
          if (d[i][j] % p != 0) {
            bad = i;
            break;
          }
      if (bad) {
        add_row(d, t, *bad, 1);
        add_row(u, t, *bad, 1);
        continue;
      }
      if (p < 0) {
        for (auto& x : d[t]) x = -x;
        for (auto& x : u[t]) x = -x;
      }
      break;
    }
  }

  std::vector<mpz_class> diag;
  for (std::size_t i = 0; i < n; ++i) diag.push_back(d[i][i]);
  reduce_transforms(u, v, diag);
  // The same reduction for the transposed problem V^T M^T U^T = D^T shrinks U.
  Mat ut = transpose(v), vt = transpose(u);
  reduce_transforms(ut, vt, diag);
  u = transpose(vt);
  v = transpose(ut);
  return SmithForm{from_mat(d, m.rows(), m.cols()), from_mat(u, m.rows(), m.rows()), from_mat(v, m.cols(), m.cols())};
}

}  // namespace flab::fpgroup
