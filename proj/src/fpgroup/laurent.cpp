#include "flab/fpgroup/laurent.hpp"

#include <utility>

#include "flab/checked.hpp"
#include "flab/error.hpp"

namespace flab::fpgroup {

namespace {

using Dense = std::vector<std::int64_t>;  // index = exponent, top entry nonzero

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::int64_t dense_content(const Dense& a) {
  std::int64_t g = 0;
  for (auto x : a) g = checked::gcd(g, x);
  return g;
}

Dense primitive(Dense a) {
  std::int64_t g = dense_content(a);
  if (g > 1)
    for (auto& x : a) x /= g;
  if (!a.empty() && a.back() < 0)
    for (auto& x : a) x = checked::neg(x);
  return a;
}

// lc(b)^k a = q b + r with deg r < deg b.
Dense pseudo_remainder(Dense r, const Dense& b) {
  const std::int64_t lb = b.back();
  const std::size_t db = b.size() - 1;
  while (!r.empty() && r.size() - 1 >= db) {
    const std::int64_t lr = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& x : r) x = checked::mul(x, lb);
    for (std::size_t i = 0; i <= db; ++i) r[i + shift] = checked::sub(r[i + shift], checked::mul(lr, b[i]));
    trim(r);
    r = primitive(r);  // keeps coefficients small; gcd is unaffected up to content
  }
  return r;
}

Dense to_dense(const LaurentPolynomial& p) { return p.is_zero() ? Dense{} : p.coefficients(); }

}  // namespace

LaurentPolynomial::LaurentPolynomial(std::int64_t constant) { add_term(0, constant); }

LaurentPolynomial LaurentPolynomial::monomial(std::int64_t coef, std::int64_t exp) {
  LaurentPolynomial p;
  p.add_term(exp, coef);
  return p;
}

LaurentPolynomial LaurentPolynomial::from_coefficients(const std::vector<std::int64_t>& coeffs, std::int64_t shift) {
  LaurentPolynomial p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(shift + static_cast<std::int64_t>(k), coeffs[k]);
  return p;
}

void LaurentPolynomial::add_term(std::int64_t exp, std::int64_t coef) {
  if (coef == 0) return;
  auto [it, inserted] = c_.try_emplace(exp, coef);
  if (!inserted) {
    it->second = checked::add(it->second, coef);
    if (it->second == 0) c_.erase(it);
  }
}

std::int64_t LaurentPolynomial::min_exponent() const { return c_.empty() ? 0 : c_.begin()->first; }
std::int64_t LaurentPolynomial::max_exponent() const { return c_.empty() ? 0 : c_.rbegin()->first; }
std::int64_t LaurentPolynomial::leading() const { return c_.empty() ? 0 : c_.rbegin()->second; }
std::int64_t LaurentPolynomial::trailing() const { return c_.empty() ? 0 : c_.begin()->second; }

std::int64_t LaurentPolynomial::coefficient(std::int64_t exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? 0 : it->second;
}

std::vector<std::int64_t> LaurentPolynomial::coefficients() const {
  std::vector<std::int64_t> out;
  if (c_.empty()) return out;
  out.assign(static_cast<std::size_t>(span() + 1), 0);
  for (auto [e, c] : c_) out[static_cast<std::size_t>(e - min_exponent())] = c;
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t k) const {
  LaurentPolynomial p;
  for (auto [e, c] : c_) p.c_.emplace(checked::add(e, k), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::reciprocal() const {
  LaurentPolynomial p;
  for (auto [e, c] : c_) p.c_.emplace(checked::neg(e), c);
  return p;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (is_zero()) return *this;
  LaurentPolynomial p = shifted(-min_exponent());
  return p.leading() < 0 ? -p : p;
}

std::int64_t LaurentPolynomial::content() const {
  std::int64_t g = 0;
  for (auto [e, c] : c_) g = checked::gcd(g, c);
  return g;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.c_) add_term(e, checked::neg(c));
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial p = *this;
  return p += o;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial p = *this;
  return p -= o;
}

LaurentPolynomial LaurentPolynomial::operator-() const { return LaurentPolynomial() - *this; }

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial p;
  for (auto [e1, c1] : c_)
    for (auto [e2, c2] : o.c_) p.add_term(checked::add(e1, e2), checked::mul(c1, c2));
  return p;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    auto [e, c] = *it;
    std::int64_t a = c < 0 ? -c : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (e == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a);
    s += "t";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InexactDivision, "division by zero polynomial");
  if (a.is_zero()) return a;
  Dense r = to_dense(a);
  const Dense d = to_dense(b);
  if (r.size() < d.size()) throw Error(ErrorCode::InexactDivision, a.to_string() + " / " + b.to_string());
  Dense q(r.size() - d.size() + 1, 0);
  const std::int64_t ld = d.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    std::int64_t top = r[k + d.size() - 1];
    if (top % ld != 0) throw Error(ErrorCode::InexactDivision, a.to_string() + " / " + b.to_string());
    q[k] = top / ld;
    for (std::size_t i = 0; i < d.size(); ++i) r[k + i] = checked::sub(r[k + i], checked::mul(q[k], d[i]));
  }
  trim(r);
  if (!r.empty()) throw Error(ErrorCode::InexactDivision, a.to_string() + " / " + b.to_string());
  return LaurentPolynomial::from_coefficients(q, a.min_exponent() - b.min_exponent());
}

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  Dense x = to_dense(a), y = to_dense(b);
  const std::int64_t c = checked::gcd(dense_content(x), dense_content(y));
  x = primitive(x);
  y = primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive(std::move(r));
  }
  x = primitive(x);
  for (auto& v : x) v = checked::mul(v, c);
  return LaurentPolynomial::from_coefficients(x).normalized();
}

LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> m) {
  const std::size_t n = m.size();
  if (n == 0) return LaurentPolynomial(1);
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  LaurentPolynomial prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return LaurentPolynomial();
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace flab::fpgroup
