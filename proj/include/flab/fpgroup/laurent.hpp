#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace flab::fpgroup {

/// Integer Laurent polynomial in t. Zero coefficients are never stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::int64_t constant);
  static LaurentPolynomial monomial(std::int64_t coef, std::int64_t exp);
  /// coeffs[k] is the coefficient of t^(shift + k).
  static LaurentPolynomial from_coefficients(const std::vector<std::int64_t>& coeffs, std::int64_t shift = 0);

  const std::map<std::int64_t, std::int64_t>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::int64_t min_exponent() const;  // requires nonzero
  std::int64_t max_exponent() const;  // requires nonzero
  std::int64_t span() const { return is_zero() ? 0 : max_exponent() - min_exponent(); }
  std::int64_t leading() const;   // coefficient at max exponent
  std::int64_t trailing() const;  // coefficient at min exponent
  std::int64_t coefficient(std::int64_t exp) const;
  /// Dense coefficients from min exponent to max exponent.
  std::vector<std::int64_t> coefficients() const;
  /// Multiply by t^k.
  LaurentPolynomial shifted(std::int64_t k) const;
  /// t -> 1/t
  LaurentPolynomial reciprocal() const;
  /// Minimum exponent 0, positive leading coefficient.
  LaurentPolynomial normalized() const;
  std::int64_t content() const;
  bool is_monic() const { return !is_zero() && (leading() == 1 || leading() == -1) && (trailing() == 1 || trailing() == -1); }

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  bool operator==(const LaurentPolynomial&) const = default;

  /// "t^2 - t + 1"
  std::string to_string() const;

 private:
  void add_term(std::int64_t exp, std::int64_t coef);
  std::map<std::int64_t, std::int64_t> c_;
};

/// Exact quotient in Z[t, 1/t]; throws InexactDivision on a nonzero remainder.
LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b);
/// Greatest common divisor up to units, normalized.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);
/// Determinant by fraction-free elimination.
LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> m);

}  // namespace flab::fpgroup
