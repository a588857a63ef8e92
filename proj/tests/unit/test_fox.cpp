#include "doctest.h"
#include "flab/error.hpp"
#include "flab/fpgroup/fox.hpp"
#include "oracles.hpp"

using namespace flab;
using namespace flab::fpgroup;

namespace {

LaurentPolynomial poly(const oracle::Poly& p) { return LaurentPolynomial::from_coefficients(p); }

}  // namespace

TEST_CASE("laurent arithmetic") {
  const auto a = LaurentPolynomial::from_coefficients({1, -1, 1});
  CHECK(a.to_string() == "t^2 - t + 1");
  CHECK((a * LaurentPolynomial::monomial(1, -1)).min_exponent() == -1);
  CHECK((a * LaurentPolynomial::monomial(-2, -3)).normalized() == a * LaurentPolynomial(2));
  CHECK(a.reciprocal().normalized() == a);
  CHECK(exact_divide(a * LaurentPolynomial::from_coefficients({1, 1}), a) == LaurentPolynomial::from_coefficients({1, 1}));
  CHECK_THROWS_AS(exact_divide(a, LaurentPolynomial::from_coefficients({1, 1})), Error);
  CHECK(gcd(a * LaurentPolynomial::from_coefficients({1, 1}), a * LaurentPolynomial::from_coefficients({1, -1})) == a);
  CHECK(a.is_monic());
  CHECK_FALSE(LaurentPolynomial::from_coefficients({2, -3, 2}).is_monic());
}

TEST_CASE("fox alexander matches the Seifert form oracle") {
  const auto trefoil = Presentation::parse({"a", "b"}, {"a b a B A B"});
  CHECK(fox_alexander(trefoil, {1, 1}) == poly(oracle::seifert_alexander(-1, 1, 0, -1)));
  CHECK(fox_alexander(trefoil, {1, 1}).to_string() == "t^2 - t + 1");

  // Two-bridge form of the figure-eight: a w = w b with w = b A B a.
  const auto fig8 = Presentation::parse({"a", "b"}, {"a b A B a B A b a B"});
  CHECK(fox_alexander(fig8, {1, 1}) == poly(oracle::seifert_alexander(1, 1, 0, -1)));
  CHECK(fox_alexander(fig8, {1, 1}).to_string() == "t^2 - 3t + 1");

  CHECK(fox_alexander(Presentation::parse({"a"}, {}), {1}) == LaurentPolynomial(1));
}

TEST_CASE("fox alexander shape errors") {
  CHECK_THROWS_AS(fox_alexander(Presentation::parse({"a", "b"}, {}), {1, 1}), Error);
  auto p = Presentation::parse({"a", "b"}, {"a b a B A B"});
  p.shadows.push_back({"s", {p.word("a b A B")}, false});
  CHECK_THROWS_AS(fox_alexander(p, {1, 1}), Error);
}

TEST_CASE("fox derivative") {
  const std::vector<std::int64_t> w = {1, 1};
  const auto r = parse_word("a b A", std::vector<std::string>{"a", "b"});
  // d(a b a^-1)/da = 1 - a b a^-1 -> 1 - t
  CHECK(fox_derivative(r, 0, w) == LaurentPolynomial::from_coefficients({1, -1}));
  CHECK(fox_derivative(r, 1, w) == LaurentPolynomial::monomial(1, 1));
}
