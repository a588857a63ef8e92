#include "flab/fpgroup/fox.hpp"

#include "flab/checked.hpp"
#include "flab/error.hpp"

namespace flab::fpgroup {

LaurentPolynomial fox_derivative(const Word& w, Gen gen, const std::vector<std::int64_t>& weights) {
  LaurentPolynomial acc;
  std::int64_t prefix = 0;
  for (const auto& l : w.letters()) {
    if (l.gen >= weights.size()) throw Error(ErrorCode::DimensionMismatch, "no weight for generator");
    if (l.sign > 0) {
      if (l.gen == gen) acc += LaurentPolynomial::monomial(1, prefix);
      prefix = checked::add(prefix, weights[l.gen]);
    } else {
      prefix = checked::sub(prefix, weights[l.gen]);
      if (l.gen == gen) acc -= LaurentPolynomial::monomial(1, prefix);
    }
  }
  return acc;
}

std::vector<std::vector<LaurentPolynomial>> alexander_matrix(const Presentation& p,
                                                             const std::vector<std::int64_t>& weights) {
  if (weights.size() != p.generator_count())
    throw Error(ErrorCode::DimensionMismatch, "one weight per generator required");
  std::vector<std::vector<LaurentPolynomial>> m;
  for (const auto& r : p.relators) {
    std::vector<LaurentPolynomial> row;
    for (Gen g = 0; g < p.generator_count(); ++g) row.push_back(fox_derivative(r, g, weights));
    m.push_back(std::move(row));
  }
  return m;
}

LaurentPolynomial fox_alexander(const Presentation& p, const std::vector<std::int64_t>& weights) {
  const std::size_t n = p.generator_count();
  if (!p.shadows.empty()) throw Error(ErrorCode::BadDeficiency, "presentation has shadow families");
  if (n == 0 || p.relators.size() + 1 != n)
    throw Error(ErrorCode::BadDeficiency, std::to_string(n) + " generators, " + std::to_string(p.relators.size()) +
                                              " relators; deficiency one required");
  auto a = alexander_matrix(p, weights);
  LaurentPolynomial g;
  for (std::size_t drop = 0; drop < n; ++drop) {
    std::vector<std::vector<LaurentPolynomial>> minor;
    for (const auto& row : a) {
      std::vector<LaurentPolynomial> r;
      for (std::size_t j = 0; j < n; ++j)
        if (j != drop) r.push_back(row[j]);
      minor.push_back(std::move(r));
    }
    g = gcd(g, determinant(std::move(minor)));
  }
  return g.normalized();
}

}  // namespace flab::fpgroup
