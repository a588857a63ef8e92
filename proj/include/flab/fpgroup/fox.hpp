#pragma once

#include <vector>

#include "flab/fpgroup/laurent.hpp"
#include "flab/fpgroup/presentation.hpp"

namespace flab::fpgroup {

/// d w / d x_gen, pushed to Z[t, 1/t] by x_i -> t^weights[i].
LaurentPolynomial fox_derivative(const Word& w, Gen gen, const std::vector<std::int64_t>& weights);

/// Relators x generators matrix of Fox derivatives.
std::vector<std::vector<LaurentPolynomial>> alexander_matrix(const Presentation& p,
                                                             const std::vector<std::int64_t>& weights);

/// gcd of the maximal minors obtained by deleting one column, normalized.
/// Requires deficiency one and no shadow families (BadDeficiency otherwise).
LaurentPolynomial fox_alexander(const Presentation& p, const std::vector<std::int64_t>& weights);

}  // namespace flab::fpgroup
