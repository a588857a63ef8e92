#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flab/fpgroup/integer_matrix.hpp"
#include "flab/fpgroup/presentation.hpp"

namespace flab::fpgroup {

/// Z^free_rank + Z/d1 + ... with d1 | d2 | ..., each d >= 2.
struct AbelianGroupStructure {
  std::int64_t free_rank = 0;
  std::vector<std::int64_t> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool has_two_torsion() const;
  std::string to_string() const;  // "0", "Z", "Z^2 + Z/3", ...
  bool operator==(const AbelianGroupStructure&) const = default;
};

/// Z^cols modulo the row span of `relations`.
AbelianGroupStructure cokernel(const IntegerMatrix& relations);

/// Relators x generators matrix of exponent sums. Throws ShadowNotCommutator
/// when a shadow family has a normal generator with nonzero exponent sum,
/// since the abelianization would then depend on relators we do not have.
IntegerMatrix exponent_matrix(const Presentation& p);

AbelianGroupStructure abelianize(const Presentation& p);

/// Explicit quotient map Z^generators -> H1. Coordinates are listed torsion
/// first (modulus d), then free (modulus 0).
struct AbelianizationMap {
  std::vector<std::int64_t> moduli;
  std::vector<std::size_t> columns;  // columns of `basis` used as coordinates
  IntegerMatrix basis;               // generators x generators, x -> x basis

  std::size_t dimension() const { return moduli.size(); }
  IntVector image(const Word& w) const;
  /// Exponent vector over the generators, then mapped.
  IntVector image(const IntVector& exponents) const;
  AbelianGroupStructure group() const;
};

AbelianizationMap abelianization_map(const Presentation& p);

}  // namespace flab::fpgroup
