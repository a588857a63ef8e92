#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flab/fpgroup/integer_matrix.hpp"
#include "flab/fpgroup/presentation.hpp"

namespace flab::fourfold {

using fpgroup::IntegerMatrix;
using fpgroup::IntVector;
using fpgroup::Presentation;
using fpgroup::Word;

struct MarkedSurface {
  std::string label;
  std::int64_t genus = 0;
  std::int64_t self_intersection = 0;
  std::optional<IntVector> homology;        // nullopt: not in the tracked basis
  std::optional<std::vector<Word>> images;  // images of the 2g standard generators
  bool symplectic = false;
};

/// Basis classes that must pair to zero with every basic class, processed
/// group by group by the enumerator.
struct ZeroPairingGroup {
  std::string name;
  std::vector<std::string> labels;
};

struct FourManifoldModel {
  std::string name;
  std::int64_t euler = 0;
  std::int64_t signature = 0;
  std::int64_t b1 = 0;
  std::vector<std::string> basis;
  IntegerMatrix form;
  Presentation pi1;
  std::vector<MarkedSurface> surfaces;
  std::vector<ZeroPairingGroup> zero_pairing;
  bool symplectic = false;
  std::optional<IntVector> canonical;
  std::vector<std::string> assumptions;

  const MarkedSurface& surface(std::string_view label) const;  // throws UnknownSurface
  std::optional<std::size_t> basis_index(std::string_view label) const;
  /// Unit vector of a basis label.
  IntVector basis_vector(std::string_view label) const;
};

struct CharNumbers {
  std::int64_t c1sq = 0;
  mpq_class chi_h;
  bool chi_h_integral = true;
};

/// c1^2 = 2e + 3 sigma, chi_h = (e + sigma) / 4.
CharNumbers char_numbers(std::int64_t euler, std::int64_t signature);
CharNumbers char_numbers(const FourManifoldModel& x);

struct SumNumbers {
  std::int64_t euler = 0;
  std::int64_t signature = 0;
  std::int64_t c1sq = 0;
  mpq_class chi_h;
};

/// Characteristic numbers of a fiber sum along genus g, computed twice:
/// e = e1 + e2 - 2(2 - 2g), sigma additive; and c1^2 = c1^2_1 + c1^2_2 + 8(g-1),
/// chi_h = chi_1 + chi_2 + (g-1). Throws InconsistentModel if the routes differ.
SumNumbers sum_characteristic_numbers(std::int64_t e1, std::int64_t s1, std::int64_t e2, std::int64_t s2,
                                      std::int64_t g);

}  // namespace flab::fourfold
