#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flab/fpgroup/abelian.hpp"
#include "flab/knotforge/knot.hpp"

namespace flab::knotforge {

/// Fibration of a closed 3-manifold over the circle: closed fiber of the
/// given genus, its generators as words in the manifold's group, and the
/// monodromy over fiber-generator indices when known.
struct BundleData {
  std::int64_t fiber_genus = 0;
  std::vector<Word> fiber_words;
  std::optional<std::vector<Word>> monodromy;
};

struct ThreeManifoldModel {
  std::string name;
  Presentation presentation;
  fpgroup::AbelianGroupStructure h1;
  /// Surgery dual circle direction: the knot's meridian.
  Word meridian;
  std::optional<BundleData> bundle;
};

/// Knot group plus the longitude as a relator. Bundle data is recorded when
/// the knot is fibered with known fiber.
ThreeManifoldModel zero_surgery(const KnotGroupModel& k);

}  // namespace flab::knotforge
