#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flab/knotforge/knot.hpp"

namespace flab::knotforge {

/// Table range for twist knots: 1 <= |n| <= 5.
constexpr std::int64_t kTwistTableLimit = 5;

/// Twist knot n is the two-bridge knot b(|4n+1|, |4n+1| - 2) written in
/// Schubert normal form. n = -1 is the trefoil, n = 1 the figure-eight.
struct TwistKnotEntry {
  std::int64_t n;
  std::vector<std::string> generators;  // {"a", "b"}
  std::string relator;
  std::string meridian;
  std::string longitude;
  std::vector<std::int64_t> alexander;  // normalized, from t^0 up
};

TwistKnotEntry twist_knot_entry(std::int64_t n);

/// Fiber data of the two genus-one fibered knots in the a, b generators.
FiberData trefoil_fiber();
FiberData figure_eight_fiber();

}  // namespace flab::knotforge
