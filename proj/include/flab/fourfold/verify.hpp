#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flab/fpgroup/abelian.hpp"
#include "flab/fourfold/model.hpp"
#include "flab/fourfold/rational_lattice.hpp"

namespace flab::fourfold {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  Inertia inertia;
  bool even = false;
  bool spin = false;
  std::optional<fpgroup::AbelianGroupStructure> h1;  // absent if shadows block it
  std::vector<std::string> assumptions;

  bool all_passed() const;
  const Check* find(const std::string& name) const;
  /// Names of failing checks, comma separated.
  std::string failures() const;
};

/// Checks every model invariant: form symmetry, rank = b2 = e - 2 + 2 b1,
/// signature, unimodularity, surface squares and image counts, abelianized
/// pi1 against b1, and that a recorded canonical class is characteristic.
/// Spin is reported as: even form and no 2-torsion in H1 (with H2 assumed
/// torsion-free, recorded as an assumption).
VerificationReport verify_model(const FourManifoldModel& x);

}  // namespace flab::fourfold
