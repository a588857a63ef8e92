#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flab/fourfold/model.hpp"
#include "flab/swenum/enumerate.hpp"

namespace flab::swenum {

struct ChamberInfo {
  std::int64_t b1 = 0, b2plus = 0, b2minus = 0;
  bool sw_zero_well_defined = false;
};

/// SW^0 is well defined when b1 = 0, b2+ = 1 and b2- <= 9.
ChamberInfo chamber_info(std::int64_t b1, std::int64_t b2plus, std::int64_t b2minus);

/// SW+ - SW- for a moduli space of dimension 2m: -(-1)^m.
/// Throws OddOrNegativeDimension.
std::int64_t wall_crossing_delta(std::int64_t dimension);

inline constexpr const char* kUndetermined = "undetermined by this artifact";

struct SwValue {
  IntVector cls;
  std::string value;    // "±1" or kUndetermined
  std::string chamber;  // "metric independent", "SW-", "SW0", or ""
};

struct BasicClassReport {
  std::vector<std::string> basis;
  std::vector<IntVector> candidates;
  std::optional<IntVector> canonical;
  std::vector<SwValue> sw_values;
  ChamberInfo chamber;
  std::vector<EliminationStep> trace;
  std::vector<std::string> warnings;
  bool characteristic_exists = true;
  bool simple_type = false;
};

/// Records SW(±K) = ±1 when b2+ > 1. When b2+ = 1 only -K is recorded, as
/// SW- = ±1, and as SW0 too when the chamber is well defined. Every other
/// candidate is marked undetermined. A canonical class outside the candidate
/// list only adds a warning.
BasicClassReport taubes_annotate(BasicClassReport report, const IntVector& canonical, std::int64_t b2plus);

struct BasicClassOptions {
  unsigned workers = 1;
  /// Use the simple-type square and negative-square surfaces even when the
  /// model does not qualify on its own (symplectic with b2+ > 1).
  bool assume_simple_type = false;
};

/// Enumerates candidates for a model, derives the canonical class from the
/// symplectic surfaces when the model has none recorded, and annotates.
BasicClassReport basic_classes(const fourfold::FourManifoldModel& m, const BasicClassOptions& opt = {});

}  // namespace flab::swenum
