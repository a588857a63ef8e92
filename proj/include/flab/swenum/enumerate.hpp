#pragma once

#include <string>
#include <vector>

#include "flab/fourfold/model.hpp"
#include "flab/swenum/characteristic.hpp"

namespace flab::swenum {

/// A surface used in the adjunction bound |v . h| <= 2g - 2 - h^2.
struct AdjunctionSurface {
  std::string label;
  IntVector homology;
  std::int64_t genus = 1;
  std::int64_t square = 0;

  std::int64_t bound() const { return 2 * genus - 2 - square; }
};

/// Classes every candidate must pair to zero with, eliminated together.
struct ZeroPairingConstraint {
  std::string name;
  std::vector<std::string> labels;  // for the trace; may be empty
  std::vector<IntVector> classes;
};

struct ConstraintSet {
  std::vector<AdjunctionSurface> surfaces;
  std::vector<ZeroPairingConstraint> zero_pairing;
  std::int64_t square = 0;  // required v^T Q v, 2e + 3 sigma
};

/// Builds constraints from a model: every surface of genus >= 1 with a
/// homology class, except that negative-square surfaces are only used when
/// `simple_type` holds; zero-pairing groups become unit vectors.
ConstraintSet constraints_from_model(const fourfold::FourManifoldModel& m, bool simple_type);

/// True for symplectic models with b2+ > 1.
bool is_simple_type(const fourfold::FourManifoldModel& m);

struct EliminationStep {
  std::string group;
  std::size_t constraints = 0;
  std::size_t kernel_rank = 0;  // after this group
  /// Basis labels whose coordinate is forced to zero by this group (newly).
  std::vector<std::string> forced_zero;
};

struct EnumerationOptions {
  unsigned workers = 1;
  std::size_t max_points = 50'000'000;  // SearchTooLarge beyond this
  /// Throw NoCharacteristicVector instead of returning an empty flagged result.
  bool require_characteristic = false;
  std::vector<std::string> basis_labels;  // for the trace; defaults to e1, e2, ...
};

struct EnumerationResult {
  std::vector<IntVector> candidates;  // sorted, negation closed
  std::vector<EliminationStep> trace;
  bool characteristic_exists = true;  // some characteristic vector meets the zero-pairing constraints
  std::vector<std::int64_t> box;      // half-widths in kernel coordinates
  std::size_t points_scanned = 0;
};

/// All integer v that are characteristic, have v^T Q v = constraints.square,
/// satisfy every adjunction bound and pair to zero with every zero-pairing
/// class. Zero pairing is solved first, group by group, as an integer kernel;
/// the adjunction functionals then bound the kernel coordinates through a
/// rational dual basis, rounded inward. Errors: DimensionMismatch,
/// UnboundedRegion, SearchTooLarge, NoCharacteristicVector (on request).
EnumerationResult enumerate_basic_candidates(const IntegerMatrix& q, const ConstraintSet& c,
                                             const EnumerationOptions& opt = {});

/// Plain scan of |v_i| <= bound with the same filters.
std::vector<IntVector> brute_force_candidates(const IntegerMatrix& q, const ConstraintSet& c, std::int64_t bound);

/// The candidate meeting the adjunction equality v . S = 2g - 2 - S^2 on every
/// symplectic surface, if exactly one does.
std::optional<IntVector> canonical_from_candidates(const IntegerMatrix& q, const std::vector<AdjunctionSurface>& symplectic,
                                                   const std::vector<IntVector>& candidates);

/// "2S+2T", "-2S-4Sigma" style rendering over basis labels; "0" for zero.
std::string format_class(const IntVector& v, const std::vector<std::string>& labels);

}  // namespace flab::swenum
