#include "flab/swenum/chamber.hpp"

#include <algorithm>

#include "flab/error.hpp"
#include "flab/fourfold/rational_lattice.hpp"

namespace flab::swenum {

ChamberInfo chamber_info(std::int64_t b1, std::int64_t b2plus, std::int64_t b2minus) {
  return {b1, b2plus, b2minus, b1 == 0 && b2plus == 1 && b2minus <= 9};
}

std::int64_t wall_crossing_delta(std::int64_t dimension) {
  if (dimension < 0 || dimension % 2 != 0)
    throw Error(ErrorCode::OddOrNegativeDimension, "dimension " + std::to_string(dimension) + " is not 2m with m >= 0");
  return (dimension / 2) % 2 == 0 ? -1 : 1;
}

BasicClassReport taubes_annotate(BasicClassReport report, const IntVector& canonical, std::int64_t b2plus) {
  report.sw_values.clear();
  IntVector neg(canonical.size());
  std::transform(canonical.begin(), canonical.end(), neg.begin(), [](std::int64_t x) { return -x; });
  const bool present = std::binary_search(report.candidates.begin(), report.candidates.end(), canonical);
  if (!present) report.warnings.push_back("canonical class is not among the candidates");
  for (const auto& c : report.candidates) {
    if (present && b2plus > 1 && (c == canonical || c == neg)) {
      report.sw_values.push_back({c, "±1", "metric independent"});
    } else if (present && b2plus == 1 && c == neg) {
      report.sw_values.push_back({c, "±1", "SW-"});
      if (report.chamber.sw_zero_well_defined) report.sw_values.push_back({c, "±1", "SW0"});
    } else {
      report.sw_values.push_back({c, kUndetermined, ""});
    }
  }
  return report;
}

BasicClassReport basic_classes(const fourfold::FourManifoldModel& m, const BasicClassOptions& opt) {
  const auto in = fourfold::inertia(m.form);
  const bool simple = opt.assume_simple_type || is_simple_type(m);
  const auto c = constraints_from_model(m, simple);
  EnumerationOptions eo;
  eo.workers = opt.workers;
  eo.basis_labels = m.basis;
  auto res = enumerate_basic_candidates(m.form, c, eo);

  BasicClassReport r;
  r.basis = m.basis;
  r.candidates = res.candidates;
  r.trace = res.trace;
  r.characteristic_exists = res.characteristic_exists;
  r.simple_type = simple;
  r.chamber = chamber_info(m.b1, static_cast<std::int64_t>(in.positive), static_cast<std::int64_t>(in.negative));
  if (!res.characteristic_exists) r.warnings.push_back("no characteristic vector meets the zero-pairing constraints");

  r.canonical = m.canonical;
  if (!r.canonical && m.symplectic) {
    std::vector<AdjunctionSurface> symp;
    for (const auto& s : m.surfaces)
      if (s.symplectic && s.homology) symp.push_back({s.label, *s.homology, s.genus, s.self_intersection});
    r.canonical = canonical_from_candidates(m.form, symp, r.candidates);
    if (!r.canonical) r.warnings.push_back("canonical class not determined by the symplectic surfaces");
  }
  if (r.canonical) {
    const IntVector k = *r.canonical;
    const auto b2plus = r.chamber.b2plus;
    return taubes_annotate(std::move(r), k, b2plus);
  }
  for (const auto& cls : r.candidates) r.sw_values.push_back({cls, kUndetermined, ""});
  return r;
}

}  // namespace flab::swenum
