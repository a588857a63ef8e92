#include "flab/knotforge/surgery.hpp"

namespace flab::knotforge {

ThreeManifoldModel zero_surgery(const KnotGroupModel& k) {
  ThreeManifoldModel m;
  m.name = "M(" + k.name + ")";
  m.presentation = k.presentation;
  if (!k.longitude.empty()) m.presentation.relators.push_back(k.longitude);
  m.presentation.validate();
  m.h1 = fpgroup::abelianize(m.presentation);
  m.meridian = k.meridian;
  if (k.fibered == Fibered::Fibered && k.fiber) m.bundle = BundleData{k.fiber->genus, k.fiber->fiber_words, k.fiber->monodromy};
  return m;
}

}  // namespace flab::knotforge
