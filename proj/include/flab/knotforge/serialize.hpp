#pragma once

#include "flab/fpgroup/serialize.hpp"
#include "flab/knotforge/knot.hpp"
#include "flab/knotforge/surgery.hpp"

namespace flab::knotforge {

using fpgroup::json;

json to_json(const KnotGroupModel& k);
json to_json(const FiberednessScreen& s);
json to_json(const ThreeManifoldModel& m);

}  // namespace flab::knotforge
