#pragma once

#include <string>

#include "flab/fourfold/fiber_sum.hpp"
#include "flab/fourfold/model.hpp"
#include "flab/fourfold/verify.hpp"
#include "flab/fpgroup/serialize.hpp"

namespace flab::fourfold {

using fpgroup::json;

inline constexpr const char* kModelSchema = "fourfold-model/1";

json to_json(const FourManifoldModel& m);
FourManifoldModel model_from_json(const json& j);

json to_json(const VerificationReport& r);

/// Gluing file for the `fibersum` command. Words of X and Y are written over
/// their own generator names; words of new surfaces over the merged names
/// (X's generators followed by Y's renamed ones). Also carries "sx", "sy"
/// and "keep", the generators to keep when simplifying the result.
struct GluingFile {
  std::string sx, sy;
  GluingSpec spec;
  std::vector<std::string> keep;
};
json to_json(const GluingFile& g, const FourManifoldModel& x, const FourManifoldModel& y);
GluingFile gluing_from_json(const json& j, const FourManifoldModel& x, const FourManifoldModel& y);

std::string rational_string(const mpq_class& q);

}  // namespace flab::fourfold
