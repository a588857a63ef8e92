#pragma once

#include "flab/fpgroup/serialize.hpp"
#include "flab/swenum/chamber.hpp"

namespace flab::swenum {

using fpgroup::json;

json to_json(const EliminationStep& s);
json to_json(const ChamberInfo& c);
json to_json(const BasicClassReport& r);

}  // namespace flab::swenum
