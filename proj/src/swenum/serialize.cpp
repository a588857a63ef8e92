#include "flab/swenum/serialize.hpp"

namespace flab::swenum {

json to_json(const EliminationStep& s) {
  return {{"group", s.group}, {"constraints", s.constraints}, {"kernel_rank", s.kernel_rank}, {"forced_zero", s.forced_zero}};
}

json to_json(const ChamberInfo& c) {
  return {{"b1", c.b1}, {"b2plus", c.b2plus}, {"b2minus", c.b2minus}, {"sw_zero_well_defined", c.sw_zero_well_defined}};
}

json to_json(const BasicClassReport& r) {
  json j;
  j["basis"] = r.basis;
  json cands = json::array();
  for (const auto& c : r.candidates) cands.push_back({{"vector", c}, {"text", format_class(c, r.basis)}});
  j["candidates"] = cands;
  j["canonical"] = r.canonical ? json(*r.canonical) : json(nullptr);
  json vals = json::array();
  for (const auto& v : r.sw_values)
    vals.push_back({{"class", format_class(v.cls, r.basis)}, {"value", v.value}, {"chamber", v.chamber}});
  j["sw_values"] = vals;
  j["chamber"] = to_json(r.chamber);
  json trace = json::array();
  for (const auto& s : r.trace) trace.push_back(to_json(s));
  j["elimination"] = trace;
  j["characteristic_exists"] = r.characteristic_exists;
  j["simple_type"] = r.simple_type;
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace flab::swenum
