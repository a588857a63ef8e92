#include "flab/knotforge/serialize.hpp"

namespace flab::knotforge {

namespace {

json fiber_json(std::int64_t genus, const std::vector<Word>& words, const std::optional<std::vector<Word>>& mono,
                const Presentation& p) {
  json j;
  j["genus"] = genus;
  json w = json::array();
  for (const auto& x : words) w.push_back(p.format(x));
  j["fiber_words"] = w;
  if (mono) {
    // Monodromy words live on fiber-generator indices; name them f1, f2, ...
    std::vector<std::string> names;
    for (std::size_t i = 0; i < words.size(); ++i) names.push_back("f" + std::to_string(i + 1));
    json m = json::array();
    for (const auto& x : *mono) m.push_back(fpgroup::format_word(x, names));
    j["monodromy"] = m;
  } else {
    j["monodromy"] = nullptr;
  }
  return j;
}

}  // namespace

json to_json(const KnotGroupModel& k) {
  json j;
  j["name"] = k.name;
  j["presentation"] = fpgroup::to_json(k.presentation);
  j["meridian"] = k.presentation.format(k.meridian);
  j["longitude"] = k.presentation.format(k.longitude);
  j["genus"] = k.genus ? json(*k.genus) : json(nullptr);
  j["fibered"] = std::string(to_string(k.fibered));
  j["weights"] = k.weights;
  j["fiber"] = k.fiber ? fiber_json(k.fiber->genus, k.fiber->fiber_words, k.fiber->monodromy, k.presentation)
                       : json(nullptr);
  return j;
}

json to_json(const FiberednessScreen& s) {
  return {{"alexander", fpgroup::to_json(s.alexander)},
          {"monic", s.monic},
          {"degree", s.degree},
          {"genus_consistent", s.genus_consistent},
          {"verdict", std::string(to_string(s.verdict))}};
}

json to_json(const ThreeManifoldModel& m) {
  json j;
  j["name"] = m.name;
  j["presentation"] = fpgroup::to_json(m.presentation);
  j["h1"] = fpgroup::to_json(m.h1);
  j["meridian"] = m.presentation.format(m.meridian);
  j["bundle"] = m.bundle ? fiber_json(m.bundle->fiber_genus, m.bundle->fiber_words, m.bundle->monodromy, m.presentation)
                         : json(nullptr);
  return j;
}

}  // namespace flab::knotforge
