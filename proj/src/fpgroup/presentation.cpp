#include "flab/fpgroup/presentation.hpp"

#include <algorithm>
#include <set>

#include "flab/error.hpp"

namespace flab::fpgroup {

Presentation::Presentation(std::vector<std::string> gens, std::vector<Word> rels, std::vector<ShadowFamily> sh)
    : generators(std::move(gens)), relators(std::move(rels)), shadows(std::move(sh)) {
  validate();
}

Presentation Presentation::parse(std::vector<std::string> gens, const std::vector<std::string>& relators) {
  std::vector<Word> rels;
  rels.reserve(relators.size());
  for (const auto& r : relators) rels.push_back(parse_word(r, gens));
  return Presentation(std::move(gens), std::move(rels));
}

std::optional<Gen> Presentation::find(std::string_view name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  if (it == generators.end()) return std::nullopt;
  return static_cast<Gen>(it - generators.begin());
}

Gen Presentation::index(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw Error(ErrorCode::InvalidPresentation, "no generator named '" + std::string(name) + "'");
}

bool Presentation::fully_known() const {
  return std::all_of(shadows.begin(), shadows.end(), [](const ShadowFamily& f) { return f.count_known; });
}

void Presentation::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators) {
    if (!valid_generator_name(g)) throw Error(ErrorCode::InvalidPresentation, "bad generator name '" + g + "'");
    if (!seen.insert(g).second) throw Error(ErrorCode::InvalidPresentation, "repeated generator '" + g + "'");
  }
  auto n = static_cast<Gen>(generators.size());
  for (const auto& r : relators)
    if (r.span() > n) throw Error(ErrorCode::InvalidPresentation, "relator uses an undeclared generator");
  for (const auto& f : shadows)
    for (const auto& w : f.normal_generators)
      if (w.span() > n)
        throw Error(ErrorCode::InvalidPresentation, "shadow family '" + f.name + "' uses an undeclared generator");
}

}  // namespace flab::fpgroup
