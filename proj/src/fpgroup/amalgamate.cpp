#include "flab/fpgroup/amalgamate.hpp"

#include <set>

#include "flab/error.hpp"

namespace flab::fpgroup {

std::vector<std::string> renamed_generators(const Presentation& p2, const Renaming& r) {
  switch (r.mode) {
    case Renaming::Mode::Keep:
      return p2.generators;
    case Renaming::Mode::Explicit:
      if (r.names.size() != p2.generator_count())
        throw Error(ErrorCode::InvalidPresentation, "explicit renaming needs one name per generator");
      return r.names;
    case Renaming::Mode::Suffix: {
      std::vector<std::string> out;
      for (const auto& g : p2.generators) out.push_back(g + r.suffix);
      return out;
    }
  }
  return p2.generators;
}

Presentation amalgamate(const Presentation& p1, const Presentation& p2,
                        const std::vector<std::pair<Word, Word>>& identifications,
                        const std::vector<Word>& extra_relators, const Renaming& rename) {
  const auto offset = static_cast<Gen>(p1.generator_count());
  std::vector<std::string> gens = p1.generators;
  std::set<std::string> taken(gens.begin(), gens.end());
  for (const auto& name : renamed_generators(p2, rename)) {
    if (!taken.insert(name).second)
      throw Error(ErrorCode::AlphabetClash, "generator '" + name + "' occurs in both factors");
    gens.push_back(name);
  }

  std::vector<Word> rels = p1.relators;
  for (const auto& r : p2.relators) rels.push_back(r.shifted(offset));
  for (const auto& [w1, w2] : identifications) {
    if (w1.span() > p1.generator_count() || w2.span() > p2.generator_count())
      throw Error(ErrorCode::InvalidPresentation, "identification word outside its factor");
    rels.push_back(w1 * w2.shifted(offset).inverse());
  }
  for (const auto& r : extra_relators) rels.push_back(r);

  std::vector<ShadowFamily> shadows = p1.shadows;
  for (auto f : p2.shadows) {
    for (auto& w : f.normal_generators) w = w.shifted(offset);
    shadows.push_back(std::move(f));
  }
  return Presentation(std::move(gens), std::move(rels), std::move(shadows));
}

}  // namespace flab::fpgroup
