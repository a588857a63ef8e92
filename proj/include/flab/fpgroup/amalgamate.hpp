#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flab/fpgroup/presentation.hpp"

namespace flab::fpgroup {

/// How the second factor's generators are named in the merged alphabet.
struct Renaming {
  enum class Mode { Suffix, Explicit, Keep };
  Mode mode = Mode::Suffix;
  std::string suffix = "'";
  std::vector<std::string> names;  // Explicit: one per generator of the second factor

  static Renaming keep() { return {Mode::Keep, "", {}}; }
  static Renaming explicit_names(std::vector<std::string> n) { return {Mode::Explicit, "", std::move(n)}; }
};

/// Names the second factor's generators receive under `r`.
std::vector<std::string> renamed_generators(const Presentation& p2, const Renaming& r);

/// Free product of p1 and p2 (p2's generators shifted past p1's), one relator
/// w1 w2^-1 per identification, then `extra_relators` which are already over
/// the merged alphabet. Shadow families of both factors carry through.
/// Keep mode throws AlphabetClash when a name appears on both sides.
Presentation amalgamate(const Presentation& p1, const Presentation& p2,
                        const std::vector<std::pair<Word, Word>>& identifications,
                        const std::vector<Word>& extra_relators, const Renaming& rename = {});

}  // namespace flab::fpgroup
