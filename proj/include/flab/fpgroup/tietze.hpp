#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flab/fpgroup/presentation.hpp"

namespace flab::fpgroup {

struct TietzeResult {
  Presentation presentation;
  /// images[i] = original generator i written in the simplified generators.
  std::vector<Word> images;
  std::size_t steps = 0;
};

/// Cyclically reduces relators, drops trivial ones and duplicates (same
/// canonical cyclic form, which also catches inverses), then repeatedly
/// eliminates the highest-index generator that occurs exactly once in some
/// relator, using the shortest such relator. `budget` bounds the number of
/// eliminations; generators named in `keep` are never eliminated.
/// Deterministic.
TietzeResult tietze_simplify_with_map(const Presentation& p, std::size_t budget = 1000,
                                      const std::vector<std::string>& keep = {});
Presentation tietze_simplify(const Presentation& p, std::size_t budget = 1000,
                             const std::vector<std::string>& keep = {});

/// Relator cleanup only: cyclic reduction, trivial and duplicate removal.
Presentation tidy_relators(const Presentation& p);

}  // namespace flab::fpgroup
