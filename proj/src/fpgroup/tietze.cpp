#include "flab/fpgroup/tietze.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace flab::fpgroup {

Presentation tidy_relators(const Presentation& p) {
  Presentation out = p;
  out.relators.clear();
  std::set<Word> seen;
  for (const auto& r : p.relators) {
    Word c = r.cyclic_reduce();
    if (c.empty()) continue;
    if (!seen.insert(c.canonical_cyclic()).second) continue;
    out.relators.push_back(std::move(c));
  }
  return out;
}

namespace {

// Solves relator r (cyclically reduced, g occurring once) for g.
Word solve_for(const Word& r, Gen g) {
  auto ls = r.letters();
  std::size_t k = 0;
  while (ls[k].gen != g) ++k;
  Word u = Word::from_letters(std::span(ls).first(k));
  Word v = Word::from_letters(std::span(ls).subspan(k + 1));
  return ls[k].sign > 0 ? u.inverse() * v.inverse() : v * u;
}

}  // namespace

TietzeResult tietze_simplify_with_map(const Presentation& p, std::size_t budget, const std::vector<std::string>& keep) {
  TietzeResult res;
  res.presentation = tidy_relators(p);
  for (Gen g = 0; g < p.generator_count(); ++g) res.images.push_back(Word::gen(g));

  while (res.steps < budget) {
    Presentation& cur = res.presentation;
    const auto n = static_cast<Gen>(cur.generator_count());
    std::optional<std::pair<Gen, std::size_t>> pick;
    for (Gen g = n; g-- > 0 && !pick;) {
      if (std::find(keep.begin(), keep.end(), cur.generators[g]) != keep.end()) continue;
      for (std::size_t i = 0; i < cur.relators.size(); ++i) {
        if (cur.relators[i].occurrences(g) != 1) continue;
        if (!pick || cur.relators[i].length() < cur.relators[pick->second].length()) pick = {g, i};
      }
    }
    if (!pick) break;

    const Gen g = pick->first;
    const Word value = solve_for(cur.relators[pick->second], g);
    // Map current generators to the next alphabet (g removed, later ones shift down).
    std::vector<Word> sub;
    for (Gen h = 0; h < n; ++h) sub.push_back(h < g ? Word::gen(h) : h > g ? Word::gen(h - 1) : Word());
    const Word g_value = value.substitute(sub);
    sub[g] = g_value;

    Presentation next;
    next.generators = cur.generators;
    next.generators.erase(next.generators.begin() + g);
    for (std::size_t i = 0; i < cur.relators.size(); ++i)
      if (i != pick->second) next.relators.push_back(cur.relators[i].substitute(sub));
    for (auto f : cur.shadows) {
      for (auto& w : f.normal_generators) w = w.substitute(sub);
      next.shadows.push_back(std::move(f));
    }
    for (auto& img : res.images) img = img.substitute(sub);
    res.presentation = tidy_relators(next);
    ++res.steps;
  }
  res.presentation.validate();
  return res;
}

Presentation tietze_simplify(const Presentation& p, std::size_t budget, const std::vector<std::string>& keep) {
  return tietze_simplify_with_map(p, budget, keep).presentation;
}

}  // namespace flab::fpgroup
