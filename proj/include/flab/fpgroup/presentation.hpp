#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flab/fpgroup/word.hpp"

namespace flab::fpgroup {

/// Finitely many relators (and possibly extra generators) that are not known
/// explicitly, only that they lie in the normal closure of `normal_generators`.
/// `count_known` is false when even their number is unspecified.
struct ShadowFamily {
  std::string name;
  std::vector<Word> normal_generators;
  bool count_known = false;

  bool operator==(const ShadowFamily&) const = default;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<ShadowFamily> shadows;

  Presentation() = default;
  Presentation(std::vector<std::string> gens, std::vector<Word> rels, std::vector<ShadowFamily> sh = {});

  /// Builds from text relators using the word grammar.
  static Presentation parse(std::vector<std::string> gens, const std::vector<std::string>& relators);

  std::size_t generator_count() const { return generators.size(); }
  std::optional<Gen> find(std::string_view name) const;
  Gen index(std::string_view name) const;  // throws InvalidPresentation
  Word word(std::string_view text) const { return parse_word(text, generators); }
  std::string format(const Word& w) const { return format_word(w, generators); }

  bool fully_known() const;  // no shadow family with unknown count
  /// Throws InvalidPresentation if a word uses a generator out of range or a
  /// name is malformed or repeated.
  void validate() const;

  bool operator==(const Presentation&) const = default;
};

}  // namespace flab::fpgroup
