#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace flab::fpgroup {

using Gen = std::uint32_t;

struct Letter {
  Gen gen;
  int sign;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

struct Syllable {
  Gen gen;
  std::int64_t power;  // never 0
  bool operator==(const Syllable&) const = default;
  auto operator<=>(const Syllable&) const = default;
};

/// Element of a free group, stored as run-length syllables and kept freely
/// reduced at all times.
class Word {
 public:
  Word() = default;

  static Word gen(Gen g, std::int64_t power = 1);
  static Word from_letters(std::span<const Letter> letters);
  static Word from_syllables(std::span<const Syllable> syllables);

  const std::vector<Syllable>& syllables() const { return syl_; }
  std::vector<Letter> letters() const;
  bool empty() const { return syl_.empty(); }
  /// Number of letters (sum of |power|).
  std::int64_t length() const;

  Word inverse() const;
  Word pow(std::int64_t n) const;
  Word operator*(const Word& rhs) const;
  Word& operator*=(const Word& rhs);

  std::int64_t exponent_sum(Gen g) const;
  /// Number of letters equal to g or g^-1.
  std::int64_t occurrences(Gen g) const;
  bool uses(Gen g) const { return occurrences(g) != 0; }
  /// One past the largest generator index used (0 for the empty word).
  Gen span() const;

  /// Replace each generator i by images[i].
  Word substitute(std::span<const Word> images) const;
  /// Add `offset` to every generator index.
  Word shifted(Gen offset) const;

  /// Conjugate to a cyclically reduced word (first and last syllables differ
  /// in generator, or the word has one syllable).
  Word cyclic_reduce() const;
  /// Cyclic rotation by `k` letters (k taken modulo length).
  Word rotate(std::int64_t k) const;
  /// Representative of the set of rotations of the cyclic reductions of w and
  /// w^-1, minimal in letter order. Two relators with equal canonical forms
  /// have the same normal closure.
  Word canonical_cyclic() const;

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& rhs) const;

 private:
  explicit Word(std::vector<Syllable> s) : syl_(std::move(s)) {}
  void push(Gen g, std::int64_t power);

  std::vector<Syllable> syl_;
};

Word free_reduce(std::span<const Letter> letters);
/// u v u^-1 v^-1
Word commutator(const Word& u, const Word& v);
/// by w by^-1
Word conjugate(const Word& w, const Word& by);

/// Parses the whitespace-separated token grammar: a token is a generator name
/// (lowercase first letter) or its inverse (same name, first letter
/// uppercased), optionally followed by ^n. "1" and "" denote the identity.
Word parse_word(std::string_view text, std::span<const std::string> names);
/// One token per letter, no exponents: "a b b a B B B B".
std::string format_word(const Word& w, std::span<const std::string> names);
bool valid_generator_name(std::string_view name);

}  // namespace flab::fpgroup
