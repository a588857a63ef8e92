#include "flab/fpgroup/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "flab/checked.hpp"
#include "flab/error.hpp"

namespace flab::fpgroup {

namespace {

std::uint64_t letter_key(Letter l) { return std::uint64_t{l.gen} * 2 + (l.sign < 0 ? 1 : 0); }

}  // namespace

void Word::push(Gen g, std::int64_t power) {
  if (power == 0) return;
  if (!syl_.empty() && syl_.back().gen == g) {
    std::int64_t p = checked::add(syl_.back().power, power);
    if (p == 0)
      syl_.pop_back();
    else
      syl_.back().power = p;
  } else {
    syl_.push_back({g, power});
  }
}

Word Word::gen(Gen g, std::int64_t power) {
  Word w;
  w.push(g, power);
  return w;
}

Word Word::from_letters(std::span<const Letter> letters) {
  Word w;
  for (const auto& l : letters) w.push(l.gen, l.sign);
  return w;
}

Word Word::from_syllables(std::span<const Syllable> syllables) {
  Word w;
  for (const auto& s : syllables) w.push(s.gen, s.power);
  return w;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  for (const auto& s : syl_) {
    int sign = s.power > 0 ? 1 : -1;
    for (std::int64_t k = 0; k < checked::abs(s.power); ++k) out.push_back({s.gen, sign});
  }
  return out;
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& s : syl_) n = checked::add(n, checked::abs(s.power));
  return n;
}

Word Word::inverse() const {
  Word w;
  w.syl_.reserve(syl_.size());
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, checked::neg(it->power)});
  return w;
}

Word Word::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(checked::neg(n));
  Word out;
  for (std::int64_t k = 0; k < n; ++k) out *= *this;
  return out;
}

Word& Word::operator*=(const Word& rhs) {
  for (const auto& s : rhs.syl_) push(s.gen, s.power);
  return *this;
}

Word Word::operator*(const Word& rhs) const {
  Word w = *this;
  w *= rhs;
  return w;
}

std::int64_t Word::exponent_sum(Gen g) const {
  std::int64_t n = 0;
  for (const auto& s : syl_)
    if (s.gen == g) n = checked::add(n, s.power);
  return n;
}

std::int64_t Word::occurrences(Gen g) const {
  std::int64_t n = 0;
  for (const auto& s : syl_)
    if (s.gen == g) n = checked::add(n, checked::abs(s.power));
  return n;
}

Gen Word::span() const {
  Gen m = 0;
  for (const auto& s : syl_) m = std::max(m, s.gen + 1);
  return m;
}

Word Word::substitute(std::span<const Word> images) const {
  Word out;
  for (const auto& s : syl_) {
    if (s.gen >= images.size())
      throw Error(ErrorCode::InvalidPresentation, "substitution has no image for generator " + std::to_string(s.gen));
    out *= images[s.gen].pow(s.power);
  }
  return out;
}

Word Word::shifted(Gen offset) const {
  Word w = *this;
  for (auto& s : w.syl_) s.gen += offset;
  return w;
}

Word Word::cyclic_reduce() const {
  Word w = *this;
  while (w.syl_.size() >= 2 && w.syl_.front().gen == w.syl_.back().gen) {
    // Move the last syllable to the front and let it merge.
    Syllable last = w.syl_.back();
    w.syl_.pop_back();
    Word front = Word::gen(last.gen, last.power);
    w = front * w;
  }
  return w;
}

Word Word::rotate(std::int64_t k) const {
  auto ls = letters();
  if (ls.empty()) return *this;
  auto n = static_cast<std::int64_t>(ls.size());
  k = ((k % n) + n) % n;
  std::rotate(ls.begin(), ls.begin() + k, ls.end());
  return from_letters(ls);
}

Word Word::canonical_cyclic() const {
  Word best;
  bool have = false;
  for (const Word& base : {cyclic_reduce(), cyclic_reduce().inverse()}) {
    auto ls = base.letters();
    for (std::size_t k = 0; k < std::max<std::size_t>(ls.size(), 1); ++k) {
      std::vector<Letter> rot(ls.size());
      for (std::size_t i = 0; i < ls.size(); ++i) rot[i] = ls[(i + k) % ls.size()];
      Word cand = from_letters(rot);
      if (!have || cand < best) {
        best = std::move(cand);
        have = true;
      }
    }
  }
  return best;
}

std::strong_ordering Word::operator<=>(const Word& rhs) const {
  auto a = letters();
  auto b = rhs.letters();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    auto ka = letter_key(a[i]), kb = letter_key(b[i]);
    if (ka != kb) return ka <=> kb;
  }
  return a.size() <=> b.size();
}

Word free_reduce(std::span<const Letter> letters) { return Word::from_letters(letters); }

Word commutator(const Word& u, const Word& v) { return u * v * u.inverse() * v.inverse(); }

Word conjugate(const Word& w, const Word& by) { return by * w * by.inverse(); }

bool valid_generator_name(std::string_view name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

Word parse_word(std::string_view text, std::span<const std::string> names) {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    std::int64_t power = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      std::string_view num = tok.substr(caret + 1);
      auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), power);
      if (ec != std::errc() || p != num.data() + num.size() || num.empty())
        throw Error(ErrorCode::ParseError, "bad exponent in token '" + std::string(tok) + "'");
      tok = tok.substr(0, caret);
    }
    if (tok == "1") continue;
    if (tok.empty()) throw Error(ErrorCode::ParseError, "empty generator token");

    std::string name(tok);
    int sign = 1;
    if (std::isupper(static_cast<unsigned char>(name[0]))) {
      name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
      sign = -1;
    }
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorCode::ParseError, "unknown generator '" + std::string(tok) + "'");
    out *= Word::gen(static_cast<Gen>(it - names.begin()), checked::mul(power, sign));
  }
  return out;
}

std::string format_word(const Word& w, std::span<const std::string> names) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (l.gen >= names.size()) throw Error(ErrorCode::InvalidPresentation, "generator index out of range");
    std::string name = names[l.gen];
    if (l.sign < 0) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    if (!out.empty()) out += ' ';
    out += name;
  }
  return out;
}

}  // namespace flab::fpgroup
