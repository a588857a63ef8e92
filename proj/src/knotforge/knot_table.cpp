#include "flab/knotforge/knot_table.hpp"

#include <algorithm>

#include "flab/checked.hpp"
#include "flab/error.hpp"

namespace flab::knotforge {

namespace {

const std::vector<std::string> kAB = {"a", "b"};

}  // namespace

TwistKnotEntry twist_knot_entry(std::int64_t n) {
  if (n == 0 || checked::abs(n) > kTwistTableLimit)
    throw Error(ErrorCode::UnknownSpec, "twist knot n=" + std::to_string(n) + " outside the table (1 <= |n| <= 5)");
  const std::int64_t alpha = checked::abs(4 * n + 1);
  const std::int64_t beta = alpha - 2;

  // w = b^e1 a^e2 b^e3 ... with e_i = (-1)^floor(i beta / alpha).
  Word w;
  std::int64_t sigma = 0;
  for (std::int64_t i = 1; i < alpha; ++i) {
    int e = ((i * beta) / alpha) % 2 == 0 ? 1 : -1;
    sigma += e;
    w *= Word::gen(i % 2 == 1 ? 1 : 0, e);
  }
  const Word a = Word::gen(0), b = Word::gen(1);
  Word relator = a * w * b.inverse() * w.inverse();
  Word reversed = Word::from_letters([&] {
    auto ls = w.letters();
    std::reverse(ls.begin(), ls.end());
    return ls;
  }());
  Word longitude = reversed * w * b.pow(-2 * sigma);

  TwistKnotEntry e;
  e.n = n;
  e.generators = kAB;
  e.relator = fpgroup::format_word(relator, kAB);
  e.meridian = "b";
  e.longitude = fpgroup::format_word(longitude, kAB);
  // n t^2 - (2n+1) t + n, sign fixed so the leading coefficient is positive.
  std::int64_t s = n > 0 ? 1 : -1;
  e.alexander = {s * n, -s * (2 * n + 1), s * n};
  return e;
}

FiberData trefoil_fiber() {
  FiberData f;
  f.genus = 1;
  f.fiber_words = {fpgroup::parse_word("A b", kAB), fpgroup::parse_word("B a b A", kAB)};
  // b g1 B = g1 g2, b g2 B = g1^-1
  f.monodromy = std::vector<Word>{Word::gen(0) * Word::gen(1), Word::gen(0, -1)};
  return f;
}

FiberData figure_eight_fiber() {
  FiberData f;
  f.genus = 1;
  f.fiber_words = {fpgroup::parse_word("A b", kAB), fpgroup::parse_word("B a b A", kAB)};
  // b g1 B = g1 g2, b g2 B = g1 g2 g2
  f.monodromy = std::vector<Word>{Word::gen(0) * Word::gen(1), Word::gen(0) * Word::gen(1, 2)};
  return f;
}

}  // namespace flab::knotforge
