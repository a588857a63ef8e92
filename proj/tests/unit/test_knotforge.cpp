#include "doctest.h"
#include "flab/error.hpp"
#include "flab/fpgroup/abelian.hpp"
#include "flab/fpgroup/fox.hpp"
#include "flab/fpgroup/tietze.hpp"
#include "flab/knotforge/knot_table.hpp"
#include "flab/knotforge/serialize.hpp"
#include "flab/knotforge/surgery.hpp"
#include "oracles.hpp"

using namespace flab;
using namespace flab::knotforge;
using fpgroup::LaurentPolynomial;

namespace {

LaurentPolynomial poly(const oracle::Poly& p) { return LaurentPolynomial::from_coefficients(p); }

std::int64_t gcd(std::int64_t a, std::int64_t b) { return b == 0 ? a : gcd(b, a % b); }

KnotGroupModel unknot() {
  ExplicitKnot e;
  e.name = "unknot";
  e.presentation = Presentation({"a"}, {});
  e.meridian = Word::gen(0);
  e.genus = 0;
  return make_knot(e);
}

// Checks m g m^-1 = phi(g) for each fiber generator in every homomorphism of
// the knot group onto permutations of n points.
std::size_t check_monodromy_in_permutations(const KnotGroupModel& k, int n) {
  const auto perms = oracle::all_permutations(n);
  const auto& f = *k.fiber;
  std::size_t reps = 0;
  for (const auto& x : perms)
    for (const auto& y : perms) {
      const std::vector<oracle::Perm> gens = {x, y};
      bool hom = true;
      for (const auto& r : k.presentation.relators) hom = hom && oracle::evaluate(r, gens) == oracle::evaluate(Word{}, gens);
      if (!hom) continue;
      ++reps;
      std::vector<oracle::Perm> fiber;
      for (const auto& w : f.fiber_words) fiber.push_back(oracle::evaluate(w, gens));
      const auto m = oracle::evaluate(k.meridian, gens);
      for (std::size_t i = 0; i < fiber.size(); ++i) {
        const auto lhs = oracle::compose(oracle::compose(m, fiber[i]), oracle::invert(m));
        CHECK(lhs == oracle::evaluate((*f.monodromy)[i], fiber));
      }
    }
  return reps;
}

}  // namespace

TEST_CASE("knot spec grammar") {
  CHECK(std::holds_alternative<Trefoil>(parse_knot_spec("trefoil")));
  CHECK(std::holds_alternative<FigureEight>(parse_knot_spec("figure8")));
  const auto t = std::get<TorusKnot>(parse_knot_spec("torus:2,5"));
  CHECK(t.p == 2);
  CHECK(t.q == 5);
  CHECK(std::get<TwistKnot>(parse_knot_spec("twist:-2")).n == -2);
  CHECK(to_string(parse_knot_spec("torus:3,4")) == "torus:3,4");
  CHECK_THROWS_AS(parse_knot_spec("torus:2"), Error);
  CHECK_THROWS_AS(parse_knot_spec("granny"), Error);
}

TEST_CASE("torus knot groups") {
  const auto k = torus_knot_group(2, 3);
  CHECK(k.presentation.format(k.presentation.relators[0]) == "u u V V V");
  CHECK(k.genus == 1);
  CHECK(k.fibered == Fibered::Fibered);
  CHECK(k.presentation.format(k.meridian) == "u V");

  CHECK_THROWS_WITH_AS(torus_knot_group(2, 4), doctest::Contains("NotCoprime"), Error);
  CHECK_THROWS_WITH_AS(torus_knot_group(1, 3), doctest::Contains("DegenerateParameters"), Error);
}

TEST_CASE("torus(2,3) in the Wirtinger generators") {
  const auto t = torus_knot_group(2, 3);
  const auto k = make_knot(Trefoil{});
  const std::vector<Word> images = {k.presentation.word("b a b"), k.presentation.word("a b")};
  CHECK(k.presentation.format(t.meridian.substitute(images)) == "b");
  CHECK(t.longitude.substitute(images).canonical_cyclic() == k.longitude.canonical_cyclic());
  CHECK(k.presentation.format(k.longitude) == "a b b a B B B B");
  CHECK(k.presentation.relators[0].canonical_cyclic() == k.presentation.word("a b a B A B").canonical_cyclic());
  // The torus relator maps into the trefoil group's relators' normal closure:
  // u^2 v^-3 = (bab)^2 (ab)^-3 is a conjugate of the trefoil relator.
  const Word mapped = t.presentation.relators[0].substitute(images);
  CHECK(mapped.canonical_cyclic() == k.presentation.relators[0].canonical_cyclic());
}

TEST_CASE("property: torus meridian generates H1 and the longitude is null-homologous") {
  for (std::int64_t p = 2; p <= 7; ++p)
    for (std::int64_t q = p + 1; q <= 9; ++q) {
      if (gcd(p, q) != 1) continue;
      const auto k = torus_knot_group(p, q);
      const auto map = fpgroup::abelianization_map(k.presentation);
      CHECK(map.group() == fpgroup::AbelianGroupStructure{1, {}});
      const auto m = map.image(k.meridian);
      CHECK((m.back() == 1 || m.back() == -1));
      CHECK(map.image(k.longitude).back() == 0);
      CHECK(k.genus == (p - 1) * (q - 1) / 2);
    }
}

TEST_CASE("torus Alexander polynomials match the closed form") {
  for (std::int64_t p = 2; p <= 7; ++p)
    for (std::int64_t q = p + 1; q <= 7; ++q) {
      if (gcd(p, q) != 1) continue;
      const auto k = torus_knot_group(p, q);
      const auto delta = alexander_polynomial(k);
      CAPTURE(p);
      CAPTURE(q);
      CHECK(delta == poly(oracle::torus_alexander(p, q)));
      CHECK(delta.reciprocal().normalized() == delta);
      CHECK(delta.span() == 2 * *k.genus);
    }
  CHECK(alexander_polynomial(torus_knot_group(2, 5)).to_string() == "t^4 - t^3 + t^2 - t + 1");
}

TEST_CASE("standard knots") {
  const auto trefoil = make_knot(Trefoil{});
  CHECK(alexander_polynomial(trefoil) == poly(oracle::seifert_alexander(-1, 1, 0, -1)));
  CHECK(trefoil.presentation.format(trefoil.meridian) == "b");
  const auto s = fiberedness_screen(trefoil);
  CHECK(s.monic);
  CHECK(s.degree == 2);
  CHECK(s.verdict == Fibered::Fibered);

  const auto fig8 = make_knot(FigureEight{});
  CHECK(alexander_polynomial(fig8) == poly(oracle::seifert_alexander(1, 1, 0, -1)));
  CHECK(fiberedness_screen(fig8).verdict == Fibered::Fibered);

  const auto twist = make_knot(TwistKnot{-2});
  const auto ts = fiberedness_screen(twist);
  CHECK(ts.alexander.to_string() == "2t^2 - 3t + 2");
  CHECK_FALSE(ts.monic);
  CHECK(ts.verdict == Fibered::NotFibered);
}

TEST_CASE("twist knot table") {
  for (std::int64_t n = -5; n <= 5; ++n) {
    if (n == 0) continue;
    const auto e = twist_knot_entry(n);
    const auto k = make_knot(TwistKnot{n});
    const auto delta = fpgroup::fox_alexander(k.presentation, k.weights);
    CAPTURE(n);
    CHECK(delta == LaurentPolynomial::from_coefficients(e.alexander));
    CHECK(delta.reciprocal().normalized() == delta);
    const auto s = fiberedness_screen(k);
    CHECK((s.verdict == Fibered::Fibered) == (n == 1 || n == -1));
    if (!s.monic) CHECK(s.verdict != Fibered::Fibered);
  }
  CHECK_THROWS_AS(twist_knot_entry(6), Error);
  CHECK_THROWS_AS(twist_knot_entry(0), Error);
}

TEST_CASE("explicit knots") {
  const auto t = make_knot(Trefoil{});
  ExplicitKnot e{"copy", t.presentation, t.meridian, t.longitude, 1};
  const auto k = make_knot(e);
  const auto s = fiberedness_screen(k);
  CHECK(s.monic);
  CHECK(s.verdict == Fibered::Unknown);

  ExplicitKnot bad{"bad", t.presentation, t.meridian, t.meridian, 1};
  CHECK_THROWS_AS(make_knot(bad), Error);

  const auto u = unknot();
  CHECK(alexander_polynomial(u) == LaurentPolynomial(1));
  CHECK(u.fibered == Fibered::Fibered);
}

TEST_CASE("zero surgery") {
  const auto m = zero_surgery(make_knot(Trefoil{}));
  CHECK(m.presentation.relators.size() == 2);
  CHECK(m.presentation.format(m.presentation.relators[1]) == "a b b a B B B B");
  CHECK(m.h1 == fpgroup::AbelianGroupStructure{1, {}});
  REQUIRE(m.bundle);
  CHECK(m.bundle->fiber_genus == 1);

  const auto s2s1 = zero_surgery(unknot());
  CHECK(s2s1.presentation.relators.empty());
  CHECK(s2s1.h1 == fpgroup::AbelianGroupStructure{1, {}});

  const auto t25 = zero_surgery(torus_knot_group(2, 5));
  CHECK(t25.h1 == fpgroup::AbelianGroupStructure{1, {}});
  REQUIRE(t25.bundle);
  CHECK(t25.bundle->fiber_genus == 2);
  CHECK(t25.bundle->fiber_words.size() == 4);
}

TEST_CASE("property: zero surgery on a knot has H1 = Z") {
  std::vector<KnotGroupModel> knots = {make_knot(Trefoil{}), make_knot(FigureEight{}), unknot()};
  for (std::int64_t n = -5; n <= 5; ++n)
    if (n != 0) knots.push_back(make_knot(TwistKnot{n}));
  for (std::int64_t q : {3, 5, 7, 9}) knots.push_back(torus_knot_group(2, q));
  knots.push_back(torus_knot_group(3, 4));
  for (const auto& k : knots) CHECK(zero_surgery(k).h1 == fpgroup::AbelianGroupStructure{1, {}});
}

TEST_CASE("fiber data lies in the commutator subgroup") {
  for (const auto& k : {make_knot(Trefoil{}), make_knot(FigureEight{}), torus_knot_group(2, 7)}) {
    for (const auto& w : k.fiber->fiber_words) {
      std::int64_t total = 0;
      for (const auto& s : w.syllables()) total += s.power * k.weights[s.gen];
      CHECK(total == 0);
    }
    CHECK(static_cast<std::int64_t>(k.fiber->fiber_words.size()) == 2 * k.fiber->genus);
  }
}

TEST_CASE("monodromy words hold in every permutation representation") {
  // Nontrivial representations exist in S4 and S5 for both knots, so the
  // conjugation relations are tested on real data.
  CHECK(check_monodromy_in_permutations(make_knot(Trefoil{}), 4) > 24);
  CHECK(check_monodromy_in_permutations(make_knot(FigureEight{}), 5) > 120);
}

TEST_CASE("knot json") {
  const auto j = to_json(make_knot(Trefoil{}));
  CHECK(j["meridian"] == "b");
  CHECK(j["fibered"] == "Fibered");
  CHECK(j["fiber"]["monodromy"][1] == "F1");
  CHECK(to_json(fiberedness_screen(make_knot(TwistKnot{-2})))["verdict"] == "NotFibered");
}
