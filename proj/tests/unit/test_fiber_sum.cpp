#include "doctest.h"
#include "flab/error.hpp"
#include "flab/fourfold/product.hpp"
#include "flab/fourfold/serialize.hpp"
#include "flab/fpgroup/abelian.hpp"
#include "flab/knotforge/surgery.hpp"
#include "oracles.hpp"

using namespace flab;
using namespace flab::fourfold;

namespace {

// T^2 x S^2 with T = T^2 x pt and S = pt x S^2.
FourManifoldModel torus_times_sphere() {
  FourManifoldModel m;
  m.name = "T2 x S2";
  m.euler = 0;
  m.signature = 0;
  m.b1 = 2;
  m.basis = {"T", "S"};
  m.form = IntegerMatrix{{0, 1}, {1, 0}};
  m.pi1 = Presentation::parse({"p", "q"}, {"p q P Q"});
  m.surfaces = {{"T", 1, 0, IntVector{1, 0}, std::vector<Word>{Word::gen(0), Word::gen(1)}, true},
                {"S", 0, 0, IntVector{0, 1}, std::vector<Word>{}, true}};
  m.symplectic = true;
  return m;
}

knotforge::KnotGroupModel trefoil() { return knotforge::make_knot(knotforge::Trefoil{}); }

FourManifoldModel trefoil_product() { return product_with_circle(knotforge::zero_surgery(trefoil())); }

HyperbolicPair unnamed_pair(std::string a, std::string b) { return {{std::move(a), std::nullopt}, {std::move(b), std::nullopt}}; }

// Removing T_m from M_K x S1 leaves (S3 - K) x S1: the longitude stops
// being a relator and becomes the meridian of T_m.
ComplementSpec product_complement(const FourManifoldModel& x) {
  const auto l = trefoil().longitude;
  (void)x;
  return {l, {l}, true};
}

// The complement of T^2 x pt in T^2 x S^2 is T^2 x D^2.
ComplementSpec torus_complement() { return {Word{}, {}, true}; }

GluingSpec product_with_torus_gluing(const FourManifoldModel& x) {
  GluingSpec g;
  g.name = "sum";
  g.identifications = {{x.pi1.word("b"), Word::gen(0)}, {x.pi1.word("x"), Word::gen(1)}};
  g.boundary_relation = std::make_pair(trefoil().longitude, Word{});
  g.complement_x = product_complement(x);
  g.complement_y = torus_complement();
  g.new_hyperbolic_pairs = {unnamed_pair("A", "B")};
  return g;
}

}  // namespace

TEST_CASE("characteristic numbers of sums agree on random tuples") {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto e1 = oracle::uniform(rng, -50, 200), e2 = oracle::uniform(rng, -50, 200);
    const auto s1 = oracle::uniform(rng, -80, 80), s2 = oracle::uniform(rng, -80, 80);
    const auto g = oracle::uniform(rng, 0, 20);
    auto n = sum_characteristic_numbers(e1, s1, e2, s2, g);
    const auto e = e1 + e2 + 4 * g - 4;
    CHECK(n.euler == e);
    CHECK(n.signature == s1 + s2);
    CHECK(n.c1sq == 2 * e + 3 * (s1 + s2));
    CHECK(n.c1sq == (2 * e1 + 3 * s1) + (2 * e2 + 3 * s2) + 8 * (g - 1));
    CHECK(n.chi_h * 4 == e + s1 + s2);
    auto swapped = sum_characteristic_numbers(e2, s2, e1, s1, g);
    CHECK(swapped.euler == n.euler);
    CHECK(swapped.signature == n.signature);
    CHECK(swapped.c1sq == n.c1sq);
    CHECK(swapped.chi_h == n.chi_h);
  }
}

TEST_CASE("self-sum of T2 x S2 along the torus") {
  auto y = torus_times_sphere();
  REQUIRE(verify_model(y).all_passed());
  GluingSpec g;
  g.identifications = {{Word::gen(0), Word::gen(0)}, {Word::gen(1), Word::gen(1)}};
  g.complement_x = g.complement_y = torus_complement();
  g.new_hyperbolic_pairs = {{{"T", 1, true, std::vector<Word>{Word::gen(0), Word::gen(1)}, ""}, {"S", std::nullopt}}};
  auto m = fiber_sum(y, "T", y, "T", g);
  CHECK(m.euler == 0);
  CHECK(m.signature == 0);
  CHECK(m.b1 == 2);
  CHECK(m.basis == std::vector<std::string>{"T", "S"});
  CHECK(m.pi1.generators == std::vector<std::string>{"p", "q", "p'", "q'"});
  CHECK(m.symplectic);
  auto v = verify_model(m);
  CHECK_MESSAGE(v.all_passed(), v.failures());
  CHECK(v.spin);
}

TEST_CASE("summing with T2 x S2 gives back the product") {
  auto x = trefoil_product();
  auto y = torus_times_sphere();
  auto m = fiber_sum(x, "T_m", y, "T", product_with_torus_gluing(x));
  CHECK(m.euler == 0);
  CHECK(m.signature == 0);
  CHECK(m.b1 == 2);
  CHECK(fpgroup::abelianize(m.pi1) == fpgroup::abelianize(x.pi1));
  CHECK(m.basis == std::vector<std::string>{"A", "B"});
  auto v = verify_model(m);
  CHECK_MESSAGE(v.all_passed(), v.failures());
}

TEST_CASE("fiber sum is symmetric in its two sides") {
  auto x = trefoil_product();
  auto y = torus_times_sphere();
  auto ab = fiber_sum(x, "T_m", y, "T", product_with_torus_gluing(x));

  GluingSpec g;
  g.identifications = {{Word::gen(0), x.pi1.word("b")}, {Word::gen(1), x.pi1.word("x")}};
  g.boundary_relation = std::make_pair(Word{}, trefoil().longitude);
  g.complement_x = torus_complement();
  g.complement_y = product_complement(x);
  g.new_hyperbolic_pairs = {unnamed_pair("A", "B")};
  auto ba = fiber_sum(y, "T", x, "T_m", g);

  CHECK(ab.euler == ba.euler);
  CHECK(ab.signature == ba.signature);
  CHECK(ab.b1 == ba.b1);
  CHECK(fpgroup::abelianize(ab.pi1) == fpgroup::abelianize(ba.pi1));
  CHECK(ab.form == ba.form);
  CHECK(ab.pi1.generator_count() == ba.pi1.generator_count());
  CHECK(ab.pi1.relators.size() == ba.pi1.relators.size());
  CHECK(char_numbers(ab).c1sq == char_numbers(ba).c1sq);
}

TEST_CASE("fiber sum errors") {
  auto x = trefoil_product();
  auto y = torus_times_sphere();
  auto g = product_with_torus_gluing(x);

  auto t25 = product_with_circle(knotforge::zero_surgery(knotforge::make_knot(knotforge::TorusKnot{2, 5})));
  try {
    fiber_sum(x, "F", t25, "F", g);
    FAIL("expected GenusMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GenusMismatch);
  }
  try {
    fiber_sum(y, "S", y, "S", g);
    FAIL("expected GenusMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GenusMismatch);
  }

  auto bent = y;
  bent.surfaces[0].self_intersection = 1;
  try {
    fiber_sum(x, "T_m", bent, "T", g);
    FAIL("expected NonzeroSquare");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonzeroSquare);
  }

  auto blind = y;
  blind.surfaces[0].images.reset();
  try {
    fiber_sum(x, "T_m", blind, "T", g);
    FAIL("expected MissingImages");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingImages);
  }

  auto short_glue = g;
  short_glue.identifications.pop_back();
  try {
    fiber_sum(x, "T_m", y, "T", short_glue);
    FAIL("expected InvalidGluing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidGluing);
  }

  auto clash = g;
  clash.new_hyperbolic_pairs = {unnamed_pair("A", "A")};
  try {
    fiber_sum(x, "T_m", y, "T", clash);
    FAIL("expected InvalidGluing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidGluing);
  }

  auto missing = g;
  missing.complement_x.death_relators = {x.pi1.word("a a b")};
  try {
    fiber_sum(x, "T_m", y, "T", missing);
    FAIL("expected RelatorNotFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelatorNotFound);
  }

  CHECK_THROWS_AS(fiber_sum(x, "nope", y, "T", g), Error);
}

TEST_CASE("inexact complements leave shadows and an assumption") {
  auto x = trefoil_product();
  auto y = torus_times_sphere();
  auto g = product_with_torus_gluing(x);
  g.complement_y = {y.pi1.word("p q P Q"), {}, false};
  auto m = fiber_sum(x, "T_m", y, "T", g);
  REQUIRE(m.pi1.shadows.size() == 1);
  CHECK(m.pi1.shadows[0].name == "Y:meridian");
  CHECK_FALSE(m.assumptions.empty());
  CHECK(m.b1 == 2);

  // A hidden meridian with nonzero exponent sum leaves H1 undetermined.
  auto blocked = product_with_torus_gluing(x);
  blocked.complement_x.exact = false;
  try {
    fiber_sum(x, "T_m", y, "T", blocked);
    FAIL("expected AbelianizationBlocked");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AbelianizationBlocked);
  }
}

TEST_CASE("gluing file round trip reproduces the sum") {
  auto x = trefoil_product();
  auto y = torus_times_sphere();
  GluingFile file{"T_m", "T", product_with_torus_gluing(x), {"x"}};
  auto j = to_json(file, x, y);
  auto back = gluing_from_json(j, x, y);
  CHECK(back.sx == "T_m");
  CHECK(back.sy == "T");
  CHECK(back.keep == std::vector<std::string>{"x"});
  CHECK(to_json(back, x, y) == j);
  auto direct = fiber_sum(x, "T_m", y, "T", file.spec);
  auto again = fiber_sum(model_from_json(to_json(x)), back.sx, model_from_json(to_json(y)), back.sy, back.spec);
  CHECK(to_json(direct) == to_json(again));

  auto simple = simplify_pi1(direct, 1000, back.keep);
  CHECK(simple.pi1.find("x"));
  CHECK(fpgroup::abelianize(simple.pi1) == fpgroup::abelianize(direct.pi1));
  CHECK(verify_model(simple).all_passed());
}
