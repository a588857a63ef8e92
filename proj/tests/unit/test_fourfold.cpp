#include <random>

#include "doctest.h"
#include "flab/error.hpp"
#include "flab/fourfold/mayer_vietoris.hpp"
#include "flab/fourfold/product.hpp"
#include "flab/fourfold/rational_lattice.hpp"
#include "flab/fourfold/serialize.hpp"
#include "flab/fourfold/verify.hpp"
#include "flab/fpgroup/abelian.hpp"
#include "flab/knotforge/surgery.hpp"
#include "oracles.hpp"

using namespace flab;
using namespace flab::fourfold;

namespace {

FourManifoldModel trefoil_product(ProductForm f = ProductForm::Surgery) {
  return product_with_circle(knotforge::zero_surgery(knotforge::make_knot(knotforge::Trefoil{})), f);
}

}  // namespace

TEST_CASE("characteristic numbers") {
  auto a = char_numbers(4, 0);
  CHECK(a.c1sq == 8);
  CHECK(a.chi_h == 1);
  CHECK(a.chi_h_integral);
  auto b = char_numbers(0, 0);
  CHECK(b.c1sq == 0);
  CHECK(b.chi_h == 0);
  auto c = char_numbers(12, 0);
  CHECK(c.c1sq == 24);
  CHECK(c.chi_h == 3);
  // CP2: e = 3, sigma = 1
  auto d = char_numbers(3, 1);
  CHECK(d.c1sq == 9);
  CHECK(d.chi_h == 1);
  auto e = char_numbers(3, 0);
  CHECK_FALSE(e.chi_h_integral);
  CHECK(e.chi_h == mpq_class(3, 4));
}

TEST_CASE("product of the trefoil 0-surgery with a circle") {
  auto x = trefoil_product();
  CHECK(x.euler == 0);
  CHECK(x.signature == 0);
  CHECK(x.b1 == 2);
  CHECK(x.symplectic);
  CHECK(x.pi1.generators == std::vector<std::string>{"a", "b", "x"});
  CHECK(fpgroup::abelianize(x.pi1).to_string() == "Z^2");
  CHECK(x.surface("F").genus == 1);
  CHECK(x.surface("T_m").genus == 1);
  CHECK(x.surface("T_m").images->at(1) == x.pi1.word("x"));
  auto v = verify_model(x);
  CHECK_MESSAGE(v.all_passed(), v.failures());
  CHECK(v.even);
  CHECK(v.spin);

  auto bundle = trefoil_product(ProductForm::Bundle);
  CHECK(bundle.pi1.generators == std::vector<std::string>{"g1", "g2", "d", "y"});
  CHECK(fpgroup::abelianize(bundle.pi1) == fpgroup::abelianize(x.pi1));
  CHECK(verify_model(bundle).all_passed());
}

TEST_CASE("product with circle for other knots") {
  auto t25 = product_with_circle(knotforge::zero_surgery(knotforge::make_knot(knotforge::TorusKnot{2, 5})));
  CHECK(t25.surface("F").genus == 2);
  CHECK(verify_model(t25).all_passed());
  CHECK_THROWS_AS(product_with_circle(knotforge::zero_surgery(knotforge::make_knot(knotforge::TorusKnot{2, 5})),
                                      ProductForm::Bundle),
                  Error);

  knotforge::ExplicitKnot e;
  e.name = "unknot";
  e.presentation = Presentation({"a"}, {});
  e.meridian = Word::gen(0);
  e.genus = 0;
  auto u = product_with_circle(knotforge::zero_surgery(knotforge::make_knot(e)));
  CHECK(u.euler == 0);
  CHECK(u.b1 == 2);
  CHECK_FALSE(u.symplectic);
}

TEST_CASE("verification catches tampering") {
  auto x = trefoil_product();
  x.signature = 1;
  auto v = verify_model(x);
  CHECK_FALSE(v.all_passed());
  REQUIRE(v.find("signature"));
  CHECK_FALSE(v.find("signature")->passed);

  auto y = trefoil_product();
  y.b1 = 3;
  CHECK_FALSE(verify_model(y).find("rank_b2")->passed);
  CHECK_FALSE(verify_model(y).find("abelianization_b1")->passed);

  auto z = trefoil_product();
  z.surfaces[0].self_intersection = 2;
  CHECK_FALSE(verify_model(z).find("surface_squares")->passed);

  auto w = trefoil_product();
  w.surfaces[0].images->pop_back();
  CHECK_FALSE(verify_model(w).find("surface_images")->passed);
}

TEST_CASE("Mayer-Vietoris cokernel") {
  CHECK(mv_h1_cokernel(IntegerMatrix{{1, 0}, {0, 1}}).is_trivial());
  CHECK(mv_h1_cokernel(IntegerMatrix{{0}, {0}}).to_string() == "Z^2");
  CHECK(mv_h1_cokernel(IntegerMatrix{{2}, {0}}).to_string() == "Z + Z/2");
}

TEST_CASE("rational lattice") {
  IntegerMatrix h{{0, 1}, {1, 0}};
  auto i = inertia(h);
  CHECK(i.positive == 1);
  CHECK(i.negative == 1);
  CHECK(determinant(h) == -1);
  CHECK(is_even(h));
  IntegerMatrix d{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}};
  CHECK(signature(d) == 0);
  CHECK(rank(d) == 2);
  CHECK_FALSE(is_even(d));
  IntegerMatrix e8{{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, -1},
                   {0, 0, -1, 2, -1, 0, 0, 0},  {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
                   {0, 0, 0, 0, 0, -1, 2, 0},   {0, 0, -1, 0, 0, 0, 0, 2}};
  CHECK(signature(e8) == 8);
  CHECK(determinant(e8) == 1);

  auto x = solve(to_rational(IntegerMatrix{{2, 1}, {1, 1}}), {3, 2});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve(to_rational(IntegerMatrix{{1, 2}, {2, 4}}), {1, 1}));
  CHECK(independent_rows(to_rational(IntegerMatrix{{1, 2}, {2, 4}, {0, 1}})) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("inertia agrees with the determinant sign on random symmetric forms") {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
    IntegerMatrix q(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) q(a, b) = q(b, a) = oracle::uniform(rng, -3, 3);
    auto i = inertia(q);
    auto det = oracle::det(q);
    CHECK(determinant(q) == det);
    CHECK((i.zero == 0) == (det != 0));
    if (det != 0) CHECK((i.negative % 2 == 1) == (det < 0));
  }
}

TEST_CASE("model JSON round trip") {
  auto x = trefoil_product(ProductForm::Bundle);
  x.canonical = IntVector{0, 0};
  x.assumptions = {"test"};
  auto j = to_json(x);
  auto back = model_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(back.pi1.relators == x.pi1.relators);
  CHECK(*back.surface("T_m").images == *x.surface("T_m").images);
  CHECK_THROWS_AS(back.surface("nope"), Error);
}
