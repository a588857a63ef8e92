#include <algorithm>
#include <cmath>
#include <optional>

#include "doctest.h"
#include "flab/error.hpp"
#include "flab/swenum/chamber.hpp"
#include "flab/swenum/characteristic.hpp"
#include "flab/swenum/enumerate.hpp"
#include "flab/swenum/serialize.hpp"
#include "oracles.hpp"

using namespace flab;
using namespace flab::swenum;

namespace {

std::optional<ErrorCode> code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

IntVector neg(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

IntVector times(const IntegerMatrix& q, const IntVector& v) { return q * v; }

std::int64_t dot(const IntVector& a, const IntVector& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// |v_i| can be no larger than sum_j |(Q^-1)_ij| bound_j when every |(Qv)_j| <= bound_j.
std::int64_t box_for(const IntegerMatrix& q, const std::vector<std::int64_t>& bounds) {
  const std::size_t n = q.rows();
  const mpz_class d = abs(oracle::det(q));
  mpz_class best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      // cofactor (j, i) is the adjugate entry (i, j)
      IntegerMatrix minor(n - 1, n - 1);
      for (std::size_t a = 0, ra = 0; a < n; ++a) {
        if (a == j) continue;
        for (std::size_t b = 0, cb = 0; b < n; ++b) {
          if (b == i) continue;
          minor(ra, cb++) = q(a, b);
        }
        ++ra;
      }
      s += abs(oracle::det(minor)) * static_cast<long>(bounds[j]);
    }
    mpz_class c = (s + d - 1) / d;
    if (c > best) best = c;
  }
  return best.get_si();
}

}  // namespace

TEST_CASE("characteristic vectors") {
  IntegerMatrix h{{0, 1}, {1, 0}};
  CHECK(is_characteristic({2, 0}, h));
  CHECK(is_characteristic({0, 0}, h));
  CHECK_FALSE(is_characteristic({1, 0}, h));
  IntegerMatrix d{{1, 0}, {0, -1}};
  CHECK(is_characteristic({1, 1}, d));
  CHECK(is_characteristic({-3, 1}, d));
  CHECK_FALSE(is_characteristic({2, 1}, d));
  CHECK(code_of([&] { is_characteristic({1}, h); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("moduli space dimension") {
  IntegerMatrix h{{0, 1}, {1, 0}};
  // A class of square 8 on a manifold with e = 4, sigma = 0.
  CHECK(sw_dimension({2, 2}, 4, 0, h).value == 0);
  CHECK(sw_dimension({0, 0}, 4, 0, h).value == -2);
  auto odd = sw_dimension({1, 1}, 4, 0, h);
  CHECK(odd.value == mpq_class(-3, 2));
  CHECK_FALSE(odd.integral);
  IntegerMatrix one{{1}};
  // CP2 with its canonical class -3H: dimension 0.
  CHECK(sw_dimension({-3}, 3, 1, one).value == 0);
}

TEST_CASE("wall crossing") {
  for (std::int64_t m = 0; m <= 10; ++m) CHECK(wall_crossing_delta(2 * m) == (m % 2 == 0 ? -1 : 1));
  CHECK(code_of([] { wall_crossing_delta(1); }) == ErrorCode::OddOrNegativeDimension);
  CHECK(code_of([] { wall_crossing_delta(-2); }) == ErrorCode::OddOrNegativeDimension);
}

TEST_CASE("chambers") {
  CHECK(chamber_info(0, 1, 9).sw_zero_well_defined);
  CHECK(chamber_info(0, 1, 0).sw_zero_well_defined);
  CHECK_FALSE(chamber_info(0, 1, 10).sw_zero_well_defined);
  CHECK_FALSE(chamber_info(1, 1, 1).sw_zero_well_defined);
  CHECK_FALSE(chamber_info(0, 3, 3).sw_zero_well_defined);
  auto c = chamber_info(0, 3, 19);
  CHECK(c.b2plus == 3);
  CHECK(c.b2minus == 19);
}

TEST_CASE("small enumerations by hand") {
  IntegerMatrix h{{0, 1}, {1, 0}};
  ConstraintSet c;
  c.surfaces = {{"F", {1, 0}, 2, 0}, {"T", {0, 1}, 1, 0}};
  auto r = enumerate_basic_candidates(h, c);
  // |b| <= 2, a = 0, both even.
  CHECK(r.candidates == std::vector<IntVector>{{0, -2}, {0, 0}, {0, 2}});
  CHECK(r.characteristic_exists);

  c.surfaces = {{"F", {1, 0}, 1, 0}, {"T", {0, 1}, 1, 0}};
  CHECK(enumerate_basic_candidates(h, c).candidates == std::vector<IntVector>{{0, 0}});

  // X_K: S and T of genus 2, square 8.
  ConstraintSet xk;
  xk.surfaces = {{"S", {1, 0}, 2, 0}, {"T", {0, 1}, 2, 0}};
  xk.square = 8;
  CHECK(enumerate_basic_candidates(h, xk).candidates == std::vector<IntVector>{{-2, -2}, {2, 2}});
  CHECK(brute_force_candidates(h, xk, 5) == std::vector<IntVector>{{-2, -2}, {2, 2}});
  CHECK(sw_dimension({2, 2}, 4, 0, h).value == 0);

  ConstraintSet loose;
  CHECK(code_of([&] { enumerate_basic_candidates(h, loose); }) == ErrorCode::UnboundedRegion);
  CHECK(code_of([&] { enumerate_basic_candidates(IntegerMatrix{{1}}, c); }) == ErrorCode::DimensionMismatch);

  // Zero pairing with F kills b; nothing of square 0 besides 0 remains.
  ConstraintSet z;
  z.surfaces = {{"T", {0, 1}, 3, 0}};
  z.zero_pairing = {{"Z", {"F"}, {{1, 0}}}};
  auto zr = enumerate_basic_candidates(h, z, {1, 50'000'000, false, {"F", "T"}});
  CHECK(zr.candidates == std::vector<IntVector>{{-4, 0}, {-2, 0}, {0, 0}, {2, 0}, {4, 0}});
  REQUIRE(zr.trace.size() == 1);
  CHECK(zr.trace[0].group == "Z");
  CHECK(zr.trace[0].forced_zero == std::vector<std::string>{"T"});
  CHECK(zr.trace[0].kernel_rank == 1);

  // On <1>, characteristic means odd; pairing to zero with e1 leaves only 0.
  ConstraintSet none;
  none.square = 0;
  none.zero_pairing = {{"all", {}, {{1}}}};
  auto nr = enumerate_basic_candidates(IntegerMatrix{{1}}, none);
  CHECK(nr.candidates.empty());
  CHECK_FALSE(nr.characteristic_exists);
  EnumerationOptions strict;
  strict.require_characteristic = true;
  CHECK(code_of([&] { enumerate_basic_candidates(IntegerMatrix{{1}}, none, strict); }) ==
        ErrorCode::NoCharacteristicVector);

  EnumerationOptions tiny;
  tiny.max_points = 1;
  c.surfaces = {{"F", {1, 0}, 20, 0}, {"T", {0, 1}, 20, 0}};
  CHECK(code_of([&] { enumerate_basic_candidates(h, c, tiny); }) == ErrorCode::SearchTooLarge);
}

TEST_CASE("enumerator agrees with the brute-force scan on random forms") {
  oracle::Rng rng(31337);
  int done = 0, nonempty = 0, with_zero_pairing = 0;
  for (int attempt = 0; done < 250 && attempt < 100000; ++attempt) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
    IntegerMatrix q(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) q(a, b) = q(b, a) = oracle::uniform(rng, -3, 3);
    if (oracle::det(q) == 0) continue;

    // Aim the constraints at a characteristic vector when one is found.
    IntVector v0(n, 0);
    for (int tries = 0; tries < 40; ++tries) {
      for (auto& x : v0) x = oracle::uniform(rng, -2, 2);
      if (is_characteristic(v0, q)) break;
    }
    const IntVector qv = times(q, v0);
    ConstraintSet c;
    c.square = dot(v0, qv);
    std::vector<std::int64_t> bounds(n);
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t need = std::abs(qv[j]) + 2 + q(j, j);
      const std::int64_t genus = std::max<std::int64_t>(0, (need + 1) / 2 + oracle::uniform(rng, 0, 1));
      IntVector e(n, 0);
      e[j] = 1;
      c.surfaces.push_back({"S" + std::to_string(j), e, genus, q(j, j)});
      bounds[j] = std::max<std::int64_t>(0, c.surfaces.back().bound());
    }
    if (n >= 2 && oracle::uniform(rng, 0, 2) == 0) {
      // A class orthogonal to v0 under Q.
      const auto i = static_cast<std::size_t>(oracle::uniform(rng, 0, static_cast<std::int64_t>(n) - 1));
      const auto j = (i + 1) % n;
      IntVector w(n, 0);
      w[i] = qv[j];
      w[j] = -qv[i];
      if (w != IntVector(n, 0)) c.zero_pairing.push_back({"Z", {}, {w}});
    }
    const auto box = box_for(q, bounds);
    if (std::pow(2.0 * static_cast<double>(box) + 1, static_cast<double>(n)) > 300000) continue;

    auto fast = enumerate_basic_candidates(q, c);
    auto slow = brute_force_candidates(q, c, box);
    CHECK(fast.candidates == slow);
    for (const auto& v : fast.candidates) {
      CHECK(std::binary_search(fast.candidates.begin(), fast.candidates.end(), neg(v)));
      CHECK(is_characteristic(v, q));
      CHECK(dot(v, times(q, v)) == c.square);
    }
    if (!fast.candidates.empty()) ++nonempty;
    if (!c.zero_pairing.empty()) ++with_zero_pairing;
    ++done;
  }
  CHECK(done >= 200);
  CHECK(nonempty >= 50);
  CHECK(with_zero_pairing >= 20);
}

TEST_CASE("enumeration is deterministic across worker counts") {
  IntegerMatrix q = IntegerMatrix::direct_sum(IntegerMatrix{{0, 1}, {1, 0}},
                                              IntegerMatrix::direct_sum(IntegerMatrix{{0, 1}, {1, 0}}, IntegerMatrix{{0, 1}, {1, 0}}));
  ConstraintSet c;
  for (std::size_t j = 0; j < 6; ++j) {
    IntVector e(6, 0);
    e[j] = 1;
    c.surfaces.push_back({"S" + std::to_string(j), e, 3, 0});
  }
  c.square = 8;
  auto one = enumerate_basic_candidates(q, c);
  CHECK_FALSE(one.candidates.empty());
  for (unsigned w : {2u, 3u, 8u}) {
    EnumerationOptions o;
    o.workers = w;
    auto r = enumerate_basic_candidates(q, c, o);
    CHECK(r.candidates == one.candidates);
    CHECK(r.points_scanned == one.points_scanned);
  }
  CHECK(std::is_sorted(one.candidates.begin(), one.candidates.end()));
}

TEST_CASE("canonical class from the adjunction equality") {
  IntegerMatrix h{{0, 1}, {1, 0}};
  std::vector<AdjunctionSurface> symp = {{"F", {1, 0}, 2, 0}, {"T", {0, 1}, 1, 0}};
  std::vector<IntVector> cands = {{0, -2}, {0, 0}, {0, 2}};
  // K.F = 2, K.T = 0 -> K = (0, 2).
  CHECK(canonical_from_candidates(h, symp, cands) == IntVector{0, 2});
  CHECK_FALSE(canonical_from_candidates(h, symp, {{0, 0}}));
}

TEST_CASE("formatting classes") {
  std::vector<std::string> l = {"S", "T", "Sigma"};
  CHECK(format_class({2, 2, 0}, l) == "2S+2T");
  CHECK(format_class({-2, -2, 0}, l) == "-2S-2T");
  CHECK(format_class({0, -1, 1}, l) == "-T+Sigma");
  CHECK(format_class({0, 0, 0}, l) == "0");
  CHECK(format_class({1, 0, 4}, l) == "S+4Sigma");
}

TEST_CASE("Taubes annotation") {
  BasicClassReport r;
  r.basis = {"S", "T"};
  r.candidates = {{-2, -2}, {0, 0}, {2, 2}};
  auto big = taubes_annotate(r, {2, 2}, 3);
  REQUIRE(big.sw_values.size() == 3);
  CHECK(big.sw_values[0].value == "±1");
  CHECK(big.sw_values[0].chamber == "metric independent");
  CHECK(big.sw_values[1].value == kUndetermined);
  CHECK(big.sw_values[2].value == "±1");
  CHECK(big.warnings.empty());

  r.chamber = chamber_info(0, 1, 1);
  auto small = taubes_annotate(r, {2, 2}, 1);
  REQUIRE(small.sw_values.size() == 4);
  CHECK(small.sw_values[0].cls == IntVector{-2, -2});
  CHECK(small.sw_values[0].chamber == "SW-");
  CHECK(small.sw_values[1].chamber == "SW0");
  CHECK(small.sw_values[3].value == kUndetermined);

  auto missing = taubes_annotate(r, {4, 0}, 3);
  CHECK(missing.warnings.size() == 1);
  for (const auto& v : missing.sw_values) CHECK(v.value == kUndetermined);

  auto j = to_json(big);
  CHECK(j.contains("candidates"));
}
