#include "doctest.h"
#include "flab/fpgroup/smith.hpp"
#include "oracles.hpp"

using namespace flab::fpgroup;

namespace {

void check_snf(const IntegerMatrix& m) {
  const auto s = smith_normal_form(m);
  REQUIRE(s.u.rows() == m.rows());
  REQUIRE(s.v.rows() == m.cols());
  CHECK(s.u * m * s.v == s.d);
  CHECK(s.d.is_diagonal());
  CHECK(abs(oracle::det(s.u)) == 1);
  CHECK(abs(oracle::det(s.v)) == 1);
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i + 1 < diag.size()) {
      if (diag[i] == 0) CHECK(diag[i + 1] == 0);
      else CHECK(diag[i + 1] % diag[i] == 0);
    }
  }
}

}  // namespace

TEST_CASE("smith examples") {
  const auto s = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}});
  CHECK(s.d == IntegerMatrix{{1, 0}, {0, 6}});
  check_snf(IntegerMatrix{{2, 0}, {0, 3}});

  const auto z = smith_normal_form(IntegerMatrix(3, 2));
  CHECK(z.d.is_zero());
  CHECK(z.u == IntegerMatrix::identity(3));
  CHECK(z.v == IntegerMatrix::identity(2));

  CHECK(smith_normal_form(IntegerMatrix{{0, 1}, {1, 0}}).d == IntegerMatrix::identity(2));
  CHECK(smith_normal_form(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}).diagonal() == IntVector{2, 6, 12});
}

TEST_CASE("smith is deterministic") {
  const IntegerMatrix m{{3, 5, 7}, {2, 4, 6}};
  const auto a = smith_normal_form(m), b = smith_normal_form(m);
  CHECK(a.u == b.u);
  CHECK(a.v == b.v);
}

TEST_CASE("property: smith soundness on random matrices") {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto rows = static_cast<std::size_t>(oracle::uniform(rng, 1, 8));
    const auto cols = static_cast<std::size_t>(oracle::uniform(rng, 1, 8));
    check_snf(oracle::random_matrix(rng, rows, cols, trial % 3 == 0 ? 1 : 9));
  }
}

TEST_CASE("smith rank and kernel") {
  const IntegerMatrix a{{1, 2, 3}, {2, 4, 6}};
  const auto s = smith_normal_form(a);
  CHECK(s.rank() == 1);
  for (std::size_t j = s.rank(); j < a.cols(); ++j) CHECK(a * s.v.col(j) == IntVector{0, 0});
}
