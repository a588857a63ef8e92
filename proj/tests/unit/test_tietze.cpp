#include "doctest.h"
#include "flab/fpgroup/abelian.hpp"
#include "flab/fpgroup/tietze.hpp"

using namespace flab::fpgroup;

TEST_CASE("tietze examples") {
  const auto p = tietze_simplify(Presentation::parse({"a", "b"}, {"B a"}));
  CHECK(p.generators == std::vector<std::string>{"a"});
  CHECK(p.relators.empty());

  const auto q = tietze_simplify(Presentation::parse({"a"}, {"a A"}));
  CHECK(q.generators == std::vector<std::string>{"a"});
  CHECK(q.relators.empty());
}

TEST_CASE("tietze tidy removes duplicates and inverses") {
  const auto p = tidy_relators(Presentation::parse({"a", "b"}, {"a b a B A B", "B A B a b a", "b a B A B a", "1"}));
  CHECK(p.relators.size() == 1);
}

TEST_CASE("tietze map and keep list") {
  const auto p = Presentation::parse({"a", "b", "c"}, {"c B A", "a b a B A B"});
  const auto t = tietze_simplify_with_map(p);
  CHECK(t.presentation.generators == std::vector<std::string>{"a", "b"});
  CHECK(t.presentation.format(t.images[2]) == "a b");
  CHECK(t.steps == 1);

  const auto kept = tietze_simplify(p, 1000, {"c"});
  CHECK(kept.generator_count() == 2);
  CHECK(kept.find("c"));

  const auto none = tietze_simplify(p, 0);
  CHECK(none.generator_count() == 3);
}

TEST_CASE("tietze is deterministic") {
  const auto p = Presentation::parse({"a", "b", "c", "d"}, {"d C", "c B A", "a b a B A B"});
  CHECK(tietze_simplify(p) == tietze_simplify(p));
  CHECK(abelianize(tietze_simplify(p)) == abelianize(p));
}
