#include "flab/fourfold/product.hpp"

#include "flab/error.hpp"

namespace flab::fourfold {

namespace {

std::string fresh_name(const Presentation& p, std::string base) {
  while (p.find(base)) base += '\'';
  return base;
}

}  // namespace

FourManifoldModel product_with_circle(const knotforge::ThreeManifoldModel& m, ProductForm form) {
  if (!m.bundle) throw Error(ErrorCode::MissingBundleData, m.name + " has no fibration data");
  const auto& bundle = *m.bundle;
  const std::int64_t g = bundle.fiber_genus;

  FourManifoldModel x;
  x.name = m.name + " x S1";
  x.euler = 0;
  x.signature = 0;
  x.b1 = m.h1.free_rank + 1;
  x.basis = {"F", "T_m"};
  x.form = IntegerMatrix{{0, 1}, {1, 0}};
  x.symplectic = g >= 1;

  MarkedSurface fiber{"F", g, 0, IntVector{1, 0}, std::nullopt, x.symplectic};
  MarkedSurface section{"T_m", 1, 0, IntVector{0, 1}, std::nullopt, x.symplectic};

  if (form == ProductForm::Surgery) {
    Presentation p = m.presentation;
    const auto n = static_cast<fpgroup::Gen>(p.generator_count());
    p.generators.push_back(fresh_name(m.presentation, "x"));
    const Word t = Word::gen(n);
    for (fpgroup::Gen i = 0; i < n; ++i) p.relators.push_back(fpgroup::commutator(Word::gen(i), t));
    p.validate();
    x.pi1 = std::move(p);
    fiber.images = bundle.fiber_words;
    section.images = std::vector<Word>{m.meridian, t};
  } else {
    if (!bundle.monodromy)
      throw Error(ErrorCode::MissingBundleData, m.name + " has no monodromy words for the bundle form");
    const auto& phi = *bundle.monodromy;
    const auto k = static_cast<fpgroup::Gen>(bundle.fiber_words.size());
    if (phi.size() != k) throw Error(ErrorCode::MissingBundleData, "monodromy needs one word per fiber generator");
    Presentation p;
    for (fpgroup::Gen i = 0; i < k; ++i) p.generators.push_back("g" + std::to_string(i + 1));
    p.generators.push_back("d");
    p.generators.push_back("y");
    const Word d = Word::gen(k), y = Word::gen(k + 1);
    Word surface;
    for (fpgroup::Gen i = 0; i + 1 < k; i += 2) surface *= fpgroup::commutator(Word::gen(i), Word::gen(i + 1));
    if (!surface.empty()) p.relators.push_back(surface);
    for (fpgroup::Gen i = 0; i < k; ++i) p.relators.push_back(fpgroup::commutator(y, Word::gen(i)));
    for (fpgroup::Gen i = 0; i < k; ++i)
      p.relators.push_back(fpgroup::conjugate(Word::gen(i), d) * phi[i].inverse());
    p.relators.push_back(fpgroup::commutator(d, y));
    p.validate();
    x.pi1 = std::move(p);
    std::vector<Word> fiber_images;
    for (fpgroup::Gen i = 0; i < k; ++i) fiber_images.push_back(Word::gen(i));
    fiber.images = fiber_images;
    section.images = std::vector<Word>{d, y};
  }
  x.surfaces = {fiber, section};
  return x;
}

}  // namespace flab::fourfold
