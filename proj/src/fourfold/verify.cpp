#include "flab/fourfold/verify.hpp"

#include <algorithm>

#include "flab/error.hpp"

namespace flab::fourfold {

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* VerificationReport::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

std::string VerificationReport::failures() const {
  std::string s;
  for (const auto& c : checks)
    if (!c.passed) s += (s.empty() ? "" : ", ") + c.name;
  return s;
}

VerificationReport verify_model(const FourManifoldModel& x) {
  VerificationReport r;
  auto add = [&](std::string name, bool ok, std::string detail) { r.checks.push_back({std::move(name), ok, std::move(detail)}); };

  const std::size_t n = x.basis.size();
  const bool shape = x.form.rows() == n && x.form.cols() == n;
  add("form_shape", shape, std::to_string(x.form.rows()) + "x" + std::to_string(x.form.cols()) + " form, " +
                               std::to_string(n) + " labels");
  const bool sym = shape && x.form.is_symmetric();
  add("form_symmetric", sym, sym ? "symmetric" : "not symmetric");

  const std::int64_t b2 = x.euler - 2 + 2 * x.b1;
  if (sym) {
    r.inertia = inertia(x.form);
    r.even = is_even(x.form);
    add("rank_b2", static_cast<std::int64_t>(r.inertia.rank()) == b2 && static_cast<std::int64_t>(n) == b2,
        "rank " + std::to_string(r.inertia.rank()) + ", basis " + std::to_string(n) + ", e-2+2b1 = " + std::to_string(b2));
    add("signature", r.inertia.signature() == x.signature,
        "form " + std::to_string(r.inertia.signature()) + ", model " + std::to_string(x.signature));
    auto det = determinant(x.form);
    add("unimodular", abs(det) == 1, "det " + det.get_str());
  }

  bool squares = true, images = true;
  std::string sq_detail, im_detail;
  for (const auto& s : x.surfaces) {
    if (s.homology) {
      if (s.homology->size() != n || !sym) {
        squares = false;
        sq_detail += s.label + ": wrong length; ";
      } else {
        auto v = fpgroup::bilinear(x.form, *s.homology, *s.homology);
        if (v != s.self_intersection) {
          squares = false;
          sq_detail += s.label + ": " + std::to_string(v) + " != " + std::to_string(s.self_intersection) + "; ";
        }
      }
    }
    if (s.images) {
      bool ok = static_cast<std::int64_t>(s.images->size()) == 2 * s.genus;
      for (const auto& w : *s.images) ok = ok && w.span() <= x.pi1.generator_count();
      if (!ok) {
        images = false;
        im_detail += s.label + "; ";
      }
    }
  }
  add("surface_squares", squares, squares ? "all match" : sq_detail);
  add("surface_images", images, images ? "all have 2g images" : im_detail);

  try {
    r.h1 = fpgroup::abelianize(x.pi1);
    add("abelianization_b1", r.h1->free_rank == x.b1,
        "H1 = " + r.h1->to_string() + ", b1 = " + std::to_string(x.b1));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ShadowNotCommutator) throw;
    add("abelianization_b1", false, e.what());
  }

  if (x.canonical) {
    bool ok = sym && x.canonical->size() == n;
    if (ok) {
      auto qk = x.form * *x.canonical;
      for (std::size_t i = 0; i < n; ++i) ok = ok && ((qk[i] - x.form(i, i)) % 2 == 0);
    }
    add("canonical_characteristic", ok, ok ? "characteristic" : "not characteristic");
  }

  r.spin = sym && r.even && r.h1 && !r.h1->has_two_torsion();
  r.assumptions = x.assumptions;
  r.assumptions.push_back("H2 is torsion-free");
  return r;
}

}  // namespace flab::fourfold
