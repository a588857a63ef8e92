#include "flab/scenarios/pipeline.hpp"

#include <algorithm>
#include <map>

#include "flab/error.hpp"
#include "flab/fourfold/product.hpp"
#include "flab/fpgroup/abelian.hpp"

namespace flab::scenarios {

using fourfold::Check;
using fourfold::FourManifoldModel;
using fourfold::GluingSpec;
using fpgroup::IntVector;
using fpgroup::Word;

bool StageRecord::passed() const {
  if (verification && !verification->all_passed()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool PipelineReport::passed() const {
  return std::all_of(stages.begin(), stages.end(), [](const StageRecord& s) { return s.passed(); });
}

const StageRecord* PipelineReport::stage(const std::string& name) const {
  for (const auto& s : stages)
    if (s.name == name) return &s;
  return nullptr;
}

const FourManifoldModel& PipelineReport::final_model() const {
  for (auto it = stages.rbegin(); it != stages.rend(); ++it)
    if (it->model) return *it->model;
  throw Error(ErrorCode::PreconditionFailed, "report has no four-manifold stage");
}

namespace {

Word translate(const fpgroup::Presentation& from, const Word& w, const fpgroup::Presentation& to) {
  return to.word(from.format(w));
}

std::string int_str(std::int64_t v) { return std::to_string(v); }

void gate(const StageRecord& s) {
  if (s.verification)
    for (const auto& c : s.verification->checks)
      if (!c.passed) throw Error(ErrorCode::StageVerificationFailed, s.name + ": " + c.name + " failed (" + c.detail + ")");
  for (const auto& c : s.checks)
    if (!c.passed) throw Error(ErrorCode::StageVerificationFailed, s.name + ": " + c.name + " failed (" + c.detail + ")");
}

StageRecord knot_stage(const std::string& name, const knotforge::KnotGroupModel& k, std::int64_t want_genus,
                       bool need_monodromy) {
  StageRecord s;
  s.name = name;
  s.kind = "knot";
  s.presentation = k.presentation;
  s.h1 = fpgroup::abelianize(k.presentation);
  s.screen = knotforge::fiberedness_screen(k);
  const auto& sc = *s.screen;
  if (sc.verdict != knotforge::Fibered::Fibered)
    throw Error(ErrorCode::PreconditionFailed,
                k.name + " is not usable: fiberedness verdict " + std::string(knotforge::to_string(sc.verdict)) +
                    " (Alexander polynomial " + sc.alexander.to_string() + (sc.monic ? "" : ", not monic") + ")");
  if (!k.genus || *k.genus != want_genus)
    throw Error(ErrorCode::PreconditionFailed,
                k.name + " has genus " + (k.genus ? int_str(*k.genus) : "unknown") + ", need " + int_str(want_genus));
  if (!k.fiber) throw Error(ErrorCode::PreconditionFailed, k.name + " has no fiber data");
  if (need_monodromy && !k.fiber->monodromy)
    throw Error(ErrorCode::PreconditionFailed, k.name + " has no monodromy words, so its bundle form is unavailable");
  s.checks.push_back({"fibered", true, std::string(knotforge::to_string(sc.verdict))});
  s.checks.push_back({"monic_alexander", sc.monic, sc.alexander.to_string()});
  s.checks.push_back({"genus", true, int_str(want_genus)});
  s.checks.push_back({"h1_is_Z", s.h1->free_rank == 1 && s.h1->torsion.empty(), s.h1->to_string()});
  s.rules.push_back("a fibered knot has monic Alexander polynomial of degree twice its genus");
  return s;
}

StageRecord surgery_stage(const std::string& name, const knotforge::ThreeManifoldModel& m) {
  StageRecord s;
  s.name = name;
  s.kind = "3-manifold";
  s.presentation = m.presentation;
  s.h1 = m.h1;
  s.checks.push_back({"h1_is_Z", m.h1.free_rank == 1 && m.h1.torsion.empty(), m.h1.to_string()});
  s.checks.push_back({"bundle_data", m.bundle.has_value(), m.bundle ? "fibers over the circle" : "no fibration"});
  s.rules.push_back("0-surgery adds the longitude as a relator");
  s.rules.push_back("0-surgery on a fibered knot fibers over the circle with closed fiber");
  return s;
}

StageRecord model_stage(const std::string& name, const FourManifoldModel& raw, const FourManifoldModel& simplified,
                        std::vector<std::string> rules) {
  StageRecord s;
  s.name = name;
  s.kind = "4-manifold";
  s.presentation = raw.pi1;
  s.simplified = simplified.pi1;
  s.model = simplified;
  s.verification = fourfold::verify_model(simplified);
  s.h1 = s.verification->h1;
  s.rules = std::move(rules);
  return s;
}

std::vector<std::string> product_rules() {
  return {"e and signature of a product with a circle vanish", "a surface bundle over a torus with fiber genus >= 1 is symplectic"};
}

std::vector<std::string> sum_rules() {
  return {"fiber sum along genus g: e = e1 + e2 + 4g - 4, signature adds",
          "fiber sum along genus g: c1^2 = c1^2_1 + c1^2_2 + 8g - 8, chi_h = chi_h1 + chi_h2 + g - 1",
          "symplectic sum along symplectic square-zero surfaces is symplectic",
          "Van Kampen: pi1 of the sum amalgamates the complements over the identified boundary"};
}

bool is_hyperbolic_sum(const fourfold::VerificationReport& v, const FourManifoldModel& m) {
  return v.even && v.inertia.zero == 0 && v.inertia.signature() == 0 && m.form.rows() % 2 == 0 &&
         v.find("unimodular") && v.find("unimodular")->passed;
}

std::string numbers_detail(const fourfold::CharNumbers& n) {
  return "c1^2 = " + int_str(n.c1sq) + ", chi_h = " + n.chi_h.get_str();
}

// Checks shared by both final stages.
void final_checks(StageRecord& s, std::int64_t g, const fpgroup::AbelianGroupStructure& mv_h1) {
  const auto& m = *s.model;
  const auto& v = *s.verification;
  const auto n = fourfold::char_numbers(m);
  const std::int64_t b2 = static_cast<std::int64_t>(m.basis.size());
  s.checks.push_back({"h1_trivial", v.h1 && v.h1->is_trivial(), v.h1 ? v.h1->to_string() : "unknown"});
  s.checks.push_back({"mv_h1_agrees", v.h1 && mv_h1 == *v.h1, "Mayer-Vietoris gives " + mv_h1.to_string()});
  s.checks.push_back({"euler", m.euler == 4 * g, int_str(m.euler)});
  s.checks.push_back({"signature_zero", m.signature == 0, int_str(m.signature)});
  s.checks.push_back({"b2", b2 == 4 * g - 2, int_str(b2)});
  s.checks.push_back({"form_hyperbolic", is_hyperbolic_sum(v, m),
                      "even unimodular indefinite form of rank " + int_str(b2) + " and signature 0 is " +
                          int_str(b2 / 2) + "H"});
  s.checks.push_back({"c1sq", n.c1sq == 8 * g, numbers_detail(n)});
  s.checks.push_back({"chi_h", n.chi_h_integral && n.chi_h == g, numbers_detail(n)});
  s.checks.push_back({"spin", v.spin, v.spin ? "even form, no 2-torsion in H1" : "not spin"});
  s.rules.push_back("an even unimodular indefinite form is determined by rank and signature");
  s.rules.push_back("H1 = 0 and an even form make the manifold spin (H2 torsion-free assumed)");
}

void class_checks(StageRecord& s, const FourManifoldModel& m, const swenum::BasicClassReport& r) {
  bool expected = r.canonical.has_value() && r.candidates.size() == 2;
  if (expected) {
    IntVector neg(r.canonical->size());
    std::transform(r.canonical->begin(), r.canonical->end(), neg.begin(), [](std::int64_t x) { return -x; });
    expected = std::find(r.candidates.begin(), r.candidates.end(), neg) != r.candidates.end() &&
               std::find(r.candidates.begin(), r.candidates.end(), *r.canonical) != r.candidates.end();
  }
  s.checks.push_back({"basic_classes_are_plus_minus_canonical", expected,
                      std::to_string(r.candidates.size()) + " candidates"});
  bool dims = true;
  for (const auto& c : r.candidates) {
    auto d = swenum::sw_dimension(c, m.euler, m.signature, m.form);
    dims = dims && d.integral && d.value == 0;
  }
  s.checks.push_back({"basic_class_dimension_zero", dims, "every candidate has moduli dimension 0"});
  s.rules.push_back("simple type: every basic class has square 2e + 3 sigma");
  s.rules.push_back("adjunction: 2g - 2 >= S^2 + |C.S| for surfaces of genus >= 1");
  s.rules.push_back("basic classes come in pairs +C, -C");
  s.rules.push_back("Taubes: SW(K) = +-1 for the canonical class of a symplectic manifold");
}

// Runs the enumerator, records the canonical class on the model and re-verifies.
void attach_classes(StageRecord& s, unsigned workers, bool assume_simple_type) {
  swenum::BasicClassOptions opt;
  opt.workers = workers;
  opt.assume_simple_type = assume_simple_type;
  s.classes = swenum::basic_classes(*s.model, opt);
  if (s.classes->canonical) {
    s.model->canonical = s.classes->canonical;
    s.verification = fourfold::verify_model(*s.model);
  }
}

fpgroup::Renaming xk_copy_names(const fpgroup::Presentation& p) {
  static const std::map<std::string, std::string> table{{"a", "e"}, {"b", "f"}, {"x", "z"}, {"d", "s"}, {"y", "t"}};
  std::vector<std::string> names;
  for (const auto& g : p.generators) {
    auto it = table.find(g);
    names.push_back(it != table.end() ? it->second : g + "2");
  }
  return fpgroup::Renaming::explicit_names(names);
}

std::string spec_name(const knotforge::KnotSpec& k) { return knotforge::to_string(k); }

// Generators kept through simplification: the knot's, the circle x and the
// base circles d, y.
std::vector<std::string> kept_generators(const knotforge::KnotGroupModel& k) {
  auto keep = k.presentation.generators;
  for (const char* g : {"x", "d", "y"}) keep.emplace_back(g);
  return keep;
}

// The same names after renaming the second copy of a self-sum.
std::vector<std::string> kept_in_self_sum(const fpgroup::Presentation& w, const std::vector<std::string>& keep,
                                          const fpgroup::Renaming& rename) {
  std::vector<std::string> out = keep;
  const auto second = fpgroup::renamed_generators(w, rename);
  for (std::size_t i = 0; i < w.generators.size(); ++i)
    if (std::find(keep.begin(), keep.end(), w.generators[i]) != keep.end()) out.push_back(second[i]);
  return out;
}

}  // namespace

GluingSpec section_fiber_gluing(const knotforge::KnotGroupModel& k, const FourManifoldModel& surgery_side,
                                const FourManifoldModel& bundle_side, const std::string& name, const std::string& sigma,
                                bool section_first) {
  if (!k.fiber) throw Error(ErrorCode::MissingBundleData, k.name + " has no fiber data");
  const auto& xp = surgery_side.pi1;
  const auto& yp = bundle_side.pi1;
  const Word x = xp.word("x");
  const Word m = translate(k.presentation, k.meridian, xp);
  const Word l = translate(k.presentation, k.longitude, xp);
  const Word d = yp.word("d"), y = yp.word("y");
  const Word dy = fpgroup::commutator(d, y);

  GluingSpec g;
  g.name = name;
  g.identifications = {{x, yp.word("g1")}, {m, yp.word("g2")}};
  g.boundary_relation = std::pair{l, dy};
  g.complement_x = {l, {l}, true};
  g.complement_y = {dy, {dy}, true};
  g.rename_y = fpgroup::Renaming::keep();

  std::vector<Word> images;
  std::vector<Word> section{fourfold::merged_y_word(surgery_side, d), fourfold::merged_y_word(surgery_side, y)};
  if (section_first) images = section;
  for (const auto& w : k.fiber->fiber_words) images.push_back(translate(k.presentation, w, xp));
  if (!section_first) images.insert(images.end(), section.begin(), section.end());

  fourfold::PairMember torus{"T0", 1, false, std::nullopt, ""};
  fourfold::PairMember surface{sigma, 1 + k.fiber->genus, true, images, ""};
  g.new_hyperbolic_pairs = {{torus, surface}};
  g.assumptions.push_back("the dual torus T0 of " + sigma + " carries no pi1 images");
  return g;
}

GluingSpec self_sum_gluing(const FourManifoldModel& w, const std::string& sigma, const knotforge::KnotGroupModel& k,
                           const SelfSumParts& parts, const std::string& name) {
  const auto& s = w.surface(sigma);
  if (!s.images) throw Error(ErrorCode::MissingImages, sigma + " has no pi1 images");
  const auto& imgs = *s.images;
  if (parts.psi.size() != imgs.size() || parts.pairs.empty())
    throw Error(ErrorCode::InvalidGluing, "psi must permute the " + std::to_string(imgs.size()) + " images of " + sigma);
  const auto& p = w.pi1;
  const Word x = p.word("x");
  const Word m = translate(k.presentation, k.meridian, p);
  const Word meridian = fpgroup::commutator(x, m);

  std::vector<Word> death;
  auto add_if_present = [&](const Word& r) {
    const Word key = r.canonical_cyclic();
    const bool present = std::any_of(p.relators.begin(), p.relators.end(),
                                     [&](const Word& q) { return q.canonical_cyclic() == key; });
    const bool dup = std::any_of(death.begin(), death.end(), [&](const Word& q) { return q.canonical_cyclic() == key; });
    if (present && !dup) death.push_back(r);
  };
  for (const auto& gen : k.presentation.generators) add_if_present(fpgroup::commutator(x, p.word(gen)));
  add_if_present(meridian);

  GluingSpec g;
  g.name = name;
  for (std::size_t i = 0; i < imgs.size(); ++i) g.identifications.emplace_back(imgs[i], imgs[parts.psi[i]]);
  g.boundary_relation = std::pair{meridian, meridian};
  g.complement_x = {meridian, death, false};
  g.complement_y = g.complement_x;
  g.rename_y = parts.rename;
  g.new_hyperbolic_pairs = parts.pairs;
  g.new_hyperbolic_pairs[0].first.images = imgs;
  return g;
}

std::vector<std::size_t> xk_psi() { return {2, 3, 0, 1}; }

std::vector<std::size_t> vk_psi(std::int64_t g) {
  const auto n = static_cast<std::size_t>(2 * g + 2);
  std::vector<std::size_t> psi(n);
  for (std::size_t i = 0; i < n; ++i) psi[i] = i;
  std::swap(psi[0], psi[n - 2]);
  std::swap(psi[1], psi[n - 1]);
  return psi;
}

fourfold::MayerVietorisMap self_sum_mv(const FourManifoldModel& w, const std::string& sigma, const GluingSpec& glue,
                                       const std::vector<std::size_t>& psi) {
  const auto c1 = fourfold::surface_complement(w.pi1, glue.complement_x, "X");
  const auto c2 = fourfold::surface_complement(w.pi1, glue.complement_y, "Y");
  const auto& imgs = *w.surface(sigma).images;
  std::vector<Word> second;
  for (std::size_t i = 0; i < imgs.size(); ++i) second.push_back(imgs[psi[i]]);
  return fourfold::mayer_vietoris_map(c1, c2, glue.complement_x.meridian, glue.complement_y.meridian, imgs, second);
}

PipelineReport run_xk(const ScenarioConfig& config) {
  PipelineReport rep;
  rep.scenario = "XK";
  rep.knot = spec_name(config.knot);
  rep.genus = 1;
  rep.trace = config.trace;

  const auto k = knotforge::make_knot(config.knot);
  rep.stages.push_back(knot_stage("K", k, 1, true));
  gate(rep.stages.back());
  if (std::holds_alternative<knotforge::FigureEight>(config.knot))
    rep.assumptions.push_back(
        "figure-eight monodromy words are table data: conjugation by the meridian b on the fiber generators A b, B a b A");

  const auto mk = knotforge::zero_surgery(k);
  rep.stages.push_back(surgery_stage("M_K", mk));
  gate(rep.stages.back());

  const auto x1 = fourfold::product_with_circle(mk, fourfold::ProductForm::Surgery);
  rep.stages.push_back(model_stage("M_K x S1", x1, x1, product_rules()));
  gate(rep.stages.back());
  const auto x2 = fourfold::product_with_circle(mk, fourfold::ProductForm::Bundle);
  rep.stages.push_back(model_stage("M_K x S1 (bundle form)", x2, x2, product_rules()));
  gate(rep.stages.back());

  const auto g1 = section_fiber_gluing(k, x1, x2, "Y_K", "Sigma2", false);
  const auto y_raw = fourfold::fiber_sum(x1, "T_m", x2, "F", g1);
  const auto keep = kept_generators(k);
  const auto y = fourfold::simplify_pi1(y_raw, 1000, keep);
  rep.stages.push_back(model_stage("Y_K", y_raw, y, sum_rules()));
  rep.stages.back().sum = SumInputs{x1, x2, {"T_m", "F", g1, keep}};
  gate(rep.stages.back());

  SelfSumParts parts;
  parts.psi = xk_psi();
  parts.rename = xk_copy_names(y.pi1);
  parts.pairs = {{{"S", 2, true, std::nullopt, ""}, {"T", 2, true, std::nullopt, ""}}};
  const auto g2 = self_sum_gluing(y, "Sigma2", k, parts, "X_K");
  const auto x_raw = fourfold::fiber_sum(y, "Sigma2", y, "Sigma2", g2);
  auto xk = fourfold::simplify_pi1(x_raw, 1000, kept_in_self_sum(y.pi1, keep, parts.rename));
  xk.assumptions.push_back("simple type taken as stated for X_K although b2+ = 1");
  rep.stages.push_back(model_stage("X_K", x_raw, xk, sum_rules()));
  auto& last = rep.stages.back();
  last.sum = SumInputs{y, y, {"Sigma2", "Sigma2", g2, kept_in_self_sum(y.pi1, keep, parts.rename)}};
  const auto mv = self_sum_mv(y, "Sigma2", g2, parts.psi);
  if (config.trace) last.mv_map = mv;
  const auto mv_h1 = fourfold::mv_h1_cokernel(mv.matrix);
  attach_classes(last, config.workers, true);
  final_checks(last, 1, mv_h1);
  class_checks(last, *last.model, *last.classes);
  if (last.classes->canonical) {
    const auto d = swenum::sw_dimension(*last.classes->canonical, xk.euler, xk.signature, xk.form);
    const bool ok = d.integral && d.value == 0 && swenum::wall_crossing_delta(0) == -1;
    last.checks.push_back({"wall_crossing_at_canonical", ok, "dimension " + d.value.get_str() + ", delta -1"});
    last.checks.push_back({"sw0_well_defined", last.classes->chamber.sw_zero_well_defined,
                           "b1 = 0, b2+ = 1, b2- <= 9"});
    last.rules.push_back("wall crossing for b2+ = 1: SW+ - SW- = -(-1)^m in dimension 2m");
    last.rules.push_back("SW0 is well defined when b1 = 0, b2+ = 1 and b2- <= 9");
  }
  gate(last);
  rep.assumptions.insert(rep.assumptions.end(), xk.assumptions.begin(), xk.assumptions.end());
  return rep;
}

PipelineReport run_vk(const ScenarioConfig& config) {
  PipelineReport rep;
  rep.scenario = "VK";
  rep.knot = spec_name(config.knot);
  rep.trace = config.trace;

  std::int64_t g = config.genus.value_or(2);
  knotforge::KnotSpec second = knotforge::TorusKnot{2, 2 * g + 1};
  if (config.second_knot) {
    second = *config.second_knot;
    const auto probe = knotforge::make_knot(second);
    const std::int64_t kg = probe.genus.value_or(0);
    if (kg < 2)
      throw Error(ErrorCode::PreconditionFailed,
                  probe.name + " has genus " + (probe.genus ? int_str(kg) : "unknown") + "; VK requires g >= 2");
    if (config.genus && *config.genus != kg)
      throw Error(ErrorCode::PreconditionFailed,
                  "--g " + int_str(*config.genus) + " does not match the genus " + int_str(kg) + " of " + probe.name);
    g = kg;
  }
  if (g < 2) throw Error(ErrorCode::PreconditionFailed, "VK requires g >= 2, got " + int_str(g));
  rep.genus = g;
  rep.second_knot = spec_name(second);

  const auto k = knotforge::make_knot(config.knot);
  rep.stages.push_back(knot_stage("K", k, 1, true));
  gate(rep.stages.back());
  const auto k2 = knotforge::make_knot(second);
  rep.stages.push_back(knot_stage("K'", k2, g, false));
  gate(rep.stages.back());

  const auto mk = knotforge::zero_surgery(k);
  rep.stages.push_back(surgery_stage("M_K", mk));
  gate(rep.stages.back());
  const auto zk = knotforge::zero_surgery(k2);
  rep.stages.push_back(surgery_stage("Z_K'", zk));
  gate(rep.stages.back());

  const auto x1 = fourfold::product_with_circle(zk, fourfold::ProductForm::Surgery);
  rep.stages.push_back(model_stage("Z_K' x S1", x1, x1, product_rules()));
  gate(rep.stages.back());
  const auto x2 = fourfold::product_with_circle(mk, fourfold::ProductForm::Bundle);
  rep.stages.push_back(model_stage("M_K x S1 (bundle form)", x2, x2, product_rules()));
  gate(rep.stages.back());

  const std::string sigma = "Sigma_" + int_str(g + 1);
  const auto gw = section_fiber_gluing(k2, x1, x2, "W_K'", sigma, true);
  const auto w_raw = fourfold::fiber_sum(x1, "T_m", x2, "F", gw);
  const auto keep = kept_generators(k2);
  const auto w = fourfold::simplify_pi1(w_raw, 1000, keep);
  rep.stages.push_back(model_stage("W_K'", w_raw, w, sum_rules()));
  rep.stages.back().sum = SumInputs{x1, x2, {"T_m", "F", gw, keep}};
  gate(rep.stages.back());

  SelfSumParts parts;
  parts.psi = vk_psi(g);
  parts.rename = {fpgroup::Renaming::Mode::Suffix, "2", {}};
  parts.pairs.push_back({{"S", g + 1, true, std::nullopt, ""}, {"Sigma", 2, true, std::nullopt, ""}});
  for (std::int64_t i = 1; i <= 2 * g - 2; ++i)
    parts.pairs.push_back({{"R" + int_str(i), 1, false, std::nullopt, "rim tori"},
                           {"V" + int_str(i), std::nullopt, false, std::nullopt, "vanishing classes"}});
  const auto gv = self_sum_gluing(w, sigma, k2, parts, "V_K'");
  const auto v_raw = fourfold::fiber_sum(w, sigma, w, sigma, gv);
  auto v = fourfold::simplify_pi1(v_raw, 1000, kept_in_self_sum(w.pi1, keep, parts.rename));
  v.assumptions.push_back("rim tori and vanishing classes are tracked in homology only");
  rep.stages.push_back(model_stage("V_K'", v_raw, v, sum_rules()));
  auto& last = rep.stages.back();
  last.sum = SumInputs{w, w, {sigma, sigma, gv, kept_in_self_sum(w.pi1, keep, parts.rename)}};
  const auto mv = self_sum_mv(w, sigma, gv, parts.psi);
  if (config.trace) last.mv_map = mv;
  attach_classes(last, config.workers, false);
  final_checks(last, g, fourfold::mv_h1_cokernel(mv.matrix));
  class_checks(last, *last.model, *last.classes);

  const auto nw = fourfold::char_numbers(w), nv = fourfold::char_numbers(v);
  last.checks.push_back({"c1sq_doubling", nv.c1sq == 2 * nw.c1sq + 8 * g,
                         int_str(nv.c1sq) + " = 2 * " + int_str(nw.c1sq) + " + " + int_str(8 * g)});
  last.checks.push_back({"chi_h_doubling", nv.chi_h == 2 * nw.chi_h + g,
                         nv.chi_h.get_str() + " = 2 * " + nw.chi_h.get_str() + " + " + int_str(g)});

  // Rim tori force the vanishing-class coefficients to zero, then the
  // vanishing classes force the rim-torus coefficients to zero.
  const auto& trace = last.classes->trace;
  auto labels = [&](const std::string& prefix) {
    std::vector<std::string> out;
    for (std::int64_t i = 1; i <= 2 * g - 2; ++i) out.push_back(prefix + int_str(i));
    return out;
  };
  const bool traced = trace.size() == 2 && trace[0].group == "rim tori" && trace[0].forced_zero == labels("V") &&
                      trace[1].group == "vanishing classes" && trace[1].forced_zero == labels("R") &&
                      trace[1].kernel_rank == 2;
  last.checks.push_back({"elimination_trace", traced, "rim tori force v = 0, then vanishing classes force u = 0"});
  last.rules.push_back("rim tori and vanishing classes pair to zero with every basic class");
  last.rules.push_back("symplectic with b2+ > 1 implies simple type");
  gate(last);
  rep.assumptions.insert(rep.assumptions.end(), v.assumptions.begin(), v.assumptions.end());
  return rep;
}

PipelineReport run(const ScenarioConfig& config) {
  return config.scenario == Scenario::XK ? run_xk(config) : run_vk(config);
}

}  // namespace flab::scenarios
