#include "flab/scenarios/report.hpp"

#include <fstream>
#include <sstream>

#include "flab/error.hpp"
#include "flab/fourfold/serialize.hpp"
#include "flab/knotforge/serialize.hpp"
#include "flab/swenum/serialize.hpp"

namespace flab::scenarios {

namespace {

json checks_json(const std::vector<fourfold::Check>& checks) {
  json a = json::array();
  for (const auto& c : checks) a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return a;
}

json stage_json(const StageRecord& s) {
  json j;
  j["name"] = s.name;
  j["kind"] = s.kind;
  j["passed"] = s.passed();
  j["presentation"] = s.presentation ? fpgroup::to_json(*s.presentation) : json(nullptr);
  j["simplified"] = s.simplified ? fpgroup::to_json(*s.simplified) : json(nullptr);
  j["h1"] = s.h1 ? fpgroup::to_json(*s.h1) : json(nullptr);
  if (s.screen) j["fiberedness"] = knotforge::to_json(*s.screen);
  if (s.model) {
    const auto n = fourfold::char_numbers(*s.model);
    j["numbers"] = {{"euler", s.model->euler},
                    {"signature", s.model->signature},
                    {"b1", s.model->b1},
                    {"c1sq", n.c1sq},
                    {"chi_h", n.chi_h.get_str()}};
    if (s.verification) j["form"] = form_summary(*s.model, *s.verification);
    j["model"] = fourfold::to_json(*s.model);
  }
  if (s.verification) j["verification"] = fourfold::to_json(*s.verification);
  j["checks"] = checks_json(s.checks);
  j["rules"] = s.rules;
  if (s.classes) {
    j["basic_classes"] = swenum::to_json(*s.classes);
    j["basic_class_summary"] = basic_class_summary(*s.classes);
  }
  if (s.mv_map)
    j["mayer_vietoris"] = {{"rows", s.mv_map->row_labels},
                           {"columns", s.mv_map->column_labels},
                           {"matrix", fpgroup::to_json(s.mv_map->matrix)}};
  return j;
}

std::string presentation_line(const fpgroup::Presentation& p) {
  std::string s = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) s += (i ? ", " : "") + p.generators[i];
  s += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) s += (i ? ", " : "") + p.format(p.relators[i]);
  s += ">";
  if (!p.shadows.empty()) s += " + " + std::to_string(p.shadows.size()) + " hidden families";
  return s;
}

}  // namespace

std::string basic_class_summary(const swenum::BasicClassReport& r) {
  if (r.canonical && r.candidates.size() == 2) {
    fpgroup::IntVector neg(r.canonical->size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -(*r.canonical)[i];
    if ((r.candidates[0] == neg && r.candidates[1] == *r.canonical) ||
        (r.candidates[1] == neg && r.candidates[0] == *r.canonical))
      return "±(" + swenum::format_class(*r.canonical, r.basis) + ")";
  }
  std::string s = "{";
  for (std::size_t i = 0; i < r.candidates.size(); ++i)
    s += (i ? ", " : "") + swenum::format_class(r.candidates[i], r.basis);
  return s + "}";
}

std::string form_summary(const fourfold::FourManifoldModel& m, const fourfold::VerificationReport& v) {
  const auto* uni = v.find("unimodular");
  const std::size_t n = m.form.rows();
  if (v.even && uni && uni->passed && v.inertia.zero == 0 && v.inertia.signature() == 0 && n > 0 && n % 2 == 0)
    return n == 2 ? "H" : std::to_string(n / 2) + "H";
  return "rank " + std::to_string(v.inertia.rank()) + ", signature " + std::to_string(v.inertia.signature());
}

json report_json(const PipelineReport& r) {
  json j;
  j["schema"] = kReportSchema;
  j["scenario"] = r.scenario;
  j["knot"] = r.knot;
  j["second_knot"] = r.second_knot.empty() ? json(nullptr) : json(r.second_knot);
  j["genus"] = r.genus;
  j["passed"] = r.passed();
  json stages = json::array();
  for (const auto& s : r.stages) stages.push_back(stage_json(s));
  j["stages"] = stages;
  j["assumptions"] = r.assumptions;
  return j;
}

std::string report_text(const PipelineReport& r) {
  std::ostringstream out;
  out << "scenario " << r.scenario << ", knot " << r.knot;
  if (!r.second_knot.empty()) out << ", K' " << r.second_knot << " (g = " << r.genus << ")";
  out << "\n";
  for (const auto& s : r.stages) {
    out << "\n[" << s.name << "] " << s.kind << (s.passed() ? "" : "  FAILED") << "\n";
    if (s.presentation && s.simplified && s.presentation->generators != s.simplified->generators)
      out << "  pi1 before simplification: " << s.presentation->generator_count() << " generators, "
          << s.presentation->relators.size() << " relators\n";
    if (s.simplified)
      out << "  pi1: " << presentation_line(*s.simplified) << "\n";
    else if (s.presentation)
      out << "  pi1: " << presentation_line(*s.presentation) << "\n";
    if (s.screen)
      out << "  Alexander polynomial: " << s.screen->alexander.to_string() << " (" << (s.screen->monic ? "monic" : "not monic")
          << ", " << knotforge::to_string(s.screen->verdict) << ")\n";
    if (s.h1) out << "  H1: " << s.h1->to_string() << "\n";
    if (s.model) {
      const auto n = fourfold::char_numbers(*s.model);
      out << "  e = " << s.model->euler << ", sigma = " << s.model->signature << ", b1 = " << s.model->b1
          << ", c1^2 = " << n.c1sq << ", chi_h = " << n.chi_h.get_str() << "\n";
      std::string basis;
      for (const auto& b : s.model->basis) basis += (basis.empty() ? "" : ", ") + b;
      if (s.verification)
        out << "  form: " << form_summary(*s.model, *s.verification) << " on (" << basis << "), b2+ = "
            << s.verification->inertia.positive << ", b2- = " << s.verification->inertia.negative
            << (s.verification->even ? ", even" : ", odd") << (s.verification->spin ? ", spin" : "") << "\n";
      if (r.trace) out << "  form matrix: " << s.model->form.to_string() << "\n";
    }
    if (s.classes) {
      out << "  basic classes: " << basic_class_summary(*s.classes) << "\n";
      for (const auto& e : s.classes->trace) {
        out << "  eliminate " << e.group << ": kernel rank " << e.kernel_rank;
        if (!e.forced_zero.empty()) {
          out << ", forces ";
          for (std::size_t i = 0; i < e.forced_zero.size(); ++i) out << (i ? " = " : "") << e.forced_zero[i];
          out << " = 0";
        }
        out << "\n";
      }
      for (const auto& v : s.classes->sw_values)
        out << "  SW(" << swenum::format_class(v.cls, s.classes->basis) << ") = " << v.value
            << (v.chamber.empty() ? "" : " [" + v.chamber + "]") << "\n";
      for (const auto& w : s.classes->warnings) out << "  warning: " << w << "\n";
    }
    if (s.mv_map) {
      out << "  Mayer-Vietoris map (rows";
      for (const auto& l : s.mv_map->row_labels) out << " " << l;
      out << "; columns";
      for (const auto& l : s.mv_map->column_labels) out << " " << l;
      out << "): " << s.mv_map->matrix.to_string() << "\n";
    }
    if (s.verification)
      for (const auto& c : s.verification->checks)
        out << "  check " << c.name << ": " << (c.passed ? "ok" : "FAILED") << " (" << c.detail << ")\n";
    for (const auto& c : s.checks)
      out << "  check " << c.name << ": " << (c.passed ? "ok" : "FAILED") << " (" << c.detail << ")\n";
    for (const auto& rule : s.rules) out << "  rule: " << rule << "\n";
  }
  if (!r.assumptions.empty()) {
    out << "\nassumptions:\n";
    for (const auto& a : r.assumptions) out << "  - " << a << "\n";
  }
  out << "\n";
  if (!r.stages.empty() && r.stages.back().model && r.stages.back().verification) {
    const auto& last = r.stages.back();
    const auto n = fourfold::char_numbers(*last.model);
    out << last.name << ": e = " << last.model->euler << ", sigma = " << last.model->signature << ", c1^2 = " << n.c1sq
        << ", chi_h = " << n.chi_h.get_str() << ", H1 = " << (last.h1 ? last.h1->to_string() : "?")
        << ", form " << form_summary(*last.model, *last.verification) << "\n";
    if (last.classes) out << "basic classes: " << basic_class_summary(*last.classes) << "\n";
  }
  out << "result: " << (r.passed() ? "all checks passed" : "some checks failed") << "\n";
  return out.str();
}

void emit_report(const PipelineReport& r, ReportFormat format, std::ostream& out) {
  if (format == ReportFormat::Json)
    out << report_json(r).dump(2) << "\n";
  else
    out << report_text(r);
}

void write_report(const PipelineReport& r, ReportFormat format, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  emit_report(r, format, f);
  f.flush();
  if (!f) throw Error(ErrorCode::IoError, "failed writing " + path);
}

}  // namespace flab::scenarios
