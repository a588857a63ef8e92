// fourfold-lab: command-line front end for the knot, four-manifold and
// basic-class tools.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "flab/error.hpp"
#include "flab/fourfold/serialize.hpp"
#include "flab/knotforge/serialize.hpp"
#include "flab/scenarios/config.hpp"
#include "flab/scenarios/report.hpp"
#include "flab/swenum/serialize.hpp"

namespace {

using namespace flab;
using fpgroup::json;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_json(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
  if (!out) throw Error(ErrorCode::IoError, "failed writing " + path);
}

std::string slug(const std::string& name) {
  std::string s;
  for (char c : name) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return s;
}

void export_stages(const scenarios::PipelineReport& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i < r.stages.size(); ++i) {
    const auto& s = r.stages[i];
    const std::string base = dir + "/" + slug(s.name);
    if (s.model) write_json(fourfold::to_json(*s.model), base + ".model.json");
    if (s.sum) {
      write_json(fourfold::to_json(s.sum->x), base + ".x.json");
      write_json(fourfold::to_json(s.sum->y), base + ".y.json");
      write_json(fourfold::to_json(s.sum->gluing, s.sum->x, s.sum->y), base + ".glue.json");
    }
  }
}

struct ScenarioArgs {
  std::string scenario, knot, knot2, json_path, config, export_dir;
  std::int64_t genus = 0;
  unsigned workers = 1;
  bool trace = false;
  CLI::Option *scenario_opt, *knot_opt, *genus_opt, *knot2_opt, *json_opt, *trace_opt, *workers_opt;
};

int run_scenario(const ScenarioArgs& a) {
  scenarios::ScenarioConfig c;
  if (!a.config.empty()) c = scenarios::load_scenario_config(a.config);
  else if (!a.scenario_opt->count()) throw Error(ErrorCode::ParseError, "give a scenario (xk or vk) or --config");
  // Flags given on the command line override the file.
  if (a.scenario_opt->count()) c.scenario = scenarios::parse_scenario(a.scenario);
  if (a.knot_opt->count()) c.knot = knotforge::parse_knot_spec(a.knot);
  if (a.genus_opt->count()) c.genus = a.genus;
  if (a.knot2_opt->count()) c.second_knot = knotforge::parse_knot_spec(a.knot2);
  if (a.json_opt->count()) {
    c.json = true;
    c.output = a.json_path;
  }
  if (a.trace_opt->count()) c.trace = true;
  if (a.workers_opt->count()) c.workers = a.workers;

  const auto report = scenarios::run(c);
  if (!a.export_dir.empty()) export_stages(report, a.export_dir);
  const bool json_to_stdout = c.json && (c.output.empty() || c.output == "-");
  if (c.json && !json_to_stdout) scenarios::write_report(report, scenarios::ReportFormat::Json, c.output);
  scenarios::emit_report(report, json_to_stdout ? scenarios::ReportFormat::Json : scenarios::ReportFormat::Text,
                         std::cout);
  return report.passed() ? 0 : 1;
}

int run_knot(const std::string& spec, bool alexander, bool surgery, bool as_json) {
  const auto k = knotforge::make_knot(knotforge::parse_knot_spec(spec));
  const auto screen = knotforge::fiberedness_screen(k);
  if (as_json) {
    json j;
    j["knot"] = knotforge::to_json(k);
    j["fiberedness"] = knotforge::to_json(screen);
    if (surgery) j["zero_surgery"] = knotforge::to_json(knotforge::zero_surgery(k));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  const auto& p = k.presentation;
  std::cout << k.name << "\n  generators:";
  for (const auto& g : p.generators) std::cout << " " << g;
  std::cout << "\n";
  for (const auto& r : p.relators) std::cout << "  relator: " << p.format(r) << "\n";
  std::cout << "  meridian: " << p.format(k.meridian) << "\n  longitude: " << p.format(k.longitude) << "\n";
  std::cout << "  genus: " << (k.genus ? std::to_string(*k.genus) : "unknown") << "\n";
  std::cout << "  fibered: " << knotforge::to_string(screen.verdict) << "\n";
  if (alexander)
    std::cout << "  Alexander polynomial: " << screen.alexander.to_string() << (screen.monic ? " (monic)" : " (not monic)")
              << "\n";
  if (surgery) {
    const auto m = knotforge::zero_surgery(k);
    std::cout << "  0-surgery H1: " << m.h1.to_string() << "\n";
    std::cout << "  0-surgery fibers: " << (m.bundle ? "yes, fiber genus " + std::to_string(m.bundle->fiber_genus) : "unknown")
              << "\n";
  }
  return 0;
}

int run_swclasses(const std::string& path, bool oracle, std::int64_t box, unsigned workers, bool simple_type) {
  const auto m = fourfold::model_from_json(read_json(path));
  swenum::BasicClassOptions opt;
  opt.workers = workers;
  opt.assume_simple_type = simple_type;
  const auto r = swenum::basic_classes(m, opt);
  json j = swenum::to_json(r);
  bool ok = true;
  if (oracle) {
    const auto c = swenum::constraints_from_model(m, r.simple_type);
    const auto brute = swenum::brute_force_candidates(m.form, c, box);
    json b = json::array();
    for (const auto& v : brute) b.push_back(swenum::format_class(v, m.basis));
    ok = brute == r.candidates;
    j["oracle"] = {{"box", box}, {"candidates", b}, {"agrees", ok}};
  }
  std::cout << j.dump(2) << "\n";
  return ok ? 0 : 1;
}

int run_fibersum(const std::string& xp, const std::string& yp, const std::string& gp, bool simplify,
                 const std::string& out) {
  const auto x = fourfold::model_from_json(read_json(xp));
  const auto y = fourfold::model_from_json(read_json(yp));
  const auto g = fourfold::gluing_from_json(read_json(gp), x, y);
  auto m = fourfold::fiber_sum(x, g.sx, y, g.sy, g.spec);
  if (simplify) m = fourfold::simplify_pi1(m, 1000, g.keep);
  const auto v = fourfold::verify_model(m);
  json j;
  j["model"] = fourfold::to_json(m);
  j["verification"] = fourfold::to_json(v);
  write_json(j, out);
  return v.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot groups, fiber sums of four-manifolds and Seiberg-Witten basic-class candidates"};
  app.require_subcommand(1);

  ScenarioArgs sa;
  auto* sc = app.add_subcommand("scenario", "Run the xk or vk construction end to end");
  sa.scenario_opt = sc->add_option("scenario", sa.scenario, "xk or vk");
  sa.knot_opt = sc->add_option("--knot", sa.knot, "genus-one fibered knot: trefoil or figure8");
  sa.genus_opt = sc->add_option("--g", sa.genus, "vk: genus of K'");
  sa.knot2_opt = sc->add_option("--knot2", sa.knot2, "vk: the genus g fibered knot K', e.g. torus:2,5");
  sa.json_opt = sc->add_option("--json", sa.json_path, "write the JSON report to PATH (stdout without PATH)")
                    ->expected(0, 1);
  sa.trace_opt = sc->add_flag("--trace", sa.trace, "include intermediate matrices");
  sa.workers_opt = sc->add_option("--workers", sa.workers, "enumeration threads")->check(CLI::Range(1, 256));
  sc->add_option("--config", sa.config, "scenario file; command-line flags override its values");
  sc->add_option("--export", sa.export_dir, "write each stage's model and gluing files to DIR");

  std::string spec;
  bool alexander = false, surgery = false, knot_json = false;
  auto* kn = app.add_subcommand("knot", "Describe a knot group");
  kn->add_option("--spec", spec, "trefoil, figure8, torus:p,q or twist:n")->required();
  kn->add_flag("--alexander", alexander, "print the Alexander polynomial");
  kn->add_flag("--surgery", surgery, "describe the 0-surgery");
  kn->add_flag("--json", knot_json, "emit JSON");

  std::string model_path;
  bool oracle = false, simple = false;
  std::int64_t box = 10;
  unsigned sw_workers = 1;
  auto* sw = app.add_subcommand("swclasses", "Enumerate basic-class candidates of a model file");
  sw->add_option("model", model_path, "model JSON")->required();
  sw->add_flag("--oracle", oracle, "also scan the box |v_i| <= BOX and compare");
  sw->add_option("--box", box, "oracle box half-width")->check(CLI::Range(0, 1000));
  sw->add_option("--workers", sw_workers, "enumeration threads")->check(CLI::Range(1, 256));
  sw->add_flag("--simple-type", simple, "treat the model as simple type");

  std::string xp, yp, gp, fs_out;
  bool simplify = false;
  auto* fs = app.add_subcommand("fibersum", "Fiber sum of two model files");
  fs->add_option("x", xp, "first model JSON")->required();
  fs->add_option("y", yp, "second model JSON")->required();
  fs->add_option("glue", gp, "gluing JSON")->required();
  fs->add_flag("--simplify", simplify, "Tietze-simplify the result");
  fs->add_option("--json", fs_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sc->parsed()) return run_scenario(sa);
    if (kn->parsed()) return run_knot(spec, alexander, surgery, knot_json);
    if (sw->parsed()) return run_swclasses(model_path, oracle, box, sw_workers, simple);
    if (fs->parsed()) return run_fibersum(xp, yp, gp, simplify, fs_out);
  } catch (const flab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
