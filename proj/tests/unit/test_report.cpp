#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "flab/error.hpp"
#include "flab/fpgroup/abelian.hpp"
#include "flab/scenarios/report.hpp"

using namespace flab;
using namespace flab::scenarios;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string as_json_text(const PipelineReport& r) {
  std::ostringstream out;
  emit_report(r, ReportFormat::Json, out);
  return out.str();
}

ScenarioConfig trefoil_xk() { return {}; }

}  // namespace

TEST_CASE("XK trefoil report matches the golden file byte for byte") {
  auto text = as_json_text(run(trefoil_xk()));
  CHECK(text == slurp(std::string(FLAB_GOLDEN_DIR) + "/xk_trefoil.json"));
}

TEST_CASE("traced Mayer-Vietoris matrix matches the golden file") {
  auto c = trefoil_xk();
  c.trace = true;
  auto r = run(c);
  const auto* s = r.stage("X_K");
  REQUIRE(s->mv_map);
  // The frozen matrix must present the same H1 as the group.
  auto golden = json::parse(slurp(std::string(FLAB_GOLDEN_DIR) + "/xk_trefoil_mv.json"));
  auto m = fpgroup::matrix_from_json(golden["matrix"]);
  CHECK(fourfold::mv_h1_cokernel(m) == fpgroup::abelianize(s->model->pi1));
  CHECK(report_json(r)["stages"].back()["mayer_vietoris"] == golden);
  CHECK(report_text(r).find("Mayer-Vietoris") != std::string::npos);
}

TEST_CASE("reports are deterministic across runs and worker counts") {
  const auto first = as_json_text(run(trefoil_xk()));
  for (unsigned w : {1u, 2u, 4u}) {
    auto c = trefoil_xk();
    c.workers = w;
    CHECK(as_json_text(run(c)) == first);
  }
  ScenarioConfig v;
  v.scenario = Scenario::VK;
  v.genus = 3;
  const auto vfirst = as_json_text(run(v));
  v.workers = 3;
  CHECK(as_json_text(run(v)) == vfirst);
  CHECK(as_json_text(run(v)) == vfirst);
}

TEST_CASE("empty report") {
  PipelineReport r;
  auto text = as_json_text(r);
  auto j = json::parse(text);
  CHECK(j["stages"].is_array());
  CHECK(j["stages"].empty());
  CHECK(j["schema"] == kReportSchema);
  CHECK_NOTHROW(report_text(r));
  CHECK_THROWS_AS(r.final_model(), Error);
}

TEST_CASE("text report") {
  auto r = run(trefoil_xk());
  auto text = report_text(r);
  CHECK(text.find("\nbasic classes: ±(2S+2T)\n") != std::string::npos);
  CHECK(text.find("[X_K] 4-manifold") != std::string::npos);
  CHECK(text.find("FAILED") == std::string::npos);

  ScenarioConfig v;
  v.scenario = Scenario::VK;
  v.genus = 2;
  auto vt = report_text(run(v));
  CHECK(vt.find("basic classes: ±(2S+4Sigma)") != std::string::npos);
  CHECK(vt.find("form: 3H") != std::string::npos);
}

TEST_CASE("writing reports") {
  auto dir = std::filesystem::temp_directory_path() / "flab_report_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / "r.json").string();
  auto r = run(trefoil_xk());
  write_report(r, ReportFormat::Json, path);
  CHECK(slurp(path) == as_json_text(r));
  CHECK_THROWS_AS(write_report(r, ReportFormat::Json, (dir / "missing" / "r.json").string()), Error);
  std::filesystem::remove_all(dir);
}
