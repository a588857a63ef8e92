#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flab/fourfold/fiber_sum.hpp"
#include "flab/fourfold/mayer_vietoris.hpp"
#include "flab/fourfold/serialize.hpp"
#include "flab/fourfold/verify.hpp"
#include "flab/knotforge/surgery.hpp"
#include "flab/swenum/chamber.hpp"

namespace flab::scenarios {

enum class Scenario { XK, VK };

struct ScenarioConfig {
  Scenario scenario = Scenario::XK;
  /// The genus-one fibered knot (both scenarios).
  knotforge::KnotSpec knot = knotforge::Trefoil{};
  /// VK only: genus of K'. Taken from K' when only K' is given; K' defaults
  /// to torus(2, 2g+1); g = 2 when neither is given.
  std::optional<std::int64_t> genus;
  std::optional<knotforge::KnotSpec> second_knot;
  std::string output;  // report path; empty for stdout
  bool json = false;
  bool trace = false;
  unsigned workers = 1;
};

/// The inputs of a fiber-sum stage, enough to redo it with `fibersum`.
struct SumInputs {
  fourfold::FourManifoldModel x, y;
  fourfold::GluingFile gluing;
};

struct StageRecord {
  std::string name;
  std::string kind;  // "knot", "3-manifold" or "4-manifold"
  std::optional<fpgroup::Presentation> presentation;  // before simplification
  std::optional<fpgroup::Presentation> simplified;
  std::optional<fpgroup::AbelianGroupStructure> h1;
  std::optional<knotforge::FiberednessScreen> screen;
  std::optional<fourfold::FourManifoldModel> model;
  std::optional<fourfold::VerificationReport> verification;
  std::optional<swenum::BasicClassReport> classes;
  /// Checks made by the pipeline on top of verify_model.
  std::vector<fourfold::Check> checks;
  /// The rules of inference the stage relies on, one line each.
  std::vector<std::string> rules;
  /// Intermediate matrices, filled only when tracing.
  std::optional<fourfold::MayerVietorisMap> mv_map;
  std::optional<SumInputs> sum;

  bool passed() const;
};

struct PipelineReport {
  std::string scenario;
  std::string knot, second_knot;
  std::int64_t genus = 0;
  bool trace = false;
  std::vector<StageRecord> stages;
  std::vector<std::string> assumptions;

  bool passed() const;
  const StageRecord* stage(const std::string& name) const;
  const fourfold::FourManifoldModel& final_model() const;  // throws PreconditionFailed if none
};

/// Gluing of (K x S1 surgery form along T_m) with (genus-one bundle along F):
/// x = g1, meridian = g2, longitude = [d, y]. The new genus (1 + g(K)) surface
/// `sigma` is the punctured fiber of K summed with the section (d, y); its
/// images list the fiber words then d, y, or d, y first when `section_first`.
fourfold::GluingSpec section_fiber_gluing(const knotforge::KnotGroupModel& k, const fourfold::FourManifoldModel& surgery_side,
                                          const fourfold::FourManifoldModel& bundle_side, const std::string& name,
                                          const std::string& sigma, bool section_first);

/// Self-gluing W #_psi W along `sigma`, pairing image i of the first copy with
/// image psi[i] of the second. `meridian` is the commutator [x, m] of the
/// surviving circle x with the knot meridian m; death relators are the
/// relators [gen, x] of the knot generators (and [x, m] itself when present).
struct SelfSumParts {
  std::vector<std::size_t> psi;
  fpgroup::Renaming rename;
  std::vector<fourfold::HyperbolicPair> pairs;  // images of the first copy's sigma are attached to pairs[0].first
};
fourfold::GluingSpec self_sum_gluing(const fourfold::FourManifoldModel& w, const std::string& sigma,
                                     const knotforge::KnotGroupModel& k, const SelfSumParts& parts,
                                     const std::string& name);

/// psi for X_K: swaps the fiber pair and the section pair of Sigma_2.
std::vector<std::size_t> xk_psi();
/// psi for V: swaps (alpha_1, beta_1) with (alpha_{g+1}, beta_{g+1}).
std::vector<std::size_t> vk_psi(std::int64_t g);

/// H1 of the self-sum by Mayer-Vietoris, for cross-checking the group.
fourfold::MayerVietorisMap self_sum_mv(const fourfold::FourManifoldModel& w, const std::string& sigma,
                                       const fourfold::GluingSpec& glue, const std::vector<std::size_t>& psi);

PipelineReport run_xk(const ScenarioConfig& config);
PipelineReport run_vk(const ScenarioConfig& config);
PipelineReport run(const ScenarioConfig& config);

}  // namespace flab::scenarios
