// Copyright 2026 The framelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "framelab/density.hpp"
#include "framelab/gram.hpp"
#include "framelab/kernels.hpp"
#include "framelab/localization.hpp"
#include "framelab/measure.hpp"
#include "framelab/quad.hpp"

namespace framelab::verify {

/// Outcomes are evidence at finite scale, never proofs.
enum class Verdict {
  kPass,
  kVacuousConsistent,
  kHypothesesUnmet,
  kCriticalNoClaim,
  kContradiction,
  kFail,
};

std::string to_string(Verdict v);

struct SetSpec {
  std::string label;
  MeasureSpec measure;
};

struct ScenarioConfig {
  std::string scenario;  // finite-oracle | paley-wiener | fock | gabor | dual-embedding
  std::string name;      // report file stem
  std::optional<kernels::KernelSpec> kernel;
  std::vector<SetSpec> sets;

  double r_max = 128.0;
  std::vector<double> density_radii;  // empty: geometric up to r_max
  double density_tol = 0.05;

  std::vector<double> loc_radii = {4.0, 8.0, 16.0};
  std::vector<Point> loc_centers;  // empty: origin
  std::optional<QuadConfig> quad;  // empty: chosen per kernel
  double hap_radius = 2.0;

  GramStudyConfig gram;

  std::size_t instances = 100;
  std::size_t max_dim = 8;
  std::size_t max_size = 16;
  double identity_tol = 1e-10;

  std::size_t isometry_terms = 4;
  std::int64_t isometry_samples = 1'000'000;

  std::uint64_t seed = 7;
  std::filesystem::path out_dir = ".";
  /// Canonical JSON echo of the parsed inputs (output paths excluded).
  std::string inputs_json = "{}";
};

struct TheoremRow {
  Point center;
  double r = 0.0;
  double mu_b = 0.0;
  double nu_b = 0.0;
  double a = 0.0;           // (1/mu(B)) |\int_B <P_G dual(f_y), f_y> dmu|
  double b = 0.0;           // nu(B) / mu(B)
  double c = 0.0;           // epsilon_effective
  double c_required = 0.0;  // smallest C making the row hold
  double defect = 0.0;
  bool holds = false;       // A <= B + C (1 + nu(B)/mu(B)) + tol
};

/// Rows of the main inequality chain for a self-dual Parseval pair.
std::vector<TheoremRow> theorem_main_table(const localization::FramePairSpec& pair,
                                           const std::vector<localization::LocalizationRow>& loc,
                                           double tol = 1e-9);
std::vector<TheoremRow> theorem_main_table(const localization::FramePairSpec& pair,
                                           const std::vector<Point>& centers,
                                           const std::vector<double>& radii,
                                           double tol = 1e-9);

struct ParsevalDensityCheck {
  density::DensityEstimate mu_wrt_nu;  // D_nu(mu)
  density::DensityEstimate nu_wrt_mu;  // D_mu(nu)
  double max_deviation = 0.0;
  Verdict verdict = Verdict::kFail;
};

/// All four densities of a pair of Parseval families within tol of 1.
ParsevalDensityCheck corollary_parseval_check(const localization::FramePairSpec& pair, double r_max,
                                        double tol = 0.05);

struct VerdictEntry {
  std::string id;
  Verdict verdict = Verdict::kFail;
  std::string detail;
  std::vector<std::string> evidence;  // report paths of the justifying tables
};

struct SetReport {
  std::string label;
  std::string measure;
  std::optional<density::DensityEstimate> density;
  std::vector<localization::LocalizationRow> localization;
  std::vector<TheoremRow> theorem;
  std::optional<GramStudy> gram;
  std::optional<localization::TailResult> hap;
};

struct InstanceRow {
  std::size_t index = 0;
  std::size_t dim = 0;
  std::size_t f_size = 0;
  std::size_t g_size = 0;
  std::size_t omega_f = 0;
  std::size_t omega_g = 0;
  double residual = 0.0;
  double projection_error = 0.0;
  double dual_form_error = 0.0;
  double idempotence = 0.0;
  double sandwich_slack = 0.0;          // distance of the double sum inside [a mu, b mu]
  double sandwich_slack_swapped = 0.0;
};

struct ScenarioReport {
  std::string scenario;
  std::string name;
  std::uint64_t seed = 0;
  std::string inputs_json = "{}";
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<SetReport> sets;
  std::vector<InstanceRow> instances;
  std::optional<ParsevalDensityCheck> parseval_density;
  std::vector<VerdictEntry> verdicts;

  /// 0 unless some verdict is CONTRADICTION or fail.
  int exit_code() const noexcept;
};

ScenarioReport run_scenario(const ScenarioConfig& cfg);

/// Deterministic serialization with top-level "schema": "framelab/1".
std::string to_json(const ScenarioReport& report);

/// Runs the scenario, writes <name>.json and CSV tables into cfg.out_dir and
/// returns the exit code.
int run(const ScenarioConfig& cfg, std::ostream* log = nullptr);

/// Quad settings matched to the kernel's decay (Gaussian or sinc^2 tails).
QuadConfig default_quad(const kernels::KernelSpec& k);

}  // namespace framelab::verify
