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

#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "framelab/verify.hpp"
#include "json.hpp"

namespace framelab {
namespace {

using verify::Verdict;

TEST(TheoremTable, RequiredConstantAndHoldsFlag) {
  const kernels::KernelSpec k(kernels::Fock{});
  const localization::FramePairSpec pair{{k, MeasureSpec::lebesgue(2)}, {k, MeasureSpec::lattice(2.0, 2)}, true,
                                         verify::default_quad(k)};
  localization::LocalizationRow row;
  row.center = Point{0.0, 0.0};
  row.r = 4.0;
  row.eps_eff = 0.1;
  const auto rows = verify::theorem_main_table(pair, {row});
  ASSERT_EQ(rows.size(), 1u);
  const auto& t = rows[0];
  EXPECT_NEAR(t.mu_b, 16.0 * M_PI, 1e-12);
  EXPECT_EQ(t.nu_b, 13.0);  // points of 2Z^2 in the closed disc of radius 4
  EXPECT_NEAR(t.b, 13.0 / (16.0 * M_PI), 1e-15);
  EXPECT_NEAR(t.c_required, (1.0 - t.b) / (1.0 + t.b), 1e-15);
  EXPECT_FALSE(t.holds);  // 0.1 < C_required ~ 0.59

  row.eps_eff = t.c_required + 1e-6;
  EXPECT_TRUE(verify::theorem_main_table(pair, {row})[0].holds);
}

TEST(TheoremTable, DenseLatticeRowsHoldWithoutLocalization) {
  const kernels::KernelSpec k(kernels::Fock{});
  const localization::FramePairSpec pair{{k, MeasureSpec::lebesgue(2)}, {k, MeasureSpec::lattice(0.5, 2)}, true,
                                         verify::default_quad(k)};
  const auto rows = verify::theorem_main_table(pair, {Point{0.0, 0.0}}, {4.0, 8.0});
  for (const auto& t : rows) {
    EXPECT_GT(t.b, 1.0);
    EXPECT_EQ(t.c_required, 0.0);
    EXPECT_TRUE(t.holds);
  }
}

TEST(ParsevalPairs, PaleyWienerAtIntegersHasUnitDensities) {
  const kernels::KernelSpec k(kernels::PaleyWiener{});
  const localization::FramePairSpec pair{{k, k.normalized_measure()}, {k, MeasureSpec::lattice(1.0, 1)}, true,
                                         verify::default_quad(k)};
  const auto c = verify::corollary_parseval_check(pair, 128.0, 0.05);
  EXPECT_EQ(c.verdict, Verdict::kPass);
  EXPECT_LT(c.max_deviation, 0.05);
}

TEST(ParsevalPairs, WrongDensityFails) {
  const kernels::KernelSpec k(kernels::PaleyWiener{});
  const localization::FramePairSpec pair{{k, k.normalized_measure()}, {k, MeasureSpec::lattice(0.5, 1)}, true,
                                         verify::default_quad(k)};
  const auto c = verify::corollary_parseval_check(pair, 128.0, 0.05);
  EXPECT_EQ(c.verdict, Verdict::kFail);
  EXPECT_NEAR(c.mu_wrt_nu.upper, 0.5, 0.02);
}

TEST(Verdicts, Names) {
  EXPECT_EQ(verify::to_string(Verdict::kPass), "pass");
  EXPECT_EQ(verify::to_string(Verdict::kVacuousConsistent), "vacuous-consistent");
  EXPECT_EQ(verify::to_string(Verdict::kHypothesesUnmet), "hypotheses-unmet");
  EXPECT_EQ(verify::to_string(Verdict::kCriticalNoClaim), "critical-no-claim");
  EXPECT_EQ(verify::to_string(Verdict::kContradiction), "CONTRADICTION");
  EXPECT_EQ(verify::to_string(Verdict::kFail), "fail");
}

TEST(Verdicts, ExitCodeReflectsContradictionsAndFailures) {
  verify::ScenarioReport rep;
  rep.verdicts.push_back({"a", Verdict::kPass, "", {}});
  rep.verdicts.push_back({"b", Verdict::kHypothesesUnmet, "", {}});
  rep.verdicts.push_back({"c", Verdict::kCriticalNoClaim, "", {}});
  EXPECT_EQ(rep.exit_code(), 0);
  rep.verdicts.push_back({"d", Verdict::kContradiction, "", {}});
  EXPECT_EQ(rep.exit_code(), 1);
  rep.verdicts.back().verdict = Verdict::kFail;
  EXPECT_EQ(rep.exit_code(), 1);
}

verify::ScenarioConfig small_finite() {
  verify::ScenarioConfig cfg;
  cfg.scenario = "finite-oracle";
  cfg.name = "t";
  cfg.instances = 20;
  return cfg;
}

TEST(Scenario, FiniteOracleReportIsCompleteAndPasses) {
  const auto rep = verify::run_scenario(small_finite());
  EXPECT_EQ(rep.instances.size(), 20u);
  EXPECT_EQ(rep.exit_code(), 0);
  for (const auto& v : rep.verdicts) EXPECT_EQ(v.verdict, Verdict::kPass) << v.id << ": " << v.detail;
  auto metric = [&](const std::string& name) {
    const auto it = std::find_if(rep.metrics.begin(), rep.metrics.end(), [&](const auto& m) { return m.first == name; });
    EXPECT_NE(it, rep.metrics.end()) << name;
    return it == rep.metrics.end() ? -1.0 : it->second;
  };
  EXPECT_LT(metric("max_residual"), 1e-10);
  EXPECT_NEAR(metric("mercedes_lower"), 1.5, 1e-12);
  EXPECT_NEAR(metric("e1e1e2_upper"), 2.0, 1e-12);
}

TEST(Scenario, JsonIsDeterministicAndVersioned) {
  const auto a = verify::to_json(verify::run_scenario(small_finite()));
  const auto b = verify::to_json(verify::run_scenario(small_finite()));
  EXPECT_EQ(a, b);
  const auto doc = nlohmann::ordered_json::parse(a);
  EXPECT_EQ(doc.begin().key(), "schema");
  EXPECT_EQ(doc["schema"], "framelab/1");
  EXPECT_EQ(doc["exit_code"], 0);
}

TEST(Scenario, SeedChangesInstances) {
  auto cfg = small_finite();
  const auto a = verify::run_scenario(cfg);
  cfg.seed = 8;
  const auto b = verify::run_scenario(cfg);
  EXPECT_NE(verify::to_json(a), verify::to_json(b));
}

TEST(Scenario, ThinnedGaborLatticeNeverContradicts) {
  verify::ScenarioConfig cfg;
  cfg.scenario = "gabor";
  cfg.name = "thin";
  cfg.kernel = kernels::KernelSpec(kernels::GaborGaussian{1});
  cfg.sets.push_back({"thinned", MeasureSpec::counting(Lattice(2.0, 2, {Point{0.5, 0.0}, Point{0.0, 0.5}, Point{0.5, 0.5}}))});
  const auto rep = verify::run_scenario(cfg);
  ASSERT_EQ(rep.sets.size(), 1u);
  EXPECT_NEAR(rep.sets[0].density->upper, 0.75, 0.01);
  EXPECT_NEAR(rep.sets[0].density->lower, 0.75, 0.01);
  EXPECT_FALSE(rep.sets[0].gram->frame_evidence);
  for (const auto& v : rep.verdicts) EXPECT_NE(v.verdict, Verdict::kContradiction) << v.id;
}

TEST(Scenario, MissingKernelIsAConfigError) {
  verify::ScenarioConfig cfg;
  cfg.scenario = "fock";
  EXPECT_THROW(verify::run_scenario(cfg), Error);
}

}  // namespace
}  // namespace framelab
