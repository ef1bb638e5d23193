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

#include <filesystem>
#include <fstream>

#include "framelab/config.hpp"
#include "framelab/error.hpp"
#include "json.hpp"

namespace framelab {
namespace {

std::string config_error(std::string_view text) {
  try {
    config::parse_scenario(text, ".");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfig);
    return e.what();
  }
  return "";
}

TEST(Config, UnknownKeysAreReportedWithTheirPath) {
  EXPECT_EQ(config_error(R"({"scenario": "finite-oracle", "finite": {"bogus": 1}})"),
            "config error at /finite/bogus: unknown key");
  EXPECT_EQ(config_error(R"({"scenario": "fock", "colour": 1})"), "config error at /colour: unknown key");
}

TEST(Config, TypeAndRangeErrors) {
  EXPECT_EQ(config_error(R"({"name": "x"})"), "config error at /scenario: missing");
  EXPECT_EQ(config_error(R"({"scenario": "plasma"})"), "config error at /scenario: unknown scenario 'plasma'");
  EXPECT_EQ(config_error(R"({"scenario": "fock", "density": {"r_max": -1}})"),
            "config error at /density/r_max: expected a positive number");
  EXPECT_EQ(config_error(R"({"scenario": "fock", "localization": {"radii": [8, 4]}})"),
            "config error at /localization/radii/1: radii must be strictly increasing");
  EXPECT_EQ(config_error(R"({"scenario": "fock", "kernel": "paley-wiener"})"),
            "config error at /kernel: scenario 'fock' needs kernel fock");
  EXPECT_EQ(config_error(R"({"scenario": "fock", "sets": [{"lattice": {"scale": 1, "dim": 1}}]})"),
            "config error at /sets/0: set dimension does not match the kernel");
  EXPECT_EQ(config_error(R"({"scenario": "fock", "sets": [{"lattice": {"scale": 1, "dim": 2}, "lebesgue": {"dim": 2}}]})"),
            "config error at /sets/0: more than one measure kind given");
  EXPECT_NE(config_error("{not json"), "");
}

TEST(Config, DefaultsPerScenario) {
  const auto fock = config::parse_scenario(R"({"scenario": "fock"})", ".");
  ASSERT_TRUE(fock.kernel.has_value());
  EXPECT_EQ(fock.kernel->name(), "fock");
  ASSERT_EQ(fock.sets.size(), 4u);
  EXPECT_EQ(fock.sets[0].label, "alpha=0.5");
  EXPECT_EQ(fock.sets[3].label, "alpha=2");

  const auto gabor = config::parse_scenario(R"({"scenario": "gabor"})", ".");
  ASSERT_EQ(gabor.sets.size(), 5u);
  EXPECT_EQ(gabor.sets[4].label, "thinned");
  EXPECT_NEAR(gabor.sets[4].measure.as_lattice()->density(), 0.75, 1e-15);

  const auto pw = config::parse_scenario(
      R"({"scenario": "paley-wiener", "kernel": "paley-wiener", "params": {"band": 6.283185307179586}})", ".");
  ASSERT_EQ(pw.sets.size(), 1u);
  EXPECT_NEAR(pw.sets[0].measure.as_lattice()->scale(), 0.5, 1e-15);
}

TEST(Config, ParamsWithoutKernelRejected) {
  EXPECT_EQ(config_error(R"({"scenario": "paley-wiener", "params": {"band": 2}})"),
            "config error at /params: params given without kernel");
}

TEST(Config, OverridesAndEcho) {
  const auto cfg = config::parse_scenario(R"({
    "scenario": "gabor", "name": "g", "seed": 42, "kernel": "gabor-gaussian", "params": {"n": 1},
    "sets": [{"label": "coarse", "lattice": {"scale": 1.5, "dim": 2}},
             {"points": [[0, 0], [1, 0], [0, 1]], "separation": 0.5}],
    "quad": {"h": 0.05, "r_truncate": 5},
    "gram": {"windows": [1, 2], "floor": 0.02},
    "out_dir": "elsewhere"})",
                                          "/base");
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_EQ(cfg.sets[0].label, "coarse");
  EXPECT_EQ(cfg.sets[1].label, "set1");
  ASSERT_TRUE(cfg.quad.has_value());
  EXPECT_EQ(cfg.quad->h, 0.05);
  EXPECT_EQ(cfg.quad->margin, 5.0);
  EXPECT_EQ(cfg.gram.windows, (std::vector<double>{1, 2}));
  EXPECT_EQ(cfg.gram.floor, 0.02);
  EXPECT_EQ(cfg.out_dir, std::filesystem::path("/base/elsewhere"));
  const auto echo = nlohmann::ordered_json::parse(cfg.inputs_json);
  EXPECT_FALSE(echo.contains("out_dir"));
  EXPECT_EQ(echo["seed"], 42);
}

TEST(Config, MeasureArguments) {
  const auto leb = config::parse_measure_arg("lebesgue:2:1.5");
  ASSERT_NE(leb.as_lebesgue(), nullptr);
  EXPECT_EQ(leb.as_lebesgue()->dim, 2);
  EXPECT_EQ(leb.as_lebesgue()->constant, 1.5);
  const auto lat = config::parse_measure_arg("lattice:0.5:3");
  ASSERT_NE(lat.as_lattice(), nullptr);
  EXPECT_EQ(lat.as_lattice()->scale(), 0.5);
  EXPECT_EQ(lat.dim(), 3);
  EXPECT_THROW(config::parse_measure_arg("lattice:x:2"), Error);
  EXPECT_THROW(config::parse_measure_arg("lebesgue:7"), Error);
  EXPECT_THROW(config::parse_measure_arg("sphere:2"), Error);
}

TEST(Config, AtomicMeasureWeights) {
  const auto m = config::parse_measure(R"({"atomic": {"points": [[0], [2]], "weights": [0.5, 1.5]}})", ".");
  ASSERT_NE(m.as_atomic(), nullptr);
  EXPECT_EQ(m.as_atomic()->weights, (std::vector<double>{0.5, 1.5}));
  EXPECT_THROW(config::parse_measure(R"({"atomic": {"points": [[0]], "weights": [1, 2]}})", "."), Error);
}

TEST(Config, PairFileWithNormalizedMeasure) {
  const auto dir = std::filesystem::temp_directory_path() / "framelab_config_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "pair.json";
  std::ofstream(path) << R"({"kernel": "fock", "mu": "normalized", "nu": {"lattice": {"scale": 1, "dim": 2}},
                             "centers": [[0, 0], [0.5, 0.5]]})";
  const auto pc = config::load_pair(path);
  EXPECT_TRUE(pc.pair.f.index.is_lebesgue());
  EXPECT_NE(pc.pair.g.index.as_lattice(), nullptr);
  EXPECT_EQ(pc.centers.size(), 2u);
  EXPECT_EQ(pc.pair.quad.margin, 6.0);
}

}  // namespace
}  // namespace framelab
