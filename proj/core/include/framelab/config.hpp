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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "framelab/kernels.hpp"
#include "framelab/localization.hpp"
#include "framelab/measure.hpp"
#include "framelab/verify.hpp"

namespace framelab::config {

/// Parses a scenario document. Relative CSV paths resolve against base_dir.
/// Schema violations throw kConfig with the JSON path of the offending value.
verify::ScenarioConfig parse_scenario(std::string_view text, const std::filesystem::path& base_dir);
verify::ScenarioConfig load_scenario(const std::filesystem::path& path);

/// A single measure object, e.g. {"lattice": {"scale": 0.5, "dim": 2}}.
MeasureSpec parse_measure(std::string_view text, const std::filesystem::path& base_dir);

/// Command-line shorthand: lebesgue:D[:C], lattice:SCALE:D, csv:PATH, or a
/// path to a JSON file holding a measure object.
MeasureSpec parse_measure_arg(std::string_view arg);

/// {"kernel": "paley-wiener" | "fock" | "gabor-gaussian", "params": {...}}.
kernels::KernelSpec parse_kernel(std::string_view text);

struct PairConfig {
  localization::FramePairSpec pair;
  std::vector<Point> centers;
};

/// {"kernel": ..., "params": ..., "mu": measure | "normalized", "nu": measure,
///  "quad": {...}, "centers": [[...]]}
PairConfig load_pair(const std::filesystem::path& path);

}  // namespace framelab::config
