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

#include <complex>
#include <vector>

#include "framelab/kernels.hpp"
#include "framelab/measure.hpp"
#include "framelab/point.hpp"
#include "framelab/quad.hpp"

namespace framelab::localization {

/// One normalized-kernel family per side: f_x = k_x indexed by mu and
/// g_x = k_x indexed by nu.
struct FamilySpec {
  kernels::KernelSpec kernel;
  MeasureSpec index;
};

struct FramePairSpec {
  FamilySpec f;
  FamilySpec g;
  bool self_dual = true;
  QuadConfig quad;

  void validate() const;
  FramePairSpec swapped() const { return {g, f, self_dual, quad}; }
};

struct TailResult {
  double value = 0.0;  // max over probes
  double min_over_probes = 0.0;
  Point argmax;
  double truncation_bound = 0.0;
};

/// max over probes x of \int_{B(x, R)^c} |<k_x, k_y>|^2 d(index)(y).
TailResult tail_sup(const kernels::KernelSpec& k, const MeasureSpec& index, double radius,
                    const std::vector<Point>& probes, const QuadConfig& cfg);

struct DoubleTail {
  double t1 = 0.0;  // \int_{B^c} \int_B |<f_x, g_y>|^2 dnu(y) dmu(x)
  double t2 = 0.0;  // \int_{B^c} \int_B |<g_x, f_y>|^2 dmu(y) dnu(x)
  double truncation_bound = 0.0;
  double normalizer = 0.0;  // (mu + nu)(B)
};

DoubleTail double_tail(const FramePairSpec& pair, const Ball& b);

struct LocalizationRow {
  Point center;
  double r = 0.0;
  double defect = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double normalizer = 0.0;
  double eps_eff = 0.0;
  double trunc_bound = 0.0;
};

/// |t2 - t1| with eps_eff = defect / (mu + nu)(B). Requires self_dual.
LocalizationRow localization_defect(const FramePairSpec& pair, const Ball& b);

std::vector<LocalizationRow> localization_table(const FramePairSpec& pair,
                                                const std::vector<Point>& centers,
                                                const std::vector<double>& radii);

/// max over probes x of sum_{gamma in Gamma, |gamma - x| > R} |<k_x, k_gamma>|^2,
/// with Gamma truncated at R + cfg.margin.
TailResult hap_check(const kernels::KernelSpec& k, const MeasureSpec& gamma, double radius,
                     const std::vector<Point>& probes, const QuadConfig& cfg);

/// f = sum_j coeffs_j k_{centers_j}.
struct KernelCombination {
  std::vector<Point> centers;
  std::vector<cplx> coeffs;
};

struct MeanValueResult {
  double c_r = 0.0;  // max ratio over probes and test functions
  Point argmax;
  std::size_t argmax_function = 0;
};

/// Empirical constant of |<f, k_a>|^2 <= C_r \int_{B(a, r)} |<f, k_x>|^2 dlambda(x).
MeanValueResult mean_value_check(const kernels::KernelSpec& k, const MeasureSpec& lambda,
                                 double r, const std::vector<Point>& probes,
                                 const std::vector<KernelCombination>& test_functions,
                                 const QuadConfig& cfg);

/// Default probes: 5^d grid over the unit cell for translation invariant
/// kernels.
std::vector<Point> default_probes(const kernels::KernelSpec& k, double cell = 1.0);

}  // namespace framelab::localization
