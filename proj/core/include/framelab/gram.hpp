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

#include <vector>

#include "framelab/kernels.hpp"
#include "framelab/linalg.hpp"
#include "framelab/measure.hpp"
#include "framelab/point.hpp"

namespace framelab::verify {

/// G_ij = <k_{x_j}, k_{x_i}> for normalized kernels.
CMatrix kernel_gram(const kernels::KernelSpec& k, const std::vector<Point>& points);

struct GramStudyConfig {
  std::vector<double> windows = {2.0, 3.0, 4.0};
  Point center;  // defaults to the origin of the kernel's space
  /// Probe kernels on center + probe_spacing * Z^d span the subspace of
  /// functions concentrated in the window.
  double probe_spacing = 0.5;
  /// Samples are taken from the window inflated by this margin.
  double sample_margin = 4.0;
  double probe_cutoff = 1e-9;
  double stabilization_tol = 0.10;
  double floor = 0.01;
};

struct GramWindow {
  double radius = 0.0;
  std::size_t points = 0;
  bool skipped = false;
  // Spectrum of the Gram matrix of {k_gamma : gamma in window}.
  double min_eig = 0.0;
  double max_eig = 0.0;
  double min_nonzero = 0.0;
  // Spectrum of the sampling frame operator compressed to the probe subspace.
  double frame_lower = 0.0;
  double frame_upper = 0.0;
  std::size_t probe_rank = 0;
  std::size_t samples = 0;
};

struct GramStudy {
  std::vector<GramWindow> windows;
  /// Localized lower frame bound stabilized above the floor.
  bool frame_evidence = false;
  /// Smallest Gram eigenvalue stabilized above the floor.
  bool riesz_evidence = false;
  double frame_change = 0.0;  // relative change across the last two windows
  double riesz_change = 0.0;
  GramStudyConfig config;
};

GramStudy gram_truncation_study(const kernels::KernelSpec& k, const MeasureSpec& gamma,
                                GramStudyConfig cfg);

}  // namespace framelab::verify
