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

#include "framelab/measure.hpp"
#include "framelab/point.hpp"

namespace framelab::density {

/// Radii and center grid over which ball-mass ratios are sampled. Centers are
/// the cell midpoints of a uniform partition of [box_lo, box_hi] with cells
/// no wider than center_spacing.
struct DensitySchedule {
  std::vector<double> radii;
  Point box_lo;
  Point box_hi;
  double center_spacing = 1.0;
  /// Tolerance of the trend check between r_max and r_max / 2.
  double convergence_tol = 0.02;

  void validate() const;
  std::vector<Point> centers() const;
};

struct DensityRow {
  double r = 0.0;
  double sup_ratio = 0.0;
  double inf_ratio = 0.0;
};

struct DensityEstimate {
  std::vector<DensityRow> per_radius;
  double upper = 0.0;
  double lower = 0.0;
  bool converged = false;
  /// max of |sup(r_max) - sup(r_half)| and |inf(r_max) - inf(r_half)|.
  double slope = 0.0;
  DensitySchedule schedule;
};

/// Geometric radii 4, 8, ..., up to r_max.
std::vector<double> geometric_radii(double r_min, double r_max);

/// Periodic measures get one fundamental cell sampled 5 per axis; translation
/// invariant pairs get a single cell; otherwise the box [-16, 16]^d with
/// spacing min(1, separation / 2).
DensitySchedule default_schedule(const MeasureSpec& mu, const MeasureSpec& nu,
                                 double r_max = 128.0);

/// Finite-scale surrogate for D^+_nu(mu), D^-_nu(mu): sup / inf over the
/// center grid of mu(B(a, r)) / nu(B(a, r)) at each scheduled radius.
DensityEstimate density(const MeasureSpec& mu, const MeasureSpec& nu,
                        const DensitySchedule& sched);

/// density(Counting(lambda), Lebesgue R^d, sched).
DensityEstimate classical_density(const Lattice& lambda, const DensitySchedule& sched);
DensityEstimate classical_density(const PointSet& lambda, const DensitySchedule& sched);

}  // namespace framelab::density
