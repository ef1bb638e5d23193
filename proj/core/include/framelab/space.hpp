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

#include <optional>
#include <string>
#include <vector>

#include "framelab/measure.hpp"
#include "framelab/point.hpp"

namespace framelab {

struct QuadConfig;

namespace space {

struct Mass {
  double value = 0.0;
  double error_bound = 0.0;  // zero for exact (closed form or atom count)
};

/// m(B). Discrete measures are counted exactly (closed ball); constant-density
/// Lebesgue uses the volume formula; weighted Lebesgue is integrated.
Mass ball_mass(const MeasureSpec& m, const Ball& b);
Mass ball_mass(const MeasureSpec& m, const Ball& b, const QuadConfig& cfg);

/// Minimum pairwise Euclidean distance.
double separation(const PointSet& ps);
double separation(std::span<const Point> points);

/// Indices of a closest pair, useful for error messages.
std::pair<std::size_t, std::size_t> closest_pair(std::span<const Point> points);

/// m(B(a, r + rho) \ B(a, r)) / m(B(a, r)).
double annular_ratio(const MeasureSpec& m, const Point& a, double r, double rho);

/// The standing assumption behind density ratios: m(B(a, r)) > 0 at every
/// sampled center. Throws kReferenceMeasureVanishes naming the first failure.
void require_positive_balls(const MeasureSpec& m, std::span<const Point> centers,
                            double r);

}  // namespace space
}  // namespace framelab
