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

#include "framelab/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace framelab {

void QuadConfig::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw Error(ErrorCode::kInvalidArgument, "quadrature spacing h must be positive");
  }
  if (truncation_radius && !(*truncation_radius > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "truncation radius must be positive");
  }
  if (!(margin >= 0.0)) throw Error(ErrorCode::kInvalidArgument, "truncation margin must be nonnegative");
  if (tail.kind == TailModel::Kind::kGaussian && !(tail.rate > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "gaussian tail rate must be positive");
  }
  if (tail.kind == TailModel::Kind::kPower && !(tail.exponent > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "power tail exponent must be positive");
  }
}

namespace quad {

void throw_non_finite(const Point& x) {
  throw Error(ErrorCode::kNonFiniteIntegrand, "integrand is not finite at node " + x.to_string());
}

std::vector<Node> discretize(const MeasureSpec& m, const Shell& s, double h) {
  std::vector<Node> nodes;
  if (const auto* leb = m.as_lebesgue()) {
    for_each_lebesgue_node(s, h, [&](const Point& x, double w) {
      double wx = leb->constant;
      if (leb->weight) {
        wx = leb->weight(x);
        if (!std::isfinite(wx) || wx < 0.0) {
          throw Error(ErrorCode::kWeightNotIntegrable, "weight not integrable on ball");
        }
      }
      nodes.push_back({x, w * wx});
    });
  } else {
    m.for_each_atom_in_ball(s.center, s.outer, [&](const Point& x, double w) {
      if (s.inner > 0.0 && distance_sq(x, s.center) <= s.inner * s.inner) return;
      nodes.push_back({x, w});
    });
  }
  return nodes;
}

namespace {

// \int_lower^\infty (t + shift)^(d-1) e(t) dt for the envelope of the model.
double radial_moment(const TailModel& model, int d, double lower, double shift) {
  // Part of the range where the shifted envelope is capped at e(0).
  double head = 0.0;
  if (lower < 0.0) {
    const double a = std::max(lower + shift, 0.0);
    head = model.envelope(0.0) * (std::pow(shift, d) - std::pow(a, d)) / static_cast<double>(d);
    lower = 0.0;
  }
  if (model.kind == TailModel::Kind::kPower) {
    const double p = model.exponent;
    if (!(p > static_cast<double>(d))) return std::numeric_limits<double>::infinity();
    // (t + shift) <= max(1, shift) (1 + t)
    const double c = std::pow(std::max(1.0, shift), d - 1);
    return head + model.amplitude * c * std::pow(1.0 + lower, static_cast<double>(d) - p) /
                      (p - static_cast<double>(d));
  }
  // Gaussian: 12 / sqrt(rate) past the lower limit the envelope has dropped
  // by at least exp(-144).
  const double width = 12.0 / std::sqrt(model.rate);
  double total = 0.0;
  detail::composite_gl(lower, lower + width, width / 400.0, [&](double t, double w) {
    total += w * std::pow(t + shift, d - 1) * model.envelope(t);
  });
  return head + total;
}

}  // namespace

double tail_bound(const MeasureSpec& m, const Point& center, double radius,
                  const TailModel& model) {
  const int d = m.dim();
  if (const auto* atomic = m.as_atomic()) {
    double total = 0.0;
    for (std::size_t i = 0; i < atomic->points.size(); ++i) {
      const double t = distance(atomic->points[i], center);
      if (t > radius) total += atomic->weights[i] * model.envelope(t);
    }
    return total;
  }
  if (const auto* counting = m.as_counting(); counting && !m.as_lattice()) {
    double total = 0.0;
    for (const auto& p : std::get<PointSet>(counting->support).points()) {
      const double t = distance(p, center);
      if (t > radius) total += model.envelope(t);
    }
    return total;
  }
  const auto env = m.density_envelope();
  double per_volume = env.per_volume;
  if (const auto* leb = m.as_lebesgue(); leb && leb->weight) per_volume = 1.0;
  // Every atom's cell lies within `inflation` of the atom, so the atom sum
  // beyond R is dominated by the density times the shifted envelope integral
  // over |u| > R - inflation.
  const double shift = env.inflation;
  return per_volume * unit_sphere_area(d) *
         radial_moment(model, d, radius - 2.0 * shift, shift);
}

}  // namespace quad
}  // namespace framelab
