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

#include "framelab/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "framelab/error.hpp"
#include "framelab/space.hpp"

namespace framelab::density {

namespace {

bool is_uniform_lebesgue(const MeasureSpec& m) {
  const auto* leb = m.as_lebesgue();
  return leb != nullptr && !leb->weight;
}

std::optional<double> discrete_separation(const MeasureSpec& m) {
  if (const auto* lat = m.as_lattice()) return lat->separation();
  if (const auto* c = m.as_counting()) {
    const auto& ps = std::get<PointSet>(c->support);
    if (ps.declared_separation()) return *ps.declared_separation();
    if (ps.size() >= 2) return space::separation(ps);
  }
  if (const auto* a = m.as_atomic(); a != nullptr && a->points.size() >= 2) {
    return space::separation(std::span<const Point>(a->points));
  }
  return std::nullopt;
}

int axis_cells(double lo, double hi, double spacing) {
  if (hi <= lo) return 1;
  return std::max(1, static_cast<int>(std::ceil((hi - lo) / spacing - 1e-12)));
}

}  // namespace

void DensitySchedule::validate() const {
  if (radii.empty()) throw Error(ErrorCode::kInvalidArgument, "density schedule needs at least one radius");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || !std::isfinite(radii[i])) {
      throw Error(ErrorCode::kInvalidArgument, "density radii must be positive");
    }
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "density radii must be strictly increasing");
    }
  }
  if (box_lo.dim() != box_hi.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "density box corners differ in dimension");
  }
  for (int i = 0; i < box_lo.dim(); ++i) {
    if (box_lo[i] > box_hi[i]) throw Error(ErrorCode::kInvalidArgument, "density box is empty");
  }
  if (!(center_spacing > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "center spacing must be positive");
  }
  if (!(convergence_tol > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "convergence tolerance must be positive");
  }
}

std::vector<Point> DensitySchedule::centers() const {
  const int d = box_lo.dim();
  std::array<int, kMaxDim> cells{};
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) {
    cells[static_cast<std::size_t>(i)] = axis_cells(box_lo[i], box_hi[i], center_spacing);
    total *= static_cast<std::size_t>(cells[static_cast<std::size_t>(i)]);
  }
  std::vector<Point> out;
  out.reserve(total);
  std::array<int, kMaxDim> idx{};
  for (std::size_t n = 0; n < total; ++n) {
    Point p = Point::zeros(d);
    for (int i = 0; i < d; ++i) {
      const auto k = static_cast<std::size_t>(i);
      const double w = (box_hi[i] - box_lo[i]) / cells[k];
      p[i] = box_lo[i] + (idx[k] + 0.5) * w;
    }
    out.push_back(p);
    for (int i = d - 1; i >= 0; --i) {
      const auto k = static_cast<std::size_t>(i);
      if (++idx[k] < cells[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

std::vector<double> geometric_radii(double r_min, double r_max) {
  if (!(r_min > 0.0) || !(r_max >= r_min)) {
    throw Error(ErrorCode::kInvalidArgument, "radii range must satisfy 0 < r_min <= r_max");
  }
  std::vector<double> r;
  for (double x = r_min; x <= r_max * (1.0 + 1e-12); x *= 2.0) r.push_back(x);
  return r;
}

DensitySchedule default_schedule(const MeasureSpec& mu, const MeasureSpec& nu, double r_max) {
  if (mu.dim() != nu.dim()) throw Error(ErrorCode::kDimensionMismatch, "measures differ in dimension");
  const int d = mu.dim();
  DensitySchedule s;
  s.radii = geometric_radii(std::min(4.0, r_max), r_max);

  const auto pm = mu.period();
  const auto pn = nu.period();
  std::optional<double> cell;
  bool invariant = false;
  if (pm && pn) {
    if (*pm == *pn) cell = *pm;
  } else if (pm && is_uniform_lebesgue(nu)) {
    cell = *pm;
  } else if (pn && is_uniform_lebesgue(mu)) {
    cell = *pn;
  } else if (is_uniform_lebesgue(mu) && is_uniform_lebesgue(nu)) {
    invariant = true;
  }

  if (invariant) {
    s.box_lo = Point::zeros(d);
    s.box_hi = Point::zeros(d);
    s.center_spacing = 1.0;
  } else if (cell) {
    s.box_lo = Point::zeros(d);
    s.box_hi = Point::zeros(d);
    for (int i = 0; i < d; ++i) s.box_hi[i] = *cell;
    s.center_spacing = *cell / 5.0;
  } else {
    s.box_lo = Point::zeros(d);
    s.box_hi = Point::zeros(d);
    for (int i = 0; i < d; ++i) {
      s.box_lo[i] = -16.0;
      s.box_hi[i] = 16.0;
    }
    double spacing = 1.0;
    for (const auto* m : {&mu, &nu}) {
      if (const auto sep = discrete_separation(*m)) spacing = std::min(spacing, *sep / 2.0);
    }
    s.center_spacing = spacing;
  }
  return s;
}

DensityEstimate density(const MeasureSpec& mu, const MeasureSpec& nu, const DensitySchedule& sched) {
  sched.validate();
  if (mu.dim() != nu.dim() || sched.box_lo.dim() != mu.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "density inputs differ in dimension");
  }
  const auto centers = sched.centers();

  DensityEstimate est;
  est.schedule = sched;
  for (double r : sched.radii) {
    DensityRow row{r, -std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::infinity()};
    for (const auto& a : centers) {
      const Ball b(a, r);
      const double den = space::ball_mass(nu, b).value;
      if (!(den > 0.0)) {
        throw Error(ErrorCode::kReferenceMeasureVanishes,
                    "reference measure vanishes on a ball (center " + a.to_string() +
                        ", radius " + std::to_string(r) + ")");
      }
      const double num = space::ball_mass(mu, b).value;
      const double ratio = num / den;
      row.sup_ratio = std::max(row.sup_ratio, ratio);
      row.inf_ratio = std::min(row.inf_ratio, ratio);
    }
    est.per_radius.push_back(row);
  }

  const auto& last = est.per_radius.back();
  est.upper = last.sup_ratio;
  est.lower = last.inf_ratio;
  if (est.per_radius.size() >= 2) {
    const auto& prev = est.per_radius[est.per_radius.size() - 2];
    // Relative change, so the check is invariant under rescaling either measure.
    const double scale = std::max(std::abs(last.sup_ratio), std::numeric_limits<double>::min());
    est.slope = std::max(std::abs(last.sup_ratio - prev.sup_ratio),
                         std::abs(last.inf_ratio - prev.inf_ratio)) /
                scale;
    est.converged = est.slope < sched.convergence_tol;
  }
  return est;
}

DensityEstimate classical_density(const Lattice& lambda, const DensitySchedule& sched) {
  return density(MeasureSpec::counting(lambda), MeasureSpec::lebesgue(lambda.dim()), sched);
}

DensityEstimate classical_density(const PointSet& lambda, const DensitySchedule& sched) {
  return density(MeasureSpec::counting(lambda), MeasureSpec::lebesgue(lambda.dim()), sched);
}

}  // namespace framelab::density
