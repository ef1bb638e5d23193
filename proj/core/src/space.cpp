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

#include "framelab/space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "framelab/quad.hpp"

namespace framelab {

// ---- Point, Ball, PointSet -------------------------------------------------

Point::Point(std::initializer_list<double> coords) : Point(std::span<const double>(coords.begin(), coords.size())) {}

Point::Point(std::span<const double> coords) {
  if (coords.empty() || coords.size() > static_cast<std::size_t>(kMaxDim)) {
    throw Error(ErrorCode::kInvalidArgument, "point dimension must be between 1 and 4");
  }
  dim_ = static_cast<int>(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!std::isfinite(coords[i])) {
      throw Error(ErrorCode::kInvalidArgument, "point coordinates must be finite");
    }
    c_[i] = coords[i];
  }
}

Point Point::zeros(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw Error(ErrorCode::kInvalidArgument, "point dimension must be between 1 and 4");
  }
  Point p;
  p.dim_ = dim;
  return p;
}

Point& Point::operator+=(const Point& o) noexcept {
  for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] += o[i];
  return *this;
}

Point& Point::operator-=(const Point& o) noexcept {
  for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] -= o[i];
  return *this;
}

Point& Point::operator*=(double s) noexcept {
  for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] *= s;
  return *this;
}

bool operator==(const Point& a, const Point& b) noexcept {
  if (a.dim_ != b.dim_) return false;
  for (int i = 0; i < a.dim_; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

std::string Point::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << '(';
  for (int i = 0; i < dim_; ++i) os << (i ? ", " : "") << c_[static_cast<std::size_t>(i)];
  os << ')';
  return os.str();
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dimension mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

Ball::Ball(Point center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::kInvalidArgument, "ball radius must be positive and finite");
  }
}

PointSet::PointSet(int dim, std::vector<Point> points, std::optional<double> declared_separation)
    : dim_(dim), points_(std::move(points)), declared_separation_(declared_separation) {
  if (dim < 1 || dim > kMaxDim) {
    throw Error(ErrorCode::kInvalidArgument, "point set dimension must be between 1 and 4");
  }
  for (const auto& p : points_) {
    if (p.dim() != dim) throw Error(ErrorCode::kDimensionMismatch, "point set has mixed dimensions");
  }
  if (declared_separation_ && !(*declared_separation_ > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "declared separation must be positive");
  }
  if (points_.size() >= 2) {
    const auto [i, j] = space::closest_pair(points_);
    const double sep = distance(points_[i], points_[j]);
    if (sep == 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "point set contains duplicate point " + points_[i].to_string());
    }
    if (declared_separation_ && !(sep > *declared_separation_)) {
      std::ostringstream os;
      os << "points " << points_[i].to_string() << " and " << points_[j].to_string()
         << " are closer than the declared separation " << *declared_separation_;
      throw Error(ErrorCode::kNotSeparated, os.str());
    }
  }
}

double unit_ball_volume(int dim) {
  constexpr double pi = std::numbers::pi;
  switch (dim) {
    case 1: return 2.0;
    case 2: return pi;
    case 3: return 4.0 * pi / 3.0;
    case 4: return pi * pi / 2.0;
    default: throw Error(ErrorCode::kInvalidArgument, "dimension must be between 1 and 4");
  }
}

double unit_sphere_area(int dim) { return static_cast<double>(dim) * unit_ball_volume(dim); }

namespace space {

Mass ball_mass(const MeasureSpec& m, const Ball& b) { return ball_mass(m, b, QuadConfig{}); }

Mass ball_mass(const MeasureSpec& m, const Ball& b, const QuadConfig& cfg) {
  if (m.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "measure and ball dimensions differ");
  }
  if (const auto* leb = m.as_lebesgue()) {
    if (!leb->weight) {
      return {leb->constant * unit_ball_volume(leb->dim) * std::pow(b.radius(), leb->dim), 0.0};
    }
    auto one = [](const Point&) { return 1.0; };
    const quad::Shell shell{b.center(), 0.0, b.radius()};
    const double fine = quad::integrate_shell(one, m, shell, cfg.h).value;
    const double coarse = quad::integrate_shell(one, m, shell, 2.0 * cfg.h).value;
    return {fine, std::abs(fine - coarse)};
  }
  if (const auto* lat = m.as_lattice()) {
    return {static_cast<double>(lat->count_in_ball(b.center(), b.radius())), 0.0};
  }
  double total = 0.0;
  m.for_each_atom_in_ball(b.center(), b.radius(), [&](const Point&, double w) { total += w; });
  return {total, 0.0};
}

std::pair<std::size_t, std::size_t> closest_pair(std::span<const Point> points) {
  if (points.size() < 2) {
    throw Error(ErrorCode::kSeparationUndefined, "separation undefined");
  }
  // Sweep along the first coordinate; candidates beyond the best distance in
  // that coordinate are pruned.
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a][0] < points[b][0]; });
  double best = std::numeric_limits<double>::infinity();
  std::pair<std::size_t, std::size_t> arg{order[0], order[1]};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const double dx = points[order[j]][0] - points[order[i]][0];
      if (dx * dx > best) break;
      const double d2 = distance_sq(points[order[i]], points[order[j]]);
      if (d2 < best) {
        best = d2;
        arg = {std::min(order[i], order[j]), std::max(order[i], order[j])};
      }
    }
  }
  return arg;
}

double separation(std::span<const Point> points) {
  const auto [i, j] = closest_pair(points);
  return distance(points[i], points[j]);
}

double separation(const PointSet& ps) { return separation(ps.points()); }

double annular_ratio(const MeasureSpec& m, const Point& a, double r, double rho) {
  if (!(rho > 0.0)) throw Error(ErrorCode::kInvalidArgument, "annulus width must be positive");
  const Mass inner = ball_mass(m, Ball(a, r));
  if (!(inner.value > 0.0)) throw Error(ErrorCode::kEmptyBall, "empty ball");
  if (const auto* leb = m.as_lebesgue(); leb && !leb->weight) {
    // Exact shell volume ratio avoids cancellation for thin annuli.
    const double ratio = (r + rho) / r;
    return std::pow(ratio, leb->dim) - 1.0;
  }
  if (m.is_discrete()) {
    double shell = 0.0;
    const double r2 = r * r;
    m.for_each_atom_in_ball(a, r + rho, [&](const Point& x, double w) {
      if (distance_sq(x, a) > r2) shell += w;
    });
    return shell / inner.value;
  }
  const Mass outer = ball_mass(m, Ball(a, r + rho));
  return (outer.value - inner.value) / inner.value;
}

void require_positive_balls(const MeasureSpec& m, std::span<const Point> centers, double r) {
  for (const auto& c : centers) {
    if (!(ball_mass(m, Ball(c, r)).value > 0.0)) {
      std::ostringstream os;
      os << "reference measure vanishes on a ball: B(" << c.to_string() << ", " << r << ")";
      throw Error(ErrorCode::kReferenceMeasureVanishes, os.str());
    }
  }
}

}  // namespace space
}  // namespace framelab
