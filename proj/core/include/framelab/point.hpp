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

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "framelab/error.hpp"

namespace framelab {

inline constexpr int kMaxDim = 4;

/// A point of R^d, 1 <= d <= kMaxDim, stored inline.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<double> coords);
  explicit Point(std::span<const double> coords);

  static Point zeros(int dim);

  int dim() const noexcept { return dim_; }
  double operator[](int i) const noexcept { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) noexcept { return c_[static_cast<std::size_t>(i)]; }
  std::span<const double> coords() const noexcept {
    return {c_.data(), static_cast<std::size_t>(dim_)};
  }

  Point& operator+=(const Point& o) noexcept;
  Point& operator-=(const Point& o) noexcept;
  Point& operator*=(double s) noexcept;

  friend bool operator==(const Point& a, const Point& b) noexcept;

  std::string to_string() const;

 private:
  std::array<double, kMaxDim> c_{};
  int dim_ = 0;
};

inline Point operator+(Point a, const Point& b) noexcept { return a += b; }
inline Point operator-(Point a, const Point& b) noexcept { return a -= b; }
inline Point operator*(double s, Point a) noexcept { return a *= s; }

inline double distance_sq(const Point& a, const Point& b) noexcept {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double distance(const Point& a, const Point& b) noexcept {
  return std::sqrt(distance_sq(a, b));
}

inline double norm_sq(const Point& a) noexcept {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * a[i];
  return s;
}

void require_same_dim(const Point& a, const Point& b);

/// Closed ball B(center, radius).
class Ball {
 public:
  Ball(Point center, double radius);

  const Point& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  int dim() const noexcept { return center_.dim(); }

  // Exact closed-ball membership: |x - c|^2 <= r^2 with no tolerance.
  bool contains(const Point& x) const noexcept {
    return distance_sq(x, center_) <= radius_ * radius_;
  }

 private:
  Point center_;
  double radius_;
};

/// Finite set of distinct points, optionally carrying a separation it must respect.
class PointSet {
 public:
  PointSet() = default;
  PointSet(int dim, std::vector<Point> points,
           std::optional<double> declared_separation = std::nullopt);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  const std::optional<double>& declared_separation() const noexcept {
    return declared_separation_;
  }

 private:
  int dim_ = 1;
  std::vector<Point> points_;
  std::optional<double> declared_separation_;
};

/// Volume of the unit ball in R^d.
double unit_ball_volume(int dim);

/// Surface area of the unit sphere S^{d-1}.
double unit_sphere_area(int dim);

}  // namespace framelab
