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
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <type_traits>
#include <vector>

#include "framelab/compensated.hpp"
#include "framelab/error.hpp"
#include "framelab/measure.hpp"
#include "framelab/point.hpp"

namespace framelab {

/// Envelope |f(u)| <= amplitude * e(|u - c|) assumed beyond the truncation
/// radius, c being the center of the ball being integrated around.
struct TailModel {
  enum class Kind { kGaussian, kPower };
  Kind kind = Kind::kGaussian;
  double rate = std::numbers::pi;  // e(t) = exp(-rate t^2)
  double exponent = 2.0;           // e(t) = (1 + t)^(-exponent)
  double amplitude = 1.0;

  static TailModel gaussian(double rate = std::numbers::pi, double amplitude = 1.0) {
    return {Kind::kGaussian, rate, 2.0, amplitude};
  }
  static TailModel power(double exponent, double amplitude = 1.0) {
    return {Kind::kPower, std::numbers::pi, exponent, amplitude};
  }

  double envelope(double t) const noexcept {
    return kind == Kind::kGaussian ? amplitude * std::exp(-rate * t * t)
                                   : amplitude * std::pow(1.0 + t, -exponent);
  }
};

struct QuadConfig {
  double h = 0.02;
  /// Absolute truncation radius; when unset, ball radius + margin is used.
  std::optional<double> truncation_radius;
  double margin = 6.0;
  TailModel tail;
  /// Assumed sup of a Lebesgue weight field beyond the truncation radius.
  double weight_sup = 1.0;

  double truncation_radius_for(double ball_radius) const {
    return truncation_radius.value_or(ball_radius + margin);
  }
  void validate() const;
};

namespace quad {

/// {inner < |x - c| <= outer}; inner == 0 denotes the closed ball.
struct Shell {
  Point center;
  double inner = 0.0;
  double outer = 0.0;

  bool contains(const Point& x) const noexcept {
    const double d2 = distance_sq(x, center);
    return d2 <= outer * outer && (inner <= 0.0 || d2 > inner * inner);
  }
};

struct Node {
  Point x;
  double w = 0.0;
};

template <typename T>
struct IntegralResult {
  T value{};
  double truncation_bound = 0.0;
  std::size_t node_count = 0;
};

namespace detail {

// 3-point Gauss-Legendre on [-1, 1].
inline constexpr std::array<double, 3> kGlX = {-0.7745966692414834, 0.0,
                                               0.7745966692414834};
inline constexpr std::array<double, 3> kGlW = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

// Composite rule on [a, b] with panels no wider than h; visit(t, w).
template <typename Visit>
void composite_gl(double a, double b, double h, Visit&& visit) {
  if (!(b > a)) return;
  const auto panels = static_cast<long>(std::max(1.0, std::ceil((b - a) / h)));
  const double width = (b - a) / static_cast<double>(panels);
  for (long p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * width;
    for (std::size_t k = 0; k < 3; ++k) {
      visit(mid + 0.5 * width * kGlX[k], 0.5 * width * kGlW[k]);
    }
  }
}

inline long ring_count(double arc, double h, long floor_count) {
  return std::max(floor_count, static_cast<long>(std::ceil(arc / h)));
}

}  // namespace detail

/// Boundary-conforming product grid on a shell: Gauss-Legendre panels of
/// width <= h in the radius (and polar angles), uniform midpoint rule in the
/// azimuth with arc spacing <= h. visit(x, weight) is called in a fixed order.
template <typename Visit>
void for_each_lebesgue_node(const Shell& s, double h, Visit&& visit) {
  constexpr double kPi = std::numbers::pi;
  const Point& c = s.center;
  const int d = c.dim();
  detail::composite_gl(s.inner, s.outer, h, [&](double rho, double wr) {
    if (d == 1) {
      Point x = c;
      x[0] = c[0] - rho;
      visit(x, wr);
      x[0] = c[0] + rho;
      visit(x, wr);
    } else if (d == 2) {
      const long n = detail::ring_count(2.0 * kPi * rho, h, 16);
      const double dphi = 2.0 * kPi / static_cast<double>(n);
      for (long j = 0; j < n; ++j) {
        const double phi = (static_cast<double>(j) + 0.5) * dphi;
        Point x = c;
        x[0] += rho * std::cos(phi);
        x[1] += rho * std::sin(phi);
        visit(x, wr * rho * dphi);
      }
    } else if (d == 3) {
      detail::composite_gl(0.0, kPi, std::min(h / rho, kPi / 4.0), [&](double th, double wt) {
        const double st = std::sin(th), ct = std::cos(th);
        const long n = detail::ring_count(2.0 * kPi * rho * st, h, 8);
        const double dphi = 2.0 * kPi / static_cast<double>(n);
        for (long j = 0; j < n; ++j) {
          const double phi = (static_cast<double>(j) + 0.5) * dphi;
          Point x = c;
          x[0] += rho * ct;
          x[1] += rho * st * std::cos(phi);
          x[2] += rho * st * std::sin(phi);
          visit(x, wr * rho * rho * wt * st * dphi);
        }
      });
    } else {
      detail::composite_gl(0.0, kPi, std::min(h / rho, kPi / 4.0), [&](double ps, double wp) {
        const double sp = std::sin(ps), cp = std::cos(ps);
        detail::composite_gl(0.0, kPi, std::min(h / (rho * sp), kPi / 4.0), [&](double th, double wt) {
          const double st = std::sin(th), ct = std::cos(th);
          const long n = detail::ring_count(2.0 * kPi * rho * sp * st, h, 8);
          const double dphi = 2.0 * kPi / static_cast<double>(n);
          for (long j = 0; j < n; ++j) {
            const double phi = (static_cast<double>(j) + 0.5) * dphi;
            Point x = c;
            x[0] += rho * cp;
            x[1] += rho * sp * ct;
            x[2] += rho * sp * st * std::cos(phi);
            x[3] += rho * sp * st * std::sin(phi);
            visit(x, wr * rho * rho * rho * wp * sp * sp * wt * st * dphi);
          }
        });
      });
    }
  });
}

/// Quadrature nodes (Lebesgue) or atoms (discrete) of m restricted to the shell.
std::vector<Node> discretize(const MeasureSpec& m, const Shell& s, double h);

/// Bound on the m-integral of the tail envelope over {|u - c| > radius}.
double tail_bound(const MeasureSpec& m, const Point& center, double radius,
                  const TailModel& model);

[[noreturn]] void throw_non_finite(const Point& x);

/// Integral of f over the shell against m. Lebesgue measures use the
/// product grid; discrete measures reduce to an exact atom sum.
template <typename F>
auto integrate_shell(F&& f, const MeasureSpec& m, const Shell& s, double h) {
  using T = std::decay_t<decltype(f(std::declval<const Point&>()))>;
  static_assert(std::is_same_v<T, double> || std::is_same_v<T, std::complex<double>>,
                "integrand must return double or std::complex<double>");
  if (m.dim() != s.center.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "measure and region dimensions differ");
  }
  CompensatedSum<T> acc;
  std::size_t nodes = 0;
  auto add = [&](const Point& x, double w) {
    const T v = f(x);
    if constexpr (std::is_same_v<T, double>) {
      if (!std::isfinite(v)) throw_non_finite(x);
    } else {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw_non_finite(x);
    }
    acc.add(w == 1.0 ? v : v * w);
    ++nodes;
  };
  if (const auto* leb = m.as_lebesgue()) {
    if (leb->weight) {
      for_each_lebesgue_node(s, h, [&](const Point& x, double w) {
        const double wx = leb->weight(x);
        if (!std::isfinite(wx) || wx < 0.0) {
          throw Error(ErrorCode::kWeightNotIntegrable, "weight not integrable on ball");
        }
        add(x, w * wx);
      });
    } else {
      const double cst = leb->constant;
      for_each_lebesgue_node(s, h, [&](const Point& x, double w) { add(x, w * cst); });
    }
  } else {
    m.for_each_atom_in_ball(s.center, s.outer, [&](const Point& x, double w) {
      if (s.inner > 0.0 && distance_sq(x, s.center) <= s.inner * s.inner) return;
      add(x, w);
    });
  }
  return IntegralResult<T>{acc.value(), 0.0, nodes};
}

/// \int_B f dm.
template <typename F>
auto integrate_ball(F&& f, const Ball& b, const MeasureSpec& m, const QuadConfig& cfg) {
  cfg.validate();
  return integrate_shell(std::forward<F>(f), m, Shell{b.center(), 0.0, b.radius()}, cfg.h);
}

/// \int over B(c, R_tr) \ B of f dm, plus a bound for the region beyond R_tr
/// derived from cfg.tail.
template <typename F>
auto integrate_complement(F&& f, const Ball& b, const MeasureSpec& m, const QuadConfig& cfg) {
  cfg.validate();
  const double r_tr = cfg.truncation_radius_for(b.radius());
  if (r_tr < b.radius()) {
    std::ostringstream os;
    os << "truncation radius " << r_tr << " is smaller than ball radius " << b.radius();
    throw Error(ErrorCode::kInvalidArgument, os.str());
  }
  auto res = integrate_shell(std::forward<F>(f), m, Shell{b.center(), b.radius(), r_tr}, cfg.h);
  res.truncation_bound = tail_bound(m, b.center(), r_tr, cfg.tail);
  if (const auto* leb = m.as_lebesgue(); leb && leb->weight) res.truncation_bound *= cfg.weight_sup;
  return res;
}

}  // namespace quad
}  // namespace framelab
