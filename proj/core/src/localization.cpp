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

#include "framelab/localization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "framelab/compensated.hpp"
#include "framelab/error.hpp"
#include "framelab/space.hpp"

namespace framelab::localization {

namespace {

constexpr double kPi = std::numbers::pi;

// Fraction of the sphere S(x, t) lying inside B(c, r), where |x - c| = s.
double cap_fraction_inside(int d, double s, double t, double r) {
  if (s <= 0.0) return t <= r ? 1.0 : 0.0;
  const double kc = (r * r - s * s - t * t) / (2.0 * s * t);
  if (kc >= 1.0) return 1.0;
  if (kc <= -1.0) return 0.0;
  const double th = std::acos(kc);
  // Inside directions make an angle >= th with x - c.
  switch (d) {
    case 2:
      return 1.0 - th / kPi;
    case 3:
      return 1.0 - 0.5 * (1.0 - std::cos(th));
    default:
      return 1.0 - (th - std::sin(th) * std::cos(th)) / kPi;
  }
}

// Gauss-Legendre on [a, b] after t = a + (b - a)(1 - cos u) / 2, which
// removes the square-root endpoint behaviour of cap fractions.
template <class G>
void smoothed_gl(double a, double b, double h, G&& visit) {
  if (!(b > a)) return;
  const double n = std::max(1.0, std::ceil((b - a) / h));
  quad::detail::composite_gl(0.0, kPi, kPi / n, [&](double u, double wu) {
    const double t = a + 0.5 * (b - a) * (1.0 - std::cos(u));
    visit(t, wu * 0.5 * (b - a) * std::sin(u));
  });
}

// \int_{region} |<k_x, k_y>|^2 kappa dy over the part of the region within
// `cut` of x, for isotropic kernels; region is B(c, r) or its complement.
double radial_inner(const kernels::KernelSpec& k, int d, double kappa, double s, double r,
                    double cut, bool inside, double h) {
  CompensatedSum<double> acc;
  if (d == 1) {
    // x = c + s; the region in y - c coordinates, intersected with [s - cut, s + cut].
    auto piece = [&](double lo, double hi) {
      lo = std::max(lo, s - cut);
      hi = std::min(hi, s + cut);
      // Split at y = x so each panel sees a smooth integrand in |x - y|.
      for (const auto& [a, b] : {std::pair{lo, std::min(hi, s)}, std::pair{std::max(lo, s), hi}}) {
        quad::detail::composite_gl(a, b, h, [&](double y, double w) {
          acc += w * kappa * kernels::modulus_sq_at_distance(k, std::abs(y - s));
        });
      }
    };
    if (inside) {
      piece(-r, r);
    } else {
      piece(-std::numeric_limits<double>::infinity(), -r);
      piece(r, std::numeric_limits<double>::infinity());
    }
    return acc.value();
  }
  std::vector<double> breaks{0.0, cut};
  for (double b : {std::abs(s - r), s + r}) {
    if (b > 0.0 && b < cut) breaks.push_back(b);
  }
  std::sort(breaks.begin(), breaks.end());
  const double area = unit_sphere_area(d);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    smoothed_gl(breaks[i], breaks[i + 1], h, [&](double t, double w) {
      const double in = cap_fraction_inside(d, s, t, r);
      const double frac = inside ? in : 1.0 - in;
      if (frac <= 0.0) return;
      acc += w * kappa * area * std::pow(t, d - 1) * frac * kernels::modulus_sq_at_distance(k, t);
    });
  }
  return acc.value();
}

bool radial_lebesgue(const kernels::KernelSpec& k, const MeasureSpec& m) {
  const auto* leb = m.as_lebesgue();
  return leb != nullptr && !leb->weight && kernels::isotropic(k);
}

struct Side {
  const MeasureSpec* m;
  bool inside;  // B(c, r) when true, its complement otherwise
};

class DoubleIntegral {
 public:
  DoubleIntegral(const kernels::KernelSpec& k, const Ball& b, const QuadConfig& cfg)
      : k_(k), c_(b.center()), r_(b.radius()), d_(b.dim()), h_(cfg.h),
        r_tr_(cfg.truncation_radius_for(b.radius())), cut_(r_tr_ - r_) {}

  double cut() const noexcept { return cut_; }

  // \int_{A} dm_A(x) \int_{A'} dm_A'(y) |<k_x, k_y>|^2, pairs closer than cut.
  double operator()(Side a, Side ap) const {
    // Order by structure only, so swapping the sides gives the same arithmetic.
    if (a.m->is_lebesgue() && ap.m->is_discrete()) std::swap(a, ap);
    if (a.m->is_discrete()) {
      CompensatedSum<double> acc;
      for_each_band_atom(a, [&](const Point& x, double w) { acc += w * inner(x, ap); });
      return acc.value();
    }
    if (radial_lebesgue(k_, *a.m) && radial_lebesgue(k_, *ap.m)) {
      const double kappa_a = a.m->as_lebesgue()->constant;
      const double kappa_ap = ap.m->as_lebesgue()->constant;
      const auto [lo, hi] = band(a.inside);
      CompensatedSum<double> acc;
      const double area = d_ == 1 ? 2.0 : unit_sphere_area(d_);
      quad::detail::composite_gl(lo, hi, h_, [&](double s, double w) {
        acc += w * kappa_a * area * std::pow(s, d_ - 1) *
               radial_inner(k_, d_, kappa_ap, s, r_, cut_, ap.inside, h_);
      });
      return acc.value();
    }
    const auto [lo, hi] = band(a.inside);
    const quad::Shell shell{c_, lo, hi};
    return quad::integrate_shell([&](const Point& x) { return inner(x, ap); }, *a.m, shell, h_)
        .value;
  }

 private:
  std::pair<double, double> band(bool inside) const {
    if (inside) return {std::max(0.0, r_ - cut_), r_};
    return {r_, r_tr_};
  }

  template <class V>
  void for_each_band_atom(Side a, V&& visit) const {
    const auto [lo, hi] = band(a.inside);
    a.m->for_each_atom_in_ball(c_, hi, [&](const Point& x, double w) {
      const double s2 = distance_sq(x, c_);
      if (a.inside ? s2 < lo * lo : s2 <= lo * lo) return;
      visit(x, w);
    });
  }

  bool in_region(const Point& y, bool inside) const {
    const bool in_ball = distance_sq(y, c_) <= r_ * r_;
    return inside == in_ball;
  }

  double inner(const Point& x, Side ap) const {
    if (ap.m->is_discrete()) {
      CompensatedSum<double> acc;
      ap.m->for_each_atom_in_ball(x, cut_, [&](const Point& y, double w) {
        if (in_region(y, ap.inside)) acc += w * kernels::normalized_modulus_sq(k_, x, y);
      });
      return acc.value();
    }
    const double s = distance(x, c_);
    if (radial_lebesgue(k_, *ap.m)) {
      return radial_inner(k_, d_, ap.m->as_lebesgue()->constant, s, r_, cut_, ap.inside, h_);
    }
    quad::Shell shell{c_, 0.0, r_};
    if (ap.inside) {
      shell.inner = std::max(0.0, s - cut_);
    } else {
      shell.inner = r_;
      shell.outer = std::min(r_tr_, s + cut_);
      if (shell.outer <= r_) return 0.0;
    }
    return quad::integrate_shell(
               [&](const Point& y) { return kernels::normalized_modulus_sq(k_, x, y); }, *ap.m,
               shell, h_)
        .value;
  }

  const kernels::KernelSpec& k_;
  Point c_;
  double r_;
  int d_;
  double h_;
  double r_tr_;
  double cut_;
};

// Bound on the m-mass-weighted envelope beyond `cut`, valid at every base point.
double uniform_tail(const MeasureSpec& m, double cut, const TailModel& model) {
  if (const auto* a = m.as_atomic()) {
    double total = 0.0;
    for (double w : a->weights) total += w;
    return total * model.envelope(cut);
  }
  if (const auto* c = m.as_counting(); c && !m.as_lattice()) {
    return static_cast<double>(std::get<PointSet>(c->support).size()) * model.envelope(cut);
  }
  return quad::tail_bound(m, Point::zeros(m.dim()), cut, model);
}

}  // namespace

void FramePairSpec::validate() const {
  const int d = f.kernel.ambient_dim();
  if (g.kernel.ambient_dim() != d || f.index.dim() != d || g.index.dim() != d) {
    throw Error(ErrorCode::kDimensionMismatch, "frame pair members differ in dimension");
  }
  if (!f.kernel.same_kernel(g.kernel)) {
    throw Error(ErrorCode::kInvalidArgument, "frame pair families must share one kernel");
  }
  quad.validate();
}

TailResult tail_sup(const kernels::KernelSpec& k, const MeasureSpec& index, double radius,
                    const std::vector<Point>& probes, const QuadConfig& cfg) {
  if (probes.empty()) throw Error(ErrorCode::kInvalidArgument, "tail_sup needs at least one probe");
  if (!(radius > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tail radius must be positive");
  TailResult out;
  out.value = -std::numeric_limits<double>::infinity();
  out.min_over_probes = std::numeric_limits<double>::infinity();
  for (const auto& x : probes) {
    const auto res = quad::integrate_complement(
        [&](const Point& y) { return kernels::normalized_modulus_sq(k, x, y); }, Ball(x, radius),
        index, cfg);
    if (res.value > out.value) {
      out.value = res.value;
      out.argmax = x;
    }
    out.min_over_probes = std::min(out.min_over_probes, res.value);
    out.truncation_bound = std::max(out.truncation_bound, res.truncation_bound);
  }
  return out;
}

DoubleTail double_tail(const FramePairSpec& pair, const Ball& b) {
  pair.validate();
  if (b.dim() != pair.f.index.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "ball dimension differs from the frame pair");
  }
  const QuadConfig& cfg = pair.quad;
  if (cfg.truncation_radius_for(b.radius()) <= b.radius()) {
    throw Error(ErrorCode::kInvalidArgument, "truncation radius must exceed the ball radius");
  }
  const MeasureSpec& mu = pair.f.index;
  const MeasureSpec& nu = pair.g.index;
  const DoubleIntegral integral(pair.f.kernel, b, cfg);

  DoubleTail out;
  out.t1 = integral({&mu, false}, {&nu, true});
  out.t2 = integral({&nu, false}, {&mu, true});
  const double mu_b = space::ball_mass(mu, b, cfg).value;
  const double nu_b = space::ball_mass(nu, b, cfg).value;
  out.normalizer = mu_b + nu_b;
  out.truncation_bound = std::max(nu_b * uniform_tail(mu, integral.cut(), cfg.tail),
                                  mu_b * uniform_tail(nu, integral.cut(), cfg.tail));
  return out;
}

LocalizationRow localization_defect(const FramePairSpec& pair, const Ball& b) {
  if (!pair.self_dual) throw Error(ErrorCode::kGeneralDualsUnsupported, "general duals unsupported");
  const DoubleTail dt = double_tail(pair, b);
  if (!(dt.normalizer > 0.0)) throw Error(ErrorCode::kEmptyBall, "empty ball");
  LocalizationRow row;
  row.center = b.center();
  row.r = b.radius();
  row.t1 = dt.t1;
  row.t2 = dt.t2;
  row.defect = std::abs(dt.t2 - dt.t1);
  row.normalizer = dt.normalizer;
  row.eps_eff = row.defect / dt.normalizer;
  row.trunc_bound = dt.truncation_bound;
  return row;
}

std::vector<LocalizationRow> localization_table(const FramePairSpec& pair,
                                                const std::vector<Point>& centers,
                                                const std::vector<double>& radii) {
  std::vector<LocalizationRow> rows;
  rows.reserve(centers.size() * radii.size());
  for (const auto& c : centers) {
    for (double r : radii) rows.push_back(localization_defect(pair, Ball(c, r)));
  }
  return rows;
}

TailResult hap_check(const kernels::KernelSpec& k, const MeasureSpec& gamma, double radius,
                     const std::vector<Point>& probes, const QuadConfig& cfg) {
  if (!gamma.is_discrete()) throw Error(ErrorCode::kInvalidArgument, "hap_check needs a discrete set");
  return tail_sup(k, gamma, radius, probes, cfg);
}

MeanValueResult mean_value_check(const kernels::KernelSpec& k, const MeasureSpec& lambda,
                                 double r, const std::vector<Point>& probes,
                                 const std::vector<KernelCombination>& test_functions,
                                 const QuadConfig& cfg) {
  if (probes.empty() || test_functions.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "mean value check needs probes and test functions");
  }
  for (const auto& f : test_functions) {
    if (f.centers.size() != f.coeffs.size() || f.centers.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "test function centers and coefficients differ");
    }
  }
  // <f, k_x> = sum_j c_j <k_{x_j}, k_x> = sum_j c_j K(x, x_j) / norms.
  auto pair_with = [&](const KernelCombination& f, const Point& x) {
    CompensatedSum<cplx> s;
    for (std::size_t j = 0; j < f.centers.size(); ++j) {
      s += f.coeffs[j] * kernels::normalized_inner(k, x, f.centers[j]).value;
    }
    return s.value();
  };
  MeanValueResult out;
  out.c_r = -1.0;
  for (const auto& a : probes) {
    for (std::size_t i = 0; i < test_functions.size(); ++i) {
      const auto& f = test_functions[i];
      const double num = std::norm(pair_with(f, a));
      const double den =
          quad::integrate_ball([&](const Point& x) { return std::norm(pair_with(f, x)); },
                               Ball(a, r), lambda, cfg)
              .value;
      double ratio = 0.0;
      if (num > 0.0) {
        if (den < 1e-14 * num) {
          throw Error(ErrorCode::kDegenerateTestFunction, "degenerate test function");
        }
        ratio = num / den;
      }
      if (ratio > out.c_r) {
        out.c_r = ratio;
        out.argmax = a;
        out.argmax_function = i;
      }
    }
  }
  return out;
}

std::vector<Point> default_probes(const kernels::KernelSpec& k, double cell) {
  const int d = k.ambient_dim();
  std::size_t total = 1;
  for (int i = 0; i < d; ++i) total *= 5;
  std::vector<Point> out;
  out.reserve(total);
  for (std::size_t n = 0; n < total; ++n) {
    Point p = Point::zeros(d);
    std::size_t rem = n;
    for (int i = d - 1; i >= 0; --i) {
      p[i] = cell * static_cast<double>(rem % 5) / 5.0;
      rem /= 5;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace framelab::localization
