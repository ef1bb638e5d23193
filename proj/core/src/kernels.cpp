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

#include "framelab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace framelab::kernels {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// sin(u) / u with a series near zero.
double sinc_raw(double u) {
  if (std::abs(u) < 1e-4) return 1.0 - u * u / 6.0;
  return std::sin(u) / u;
}

void check_dims(const KernelSpec& k, const Point& x, const Point& y) {
  const int d = k.ambient_dim();
  if (x.dim() != d || y.dim() != d) {
    throw Error(ErrorCode::kDimensionMismatch,
                k.name() + " kernel expects points of dimension " + std::to_string(d));
  }
}

// <M_eta T_s phi0, M_xi T_t phi0> for y = (s, eta), x = (t, xi), time
// coordinates first: exp(i pi (eta - xi).(s + t)) exp(-pi |x - y|^2 / 2).
cplx gabor_inner(int n, const Point& x, const Point& y) {
  double phase = 0.0;
  for (int i = 0; i < n; ++i) {
    phase += (y[n + i] - x[n + i]) * (y[i] + x[i]);
  }
  const double mag = std::exp(-0.5 * kPi * distance_sq(x, y));
  return std::polar(mag, kPi * phase);
}

}  // namespace

KernelSpec::KernelSpec(PaleyWiener k) : v_(std::make_shared<const Variant>(k)) {
  if (!(k.band > 0.0) || !std::isfinite(k.band)) {
    throw Error(ErrorCode::kInvalidArgument, "Paley-Wiener band must be positive");
  }
}

KernelSpec::KernelSpec(Fock k) : v_(std::make_shared<const Variant>(k)) {}

KernelSpec::KernelSpec(GaborGaussian k) : v_(std::make_shared<const Variant>(k)) {
  if (k.n < 1 || 2 * k.n > kMaxDim) {
    throw Error(ErrorCode::kInvalidArgument, "Gabor dimension n must be 1 or 2");
  }
}

KernelSpec::KernelSpec(Tabulated k) : v_(std::make_shared<const Variant>(std::move(k))) {
  const auto& t = std::get<Tabulated>(*v_);
  if (!t.eval || !t.diagonal) {
    throw Error(ErrorCode::kInvalidArgument, "tabulated kernel needs both eval and diagonal");
  }
  if (t.dim < 1 || t.dim > kMaxDim) {
    throw Error(ErrorCode::kInvalidArgument, "tabulated kernel dimension must be between 1 and 4");
  }
}

int KernelSpec::ambient_dim() const noexcept {
  return std::visit(Overloaded{[](const PaleyWiener&) { return 1; }, [](const Fock&) { return 2; },
                               [](const GaborGaussian& g) { return 2 * g.n; },
                               [](const Tabulated& t) { return t.dim; }},
                    *v_);
}

std::string KernelSpec::name() const {
  return std::visit(Overloaded{[](const PaleyWiener&) { return std::string("paley-wiener"); },
                               [](const Fock&) { return std::string("fock"); },
                               [](const GaborGaussian&) { return std::string("gabor-gaussian"); },
                               [](const Tabulated&) { return std::string("tabulated"); }},
                    *v_);
}

bool KernelSpec::same_kernel(const KernelSpec& other) const noexcept {
  if (v_ == other.v_) return true;
  if (v_->index() != other.v_->index()) return false;
  if (const auto* a = std::get_if<PaleyWiener>(v_.get())) {
    return a->band == std::get<PaleyWiener>(*other.v_).band;
  }
  if (std::holds_alternative<Fock>(*v_)) return true;
  if (const auto* g = std::get_if<GaborGaussian>(v_.get())) {
    return g->n == std::get<GaborGaussian>(*other.v_).n;
  }
  return false;
}

MeasureSpec KernelSpec::normalized_measure() const {
  return std::visit(
      Overloaded{[](const PaleyWiener& p) { return MeasureSpec::lebesgue(1, p.band / kPi); },
                 [](const Fock&) { return MeasureSpec::lebesgue(2); },
                 [](const GaborGaussian& g) { return MeasureSpec::lebesgue(2 * g.n); },
                 [](const Tabulated&) -> MeasureSpec {
                   throw Error(ErrorCode::kInvalidArgument,
                               "tabulated kernels carry no normalized measure");
                 }},
      *v_);
}

bool KernelSpec::translation_invariant() const noexcept {
  return !std::holds_alternative<Tabulated>(*v_);
}

cplx kernel_eval(const KernelSpec& k, const Point& x, const Point& y) {
  check_dims(k, x, y);
  return std::visit(
      Overloaded{[&](const PaleyWiener& p) {
                   const double t = x[0] - y[0];
                   return cplx(p.band / kPi * sinc_raw(p.band * t), 0.0);
                 },
                 [&](const Fock&) {
                   const cplx z(x[0], x[1]);
                   const cplx w(y[0], y[1]);
                   return std::exp(kPi * z * std::conj(w));
                 },
                 [&](const GaborGaussian& g) { return gabor_inner(g.n, x, y); },
                 [&](const Tabulated& t) { return t.eval(x, y); }},
      k.variant());
}

double kernel_diagonal(const KernelSpec& k, const Point& x) {
  check_dims(k, x, x);
  return std::visit(Overloaded{[](const PaleyWiener& p) { return p.band / kPi; },
                               [&](const Fock&) { return std::exp(kPi * norm_sq(x)); },
                               [](const GaborGaussian&) { return 1.0; },
                               [&](const Tabulated& t) { return t.diagonal(x); }},
                    k.variant());
}

NormalizedKernelValue normalized_inner(const KernelSpec& k, const Point& x, const Point& y) {
  check_dims(k, x, y);
  cplx v = std::visit(
      Overloaded{[&](const PaleyWiener& p) { return cplx(sinc_raw(p.band * (x[0] - y[0])), 0.0); },
                 [&](const Fock&) {
                   // exp(pi z conj(w) - pi |z|^2 / 2 - pi |w|^2 / 2)
                   const double im = x[1] * y[0] - x[0] * y[1];
                   return std::polar(std::exp(-0.5 * kPi * distance_sq(x, y)), kPi * im);
                 },
                 [&](const GaborGaussian& g) { return gabor_inner(g.n, x, y); },
                 [&](const Tabulated& t) {
                   const double dx = t.diagonal(x);
                   const double dy = t.diagonal(y);
                   if (!(dx > 0.0) || !(dy > 0.0)) {
                     throw Error(ErrorCode::kKernelDegenerate,
                                 "kernel degenerate at point " + (dx > 0.0 ? y : x).to_string());
                   }
                   return t.eval(x, y) / std::sqrt(dx * dy);
                 }},
      k.variant());
  return {v, std::norm(v)};
}

double normalized_modulus_sq(const KernelSpec& k, const Point& x, const Point& y) {
  check_dims(k, x, y);
  const auto& v = k.variant();
  if (std::holds_alternative<Fock>(v)) return std::exp(-kPi * distance_sq(x, y));
  if (const auto* g = std::get_if<GaborGaussian>(&v)) {
    (void)g;
    return std::exp(-kPi * distance_sq(x, y));
  }
  if (const auto* p = std::get_if<PaleyWiener>(&v)) {
    const double s = sinc_raw(p->band * (x[0] - y[0]));
    return s * s;
  }
  return normalized_inner(k, x, y).modulus_sq;
}

bool isotropic(const KernelSpec& k) noexcept {
  return !std::holds_alternative<Tabulated>(k.variant());
}

double modulus_sq_at_distance(const KernelSpec& k, double t) {
  if (const auto* p = std::get_if<PaleyWiener>(&k.variant())) {
    const double s = sinc_raw(p->band * t);
    return s * s;
  }
  if (!isotropic(k)) {
    throw Error(ErrorCode::kInvalidArgument, "kernel modulus is not a function of distance");
  }
  return std::exp(-kPi * t * t);
}

std::pair<double, double> diagonal_bounds(const KernelSpec& k, const Ball& region,
                                          double sample_grid_spacing) {
  if (!(sample_grid_spacing > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "sample grid spacing must be positive");
  }
  if (region.dim() != k.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "region dimension does not match kernel");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  std::size_t n = 0;
  const Lattice grid(sample_grid_spacing, region.dim());
  grid.for_each_in_ball(Point::zeros(region.dim()), region.radius(), [&](const Point& offset) {
    const double v = kernel_diagonal(k, region.center() + offset);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    ++n;
  });
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "diagonal sample grid is empty");
  return {lo, hi};
}

}  // namespace framelab::kernels
