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

#include <complex>
#include <functional>
#include <memory>
#include <numbers>
#include <string>
#include <utility>
#include <variant>

#include "framelab/measure.hpp"
#include "framelab/point.hpp"

namespace framelab {

using cplx = std::complex<double>;

namespace kernels {

/// Band-limited functions with spectrum in [-band, band]; kernel with respect
/// to Lebesgue measure is sin(band t) / (pi t).
struct PaleyWiener {
  double band = std::numbers::pi;
};

/// Bargmann-Fock space of one complex variable with raw kernel exp(pi z conj(w))
/// and measure exp(-pi |z|^2) dA. Points are (Re z, Im z).
struct Fock {};

/// Time-frequency shifts rho(p, q) phi0 of the L^2-normalized Gaussian on R^n,
/// indexed by points (p_1..p_n, q_1..q_n) of R^{2n}.
struct GaborGaussian {
  int n = 1;
};

/// User-supplied kernel; must provide its own diagonal.
struct Tabulated {
  int dim = 1;
  std::function<cplx(const Point&, const Point&)> eval;
  std::function<double(const Point&)> diagonal;
};

struct NormalizedKernelValue {
  cplx value;
  double modulus_sq = 0.0;
};

class KernelSpec {
 public:
  using Variant = std::variant<PaleyWiener, Fock, GaborGaussian, Tabulated>;

  KernelSpec(PaleyWiener k);
  KernelSpec(Fock k);
  KernelSpec(GaborGaussian k);
  KernelSpec(Tabulated k);

  const Variant& variant() const noexcept { return *v_; }
  int ambient_dim() const noexcept;
  std::string name() const;

  /// Same kernel family and parameters (Tabulated kernels compare by identity).
  bool same_kernel(const KernelSpec& other) const noexcept;

  /// Normalized measure ||K_x||^2 d sigma(x) under which the normalized
  /// kernels form a Parseval continuous frame (not available for Tabulated).
  MeasureSpec normalized_measure() const;

  /// True when |<k_x, k_y>| depends only on x - y.
  bool translation_invariant() const noexcept;

 private:
  std::shared_ptr<const Variant> v_;
};

/// K(x, y) = <K_y, K_x>.
cplx kernel_eval(const KernelSpec& k, const Point& x, const Point& y);

/// K(x, x) = ||K_x||^2.
double kernel_diagonal(const KernelSpec& k, const Point& x);

/// K(x, y) / sqrt(K(x, x) K(y, y)), evaluated without forming the raw
/// kernel where it would overflow.
NormalizedKernelValue normalized_inner(const KernelSpec& k, const Point& x, const Point& y);

/// |<k_x, k_y>|^2 only; the hot path for localization integrals.
double normalized_modulus_sq(const KernelSpec& k, const Point& x, const Point& y);

/// True when |<k_x, k_y>|^2 is a function of |x - y| alone.
bool isotropic(const KernelSpec& k) noexcept;

/// |<k_x, k_y>|^2 at |x - y| = t for isotropic kernels.
double modulus_sq_at_distance(const KernelSpec& k, double t);

/// min and max of K(x, x) over the grid center + spacing * Z^d inside the ball.
std::pair<double, double> diagonal_bounds(const KernelSpec& k, const Ball& region,
                                          double sample_grid_spacing);

}  // namespace kernels
}  // namespace framelab
