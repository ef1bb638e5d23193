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

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>

#include "framelab/error.hpp"
#include "framelab/kernels.hpp"
#include "framelab/linalg.hpp"
#include "framelab/rng.hpp"

namespace framelab {
namespace {

constexpr double kPi = std::numbers::pi;

// K(x, y) = (1 / 2 pi) \int_{-b}^{b} e^{i xi (x - y)} d xi by composite Simpson.
double pw_frequency_oracle(double band, double t) {
  const int n = 4000;
  const double h = 2.0 * band / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double xi = -band + i * h;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * std::cos(xi * t);
  }
  return acc * h / 3.0 / (2.0 * kPi);
}

TEST(PaleyWiener, ClosedFormMatchesFrequencyIntegral) {
  for (double band : {kPi, 2.0, 5.5}) {
    const kernels::KernelSpec k(kernels::PaleyWiener{band});
    for (double x : {-3.7, -1.0, 0.0, 0.25, 2.0}) {
      for (double y : {0.0, 0.5, 1.0, 7.3}) {
        EXPECT_NEAR(kernels::kernel_eval(k, Point{x}, Point{y}).real(), pw_frequency_oracle(band, x - y), 1e-10);
      }
    }
  }
}

TEST(PaleyWiener, NormalizedValueIsSinc) {
  const kernels::KernelSpec k(kernels::PaleyWiener{});
  EXPECT_NEAR(kernels::normalized_inner(k, Point{0.0}, Point{0.5}).value.real(), 2.0 / kPi, 1e-15);
  EXPECT_NEAR(kernels::normalized_inner(k, Point{3.0}, Point{1.0}).modulus_sq, 0.0, 1e-30);
  // Both sides of the series switch near zero match sin(u) / u in extended precision.
  for (double u : {0.5e-4, 0.99e-4, 1.01e-4, 1e-3}) {
    const long double exact = std::sin(static_cast<long double>(u)) / u;
    EXPECT_NEAR(kernels::normalized_inner(k, Point{0.0}, Point{u / kPi}).value.real(),
                static_cast<double>(exact), 2e-16);
  }
}

TEST(Fock, ReproducingPropertyByQuadrature) {
  // <k_w, k_z> = \int e^{pi u conj(w)} e^{pi conj(u) z} e^{-pi |u|^2} du = K(z, w).
  const kernels::KernelSpec k(kernels::Fock{});
  const std::complex<double> z(0.3, -0.2), w(-0.4, 0.5);
  const double h = 0.04, lim = 7.0;
  std::complex<double> acc = 0.0;
  for (double a = -lim; a <= lim; a += h) {
    for (double b = -lim; b <= lim; b += h) {
      const std::complex<double> u(a, b);
      acc += std::exp(kPi * u * std::conj(w)) * std::exp(kPi * std::conj(u) * z) * std::exp(-kPi * std::norm(u));
    }
  }
  acc *= h * h;
  const auto direct = kernels::kernel_eval(k, Point{z.real(), z.imag()}, Point{w.real(), w.imag()});
  EXPECT_NEAR(std::abs(acc - direct), 0.0, 1e-10);
}

TEST(Fock, NormalizedModulusIsGaussian) {
  const kernels::KernelSpec k(kernels::Fock{});
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const Point x{rng.uniform(-30, 30), rng.uniform(-30, 30)};
    const Point y{x[0] + rng.uniform(-2, 2), x[1] + rng.uniform(-2, 2)};
    const auto v = kernels::normalized_inner(k, x, y);
    EXPECT_NEAR(v.modulus_sq, std::exp(-kPi * distance_sq(x, y)), 1e-13);
    EXPECT_NEAR(std::norm(v.value), v.modulus_sq, 1e-13);
    EXPECT_TRUE(std::isfinite(v.value.real()));
  }
}

TEST(Fock, NormalizedValueMatchesRawRatioNearOrigin) {
  const kernels::KernelSpec k(kernels::Fock{});
  const Point x{0.4, -0.3}, y{-0.2, 0.9};
  const auto raw = kernels::kernel_eval(k, x, y) /
                   std::sqrt(kernels::kernel_diagonal(k, x) * kernels::kernel_diagonal(k, y));
  EXPECT_NEAR(std::abs(kernels::normalized_inner(k, x, y).value - raw), 0.0, 1e-14);
}

// <M_eta T_s phi0, M_xi T_t phi0> by the trapezoid rule over the real line.
std::complex<double> gabor_oracle(const Point& x, const Point& y) {
  auto phi0 = [](double t) { return std::pow(2.0, 0.25) * std::exp(-kPi * t * t); };
  const double h = 0.005;
  std::complex<double> acc = 0.0;
  for (double t = -12.0; t <= 12.0; t += h) {
    acc += std::polar(phi0(t - y[0]) * phi0(t - x[0]), 2.0 * kPi * (y[1] - x[1]) * t);
  }
  return acc * h;
}

TEST(GaborGaussian, MatchesDirectIntegralOverTheLine) {
  const kernels::KernelSpec k(kernels::GaborGaussian{1});
  Rng rng(5);
  for (int i = 0; i < 12; ++i) {
    const Point x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Point y{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const auto v = kernels::normalized_inner(k, x, y).value;
    EXPECT_NEAR(std::abs(v - gabor_oracle(x, y)), 0.0, 1e-10) << x.to_string() << " " << y.to_string();
  }
}

TEST(GaborGaussian, TwoDimensionalTensorsFactor) {
  const kernels::KernelSpec k1(kernels::GaborGaussian{1});
  const kernels::KernelSpec k2(kernels::GaborGaussian{2});
  // Coordinates (t1, t2, xi1, xi2) split into (t1, xi1) and (t2, xi2).
  const Point x{0.3, -0.7, 1.1, 0.2}, y{-0.5, 0.4, 0.6, -0.9};
  const auto a = kernels::normalized_inner(k1, Point{x[0], x[2]}, Point{y[0], y[2]}).value;
  const auto b = kernels::normalized_inner(k1, Point{x[1], x[3]}, Point{y[1], y[3]}).value;
  EXPECT_NEAR(std::abs(kernels::normalized_inner(k2, x, y).value - a * b), 0.0, 1e-14);
}

CMatrix gram_of(const kernels::KernelSpec& k, const std::vector<Point>& pts) {
  CMatrix g(pts.size(), pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) g(i, j) = kernels::kernel_eval(k, pts[i], pts[j]);
  }
  return g;
}

TEST(Kernels, GramMatricesArePositiveSemidefinite) {
  Rng rng(17);
  const std::vector<kernels::KernelSpec> ks{kernels::PaleyWiener{}, kernels::Fock{},
                                            kernels::GaborGaussian{1}, kernels::GaborGaussian{2}};
  for (const auto& k : ks) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto n = static_cast<std::size_t>(rng.integer(2, 12));
      std::vector<Point> pts;
      for (std::size_t i = 0; i < n; ++i) {
        Point p = Point::zeros(k.ambient_dim());
        for (int c = 0; c < p.dim(); ++c) p[c] = rng.uniform(-1.5, 1.5);
        pts.push_back(p);
      }
      const auto g = gram_of(k, pts);
      const auto eig = jacobi_eigenvalues(g);
      EXPECT_GE(eig.front(), -1e-10) << k.name();
      Eigen::MatrixXcd m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = g(i, j);
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
      EXPECT_NEAR(eig.front(), es.eigenvalues()(0), 1e-9 * std::max(1.0, es.eigenvalues()(n - 1)));
    }
  }
}

TEST(Kernels, HermitianSymmetry) {
  Rng rng(23);
  const std::vector<kernels::KernelSpec> ks{kernels::PaleyWiener{2.0}, kernels::Fock{}, kernels::GaborGaussian{1}};
  for (const auto& k : ks) {
    const int d = k.ambient_dim();
    Point x = Point::zeros(d), y = Point::zeros(d);
    for (int c = 0; c < d; ++c) {
      x[c] = rng.uniform(-2, 2);
      y[c] = rng.uniform(-2, 2);
    }
    const auto a = kernels::normalized_inner(k, x, y).value;
    const auto b = kernels::normalized_inner(k, y, x).value;
    EXPECT_NEAR(std::abs(a - std::conj(b)), 0.0, 1e-15) << k.name();
  }
}

TEST(Kernels, DiagonalBounds) {
  const kernels::KernelSpec pw(kernels::PaleyWiener{2.0});
  const auto [lo, hi] = kernels::diagonal_bounds(pw, Ball(Point{0.0}, 3.0), 0.5);
  EXPECT_DOUBLE_EQ(lo, 2.0 / kPi);
  EXPECT_DOUBLE_EQ(hi, 2.0 / kPi);
  const kernels::KernelSpec fock(kernels::Fock{});
  const auto [flo, fhi] = kernels::diagonal_bounds(fock, Ball(Point{0.0, 0.0}, 1.0), 0.25);
  EXPECT_NEAR(flo, 1.0, 1e-15);
  EXPECT_LE(fhi, std::exp(kPi) * (1 + 1e-12));
  EXPECT_GE(fhi, std::exp(kPi * 0.75 * 0.75));
}

TEST(Kernels, DegenerateTabulatedKernelIsReported) {
  kernels::Tabulated t;
  t.dim = 1;
  t.eval = [](const Point& x, const Point& y) { return cplx(x[0] * y[0], 0.0); };
  t.diagonal = [](const Point& x) { return x[0] * x[0]; };
  const kernels::KernelSpec k(std::move(t));
  EXPECT_NO_THROW(kernels::normalized_inner(k, Point{1.0}, Point{2.0}));
  try {
    kernels::normalized_inner(k, Point{0.0}, Point{2.0});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kKernelDegenerate);
  }
}

TEST(Kernels, DimensionMismatchIsReported) {
  const kernels::KernelSpec k(kernels::Fock{});
  EXPECT_THROW(kernels::kernel_eval(k, Point{0.0}, Point{0.0, 1.0}), Error);
}

}  // namespace
}  // namespace framelab
