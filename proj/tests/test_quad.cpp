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

#include <cmath>
#include <complex>
#include <numbers>

#include "framelab/error.hpp"
#include "framelab/quad.hpp"

namespace framelab {
namespace {

constexpr double kPi = std::numbers::pi;

double gauss(const Point& x) { return std::exp(-kPi * norm_sq(x)); }

QuadConfig fine(double h = 0.02, double margin = 6.0) {
  QuadConfig q;
  q.h = h;
  q.margin = margin;
  return q;
}

TEST(Quad, GaussianOverBallsClosedForms) {
  const double r = 1.3;
  // d = 1: erf(sqrt(pi) r); d = 2: 1 - e^{-pi r^2};
  // d = 3: erf(sqrt(pi) r) - 2 r e^{-pi r^2}; d = 4: 1 - (1 + pi r^2) e^{-pi r^2}.
  const double e = std::exp(-kPi * r * r);
  const double expected[] = {std::erf(std::sqrt(kPi) * r), 1.0 - e, std::erf(std::sqrt(kPi) * r) - 2.0 * r * e,
                             1.0 - (1.0 + kPi * r * r) * e};
  for (int d = 1; d <= 4; ++d) {
    const auto res = quad::integrate_ball(gauss, Ball(Point::zeros(d), r), MeasureSpec::lebesgue(d),
                                          fine(d >= 3 ? 0.05 : 0.02));
    EXPECT_NEAR(res.value, expected[d - 1], 1e-9) << "d=" << d;
  }
}

TEST(Quad, ComplementTailOfTheGaussian) {
  for (double r : {0.5, 1.0, 1.5}) {
    const auto res = quad::integrate_complement(gauss, Ball(Point{0.3, -0.2}, r), MeasureSpec::lebesgue(2), fine());
    // Off-center: compare against the shifted closed form computed on a centered ball instead.
    const auto centered = quad::integrate_complement(gauss, Ball(Point{0.0, 0.0}, r), MeasureSpec::lebesgue(2), fine());
    EXPECT_NEAR(centered.value, std::exp(-kPi * r * r), 1e-12) << "r=" << r;
    EXPECT_LT(centered.truncation_bound, 1e-40);
    EXPECT_GT(res.value, 0.0);
  }
}

double sinc2(double x) {
  if (x == 0.0) return 1.0;
  const double s = std::sin(kPi * x) / (kPi * x);
  return s * s;
}

// Independent oracle: composite Simpson on sin^2(pi x) / (pi x)^2 over [-a, a].
double simpson_sinc2(double a) {
  const int n = 20000;
  const double h = 2.0 * a / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * sinc2(-a + i * h);
  }
  return acc * h / 3.0;
}

TEST(Quad, SincSquaredOverCenteredIntervals) {
  // Main-lobe energy: \int_{-1}^{1} sinc^2 = 0.9028; the half-width interval holds 0.7737.
  EXPECT_NEAR(simpson_sinc2(1.0), 0.9028, 1e-4);
  EXPECT_NEAR(simpson_sinc2(0.5), 0.7737, 1e-4);
  for (double a : {0.5, 1.0}) {
    const auto res = quad::integrate_ball([](const Point& x) { return sinc2(x[0]); }, Ball(Point{0.0}, a),
                                          MeasureSpec::lebesgue(1), fine());
    EXPECT_NEAR(res.value, simpson_sinc2(a), 1e-12) << "a=" << a;
  }
}

TEST(Quad, NodeWeightsSumToBallVolume) {
  const double vol[] = {2.0, kPi, 4.0 * kPi / 3.0, kPi * kPi / 2.0};
  for (int d = 1; d <= 4; ++d) {
    const auto nodes = quad::discretize(MeasureSpec::lebesgue(d), quad::Shell{Point::zeros(d), 0.0, 1.0}, 0.1);
    double w = 0.0;
    for (const auto& n : nodes) {
      w += n.w;
      EXPECT_LE(std::sqrt(norm_sq(n.x)), 1.0 + 1e-14);
    }
    // Angular panels carry a small quadrature error at this coarse h.
    EXPECT_NEAR(w, vol[d - 1], 1e-9 * vol[d - 1]) << "d=" << d;
  }
}

TEST(Quad, EvenPolynomialMoments) {
  // \int_{B(0,1) in R^2} |x|^4 dx = 2 pi / 6.
  const auto res = quad::integrate_ball([](const Point& x) { return norm_sq(x) * norm_sq(x); },
                                        Ball(Point{0.0, 0.0}, 1.0), MeasureSpec::lebesgue(2), fine(0.05));
  EXPECT_NEAR(res.value, kPi / 3.0, 1e-12);
}

TEST(Quad, DiscreteMeasuresSumAtoms) {
  const auto lat = MeasureSpec::lattice(1.0, 2);
  const auto res = quad::integrate_ball([](const Point&) { return 1.0; }, Ball(Point{0.0, 0.0}, 2.0), lat, fine());
  EXPECT_DOUBLE_EQ(res.value, 13.0);
  EXPECT_EQ(res.node_count, 13u);
  const auto tail = quad::integrate_complement(gauss, Ball(Point{0.0, 0.0}, 1.0), lat, fine());
  // Atoms at |x| in {sqrt 2, 2, sqrt 5, ...} within radius 7.
  double oracle = 0.0;
  for (int i = -7; i <= 7; ++i) {
    for (int j = -7; j <= 7; ++j) {
      const double r2 = i * i + j * j;
      if (r2 > 1.0 && r2 <= 49.0) oracle += std::exp(-kPi * r2);
    }
  }
  EXPECT_NEAR(tail.value, oracle, 1e-16);
}

TEST(Quad, ComplexIntegrandsAreSupported) {
  const auto res = quad::integrate_ball([](const Point& x) { return std::polar(1.0, kPi * x[0]); },
                                        Ball(Point{0.0}, 0.5), MeasureSpec::lebesgue(1), fine());
  EXPECT_NEAR(res.value.real(), 2.0 / kPi, 1e-12);
  EXPECT_NEAR(res.value.imag(), 0.0, 1e-15);
}

TEST(Quad, NonFiniteIntegrandIsReported) {
  try {
    quad::integrate_ball([](const Point& x) { return 1.0 / x[0]; }, Ball(Point{0.0}, 1.0), MeasureSpec::lattice(1.0, 1),
                         fine());
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonFiniteIntegrand);
  }
}

TEST(Quad, TruncationBoundDominatesNeglectedTail) {
  // Lattice tail beyond R_tr against the Gaussian envelope.
  const auto lat = MeasureSpec::lattice(0.5, 2);
  const double r_tr = 2.0;
  const double bound = quad::tail_bound(lat, Point{0.1, 0.2}, r_tr, TailModel::gaussian());
  double neglected = 0.0;
  for (int i = -40; i <= 40; ++i) {
    for (int j = -40; j <= 40; ++j) {
      const Point x{0.5 * i, 0.5 * j};
      const double t = distance(x, Point{0.1, 0.2});
      if (t > r_tr) neglected += std::exp(-kPi * t * t);
    }
  }
  EXPECT_GE(bound, neglected);
}

TEST(Quad, InvalidConfigRejected) {
  QuadConfig q;
  q.h = 0.0;
  EXPECT_THROW(q.validate(), Error);
}

}  // namespace
}  // namespace framelab
