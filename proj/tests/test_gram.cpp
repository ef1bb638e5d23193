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
#include <numbers>

#include "framelab/gram.hpp"
#include "framelab/linalg.hpp"

namespace framelab {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Point> integers(int lo, int hi) {
  std::vector<Point> pts;
  for (int i = lo; i <= hi; ++i) pts.push_back(Point{static_cast<double>(i)});
  return pts;
}

TEST(KernelGram, ShannonOrthonormalityClosedForm) {
  const auto g = verify::kernel_gram(kernels::PaleyWiener{}, integers(-20, 20));
  EXPECT_LT((g - CMatrix::identity(41)).frobenius_norm(), 1e-8);
}

TEST(KernelGram, ShannonOrthonormalityFrequencyOracle) {
  // <k_m, k_n> = (1 / 2 pi) \int_{-pi}^{pi} e^{i xi (m - n)} d xi with unit-norm
  // kernels (K(x, x) = 1 for band pi), by composite Simpson.
  auto oracle = [](int d) {
    const int n = 2000;
    const double h = 2.0 * kPi / n;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      acc += w * std::cos((-kPi + i * h) * d);
    }
    return acc * h / 3.0 / (2.0 * kPi);
  };
  const auto pts = integers(-20, 20);
  const auto g = verify::kernel_gram(kernels::PaleyWiener{}, pts);
  double worst = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      worst = std::max(worst, std::abs(g(i, j) - oracle(static_cast<int>(i) - static_cast<int>(j))));
    }
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(KernelGram, HermitianWithUnitDiagonal) {
  std::vector<Point> pts{Point{0.0, 0.0}, Point{0.5, 0.1}, Point{-1.0, 2.0}, Point{0.3, -0.7}};
  for (const kernels::KernelSpec& k : {kernels::KernelSpec(kernels::Fock{}), kernels::KernelSpec(kernels::GaborGaussian{1})}) {
    const auto g = verify::kernel_gram(k, pts);
    EXPECT_EQ(hermitian_defect(g), 0.0);
    for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_NEAR(std::abs(g(i, i) - 1.0), 0.0, 1e-15);
  }
}

TEST(GramStudy, DenseFockLatticeShowsFrameEvidence) {
  const auto s = verify::gram_truncation_study(kernels::Fock{}, MeasureSpec::lattice(0.5, 2), {});
  EXPECT_TRUE(s.frame_evidence);
  EXPECT_FALSE(s.riesz_evidence);
  ASSERT_EQ(s.windows.size(), 3u);
  EXPECT_GT(s.windows.back().frame_lower, 0.01);
  // Redundant family: the raw Gram matrix is nearly singular.
  EXPECT_LT(s.windows.back().min_eig, 1e-6);
}

TEST(GramStudy, SparseFockLatticeIsRieszNotFrame) {
  const auto s = verify::gram_truncation_study(kernels::Fock{}, MeasureSpec::lattice(1.2, 2), {});
  EXPECT_TRUE(s.riesz_evidence);
  EXPECT_FALSE(s.frame_evidence);
  EXPECT_GT(s.windows.back().min_eig, 0.01);
}

TEST(GramStudy, PaleyWienerIntegersGiveIdentitySpectra) {
  verify::GramStudyConfig cfg;
  cfg.windows = {5.0, 10.0, 20.0};
  const auto s = verify::gram_truncation_study(kernels::PaleyWiener{}, MeasureSpec::lattice(1.0, 1), cfg);
  for (const auto& w : s.windows) {
    EXPECT_NEAR(w.min_eig, 1.0, 1e-8);
    EXPECT_NEAR(w.max_eig, 1.0, 1e-8);
  }
  EXPECT_TRUE(s.riesz_evidence);
}

}  // namespace
}  // namespace framelab
