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

#include "framelab/error.hpp"
#include "framelab/finframe.hpp"
#include "framelab/rng.hpp"

namespace framelab {
namespace {

using namespace finframe;

CMatrix columns(std::initializer_list<std::initializer_list<cplx>> cols) {
  const std::size_t n = cols.begin()->size();
  CMatrix v(n, cols.size());
  std::size_t j = 0;
  for (const auto& c : cols) {
    std::size_t i = 0;
    for (const auto& z : c) v(i++, j) = z;
    ++j;
  }
  return v;
}

FiniteFrame mercedes() {
  const double s = std::sqrt(3.0) / 2.0;
  return FiniteFrame::unit_weights(columns({{0.0, 1.0}, {-s, -0.5}, {s, -0.5}}));
}

Eigen::MatrixXcd to_eigen(const CMatrix& a) {
  Eigen::MatrixXcd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  }
  return m;
}

// Orthogonal projector onto the column span through a rank-revealing factorization.
Eigen::MatrixXcd span_oracle(const CMatrix& v) {
  const Eigen::MatrixXcd m = to_eigen(v);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(m);
  return m * cod.pseudoInverse();
}

double max_abs_diff(const CMatrix& a, const Eigen::MatrixXcd& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      d = std::max(d, std::abs(a(i, j) - b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
    }
  }
  return d;
}

TEST(FrameOperator, WorkedExamples) {
  const auto onb = FiniteFrame::unit_weights(CMatrix::identity(2));
  EXPECT_LT((frame_operator(onb).matrix - CMatrix::identity(2)).frobenius_norm(), 1e-15);
  CMatrix half(2, 2);
  half(0, 0) = half(1, 1) = 1.5;
  EXPECT_LT((frame_operator(mercedes()).matrix - half).frobenius_norm(), 1e-15);
}

TEST(FrameBoundsOracle, OrthonormalMercedesAndRepeatedVector) {
  const auto onb = frame_bounds(FiniteFrame::unit_weights(CMatrix::identity(2)));
  EXPECT_EQ(onb.lower, 1.0);
  EXPECT_EQ(onb.upper, 1.0);
  const auto m = frame_bounds(mercedes());
  EXPECT_NEAR(m.lower, 1.5, 1e-12);
  EXPECT_NEAR(m.upper, 1.5, 1e-12);
  const auto e = frame_bounds(FiniteFrame::unit_weights(columns({{1.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}})));
  EXPECT_NEAR(e.lower, 1.0, 1e-12);
  EXPECT_NEAR(e.upper, 2.0, 1e-12);
}

TEST(FrameBoundsOracle, WeightsScaleTheOperator) {
  const FiniteFrame f(CMatrix::identity(3), {0.5, 2.0, 3.0});
  const auto b = frame_bounds(f);
  EXPECT_DOUBLE_EQ(b.lower, 0.5);
  EXPECT_DOUBLE_EQ(b.upper, 3.0);
}

TEST(GramOracle, WorkedExamples) {
  const auto rep = FiniteFrame::unit_weights(columns({{1.0, 0.0}, {1.0, 0.0}}));
  const auto g = gram(rep).matrix;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(std::abs(g(i, j) - 1.0), 0.0, 1e-15);
  }
  const auto rb = riesz_bounds(rep);
  EXPECT_NEAR(rb.lower, 0.0, 1e-15);
  EXPECT_NEAR(rb.upper, 2.0, 1e-15);
  const auto mb = riesz_bounds(mercedes());
  EXPECT_NEAR(mb.lower, 0.0, 1e-14);
  EXPECT_NEAR(mb.upper, 1.5, 1e-14);
  const auto ev = jacobi_eigenvalues(gram(mercedes()).matrix);
  EXPECT_NEAR(ev[1], 1.5, 1e-14);
}

TEST(Projection, MatchesOrthogonalProjectorOnRandomSubspaces) {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 8));
    const auto m = static_cast<std::size_t>(rng.integer(1, 16));
    const auto f = random_frame(rng, n, m);
    const auto oracle = span_oracle(f.vectors());
    const auto p = projection_matrix(f);
    EXPECT_LT(max_abs_diff(p, oracle), 1e-10) << "n=" << n << " m=" << m;
    EXPECT_LT(max_abs_diff(span_projector(f), oracle), 1e-10);
    EXPECT_LT((p * p - p).frobenius_norm(), 1e-12);
    EXPECT_LT(hermitian_defect(p), 1e-12);

    std::vector<cplx> x(n);
    for (auto& z : x) z = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto a = project(f, x);
    const auto b = project_dual_form(f, x);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-10);
  }
}

TEST(CanonicalDual, SatisfiesReconstruction) {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 6));
    const auto f = random_frame(rng, n, n + static_cast<std::size_t>(rng.integer(0, 6)));
    const auto dual = canonical_dual(f);
    // S dual_i = f_i, with S inverted independently.
    const Eigen::MatrixXcd s = to_eigen(frame_operator(f).matrix);
    const Eigen::MatrixXcd expected = s.inverse() * to_eigen(f.vectors());
    EXPECT_LT(max_abs_diff(dual.vectors(), expected), 1e-9 * std::max(1.0, s.inverse().norm()));
  }
}

TEST(CanonicalDual, ParsevalFramesAreSelfDual) {
  Rng rng(43);
  const auto p = parseval_from(random_frame(rng, 4, 9));
  const auto b = frame_bounds(p);
  EXPECT_NEAR(b.lower, 1.0, 1e-12);
  EXPECT_NEAR(b.upper, 1.0, 1e-12);
  const auto d = canonical_dual(p);
  EXPECT_EQ(max_abs_diff(d.vectors(), to_eigen(p.vectors())), 0.0);
}

TEST(ComparisonIdentity, HoldsOnRandomInstances) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(rng.integer(1, 8));
    const auto f = random_frame(rng, n, static_cast<std::size_t>(rng.integer(1, 16)));
    const auto g = random_frame(rng, n, static_cast<std::size_t>(rng.integer(1, 16)));
    IndexSubset omega;
    for (std::size_t i = 0; i < f.size(); ++i) omega.in_f.push_back(rng.uniform() < 0.5);
    for (std::size_t i = 0; i < g.size(); ++i) omega.in_g.push_back(rng.uniform() < 0.5);
    EXPECT_LT(comparison_residual(f, g, omega), 1e-10) << "trial " << trial;
  }
}

TEST(ComparisonIdentity, EmptySubsetGivesZeroTerms) {
  Rng rng(8);
  const auto f = random_frame(rng, 3, 5);
  const auto g = random_frame(rng, 3, 4);
  const auto t = comparison_identity(f, g, IndexSubset::empty(f, g));
  EXPECT_EQ(t.lhs, cplx(0.0));
  EXPECT_EQ(t.diag_g, cplx(0.0));
  EXPECT_LT(t.residual, 1e-14);
}

TEST(ComparisonIdentity, BallSubsetsUseIndexPoints) {
  Rng rng(9);
  const auto f = random_frame(rng, 4, 10);
  const auto g = random_frame(rng, 4, 12);
  const auto omega = IndexSubset::from_ball(f, g, Ball(Point{0.5, 0.5}, 0.3));
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_EQ(omega.in_f[i], distance(f.index_point(i), Point{0.5, 0.5}) <= 0.3);
  }
  EXPECT_LT(comparison_identity(f, g, omega).residual, 1e-10);
}

TEST(ComparisonIdentity, DifferentSpacesRejected) {
  Rng rng(10);
  const auto f = random_frame(rng, 3, 5);
  const auto g = random_frame(rng, 4, 5);
  EXPECT_THROW(comparison_identity(f, g, IndexSubset::empty(f, g)), Error);
}

TEST(DoubleSum, FullSubsetCollapsesToDiagonal) {
  Rng rng(12);
  const auto f = random_frame(rng, 3, 6);
  const auto g = random_frame(rng, 3, 5);
  const auto diag = diagonal_terms(f, g);
  cplx total = 0.0;
  for (std::size_t x = 0; x < g.size(); ++x) total += g.weight(x) * diag.g_side[x];
  const auto s = omega_double_sum(f, g, std::vector<bool>(f.size(), true));
  EXPECT_NEAR(std::abs(s - total), 0.0, 1e-12);
  EXPECT_LT(diag.max_imag, 1e-12);
}

TEST(Errors, DegenerateAndRankAmbiguousFrames) {
  try {
    frame_bounds(FiniteFrame::unit_weights(CMatrix(3, 2)));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateFrame);
  }
  // Eigenvalue ratio 1e-10 sits inside the ambiguity band.
  const auto f = FiniteFrame::unit_weights(columns({{1.0, 0.0}, {0.0, 1e-5}}));
  try {
    canonical_dual(f);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankDeficient);
  }
}

}  // namespace
}  // namespace framelab
