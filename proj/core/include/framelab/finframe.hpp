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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "framelab/linalg.hpp"
#include "framelab/point.hpp"
#include "framelab/rng.hpp"

namespace framelab::finframe {

struct FiniteHilbert {
  std::size_t dim = 1;
};

/// Vectors v_i (columns) with weights w_i > 0, indexed by atoms of a finite
/// measure sum_i w_i delta_{p_i}.
class FiniteFrame {
 public:
  FiniteFrame(CMatrix vectors, std::vector<double> weights, std::vector<Point> index_points);
  /// Index points default to (0), (1), ... on the real line.
  FiniteFrame(CMatrix vectors, std::vector<double> weights);

  static FiniteFrame unit_weights(CMatrix vectors);

  std::size_t dim() const noexcept { return v_.rows(); }
  std::size_t size() const noexcept { return v_.cols(); }
  FiniteHilbert space() const noexcept { return {dim()}; }

  std::span<const cplx> vector(std::size_t i) const noexcept { return v_.col(i); }
  double weight(std::size_t i) const noexcept { return w_[i]; }
  const Point& index_point(std::size_t i) const noexcept { return p_[i]; }

  const CMatrix& vectors() const noexcept { return v_; }
  const std::vector<double>& weights() const noexcept { return w_; }
  const std::vector<Point>& index_points() const noexcept { return p_; }

 private:
  CMatrix v_;
  std::vector<double> w_;
  std::vector<Point> p_;
};

struct HermitianOperator {
  CMatrix matrix;
};

struct GramMatrix {
  CMatrix matrix;  // G_ij = sqrt(w_i w_j) <v_j, v_i>
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Relative eigenvalue cutoffs for restricting to the span.
inline constexpr double kZeroThreshold = 1e-10;
inline constexpr double kAmbiguityLow = 1e-11;
inline constexpr double kAmbiguityHigh = 1e-9;

HermitianOperator frame_operator(const FiniteFrame& f);

/// Extreme eigenvalues of S on span{v_i}.
FrameBounds frame_bounds(const FiniteFrame& f);

/// v_i -> S^+ v_i with identical weights and index points.
FiniteFrame canonical_dual(const FiniteFrame& f);

/// Moore-Penrose inverse of S restricted to its range.
CMatrix frame_operator_pinv(const FiniteFrame& f);

/// sum_i w_i <x, dual_i> v_i.
std::vector<cplx> project(const FiniteFrame& f, std::span<const cplx> x);
/// sum_i w_i <x, v_i> dual_i; equal to project() up to rounding.
std::vector<cplx> project_dual_form(const FiniteFrame& f, std::span<const cplx> x);
/// The projection as a matrix sum_i w_i v_i dual_i^*.
CMatrix projection_matrix(const FiniteFrame& f);

/// Membership of each family's atoms in the subset Omega of the index space.
struct IndexSubset {
  std::vector<bool> in_f;
  std::vector<bool> in_g;

  static IndexSubset from_ball(const FiniteFrame& f, const FiniteFrame& g, const Ball& b);
  static IndexSubset empty(const FiniteFrame& f, const FiniteFrame& g);
};

/// Both sides of the comparison identity with every integral as a weighted
/// atom sum. x runs over G's atoms (weights nu), y over F's (weights mu).
struct ComparisonTerms {
  cplx lhs;              // sum_{y in Omega} mu_y <P_G dual(f_y), f_y>
  cplx diag_g;           // sum_{x in Omega} nu_x <P_F g_x, dual(g_x)>
  cplx cross_g_in;       // sum_{x in Omega} sum_{y notin Omega} T(x, y) nu_x mu_y
  cplx cross_g_out;      // sum_{x notin Omega} sum_{y in Omega} T(x, y) nu_x mu_y
  cplx rhs;              // diag_g - cross_g_in + cross_g_out
  double residual = 0.0;  // |lhs - rhs|
};

ComparisonTerms comparison_identity(const FiniteFrame& f, const FiniteFrame& g,
                                    const IndexSubset& omega);
double comparison_residual(const FiniteFrame& f, const FiniteFrame& g, const IndexSubset& omega);

GramMatrix gram(const FiniteFrame& f);
/// (min, max) eigenvalues of the Gram matrix, zero eigenvalues included.
FrameBounds riesz_bounds(const FiniteFrame& f);

struct DiagonalTerms {
  std::vector<cplx> g_side;  // <P_F g_x, dual(g_x)> for each atom of G
  std::vector<cplx> f_side;  // <P_G dual(f_y), f_y> for each atom of F
  std::vector<cplx> f_side_swapped;  // <P_G f_y, dual(f_y)>
  double max_imag = 0.0;
};

DiagonalTerms diagonal_terms(const FiniteFrame& f, const FiniteFrame& g);

/// sum_{x in X} sum_{y in Omega} <g_x, f_y> <dual(f_y), dual(g_x)> mu_y nu_x.
cplx omega_double_sum(const FiniteFrame& f, const FiniteFrame& g, const std::vector<bool>& in_f);

/// Direct orthogonal projector onto span{v_i} via modified Gram-Schmidt.
CMatrix span_projector(const FiniteFrame& f);

/// Entries uniform on the complex square [-1, 1]^2, weights uniform on
/// [0.25, 2), index points uniform on [0, 1)^2.
FiniteFrame random_frame(Rng& rng, std::size_t dim, std::size_t size);

/// Parseval frame S^{-1/2} v_i built from any frame spanning the space.
FiniteFrame parseval_from(const FiniteFrame& f);

}  // namespace framelab::finframe
