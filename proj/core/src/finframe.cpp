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

#include "framelab/finframe.hpp"

#include <algorithm>
#include <cmath>

#include "framelab/compensated.hpp"
#include "framelab/error.hpp"

namespace framelab::finframe {

namespace {

std::vector<Point> default_index_points(std::size_t m) {
  std::vector<Point> p;
  p.reserve(m);
  for (std::size_t i = 0; i < m; ++i) p.emplace_back(Point{static_cast<double>(i)});
  return p;
}

struct Spectrum {
  HermitianEigen eig;
  double lmax = 0.0;
  double cutoff = 0.0;
};

Spectrum spectrum_of_s(const FiniteFrame& f) {
  Spectrum s;
  s.eig = jacobi_eigen(frame_operator(f).matrix);
  s.lmax = s.eig.values.empty() ? 0.0 : s.eig.values.back();
  if (!(s.lmax > 0.0)) throw Error(ErrorCode::kDegenerateFrame, "degenerate frame");
  s.cutoff = kZeroThreshold * s.lmax;
  return s;
}

void require_unambiguous(const Spectrum& s) {
  for (double l : s.eig.values) {
    if (l >= kAmbiguityLow * s.lmax && l <= kAmbiguityHigh * s.lmax) {
      throw Error(ErrorCode::kRankDeficient, "numerically rank-deficient");
    }
  }
}

// sum over eigenpairs above the cutoff of phi(lambda) u u^*.
template <class Phi>
CMatrix spectral_function(const Spectrum& s, Phi phi) {
  const std::size_t n = s.eig.vectors.rows();
  CMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double l = s.eig.values[k];
    if (l < s.cutoff) continue;
    const double c = phi(l);
    const auto u = s.eig.vectors.col(k);
    for (std::size_t j = 0; j < n; ++j) {
      const cplx uj = c * std::conj(u[j]);
      for (std::size_t i = 0; i < n; ++i) out(i, j) += u[i] * uj;
    }
  }
  return out;
}

bool is_parseval(const Spectrum& s) {
  return std::all_of(s.eig.values.begin(), s.eig.values.end(), [&](double l) {
    return l < s.cutoff || std::abs(l - 1.0) <= 1e-12;
  });
}

void require_same_space(const FiniteFrame& f, const FiniteFrame& g) {
  if (f.dim() != g.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "frames live in spaces of different dimension");
  }
}

}  // namespace

FiniteFrame::FiniteFrame(CMatrix vectors, std::vector<double> weights,
                         std::vector<Point> index_points)
    : v_(std::move(vectors)), w_(std::move(weights)), p_(std::move(index_points)) {
  if (v_.rows() == 0) throw Error(ErrorCode::kInvalidArgument, "frame space dimension must be >= 1");
  if (v_.cols() == 0) throw Error(ErrorCode::kInvalidArgument, "frame must have at least one vector");
  if (w_.size() != v_.cols() || p_.size() != v_.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "frame vectors, weights and index points differ in length");
  }
  for (double w : w_) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::kInvalidArgument, "frame weights must be positive and finite");
    }
  }
  const int d = p_.front().dim();
  for (const auto& p : p_) {
    if (p.dim() != d) throw Error(ErrorCode::kDimensionMismatch, "index points differ in dimension");
  }
}

FiniteFrame::FiniteFrame(CMatrix vectors, std::vector<double> weights)
    : FiniteFrame(vectors, std::move(weights), default_index_points(vectors.cols())) {}

FiniteFrame FiniteFrame::unit_weights(CMatrix vectors) {
  std::vector<double> w(vectors.cols(), 1.0);
  return FiniteFrame(std::move(vectors), std::move(w));
}

HermitianOperator frame_operator(const FiniteFrame& f) {
  const std::size_t n = f.dim();
  CMatrix s(n, n);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto v = f.vector(i);
    const double w = f.weight(i);
    for (std::size_t c = 0; c < n; ++c) {
      const cplx vc = w * std::conj(v[c]);
      for (std::size_t r = 0; r < n; ++r) s(r, c) += v[r] * vc;
    }
  }
  return {std::move(s)};
}

FrameBounds frame_bounds(const FiniteFrame& f) {
  const Spectrum s = spectrum_of_s(f);
  double lo = s.lmax;
  for (double l : s.eig.values) {
    if (l >= s.cutoff) {
      lo = l;
      break;
    }
  }
  return {lo, s.lmax};
}

CMatrix frame_operator_pinv(const FiniteFrame& f) {
  const Spectrum s = spectrum_of_s(f);
  require_unambiguous(s);
  return spectral_function(s, [](double l) { return 1.0 / l; });
}

FiniteFrame canonical_dual(const FiniteFrame& f) {
  const Spectrum s = spectrum_of_s(f);
  require_unambiguous(s);
  if (is_parseval(s)) return f;
  const CMatrix pinv = spectral_function(s, [](double l) { return 1.0 / l; });
  return FiniteFrame(pinv * f.vectors(), f.weights(), f.index_points());
}

std::vector<cplx> project(const FiniteFrame& f, std::span<const cplx> x) {
  if (x.size() != f.dim()) throw Error(ErrorCode::kDimensionMismatch, "vector dimension differs from frame space");
  const FiniteFrame dual = canonical_dual(f);
  std::vector<CompensatedSum<cplx>> acc(f.dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const cplx c = f.weight(i) * inner(x, dual.vector(i));
    const auto v = f.vector(i);
    for (std::size_t r = 0; r < f.dim(); ++r) acc[r] += c * v[r];
  }
  std::vector<cplx> out(f.dim());
  for (std::size_t r = 0; r < f.dim(); ++r) out[r] = acc[r].value();
  return out;
}

std::vector<cplx> project_dual_form(const FiniteFrame& f, std::span<const cplx> x) {
  if (x.size() != f.dim()) throw Error(ErrorCode::kDimensionMismatch, "vector dimension differs from frame space");
  const FiniteFrame dual = canonical_dual(f);
  std::vector<CompensatedSum<cplx>> acc(f.dim());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const cplx c = f.weight(i) * inner(x, f.vector(i));
    const auto v = dual.vector(i);
    for (std::size_t r = 0; r < f.dim(); ++r) acc[r] += c * v[r];
  }
  std::vector<cplx> out(f.dim());
  for (std::size_t r = 0; r < f.dim(); ++r) out[r] = acc[r].value();
  return out;
}

CMatrix projection_matrix(const FiniteFrame& f) {
  const FiniteFrame dual = canonical_dual(f);
  const std::size_t n = f.dim();
  CMatrix p(n, n);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto v = f.vector(i);
    const auto d = dual.vector(i);
    for (std::size_t c = 0; c < n; ++c) {
      const cplx dc = f.weight(i) * std::conj(d[c]);
      for (std::size_t r = 0; r < n; ++r) p(r, c) += v[r] * dc;
    }
  }
  return p;
}

IndexSubset IndexSubset::from_ball(const FiniteFrame& f, const FiniteFrame& g, const Ball& b) {
  IndexSubset s;
  s.in_f.reserve(f.size());
  s.in_g.reserve(g.size());
  for (const auto& p : f.index_points()) s.in_f.push_back(b.contains(p));
  for (const auto& p : g.index_points()) s.in_g.push_back(b.contains(p));
  return s;
}

IndexSubset IndexSubset::empty(const FiniteFrame& f, const FiniteFrame& g) {
  return {std::vector<bool>(f.size(), false), std::vector<bool>(g.size(), false)};
}

ComparisonTerms comparison_identity(const FiniteFrame& f, const FiniteFrame& g,
                                    const IndexSubset& omega) {
  require_same_space(f, g);
  if (omega.in_f.size() != f.size() || omega.in_g.size() != g.size()) {
    throw Error(ErrorCode::kInvalidArgument, "index subset does not match the frames");
  }
  const FiniteFrame fd = canonical_dual(f);
  const FiniteFrame gd = canonical_dual(g);
  const CMatrix pf = projection_matrix(f);
  const CMatrix pg = projection_matrix(g);

  CompensatedSum<cplx> lhs, diag, cross_in, cross_out;
  for (std::size_t y = 0; y < f.size(); ++y) {
    if (!omega.in_f[y]) continue;
    const auto pgf = pg * fd.vector(y);
    lhs += f.weight(y) * inner(pgf, f.vector(y));
  }
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (!omega.in_g[x]) continue;
    const auto pfg = pf * g.vector(x);
    diag += g.weight(x) * inner(pfg, gd.vector(x));
  }
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < f.size(); ++y) {
      if (omega.in_g[x] == omega.in_f[y]) continue;
      const cplx t = inner(g.vector(x), f.vector(y)) * inner(fd.vector(y), gd.vector(x)) *
                     (g.weight(x) * f.weight(y));
      if (omega.in_g[x]) {
        cross_in += t;
      } else {
        cross_out += t;
      }
    }
  }
  ComparisonTerms out;
  out.lhs = lhs.value();
  out.diag_g = diag.value();
  out.cross_g_in = cross_in.value();
  out.cross_g_out = cross_out.value();
  out.rhs = out.diag_g - out.cross_g_in + out.cross_g_out;
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

double comparison_residual(const FiniteFrame& f, const FiniteFrame& g, const IndexSubset& omega) {
  return comparison_identity(f, g, omega).residual;
}

GramMatrix gram(const FiniteFrame& f) {
  const std::size_t m = f.size();
  CMatrix gm(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      gm(i, j) = std::sqrt(f.weight(i) * f.weight(j)) * inner(f.vector(j), f.vector(i));
    }
  }
  return {std::move(gm)};
}

FrameBounds riesz_bounds(const FiniteFrame& f) {
  const auto ev = jacobi_eigenvalues(gram(f).matrix);
  return {ev.front(), ev.back()};
}

DiagonalTerms diagonal_terms(const FiniteFrame& f, const FiniteFrame& g) {
  require_same_space(f, g);
  const FiniteFrame fd = canonical_dual(f);
  const FiniteFrame gd = canonical_dual(g);
  const CMatrix pf = projection_matrix(f);
  const CMatrix pg = projection_matrix(g);
  DiagonalTerms out;
  for (std::size_t x = 0; x < g.size(); ++x) {
    out.g_side.push_back(inner(pf * g.vector(x), gd.vector(x)));
  }
  for (std::size_t y = 0; y < f.size(); ++y) {
    out.f_side.push_back(inner(pg * fd.vector(y), f.vector(y)));
    out.f_side_swapped.push_back(inner(pg * f.vector(y), fd.vector(y)));
  }
  for (const auto* side : {&out.g_side, &out.f_side, &out.f_side_swapped}) {
    for (const auto& z : *side) out.max_imag = std::max(out.max_imag, std::abs(z.imag()));
  }
  return out;
}

cplx omega_double_sum(const FiniteFrame& f, const FiniteFrame& g, const std::vector<bool>& in_f) {
  require_same_space(f, g);
  if (in_f.size() != f.size()) throw Error(ErrorCode::kInvalidArgument, "index subset does not match the frame");
  const FiniteFrame fd = canonical_dual(f);
  const FiniteFrame gd = canonical_dual(g);
  CompensatedSum<cplx> s;
  for (std::size_t x = 0; x < g.size(); ++x) {
    for (std::size_t y = 0; y < f.size(); ++y) {
      if (!in_f[y]) continue;
      s += inner(g.vector(x), f.vector(y)) * inner(fd.vector(y), gd.vector(x)) *
           (f.weight(y) * g.weight(x));
    }
  }
  return s.value();
}

CMatrix span_projector(const FiniteFrame& f) {
  const std::size_t n = f.dim();
  double scale = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) scale = std::max(scale, norm_sq(f.vector(i)));
  if (!(scale > 0.0)) throw Error(ErrorCode::kDegenerateFrame, "degenerate frame");
  const double drop = 1e-20 * scale;

  std::vector<std::vector<cplx>> basis;
  for (std::size_t i = 0; i < f.size() && basis.size() < n; ++i) {
    std::vector<cplx> v(f.vector(i).begin(), f.vector(i).end());
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const cplx c = inner(v, q);
        for (std::size_t r = 0; r < n; ++r) v[r] -= c * q[r];
      }
    }
    const double nv = norm_sq(v);
    if (nv <= drop) continue;
    const double inv = 1.0 / std::sqrt(nv);
    for (auto& z : v) z *= inv;
    basis.push_back(std::move(v));
  }
  CMatrix p(n, n);
  for (const auto& q : basis) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t r = 0; r < n; ++r) p(r, c) += q[r] * std::conj(q[c]);
    }
  }
  return p;
}

FiniteFrame random_frame(Rng& rng, std::size_t dim, std::size_t size) {
  CMatrix v(dim, size);
  for (std::size_t j = 0; j < size; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      const double re = rng.uniform(-1.0, 1.0);
      const double im = rng.uniform(-1.0, 1.0);
      v(i, j) = {re, im};
    }
  }
  std::vector<double> w(size);
  for (auto& x : w) x = rng.uniform(0.25, 2.0);
  std::vector<Point> p;
  p.reserve(size);
  for (std::size_t j = 0; j < size; ++j) {
    const double a = rng.uniform();
    const double b = rng.uniform();
    p.emplace_back(Point{a, b});
  }
  return FiniteFrame(std::move(v), std::move(w), std::move(p));
}

FiniteFrame parseval_from(const FiniteFrame& f) {
  const Spectrum s = spectrum_of_s(f);
  require_unambiguous(s);
  const CMatrix root = spectral_function(s, [](double l) { return 1.0 / std::sqrt(l); });
  return FiniteFrame(root * f.vectors(), f.weights(), f.index_points());
}

}  // namespace framelab::finframe
