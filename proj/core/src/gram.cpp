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

#include "framelab/gram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "framelab/error.hpp"

namespace framelab::verify {

namespace {

std::vector<Point> atoms_in_ball(const MeasureSpec& m, const Point& c, double r) {
  std::vector<Point> out;
  m.for_each_atom_in_ball(c, r, [&](const Point& x, double) { out.push_back(x); });
  return out;
}

std::vector<Point> grid_in_ball(const Point& c, double r, double spacing) {
  std::vector<Point> out;
  Lattice(spacing, c.dim()).for_each_in_ball(Point::zeros(c.dim()), r, [&](const Point& u) {
    out.push_back(c + u);
  });
  return out;
}

double relative_change(double prev, double last) {
  const double scale = std::max(std::abs(last), std::numeric_limits<double>::min());
  return std::abs(last - prev) / scale;
}

}  // namespace

CMatrix kernel_gram(const kernels::KernelSpec& k, const std::vector<Point>& points) {
  const std::size_t n = points.size();
  CMatrix g(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      g(i, j) = i == j ? cplx(1.0) : kernels::normalized_inner(k, points[i], points[j]).value;
    }
  }
  return g;
}

GramStudy gram_truncation_study(const kernels::KernelSpec& k, const MeasureSpec& gamma,
                                GramStudyConfig cfg) {
  const int d = k.ambient_dim();
  if (gamma.dim() != d) throw Error(ErrorCode::kDimensionMismatch, "point set dimension differs from kernel");
  if (!gamma.is_discrete()) throw Error(ErrorCode::kInvalidArgument, "Gram study needs a discrete point set");
  if (cfg.center.dim() == 0) cfg.center = Point::zeros(d);
  if (cfg.center.dim() != d) throw Error(ErrorCode::kDimensionMismatch, "Gram study center dimension differs");
  if (cfg.windows.empty()) throw Error(ErrorCode::kInvalidArgument, "Gram study needs at least one window");
  if (!(cfg.probe_spacing > 0.0) || !(cfg.sample_margin >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "Gram study spacing and margin must be positive");
  }

  GramStudy study;
  for (double radius : cfg.windows) {
    if (!(radius > 0.0)) throw Error(ErrorCode::kInvalidArgument, "Gram window radius must be positive");
    GramWindow w;
    w.radius = radius;
    const auto pts = atoms_in_ball(gamma, cfg.center, radius);
    w.points = pts.size();
    if (pts.empty()) {
      w.skipped = true;
      study.windows.push_back(w);
      continue;
    }
    const auto ev = jacobi_eigenvalues(kernel_gram(k, pts));
    w.min_eig = ev.front();
    w.max_eig = ev.back();
    w.min_nonzero = w.max_eig;
    for (double l : ev) {
      if (l >= 1e-10 * w.max_eig) {
        w.min_nonzero = l;
        break;
      }
    }

    // Orthonormal basis of span{k_p : p probe}: e_k = sum_i a_ik k_{p_i}.
    const auto probes = grid_in_ball(cfg.center, radius, cfg.probe_spacing);
    const auto pe = jacobi_eigen(kernel_gram(k, probes));
    const double pmax = pe.values.back();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < pe.values.size(); ++i) {
      if (pe.values[i] > cfg.probe_cutoff * pmax) keep.push_back(i);
    }
    w.probe_rank = keep.size();
    CMatrix a(probes.size(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) {
      const double s = 1.0 / std::sqrt(pe.values[keep[c]]);
      const auto u = pe.vectors.col(keep[c]);
      for (std::size_t i = 0; i < probes.size(); ++i) a(i, c) = s * u[i];
    }

    const auto samples = atoms_in_ball(gamma, cfg.center, radius + cfg.sample_margin);
    w.samples = samples.size();
    CMatrix cross(samples.size(), probes.size());
    for (std::size_t j = 0; j < probes.size(); ++j) {
      for (std::size_t i = 0; i < samples.size(); ++i) {
        cross(i, j) = kernels::normalized_inner(k, samples[i], probes[j]).value;
      }
    }
    const CMatrix ca = cross * a;
    const auto fe = jacobi_eigenvalues(ca.adjoint() * ca);
    w.frame_lower = fe.empty() ? 0.0 : fe.front();
    w.frame_upper = fe.empty() ? 0.0 : fe.back();
    study.windows.push_back(w);
  }

  std::vector<const GramWindow*> live;
  for (const auto& w : study.windows) {
    if (!w.skipped) live.push_back(&w);
  }
  if (live.size() >= 2) {
    const auto& prev = *live[live.size() - 2];
    const auto& last = *live.back();
    study.frame_change = relative_change(prev.frame_lower, last.frame_lower);
    study.riesz_change = relative_change(prev.min_eig, last.min_eig);
    study.frame_evidence =
        study.frame_change < cfg.stabilization_tol && last.frame_lower > cfg.floor;
    study.riesz_evidence = study.riesz_change < cfg.stabilization_tol && last.min_eig > cfg.floor;
  }
  study.config = std::move(cfg);
  return study;
}

}  // namespace framelab::verify
