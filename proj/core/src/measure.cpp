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

#include "framelab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "framelab/space.hpp"

namespace framelab {

namespace {

std::vector<Point> origin_motif(int dim) { return {Point::zeros(dim)}; }

}  // namespace

Lattice::Lattice(double scale, int dim) : Lattice(scale, dim, origin_motif(dim < 1 || dim > kMaxDim ? 1 : dim)) {}

Lattice::Lattice(double scale, int dim, std::vector<Point> motif)
    : scale_(scale), dim_(dim), motif_(std::move(motif)) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(ErrorCode::kInvalidArgument, "lattice scale must be positive");
  }
  if (dim < 1 || dim > kMaxDim) {
    throw Error(ErrorCode::kInvalidArgument, "lattice dimension must be between 1 and 4");
  }
  if (motif_.empty()) throw Error(ErrorCode::kInvalidArgument, "lattice motif is empty");
  for (const auto& m : motif_) {
    if (m.dim() != dim) throw Error(ErrorCode::kDimensionMismatch, "motif point has wrong dimension");
    for (int i = 0; i < dim; ++i) {
      if (m[i] < 0.0 || m[i] >= 1.0) {
        throw Error(ErrorCode::kInvalidArgument, "motif coordinates must lie in [0, 1)");
      }
    }
  }
  for (std::size_t a = 0; a < motif_.size(); ++a) {
    for (std::size_t b = a + 1; b < motif_.size(); ++b) {
      if (motif_[a] == motif_[b]) throw Error(ErrorCode::kInvalidArgument, "duplicate motif point");
    }
  }
}

double Lattice::density() const noexcept {
  return static_cast<double>(motif_.size()) / std::pow(scale_, dim_);
}

Point Lattice::site(int coset, std::span<const std::int64_t> index) const noexcept {
  Point p = Point::zeros(dim_);
  const Point& m = motif_[static_cast<std::size_t>(coset)];
  for (int i = 0; i < dim_; ++i) {
    p[i] = scale_ * (static_cast<double>(index[static_cast<std::size_t>(i)]) + m[i]);
  }
  return p;
}

namespace {

// Enumerates lattice sites in a closed ball. Outer coordinates are pruned by
// partial sums of squares (monotone in floating point); the last coordinate
// range is solved in closed form and then corrected by the exact test.
template <typename OnRange>
void enumerate_ball(const Lattice& lat, const Point& center, double radius, OnRange&& on_range) {
  const int d = lat.dim();
  const double s = lat.scale();
  const double r2 = radius * radius;
  std::array<std::int64_t, kMaxDim> idx{};
  for (int coset = 0; coset < static_cast<int>(lat.motif().size()); ++coset) {
    const Point& m = lat.motif()[static_cast<std::size_t>(coset)];
    auto coord = [&](int i, std::int64_t k) { return s * (static_cast<double>(k) + m[i]); };
    auto inside = [&](int last, std::int64_t k) {
      idx[static_cast<std::size_t>(last)] = k;
      const Point p = lat.site(coset, std::span<const std::int64_t>(idx.data(), static_cast<std::size_t>(d)));
      return distance_sq(p, center) <= r2;
    };
    auto recurse = [&](auto&& self, int i, double partial) -> void {
      if (i == d - 1) {
        const double rem = r2 - partial;
        if (rem < 0.0) return;
        const double half = std::sqrt(rem);
        auto lo = static_cast<std::int64_t>(std::ceil((center[i] - half) / s - m[i]));
        auto hi = static_cast<std::int64_t>(std::floor((center[i] + half) / s - m[i]));
        while (inside(i, lo - 1)) --lo;
        while (lo <= hi && !inside(i, lo)) ++lo;
        while (inside(i, hi + 1)) ++hi;
        while (hi >= lo && !inside(i, hi)) --hi;
        if (lo <= hi) on_range(coset, idx, i, lo, hi);
        return;
      }
      const auto lo = static_cast<std::int64_t>(std::floor((center[i] - radius) / s - m[i])) - 1;
      const auto hi = static_cast<std::int64_t>(std::ceil((center[i] + radius) / s - m[i])) + 1;
      for (std::int64_t k = lo; k <= hi; ++k) {
        const double dx = coord(i, k) - center[i];
        const double next = partial + dx * dx;
        if (next > r2) continue;
        idx[static_cast<std::size_t>(i)] = k;
        self(self, i + 1, next);
      }
    };
    recurse(recurse, 0, 0.0);
  }
}

}  // namespace

void Lattice::for_each_in_ball(const Point& center, double radius,
                               const std::function<void(const Point&)>& visit) const {
  require_same_dim(center, Point::zeros(dim_));
  enumerate_ball(*this, center, radius,
                 [&](int coset, std::array<std::int64_t, kMaxDim>& idx, int last, std::int64_t lo,
                     std::int64_t hi) {
                   for (std::int64_t k = lo; k <= hi; ++k) {
                     idx[static_cast<std::size_t>(last)] = k;
                     visit(site(coset, std::span<const std::int64_t>(idx.data(), static_cast<std::size_t>(dim_))));
                   }
                 });
}

std::int64_t Lattice::count_in_ball(const Point& center, double radius) const {
  require_same_dim(center, Point::zeros(dim_));
  std::int64_t n = 0;
  enumerate_ball(*this, center, radius,
                 [&](int, std::array<std::int64_t, kMaxDim>&, int, std::int64_t lo, std::int64_t hi) {
                   n += hi - lo + 1;
                 });
  return n;
}

void Lattice::for_each_in_box(const Point& lo, const Point& hi,
                              const std::function<void(const Point&)>& visit) const {
  require_same_dim(lo, Point::zeros(dim_));
  require_same_dim(hi, Point::zeros(dim_));
  std::array<std::int64_t, kMaxDim> idx{};
  for (int coset = 0; coset < static_cast<int>(motif_.size()); ++coset) {
    const Point& m = motif_[static_cast<std::size_t>(coset)];
    auto recurse = [&](auto&& self, int i) -> void {
      if (i == dim_) {
        const Point p = site(coset, std::span<const std::int64_t>(idx.data(), static_cast<std::size_t>(dim_)));
        for (int j = 0; j < dim_; ++j) {
          if (p[j] < lo[j] || p[j] > hi[j]) return;
        }
        visit(p);
        return;
      }
      const auto a = static_cast<std::int64_t>(std::floor(lo[i] / scale_ - m[i])) - 1;
      const auto b = static_cast<std::int64_t>(std::ceil(hi[i] / scale_ - m[i])) + 1;
      for (std::int64_t k = a; k <= b; ++k) {
        const double x = scale_ * (static_cast<double>(k) + m[i]);
        if (x < lo[i] || x > hi[i]) continue;
        idx[static_cast<std::size_t>(i)] = k;
        self(self, i + 1);
      }
    };
    recurse(recurse, 0);
  }
}

double Lattice::separation() const {
  double best = std::numeric_limits<double>::infinity();
  const double reach = scale_ * (std::sqrt(static_cast<double>(dim_)) + 1.0);
  std::array<std::int64_t, kMaxDim> zero{};
  for (int coset = 0; coset < static_cast<int>(motif_.size()); ++coset) {
    const Point p0 = site(coset, std::span<const std::int64_t>(zero.data(), static_cast<std::size_t>(dim_)));
    for_each_in_ball(p0, reach, [&](const Point& q) {
      if (q == p0) return;
      best = std::min(best, distance(p0, q));
    });
  }
  return best;
}

// ---- MeasureSpec ----------------------------------------------------------

MeasureSpec::MeasureSpec(Lebesgue m) : v_(std::move(m)) {
  const auto& l = std::get<Lebesgue>(v_);
  if (l.dim < 1 || l.dim > kMaxDim) {
    throw Error(ErrorCode::kInvalidArgument, "Lebesgue dimension must be between 1 and 4");
  }
  if (!l.weight && !(l.constant > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "Lebesgue density must be positive");
  }
}

MeasureSpec::MeasureSpec(Counting m) : v_(std::move(m)) {}

MeasureSpec::MeasureSpec(Atomic m) : v_(std::move(m)) {
  const auto& a = std::get<Atomic>(v_);
  if (a.dim < 1 || a.dim > kMaxDim) {
    throw Error(ErrorCode::kInvalidArgument, "atomic measure dimension must be between 1 and 4");
  }
  if (a.points.size() != a.weights.size()) {
    throw Error(ErrorCode::kInvalidArgument, "atomic measure needs one weight per point");
  }
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    if (a.points[i].dim() != a.dim) {
      throw Error(ErrorCode::kDimensionMismatch, "atomic measure has mixed dimensions");
    }
    if (!(a.weights[i] > 0.0) || !std::isfinite(a.weights[i])) {
      throw Error(ErrorCode::kInvalidArgument, "atomic weights must be positive");
    }
  }
}

MeasureSpec MeasureSpec::lebesgue(int dim, double constant) {
  return MeasureSpec(Lebesgue{dim, constant, {}});
}

MeasureSpec MeasureSpec::weighted_lebesgue(int dim, std::function<double(const Point&)> w) {
  return MeasureSpec(Lebesgue{dim, 1.0, std::move(w)});
}

MeasureSpec MeasureSpec::lattice(double scale, int dim) { return counting(Lattice(scale, dim)); }

MeasureSpec MeasureSpec::counting(Lattice lattice) { return MeasureSpec(Counting{std::move(lattice)}); }

MeasureSpec MeasureSpec::counting(PointSet points) { return MeasureSpec(Counting{std::move(points)}); }

MeasureSpec MeasureSpec::atomic(std::vector<Point> points, std::vector<double> weights) {
  const int dim = points.empty() ? 1 : points.front().dim();
  return MeasureSpec(Atomic{dim, std::move(points), std::move(weights)});
}

int MeasureSpec::dim() const noexcept {
  return std::visit(
      [](const auto& m) -> int {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, Lebesgue>) {
          return m.dim;
        } else if constexpr (std::is_same_v<T, Counting>) {
          return std::visit([](const auto& s) { return s.dim(); }, m.support);
        } else {
          return m.dim;
        }
      },
      v_);
}

const Lattice* MeasureSpec::as_lattice() const noexcept {
  const auto* c = as_counting();
  return c ? std::get_if<Lattice>(&c->support) : nullptr;
}

void MeasureSpec::for_each_atom_in_ball(const Point& center, double radius,
                                        const std::function<void(const Point&, double)>& visit) const {
  if (is_lebesgue()) {
    throw Error(ErrorCode::kInvalidArgument, "Lebesgue measure has no atoms");
  }
  if (center.dim() != dim()) throw Error(ErrorCode::kDimensionMismatch, "center dimension mismatch");
  const double r2 = radius * radius;
  if (const auto* lat = as_lattice()) {
    lat->for_each_in_ball(center, radius, [&](const Point& p) { visit(p, 1.0); });
  } else if (const auto* c = as_counting()) {
    for (const auto& p : std::get<PointSet>(c->support).points()) {
      if (distance_sq(p, center) <= r2) visit(p, 1.0);
    }
  } else {
    const auto& a = std::get<Atomic>(v_);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      if (distance_sq(a.points[i], center) <= r2) visit(a.points[i], a.weights[i]);
    }
  }
}

void MeasureSpec::for_each_atom_in_box(const Point& lo, const Point& hi,
                                       const std::function<void(const Point&, double)>& visit) const {
  if (is_lebesgue()) throw Error(ErrorCode::kInvalidArgument, "Lebesgue measure has no atoms");
  auto in_box = [&](const Point& p) {
    for (int i = 0; i < p.dim(); ++i) {
      if (p[i] < lo[i] || p[i] > hi[i]) return false;
    }
    return true;
  };
  if (const auto* lat = as_lattice()) {
    lat->for_each_in_box(lo, hi, [&](const Point& p) { visit(p, 1.0); });
  } else if (const auto* c = as_counting()) {
    for (const auto& p : std::get<PointSet>(c->support).points()) {
      if (in_box(p)) visit(p, 1.0);
    }
  } else {
    const auto& a = std::get<Atomic>(v_);
    for (std::size_t i = 0; i < a.points.size(); ++i) {
      if (in_box(a.points[i])) visit(a.points[i], a.weights[i]);
    }
  }
}

MeasureSpec::DensityEnvelope MeasureSpec::density_envelope() const {
  if (const auto* leb = as_lebesgue()) {
    return {leb->weight ? 1.0 : leb->constant, 0.0};
  }
  if (const auto* lat = as_lattice()) {
    return {lat->density(), 0.5 * lat->scale() * std::sqrt(static_cast<double>(lat->dim()))};
  }
  // Finite sets: callers sum atoms exactly.
  return {0.0, 0.0};
}

std::optional<double> MeasureSpec::period() const {
  if (const auto* lat = as_lattice()) return lat->scale();
  return std::nullopt;
}

}  // namespace framelab
