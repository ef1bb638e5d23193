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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "framelab/point.hpp"

namespace framelab {

/// Periodic point set scale * (Z^d + motif). The plain lattice scale * Z^d has
/// the single motif point 0; thinned lattices list the surviving cosets.
class Lattice {
 public:
  Lattice(double scale, int dim);
  Lattice(double scale, int dim, std::vector<Point> motif);

  double scale() const noexcept { return scale_; }
  int dim() const noexcept { return dim_; }
  const std::vector<Point>& motif() const noexcept { return motif_; }

  /// Atoms per unit volume.
  double density() const noexcept;

  /// The point scale * (index + motif[coset]); the single formula used for
  /// every membership decision so counts agree with brute force.
  Point site(int coset, std::span<const std::int64_t> index) const noexcept;

  /// Visits atoms of the closed ball in (coset, index-lexicographic) order.
  void for_each_in_ball(const Point& center, double radius,
                        const std::function<void(const Point&)>& visit) const;

  std::int64_t count_in_ball(const Point& center, double radius) const;

  /// Atoms with lo <= x <= hi componentwise, in the same order convention.
  void for_each_in_box(const Point& lo, const Point& hi,
                       const std::function<void(const Point&)>& visit) const;

  /// Minimum distance between distinct atoms.
  double separation() const;

 private:
  double scale_;
  int dim_;
  std::vector<Point> motif_;
};

/// Lebesgue measure on R^d with an optional density. A constant density keeps
/// ball masses in closed form; a weight field forces quadrature.
struct Lebesgue {
  int dim = 1;
  double constant = 1.0;
  std::function<double(const Point&)> weight;  // empty: constant density
};

/// Counting measure of a lattice-like set or an explicit finite point set.
struct Counting {
  std::variant<Lattice, PointSet> support;
};

/// Finite atomic measure sum_i w_i delta_{p_i}.
struct Atomic {
  int dim = 1;
  std::vector<Point> points;
  std::vector<double> weights;
};

class MeasureSpec {
 public:
  using Variant = std::variant<Lebesgue, Counting, Atomic>;

  MeasureSpec(Lebesgue m);
  MeasureSpec(Counting m);
  MeasureSpec(Atomic m);

  static MeasureSpec lebesgue(int dim, double constant = 1.0);
  static MeasureSpec weighted_lebesgue(int dim, std::function<double(const Point&)> w);
  static MeasureSpec lattice(double scale, int dim);
  static MeasureSpec counting(Lattice lattice);
  static MeasureSpec counting(PointSet points);
  static MeasureSpec atomic(std::vector<Point> points, std::vector<double> weights);

  const Variant& variant() const noexcept { return v_; }
  int dim() const noexcept;
  bool is_lebesgue() const noexcept { return std::holds_alternative<Lebesgue>(v_); }
  bool is_discrete() const noexcept { return !is_lebesgue(); }

  const Lebesgue* as_lebesgue() const noexcept { return std::get_if<Lebesgue>(&v_); }
  const Counting* as_counting() const noexcept { return std::get_if<Counting>(&v_); }
  const Atomic* as_atomic() const noexcept { return std::get_if<Atomic>(&v_); }
  const Lattice* as_lattice() const noexcept;

  /// Visits (atom, weight) pairs inside the closed ball in a fixed order.
  /// Only valid for discrete variants.
  void for_each_atom_in_ball(const Point& center, double radius,
                             const std::function<void(const Point&, double)>& visit) const;

  /// Atoms in the axis-aligned box [lo, hi] (discrete variants only).
  void for_each_atom_in_box(const Point& lo, const Point& hi,
                            const std::function<void(const Point&, double)>& visit) const;

  /// Upper bound on atoms (or mass) per unit volume used by truncation-error
  /// models, together with the radius inflation accounting for cell geometry.
  struct DensityEnvelope {
    double per_volume = 0.0;
    double inflation = 0.0;
  };
  DensityEnvelope density_envelope() const;

  /// Fundamental period cell (lower corner 0, side length) when the measure
  /// is translation-periodic along every axis.
  std::optional<double> period() const;

 private:
  Variant v_;
};

}  // namespace framelab
