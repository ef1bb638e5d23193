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

#include "framelab/density.hpp"
#include "framelab/error.hpp"
#include "framelab/measure.hpp"

namespace framelab {
namespace {

using density::DensitySchedule;

DensitySchedule schedule_1d(std::vector<double> radii, double lo, double hi, double spacing) {
  DensitySchedule s;
  s.radii = std::move(radii);
  s.box_lo = Point{lo};
  s.box_hi = Point{hi};
  s.center_spacing = spacing;
  return s;
}

TEST(Density, IntegersAgainstLebesgue) {
  const auto z = MeasureSpec::lattice(1.0, 1);
  const auto leb = MeasureSpec::lebesgue(1);
  const auto est = density::density(z, leb, density::default_schedule(z, leb, 128.0));
  EXPECT_NEAR(est.upper, 1.0, 0.02);
  EXPECT_NEAR(est.lower, 1.0, 0.02);
  EXPECT_LE(est.lower, est.upper);
}

TEST(Density, EvenIntegersAgainstLebesgue) {
  const auto z = MeasureSpec::lattice(2.0, 1);
  const auto leb = MeasureSpec::lebesgue(1);
  const auto est = density::density(z, leb, density::default_schedule(z, leb, 128.0));
  EXPECT_NEAR(est.upper, 0.5, 0.01);
  EXPECT_NEAR(est.lower, 0.5, 0.01);
}

TEST(Density, EmptySetHasZeroDensity) {
  const auto empty = MeasureSpec::counting(PointSet(1, {}));
  const auto est = density::density(empty, MeasureSpec::lebesgue(1),
                                    schedule_1d({4.0, 8.0}, -4.0, 4.0, 1.0));
  EXPECT_EQ(est.upper, 0.0);
  EXPECT_EQ(est.lower, 0.0);
}

TEST(Density, VanishingReferenceMeasureIsAnError) {
  const auto sparse = MeasureSpec::lattice(10.0, 1);
  try {
    density::density(MeasureSpec::lebesgue(1), sparse, schedule_1d({1.0, 2.0}, 0.0, 10.0, 1.0));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kReferenceMeasureVanishes);
  }
}

TEST(Density, ScalingCovariance) {
  const auto leb = MeasureSpec::lebesgue(2);
  const auto base = MeasureSpec::lattice(1.0, 2);
  const auto b = density::density(base, leb, density::default_schedule(base, leb, 64.0));
  for (double alpha : {0.5, 2.0}) {
    const auto scaled = MeasureSpec::lattice(alpha, 2);
    const auto s = density::density(scaled, leb, density::default_schedule(scaled, leb, 64.0));
    const double factor = std::pow(alpha, -2.0);
    const double tol = 0.03 * factor;
    EXPECT_NEAR(s.upper, factor * b.upper, tol) << "alpha=" << alpha;
    EXPECT_NEAR(s.lower, factor * b.lower, tol) << "alpha=" << alpha;
  }
}

TEST(Density, AddingPointsNeverLowersSupRatio) {
  std::vector<Point> pts;
  for (int i = -40; i <= 40; i += 3) pts.push_back(Point{static_cast<double>(i)});
  auto more = pts;
  for (int i = -40; i <= 40; i += 7) more.push_back(Point{i + 0.5});
  const auto sched = schedule_1d({2.0, 4.0, 8.0, 16.0}, -10.0, 10.0, 0.5);
  const auto leb = MeasureSpec::lebesgue(1);
  const auto a = density::density(MeasureSpec::counting(PointSet(1, pts)), leb, sched);
  const auto b = density::density(MeasureSpec::counting(PointSet(1, more)), leb, sched);
  ASSERT_EQ(a.per_radius.size(), b.per_radius.size());
  for (std::size_t i = 0; i < a.per_radius.size(); ++i) {
    EXPECT_GE(b.per_radius[i].sup_ratio, a.per_radius[i].sup_ratio);
    EXPECT_GE(b.per_radius[i].inf_ratio, a.per_radius[i].inf_ratio);
  }
}

TEST(Density, TranslationChangesRatiosByAtMostOneShell) {
  const double s = 1.0;
  const Lattice plain(s, 2);
  const Lattice shifted(s, 2, {Point{0.37, 0.81}});
  const auto leb = MeasureSpec::lebesgue(2);
  DensitySchedule sched;
  sched.radii = {4.0, 8.0, 16.0};
  sched.box_lo = Point{0.0, 0.0};
  sched.box_hi = Point{1.0, 1.0};
  sched.center_spacing = 0.2;
  const auto a = density::density(MeasureSpec::counting(plain), leb, sched);
  const auto b = density::density(MeasureSpec::counting(shifted), leb, sched);
  for (std::size_t i = 0; i < a.per_radius.size(); ++i) {
    const double r = a.per_radius[i].r;
    // Atoms in the annulus r - sqrt(2) s < |x| <= r + sqrt(2) s, per unit area of B(r).
    const double shell = ((r + std::sqrt(2.0) * s) * (r + std::sqrt(2.0) * s) -
                          (r - std::sqrt(2.0) * s) * (r - std::sqrt(2.0) * s)) / (r * r);
    EXPECT_LE(std::abs(a.per_radius[i].sup_ratio - b.per_radius[i].sup_ratio), shell);
    EXPECT_LE(std::abs(a.per_radius[i].inf_ratio - b.per_radius[i].inf_ratio), shell);
  }
}

TEST(Density, RatiosBracketLatticeDensityWithinAnnulusCorrection) {
  for (int d = 1; d <= 3; ++d) {
    for (double s : {0.5, 1.0, 1.7}) {
      const auto lat = MeasureSpec::lattice(s, d);
      const auto leb = MeasureSpec::lebesgue(d);
      auto sched = density::default_schedule(lat, leb, 16.0);
      const auto est = density::density(lat, leb, sched);
      const double dens = std::pow(s, -d);
      for (const auto& row : est.per_radius) {
        const double corr = (std::pow(row.r + std::sqrt(d) * s, d) - std::pow(row.r, d)) / std::pow(row.r, d);
        EXPECT_LE(row.sup_ratio, dens * (1.0 + corr) + 1e-12) << "d=" << d << " s=" << s << " r=" << row.r;
        EXPECT_GE(row.inf_ratio, dens * (1.0 - corr) - 1e-12) << "d=" << d << " s=" << s << " r=" << row.r;
      }
    }
  }
}

TEST(Density, ClassicalDensityOfLattice) {
  DensitySchedule sched;
  sched.radii = density::geometric_radii(4.0, 128.0);
  sched.box_lo = Point{0.0, 0.0};
  sched.box_hi = Point{0.5, 0.5};
  sched.center_spacing = 0.1;
  const auto est = density::classical_density(Lattice(0.5, 2), sched);
  EXPECT_NEAR(est.upper, 4.0, 0.08);
  EXPECT_NEAR(est.lower, 4.0, 0.08);
}

TEST(Density, GeometricRadii) {
  EXPECT_EQ(density::geometric_radii(4.0, 128.0), (std::vector<double>{4, 8, 16, 32, 64, 128}));
}

TEST(Density, ScheduleValidation) {
  auto s = schedule_1d({}, 0.0, 1.0, 0.5);
  EXPECT_THROW(s.validate(), Error);
  s = schedule_1d({1.0}, 1.0, 0.0, 0.5);
  EXPECT_THROW(s.validate(), Error);
}

}  // namespace
}  // namespace framelab
