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

#include <benchmark/benchmark.h>

#include "framelab/density.hpp"
#include "framelab/finframe.hpp"
#include "framelab/gram.hpp"
#include "framelab/linalg.hpp"
#include "framelab/localization.hpp"
#include "framelab/rng.hpp"

namespace {

using namespace framelab;

CMatrix random_hermitian(std::size_t n) {
  Rng rng(1);
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = rng.uniform(-1, 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
      a(j, i) = std::conj(a(i, j));
    }
  }
  return a;
}

void BM_JacobiEigen(benchmark::State& state) {
  const auto a = random_hermitian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_eigen(a));
}
BENCHMARK(BM_JacobiEigen)->Arg(8)->Arg(16)->Arg(64)->Arg(128);

void BM_ComparisonResidual(benchmark::State& state) {
  Rng rng(7);
  const auto f = finframe::random_frame(rng, 8, 16);
  const auto g = finframe::random_frame(rng, 8, 16);
  const auto omega = finframe::IndexSubset::from_ball(f, g, Ball(Point{0.5, 0.5}, 0.4));
  for (auto _ : state) benchmark::DoNotOptimize(finframe::comparison_residual(f, g, omega));
}
BENCHMARK(BM_ComparisonResidual);

void BM_LatticeCount(benchmark::State& state) {
  const Lattice lat(0.5, static_cast<int>(state.range(0)));
  Point c = Point::zeros(lat.dim());
  c[0] = 0.123;
  const double r = state.range(0) == 2 ? 128.0 : 24.0;
  for (auto _ : state) benchmark::DoNotOptimize(lat.count_in_ball(c, r));
}
BENCHMARK(BM_LatticeCount)->Arg(2)->Arg(3);

void BM_LatticeDensity(benchmark::State& state) {
  const auto lat = MeasureSpec::lattice(0.8, 2);
  const auto leb = MeasureSpec::lebesgue(2);
  const auto sched = density::default_schedule(lat, leb, 128.0);
  for (auto _ : state) benchmark::DoNotOptimize(density::density(lat, leb, sched));
}
BENCHMARK(BM_LatticeDensity)->Unit(benchmark::kMillisecond);

void BM_FockTailSup(benchmark::State& state) {
  const kernels::KernelSpec k(kernels::Fock{});
  const auto probes = localization::default_probes(k);
  QuadConfig q;
  q.h = 0.02;
  for (auto _ : state) {
    benchmark::DoNotOptimize(localization::tail_sup(k, MeasureSpec::lebesgue(2), 1.0, probes, q));
  }
}
BENCHMARK(BM_FockTailSup)->Unit(benchmark::kMillisecond);

void BM_FockLocalizationDefect(benchmark::State& state) {
  const kernels::KernelSpec k(kernels::Fock{});
  QuadConfig q;
  q.h = 0.02;
  const localization::FramePairSpec pair{{k, MeasureSpec::lebesgue(2)}, {k, MeasureSpec::lattice(1.0, 2)}, true, q};
  const Ball b(Point{0.0, 0.0}, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(localization::localization_defect(pair, b));
}
BENCHMARK(BM_FockLocalizationDefect)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_GramStudy(benchmark::State& state) {
  const kernels::KernelSpec k(kernels::Fock{});
  const auto lat = MeasureSpec::lattice(0.8, 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify::gram_truncation_study(k, lat, {}));
}
BENCHMARK(BM_GramStudy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
