// Copyright 2026 The logmonoid Authors.
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


#include <random>

#include <benchmark/benchmark.h>

#include "logmonoid/series_ring.hpp"

namespace {

using namespace logmonoid;

SeriesElement random_element(const SeriesRing& R, int degree, std::mt19937_64& rng) {
  Poly f;
  for (const auto& m : R.sigma_basis(degree))
    if (rng() % 3 == 0) f[m] = static_cast<std::uint32_t>(1 + rng() % (R.p() - 1));
  return R.element(f);
}

void BM_SeriesMultiply(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto R = SeriesRing::semistable_model(2, 4, 2, {1}, 1, 2 * d);
  std::mt19937_64 rng(1);
  const auto a = random_element(R, d, rng), b = random_element(R, d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_SeriesMultiply)->DenseRange(1, 4);

void BM_Regularity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto R = SeriesRing::unit_rigidity_model(2, 2, 4, d);
  const auto t = R.t_power(1);
  for (auto _ : state) benchmark::DoNotOptimize(is_regular(R, t, d));
}
BENCHMARK(BM_Regularity)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_PrimaryDecomposition(benchmark::State& state) {
  PrimaryDecompConfig c;
  c.l = static_cast<int>(state.range(0));
  c.n = 2;
  c.a = 1;
  c.B = {2, 1};
  c.I = {1, 1};
  for (auto _ : state) benchmark::DoNotOptimize(primary_decomp_report(c).all_passed());
}
BENCHMARK(BM_PrimaryDecomposition)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_UnitRigidity(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto R = SeriesRing::unit_rigidity_model(n, 2, 2, 4);
  std::vector<Word> supports;
  for (int i = 0; i < n; ++i) supports.push_back(unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
  for (auto _ : state) benchmark::DoNotOptimize(unit_rigidity_report(R, {R.t_power(1)}, supports, 4).only_trivial);
}
BENCHMARK(BM_UnitRigidity)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace
