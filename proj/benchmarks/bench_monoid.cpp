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


#include <benchmark/benchmark.h>

#include "logmonoid/chart.hpp"
#include "logmonoid/family.hpp"
#include "logmonoid/monoid.hpp"
#include "logmonoid/semistable.hpp"

namespace {

using namespace logmonoid;

FamilyInstance semistable_instance(int l, int r) {
  FamilyParams p;
  p.l = l;
  p.r = r;
  return generate_family(FamilyShape::Semistable, p, 1).front();
}

void BM_NormalForm(benchmark::State& state) {
  const auto inst = semistable_instance(static_cast<int>(state.range(0)), 2);
  const auto& P = inst.hom.target();
  const auto words = words_up_to_degree(P.rank(), 4);
  for (auto _ : state)
    for (const auto& w : words) benchmark::DoNotOptimize(P.normal_form(w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size()));
}
BENCHMARK(BM_NormalForm)->DenseRange(2, 4);

void BM_Completion(benchmark::State& state) {
  const auto inst = semistable_instance(static_cast<int>(state.range(0)), 3);
  const auto& P = inst.hom.target();
  for (auto _ : state) {
    MonoidPresentation fresh(P.generators(), P.relations());
    benchmark::DoNotOptimize(fresh.rules().size());
  }
}
BENCHMARK(BM_Completion)->DenseRange(2, 4);

void BM_DetectSemistable(benchmark::State& state) {
  const auto inst = semistable_instance(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(detect_semistable(inst.hom, 8));
}
BENCHMARK(BM_DetectSemistable)->ArgsProduct({{2, 3, 4}, {0, 3}})->Unit(benchmark::kMicrosecond);

void BM_ClassifyChart(benchmark::State& state) {
  const auto inst = semistable_instance(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(classify_chart(inst.hom, 8).chart_case);
}
BENCHMARK(BM_ClassifyChart)->Unit(benchmark::kMicrosecond);

void BM_PropertyC(benchmark::State& state) {
  const auto inst = semistable_instance(2, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(property_C_pushout(inst.hom, *inst.structure, static_cast<int>(state.range(0))).verified);
}
BENCHMARK(BM_PropertyC)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace
