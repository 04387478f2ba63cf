// Copyright 2026 The qcat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "qcat/devissage.hpp"
#include "qcat/finite_category.hpp"
#include "qcat/gamma.hpp"
#include "qcat/homology.hpp"
#include "qcat/q_construction.hpp"
#include "qcat/subdivision.hpp"

namespace qcat {
namespace {

void BM_Subdivision(benchmark::State& state) {
  const auto w = JoinWord::all_of_length(3).back();
  for (auto _ : state) benchmark::DoNotOptimize(is_combinatorial_subdivision(w, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Subdivision)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_SimplexHomology(benchmark::State& state) {
  const auto x = standard_simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology(x));
}
BENCHMARK(BM_SimplexHomology)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_TwistedVsEdgewise(benchmark::State& state) {
  const auto c = poset_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nerve_twisted_vs_edgewise(c, 3));
}
BENCHMARK(BM_TwistedVsEdgewise)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_QCategory(benchmark::State& state, const char* descriptor) {
  for (auto _ : state) {
    auto c = make_instance(descriptor);
    benchmark::DoNotOptimize(q_category(c));
  }
}
BENCHMARK_CAPTURE(BM_QCategory, vect_2_2, "vect:2:2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_QCategory, abp_2_4, "abp:2:4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_QCategory, abp_2_8, "abp:2:8")->Unit(benchmark::kMillisecond);

void BM_K0(benchmark::State& state, const char* descriptor) {
  auto q = q_category(make_instance(descriptor));
  for (auto _ : state) benchmark::DoNotOptimize(k0(q, static_cast<int>(state.range(0))));
}
BENCHMARK_CAPTURE(BM_K0, abp_2_4, "abp:2:4")->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyTriple(benchmark::State& state, const char* descriptor) {
  auto c = make_instance(descriptor);
  for (auto _ : state) benchmark::DoNotOptimize(verify_triple(*c));
}
BENCHMARK_CAPTURE(BM_VerifyTriple, abp_2_4, "abp:2:4")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyTriple, vect_2_3, "vect:2:3")->Unit(benchmark::kMillisecond);

void BM_Segal(benchmark::State& state) {
  auto q = q_category(make_instance("abp:2:4"));
  for (auto _ : state) benchmark::DoNotOptimize(segal_spine_check(q, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Segal)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_Devissage(benchmark::State& state) {
  DevissageContext ctx(embed(make_instance("vect:2:2"), make_instance("abp:2:4")));
  const std::vector<int> probes{0, 1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(devissage_certificate(ctx, probes, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Devissage)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_UFunctoriality(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_u_functoriality(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_UFunctoriality)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qcat

BENCHMARK_MAIN();
