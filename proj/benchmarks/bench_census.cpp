// Copyright 2026 The permcount Authors
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

#include "permcount/closed_form.hpp"
#include "permcount/matrices.hpp"
#include "permcount/oracle.hpp"

namespace {

using namespace permcount;

CensusOptions single_thread(bool generic = false) {
  CensusOptions o;
  o.threads = 1;
  o.force_generic = generic;
  return o;
}

void BM_ClosedFormLargeComposite(benchmark::State& state) {
  const Modulus m(739964160);
  for (auto _ : state) benchmark::DoNotOptimize(g_n(m, 5));
}
BENCHMARK(BM_ClosedFormLargeComposite);

void BM_ClosedFormTable(benchmark::State& state) {
  for (auto _ : state)
    for (std::uint64_t p : {3u, 5u, 7u, 11u, 13u})
      for (ClassLabel l : kClassLabels) benchmark::DoNotOptimize(g_pk0_class(p, 1, l));
}
BENCHMARK(BM_ClosedFormTable);

void BM_Permanent3(benchmark::State& state) {
  const Mat3 m(1000003, {123, 456, 789, 101112, 131415, 161718, 192021, 222324, 252627});
  for (auto _ : state) benchmark::DoNotOptimize(permanent3(m));
}
BENCHMARK(BM_Permanent3);

void BM_CensusNaive(benchmark::State& state) {
  const Modulus m(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(census_naive(m, single_thread()));
}
BENCHMARK(BM_CensusNaive)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_CensusGeneric(benchmark::State& state) {
  const Modulus m(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(census_tiered(m, single_thread(true)));
}
BENCHMARK(BM_CensusGeneric)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_CensusPrimeRank(benchmark::State& state) {
  const Modulus m(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(census_tiered(m, single_thread()));
}
BENCHMARK(BM_CensusPrimeRank)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);

void BM_ClassCensusPrime(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(class_census(p, 1, single_thread()));
}
BENCHMARK(BM_ClassCensusPrime)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
