// Copyright 2026 The sep2xn Authors
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

#include "sep2xn/sep2xn.hpp"

using namespace sep2xn;

static void BM_AnalyzeRankN(benchmark::State &state) {
    const Index n = state.range(0);
    Rng rng(20);
    const DensityState rho(random_separable(n, n, rng).matrix, n);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(rho));
}
BENCHMARK(BM_AnalyzeRankN)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

static void BM_AnalyzePtInvariant(benchmark::State &state) {
    const Index n = state.range(0);
    Rng rng(21);
    const DensityState rho(random_pt_invariant(n, rng).matrix, n);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(rho));
}
BENCHMARK(BM_AnalyzePtInvariant)->DenseRange(2, 5, 1)->Unit(benchmark::kMillisecond);

static void BM_AnalyzeRankNPlusOne(benchmark::State &state) {
    const Index n = state.range(0);
    Rng rng(22);
    const DensityState rho(random_separable(n, n + 1, rng).matrix, n);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(rho));
}
BENCHMARK(BM_AnalyzeRankNPlusOne)->DenseRange(2, 5, 1)->Unit(benchmark::kMillisecond);

static void BM_AnalyzeBoundEntangled(benchmark::State &state) {
    // Rank-five PPT entangled state on C^2 (x) C^4, b = 1/2.
    const double b = 0.5;
    CMatrix m = CMatrix::Zero(8, 8);
    for (Index i = 0; i < 8; ++i) m(i, i) = b;
    m(4, 4) = m(7, 7) = (1.0 + b) / 2.0;
    for (Index i = 0; i < 3; ++i) m(i, i + 5) = m(i + 5, i) = b;
    m(4, 7) = m(7, 4) = std::sqrt(1.0 - b * b) / 2.0;
    const DensityState rho(m / (7.0 * b + 1.0), 4);
    for (auto _ : state) benchmark::DoNotOptimize(analyze(rho));
}
BENCHMARK(BM_AnalyzeBoundEntangled)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
