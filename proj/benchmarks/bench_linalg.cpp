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

static void BM_PartialTranspose(benchmark::State &state) {
    const Index n = state.range(0);
    Rng rng(1);
    const CMatrix m = random_separable(n, 2 * n, rng).matrix;
    for (auto _ : state) benchmark::DoNotOptimize(partial_transpose(m, n));
}
BENCHMARK(BM_PartialTranspose)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_DensityState(benchmark::State &state) {
    const Index n = state.range(0);
    Rng rng(2);
    const CMatrix m = random_ppt(n, rng).matrix;
    for (auto _ : state) {
        DensityState rho(m, n);
        benchmark::DoNotOptimize(rho.pt_rank());
    }
}
BENCHMARK(BM_DensityState)->Arg(2)->Arg(4)->Arg(8);

static void BM_PsdDifference(benchmark::State &state) {
    const Index n = state.range(0);
    Rng rng(3);
    const CMatrix a = random_ppt(n, rng).matrix;
    const ProductVector v = random_product_vector(n, rng);
    const CMatrix b = 1e-3 * v.projector();
    for (auto _ : state) benchmark::DoNotOptimize(psd_difference_check(a, b, {}));
}
BENCHMARK(BM_PsdDifference)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
