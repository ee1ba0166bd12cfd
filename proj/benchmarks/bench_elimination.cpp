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

// Random coefficient grids of degrees (x, y).
static void BM_EliminateSingle(benchmark::State &state) {
    Rng rng(10);
    const BivariatePoly p(random_complex_matrix(state.range(0) + 1, state.range(1) + 1, rng));
    for (auto _ : state) benchmark::DoNotOptimize(eliminate_single(p));
}
BENCHMARK(BM_EliminateSingle)->Args({1, 2})->Args({2, 2})->Args({2, 3})->Args({3, 4})->Args({4, 4});

static void BM_SolveSingle(benchmark::State &state) {
    Rng rng(11);
    const BivariatePoly p(random_complex_matrix(state.range(0) + 1, state.range(1) + 1, rng));
    const ToleranceConfig tol;
    for (auto _ : state) benchmark::DoNotOptimize(solve_single(p, tol));
}
BENCHMARK(BM_SolveSingle)->Args({1, 2})->Args({2, 3})->Args({3, 4});

static void BM_EliminatePair(benchmark::State &state) {
    Rng rng(12);
    const Index x = state.range(0), y = state.range(1);
    const BivariatePoly p(random_complex_matrix(x + 1, y + 1, rng));
    const BivariatePoly q(random_complex_matrix(x + 1, y + 1, rng));
    for (auto _ : state) benchmark::DoNotOptimize(eliminate_pair(p, q));
}
BENCHMARK(BM_EliminatePair)->Args({1, 2})->Args({2, 3})->Args({4, 4});

// Paired product search on the ranges of a rank-(terms, terms) separable state.
static void BM_PairedProducts(benchmark::State &state) {
    const Index n = state.range(0);
    Rng rng(13);
    const DensityState rho(random_separable(n, state.range(1), rng).matrix, n);
    const ToleranceConfig tol;
    for (auto _ : state) benchmark::DoNotOptimize(paired_products(rho.range(), rho.pt_range(), n, tol));
}
BENCHMARK(BM_PairedProducts)->Args({3, 4})->Args({4, 5})->Args({4, 6})->Args({5, 7});

BENCHMARK_MAIN();
