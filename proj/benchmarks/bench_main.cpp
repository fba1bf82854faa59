// Copyright 2026 The fermiqi Authors
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

#include <numbers>
#include <random>

#include "benchmark/benchmark.h"

#include "fermiqi/channels.hpp"
#include "fermiqi/density.hpp"
#include "fermiqi/roof.hpp"
#include "support.hpp"

using namespace fermiqi;

namespace {

void BM_reorder_modes(benchmark::State &state) {
    std::mt19937_64 rng(1);
    auto order = fermiqi::testing::letters(static_cast<std::size_t>(state.range(0)));
    auto psi = fermiqi::testing::random_state(order, rng);
    auto target = fermiqi::testing::shuffled(order, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reorder_modes(psi, target));
    }
}
BENCHMARK(BM_reorder_modes)->DenseRange(4, 10, 3);

void BM_partial_trace(benchmark::State &state) {
    std::mt19937_64 rng(2);
    auto order = fermiqi::testing::letters(static_cast<std::size_t>(state.range(0)));
    auto rho = outer(fermiqi::testing::random_state(order, rng));
    std::vector<std::string> traced{order[0], order[order.size() / 2]};
    for (auto _ : state) {
        benchmark::DoNotOptimize(partial_trace(rho, traced));
    }
}
BENCHMARK(BM_partial_trace)->DenseRange(3, 7, 2);

void BM_roof(benchmark::State &state) {
    auto rho = grassmann_output_state(std::numbers::pi / 8);
    RoofConfig config;
    config.restarts = static_cast<int>(state.range(0));
    config.threads = 1;
    auto constraint = state.range(1) ? RoofConstraint::ParitySSR : RoofConstraint::Unconstrained;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eof_convex_roof(rho, constraint, config));
    }
}
BENCHMARK(BM_roof)->Args({1, 0})->Args({8, 0})->Args({8, 1})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
