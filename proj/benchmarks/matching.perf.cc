// Copyright 2026 colorproj Contributors
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

#include <random>

#include "colorproj/matching.h"

using namespace colorproj;

static WeightMatrix random_weights(size_t size, uint64_t seed) {
    std::mt19937_64 rng(seed);
    WeightMatrix w(size);
    for (size_t i = 0; i < size; i++) {
        for (size_t j = i + 1; j < size; j++) {
            w.set(i, j, int64_t(rng() % 64));
        }
    }
    return w;
}

static void matching_random_complete(benchmark::State &state) {
    WeightMatrix w = random_weights(size_t(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_weight_perfect_matching(w, TieBreak::kAny));
    }
}
BENCHMARK(matching_random_complete)->Arg(10)->Arg(40)->Arg(160);

static void matching_lexicographic(benchmark::State &state) {
    WeightMatrix w = random_weights(size_t(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_weight_perfect_matching(w, TieBreak::kLexicographic));
    }
}
BENCHMARK(matching_lexicographic)->Arg(10)->Arg(40);

static void shortest_paths_tables(benchmark::State &state) {
    SurfaceTiling t = color_subtiling(cayley_triangular(int(state.range(0))), Color::kRed).tiling;
    for (auto _ : state) {
        ShortestPaths paths(t);
        benchmark::DoNotOptimize(paths.distance(0, 1));
    }
}
BENCHMARK(shortest_paths_tables)->Arg(4)->Arg(8)->Arg(16);
