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

#include "colorproj/color_code.h"
#include "colorproj/decode.h"
#include "colorproj/sim.h"

using namespace colorproj;

static void decode_color_code(benchmark::State &state) {
    ColorCode code = build_color_code(int(state.range(0)));
    double p = 0.08;
    uint64_t trial = 0;
    for (auto _ : state) {
        state.PauseTiming();
        auto rng = trial_stream(1, trial++);
        BinaryChain x = sample_bsc(code.css.n, p, rng);
        BinaryChain s = color_syndrome(code, x);
        state.ResumeTiming();
        benchmark::DoNotOptimize(decode_color(code, s));
    }
}
BENCHMARK(decode_color_code)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);

static void decode_surface_code(benchmark::State &state) {
    SurfaceCode code = build_surface_code(int(state.range(0)), Color::kRed);
    TwoComplex complex = homology_complex(code.subtiling.tiling);
    uint64_t trial = 0;
    for (auto _ : state) {
        state.PauseTiming();
        auto rng = trial_stream(2, trial++);
        BinaryChain x = sample_bsc(code.subtiling.tiling.num_edges(), 0.15, rng);
        BinaryChain s = syndrome(complex, x);
        state.ResumeTiming();
        benchmark::DoNotOptimize(code.decoder.decode(s));
    }
}
BENCHMARK(decode_surface_code)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void build_code(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_color_code(int(state.range(0))));
    }
}
BENCHMARK(build_code)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

static void color_trials(benchmark::State &state) {
    ColorCode code = build_color_code(4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_color_trials(code, 0.08, 100, 3));
    }
}
BENCHMARK(color_trials)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
