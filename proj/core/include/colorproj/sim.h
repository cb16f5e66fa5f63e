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

#ifndef COLORPROJ_SIM_H
#define COLORPROJ_SIM_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "colorproj/color_code.h"
#include "colorproj/gf2.h"

namespace colorproj {

/// The random stream of one trial, a pure function of (seed, trial).
std::mt19937_64 trial_stream(uint64_t seed, uint64_t trial);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(std::mt19937_64 &rng);

/// Each of the n indices independently with probability p.
BinaryChain sample_bsc(size_t n, double p, std::mt19937_64 &rng);

/// 95% Wilson score interval for k successes out of n.
std::pair<double, double> wilson_interval(uint64_t k, uint64_t n);

struct TrialStats {
    std::string code;
    int r = 0;
    size_t n = 0;
    size_t k = 0;
    double p = 0;
    uint64_t trials = 0;
    uint64_t failures = 0;
    uint64_t heralded = 0;
    double logical_rate = 0;
    double ci_low = 0;
    double ci_high = 0;
    uint64_t seed = 0;
};

/// Fills logical_rate and the interval from the integer counts.
void finalize_stats(TrialStats &stats);

inline constexpr const char *kColorCodeLabel = "color-hex";
inline constexpr const char *kSurfaceCodeLabel = "surface-hex";

/// Monte Carlo decoding of Z errors on the color code. Results do not depend
/// on `threads` (0 means one worker per hardware thread).
TrialStats run_color_trials(const ColorCode &code, double p, uint64_t trials, uint64_t seed, unsigned threads = 1);
TrialStats run_color_trials(int r, double p, uint64_t trials, uint64_t seed, unsigned threads = 1);

/// Monte Carlo decoding of the surface code on one color subtiling.
TrialStats run_surface_trials(const SurfaceCode &code, int r, double p, uint64_t trials, uint64_t seed,
                              unsigned threads = 1);
TrialStats run_surface_trials(int r, Color c, double p, uint64_t trials, uint64_t seed, unsigned threads = 1);

struct ProjectedChannel {
    Color color = Color::kRed;
    double flip_rate = 0;
    uint64_t samples = 0;  // edge observations
    /// Largest |covariance| over pairs of edges of this color.
    double max_abs_covariance = 0;
};

/// Empirical behaviour of the projected noise: marginal flip rate per color
/// and the strongest pairwise covariance between edges of one color.
std::array<ProjectedChannel, 3> projected_channel_rate(const ColorCode &code, double p, uint64_t trials,
                                                       uint64_t seed);

/// Lower bound on the color-code threshold from a surface-code threshold:
/// (1 - sqrt(1 - 2 pc)) / 2.
double theorem3_bound(double pc_surface);

/// Grid start, start + step, ... up to stop (inclusive, with rounding slack),
/// each value rounded to 9 decimals.
std::vector<double> p_grid(double start, double stop, double step);

inline constexpr const char *kCsvHeader = "code,r,n,k,p,trials,failures,heralded,logical_rate,ci_low,ci_high,seed";

/// Sorts rows by (code, r, p) and writes them with the header.
void write_csv(std::ostream &out, std::vector<TrialStats> rows);
std::vector<TrialStats> read_csv(std::istream &in);

}  // namespace colorproj

#endif
