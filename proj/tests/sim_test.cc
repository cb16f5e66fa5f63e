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

#include "colorproj/sim.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

using namespace colorproj;

TEST(sample_bsc, extreme_probabilities) {
    auto rng = trial_stream(1, 0);
    for (int i = 0; i < 20; i++) {
        EXPECT_TRUE(sample_bsc(100, 0.0, rng).is_zero());
        EXPECT_EQ(sample_bsc(100, 1.0, rng).weight(), 100u);
    }
    EXPECT_THROW(sample_bsc(10, 1.5, rng), std::invalid_argument);
    EXPECT_THROW(sample_bsc(10, -0.1, rng), std::invalid_argument);
}

TEST(sample_bsc, mean_weight) {
    uint64_t total = 0;
    for (uint64_t t = 0; t < 100; t++) {
        auto rng = trial_stream(99, t);
        total += sample_bsc(10000, 0.1, rng).weight();
    }
    double mean = double(total) / 100;
    double sigma = std::sqrt(10000 * 0.1 * 0.9 / 100);
    EXPECT_LT(std::abs(mean - 1000), 5 * sigma);
}

TEST(trial_stream, depends_only_on_seed_and_index) {
    auto a = trial_stream(5, 17);
    auto b = trial_stream(5, 17);
    EXPECT_EQ(a(), b());
    EXPECT_NE(trial_stream(5, 17)(), trial_stream(5, 18)());
    EXPECT_NE(trial_stream(5, 17)(), trial_stream(6, 17)());
}

TEST(wilson_interval, brackets_the_rate) {
    auto [lo, hi] = wilson_interval(0, 100);
    EXPECT_EQ(lo, 0.0);
    EXPECT_GT(hi, 0.0);
    EXPECT_LT(hi, 0.05);
    auto [lo2, hi2] = wilson_interval(50, 100);
    EXPECT_NEAR((lo2 + hi2) / 2, 0.5, 1e-12);
    EXPECT_NEAR(hi2 - lo2, 2 * 1.96 * 0.05, 0.01);
}

TEST(run_color_trials, zero_noise_never_fails) {
    TrialStats s = run_color_trials(2, 0.0, 200, 1);
    EXPECT_EQ(s.failures, 0u);
    EXPECT_EQ(s.n, 72u);
    EXPECT_EQ(s.k, 4u);
    EXPECT_EQ(s.code, "color-hex");
}

TEST(run_color_trials, rate_grows_with_noise) {
    ColorCode code = build_color_code(2);
    TrialStats low = run_color_trials(code, 0.05, 3000, 7);
    TrialStats high = run_color_trials(code, 0.12, 3000, 7);
    EXPECT_LT(low.logical_rate, 0.5);
    EXPECT_LT(low.logical_rate, high.logical_rate);
    EXPECT_LE(low.ci_low, low.logical_rate);
    EXPECT_GE(low.ci_high, low.logical_rate);
    EXPECT_LE(low.heralded, low.failures);
}

TEST(run_color_trials, identical_for_any_worker_count) {
    ColorCode code = build_color_code(2);
    TrialStats one = run_color_trials(code, 0.09, 500, 11, 1);
    for (unsigned threads : {2u, 4u, 8u}) {
        TrialStats many = run_color_trials(code, 0.09, 500, 11, threads);
        EXPECT_EQ(many.failures, one.failures);
        EXPECT_EQ(many.heralded, one.heralded);
    }
}

TEST(run_surface_trials, zero_noise_and_color_symmetry) {
    EXPECT_EQ(run_surface_trials(2, Color::kRed, 0.0, 100, 1).failures, 0u);
    TrialStats r = run_surface_trials(2, Color::kRed, 0.12, 4000, 3);
    EXPECT_EQ(r.n, 36u);
    EXPECT_EQ(r.k, 2u);
    for (Color c : {Color::kGreen, Color::kBlue}) {
        // The subtilings are isomorphic; rates agree up to sampling noise.
        TrialStats o = run_surface_trials(2, c, 0.12, 4000, 3);
        double sigma = std::sqrt(r.logical_rate * (1 - r.logical_rate) / 4000 * 2);
        EXPECT_LT(std::abs(o.logical_rate - r.logical_rate), 5 * sigma + 1e-9);
    }
}

TEST(projected_channel_rate, matches_two_p_one_minus_p) {
    ColorCode code = build_color_code(2);
    auto zero = projected_channel_rate(code, 0.0, 50, 1);
    for (const auto &ch : zero) {
        EXPECT_EQ(ch.flip_rate, 0.0);
    }
    auto res = projected_channel_rate(code, 0.1, 4000, 5);
    for (const auto &ch : res) {
        double q = 2 * 0.1 * 0.9;
        double sigma = std::sqrt(q * (1 - q) / double(ch.samples));
        EXPECT_LT(std::abs(ch.flip_rate - q), 5 * sigma);
        // Distinct edges of one color depend on disjoint hyperedge pairs.
        EXPECT_LT(ch.max_abs_covariance, 0.03);
    }
}

TEST(theorem3_bound, values) {
    EXPECT_NEAR(theorem3_bound(0.159), 0.0871, 1e-4);
    EXPECT_EQ(theorem3_bound(0.0), 0.0);
    EXPECT_DOUBLE_EQ(theorem3_bound(0.5), 0.5);
    EXPECT_THROW(theorem3_bound(0.6), std::invalid_argument);
}

TEST(p_grid, construction) {
    auto g = p_grid(0.14, 0.18, 0.005);
    ASSERT_EQ(g.size(), 9u);
    EXPECT_EQ(g.front(), 0.14);
    EXPECT_EQ(g.back(), 0.18);
    EXPECT_EQ(p_grid(0.07, 0.105, 0.0035).size(), 11u);
    EXPECT_THROW(p_grid(0.2, 0.1, 0.01), std::invalid_argument);
    EXPECT_THROW(p_grid(0.1, 0.2, 0.0), std::invalid_argument);
}

TEST(csv, round_trip_and_sorting) {
    std::vector<TrialStats> rows;
    for (int r : {4, 2}) {
        for (double p : {0.2, 0.1}) {
            TrialStats s;
            s.code = "color-hex";
            s.r = r;
            s.n = 18 * r * r;
            s.k = 4;
            s.p = p;
            s.trials = 100;
            s.failures = r + int(p * 100);
            s.heralded = 1;
            s.seed = 9;
            finalize_stats(s);
            rows.push_back(s);
        }
    }
    std::ostringstream out;
    write_csv(out, rows);
    std::string text = out.str();
    EXPECT_EQ(text.substr(0, text.find('\n')), kCsvHeader);
    EXPECT_NE(text.find("color-hex,2,72,4,0.1,100,12,1,0.12,"), std::string::npos);
    std::istringstream in(text);
    auto back = read_csv(in);
    ASSERT_EQ(back.size(), 4u);
    EXPECT_EQ(back[0].r, 2);
    EXPECT_EQ(back[0].p, 0.1);
    EXPECT_EQ(back[3].r, 4);
    EXPECT_EQ(back[3].p, 0.2);
    std::ostringstream again;
    write_csv(again, back);
    EXPECT_EQ(again.str(), text);

    std::istringstream bad("code,r\n");
    EXPECT_THROW(read_csv(bad), std::invalid_argument);
}
