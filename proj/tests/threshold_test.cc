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

#include "colorproj/threshold.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace colorproj;

namespace {

std::vector<Curve> synthetic(double center, std::vector<int> sizes, const std::vector<double> &grid) {
    std::vector<Curve> curves;
    for (int r : sizes) {
        Curve c;
        c.r = r;
        for (double p : grid) {
            TrialStats s;
            s.r = r;
            s.p = p;
            s.trials = 1000000;
            s.failures = uint64_t(std::llround(0.5 * (1 + std::tanh((p - center) * r * 100)) * 1e6));
            c.points.push_back(s);
        }
        curves.push_back(c);
    }
    return curves;
}

}  // namespace

TEST(estimate_threshold, synthetic_crossing) {
    auto grid = p_grid(0.08, 0.12, 0.005);
    ThresholdEstimate est = estimate_threshold(synthetic(0.1, {2, 4, 8}, grid));
    EXPECT_NEAR(est.crossing_p, 0.100, 0.005);
    EXPECT_EQ(est.pair_crossings.size(), 2u);
    EXPECT_EQ(est.method, "pairwise-linear-interpolation");
    for (double c : est.pair_crossings) {
        EXPECT_GE(c, grid.front());
        EXPECT_LE(c, grid.back());
    }
}

TEST(estimate_threshold, off_centre_crossing_is_interpolated) {
    auto grid = p_grid(0.08, 0.12, 0.01);
    ThresholdEstimate est = estimate_threshold(synthetic(0.103, {4, 8}, grid));
    EXPECT_NEAR(est.crossing_p, 0.103, 0.01);
}

TEST(estimate_threshold, grid_that_misses_the_crossing) {
    auto grid = p_grid(0.12, 0.16, 0.01);
    EXPECT_THROW(estimate_threshold(synthetic(0.1, {2, 4}, grid)), GridDoesNotBracket);
    try {
        estimate_threshold(synthetic(0.1, {2, 4}, grid));
    } catch (const GridDoesNotBracket &e) {
        EXPECT_STREQ(e.what(), "grid does not bracket threshold");
    }
}

TEST(estimate_threshold, malformed_input) {
    auto grid = p_grid(0.08, 0.12, 0.01);
    EXPECT_THROW(estimate_threshold(synthetic(0.1, {2}, grid)), std::invalid_argument);
    auto curves = synthetic(0.1, {2, 4}, grid);
    curves[1].points.pop_back();
    EXPECT_THROW(estimate_threshold(curves), std::invalid_argument);
    auto one_point = synthetic(0.1, {2, 4}, {0.1});
    EXPECT_THROW(estimate_threshold(one_point), std::invalid_argument);
}

TEST(curves_from_rows, groups_by_size) {
    auto curves = synthetic(0.1, {8, 2}, p_grid(0.09, 0.11, 0.01));
    std::vector<TrialStats> rows;
    for (auto &c : curves) {
        for (auto s : c.points) {
            s.code = "surface-hex";
            rows.push_back(s);
        }
    }
    std::reverse(rows.begin(), rows.end());
    auto grouped = curves_from_rows(rows, "surface-hex");
    ASSERT_EQ(grouped.size(), 2u);
    EXPECT_EQ(grouped[0].r, 2);
    EXPECT_LT(grouped[0].points[0].p, grouped[0].points[1].p);
    EXPECT_TRUE(curves_from_rows(rows, "color-hex").empty());
}
