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

#include <algorithm>
#include <cmath>
#include <map>

namespace colorproj {

namespace {

double rate(const TrialStats &s) {
    return s.trials == 0 ? 0.0 : static_cast<double>(s.failures) / static_cast<double>(s.trials);
}

}  // namespace

ThresholdEstimate estimate_threshold(std::vector<Curve> curves) {
    if (curves.size() < 2) {
        throw std::invalid_argument("estimate_threshold: need at least two code sizes");
    }
    std::sort(curves.begin(), curves.end(), [](const Curve &a, const Curve &b) { return a.r < b.r; });
    for (size_t i = 0; i < curves.size(); i++) {
        const auto &pts = curves[i].points;
        if (pts.size() < 2) {
            throw std::invalid_argument("estimate_threshold: need at least two grid points per size");
        }
        if (i > 0 && curves[i].r == curves[i - 1].r) {
            throw std::invalid_argument("estimate_threshold: duplicate code size");
        }
        if (pts.size() != curves[0].points.size()) {
            throw std::invalid_argument("estimate_threshold: curves do not share a grid");
        }
        for (size_t j = 0; j < pts.size(); j++) {
            if (std::abs(pts[j].p - curves[0].points[j].p) > 1e-12) {
                throw std::invalid_argument("estimate_threshold: curves do not share a grid");
            }
            if (j > 0 && !(pts[j].p > pts[j - 1].p)) {
                throw std::invalid_argument("estimate_threshold: grid must be increasing");
            }
        }
    }

    ThresholdEstimate out;
    for (size_t i = 0; i + 1 < curves.size(); i++) {
        const auto &small = curves[i].points;
        const auto &large = curves[i + 1].points;
        bool found = false;
        for (size_t j = 0; j + 1 < small.size(); j++) {
            double d0 = rate(small[j]) - rate(large[j]);
            double d1 = rate(small[j + 1]) - rate(large[j + 1]);
            if (d0 > 0 && d1 <= 0) {
                double p0 = small[j].p;
                double p1 = small[j + 1].p;
                out.pair_crossings.push_back(p0 + (p1 - p0) * d0 / (d0 - d1));
                found = true;
                break;
            }
        }
        if (!found) {
            throw GridDoesNotBracket();
        }
    }
    double sum = 0;
    for (double c : out.pair_crossings) {
        sum += c;
    }
    out.crossing_p = sum / static_cast<double>(out.pair_crossings.size());
    return out;
}

std::vector<Curve> curves_from_rows(const std::vector<TrialStats> &rows, const std::string &code) {
    std::map<int, Curve> by_r;
    for (const auto &s : rows) {
        if (s.code != code) {
            continue;
        }
        Curve &c = by_r[s.r];
        c.r = s.r;
        c.points.push_back(s);
    }
    std::vector<Curve> out;
    for (auto &[r, c] : by_r) {
        std::sort(c.points.begin(), c.points.end(), [](const TrialStats &a, const TrialStats &b) { return a.p < b.p; });
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace colorproj
