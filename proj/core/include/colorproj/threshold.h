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

#ifndef COLORPROJ_THRESHOLD_H
#define COLORPROJ_THRESHOLD_H

#include <stdexcept>
#include <string>
#include <vector>

#include "colorproj/sim.h"

namespace colorproj {

class GridDoesNotBracket : public std::runtime_error {
   public:
    GridDoesNotBracket() : std::runtime_error("grid does not bracket threshold") {
    }
};

struct Curve {
    int r = 0;
    std::vector<TrialStats> points;  // increasing p
};

struct ThresholdEstimate {
    double crossing_p = 0;
    std::vector<double> pair_crossings;  // one per adjacent pair of sizes
    std::string method = "pairwise-linear-interpolation";
};

/// For each pair of adjacent sizes, finds the first grid interval where
/// rate(small) - rate(large) goes from positive to non-positive and
/// interpolates linearly. The estimate is the mean over pairs. Rates are
/// recomputed from the integer counts. Throws GridDoesNotBracket when some
/// pair never changes sign, std::invalid_argument on malformed input.
ThresholdEstimate estimate_threshold(std::vector<Curve> curves);

/// Groups rows of one code label into curves sorted by r and p.
std::vector<Curve> curves_from_rows(const std::vector<TrialStats> &rows, const std::string &code);

}  // namespace colorproj

#endif
