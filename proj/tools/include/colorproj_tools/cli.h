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

#ifndef COLORPROJ_TOOLS_CLI_H
#define COLORPROJ_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "colorproj/sim.h"
#include "colorproj/threshold.h"

namespace colorproj::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNoBracket = 3;
inline constexpr int kExitInvariant = 4;

struct RunConfig {
    std::string command;
    std::string code = kColorCodeLabel;
    std::vector<int> r_list;
    double p_start = 0;
    double p_stop = 0;
    double p_step = 0;
    uint64_t trials = 10000;
    uint64_t seed = 0;
    std::string out;
    std::string plot;
    bool log_y = false;
    std::string format = "csv";
    unsigned threads = 1;
    Color color = Color::kRed;
};

/// Runs every (r, p) point of the sweep, rows sorted by (code, r, p).
std::vector<TrialStats> run_sweep(const RunConfig &config);

/// Static SVG line plot, one polyline per r.
std::string render_svg(const std::vector<TrialStats> &rows, bool log_y);

/// Entry point shared by the executable and the tests. Output goes to
/// `out`, diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace colorproj::cli

#endif
