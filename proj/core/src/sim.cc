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

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <functional>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "colorproj/decode.h"
#include "colorproj/projection.h"

namespace colorproj {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct Counts {
    uint64_t failures = 0;
    uint64_t heralded = 0;
};

// Runs trial(i) for i in [0, trials) over `threads` workers pulling fixed
// blocks of trial indices. Counts are integers, so the sum does not depend
// on which worker ran which block.
Counts run_parallel(uint64_t trials, unsigned threads, const std::function<Counts(uint64_t)> &trial) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    constexpr uint64_t kBlock = 16;
    std::atomic<uint64_t> next{0};
    std::vector<Counts> partial(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](unsigned w) {
        try {
            while (true) {
                uint64_t start = next.fetch_add(kBlock);
                if (start >= trials) {
                    break;
                }
                uint64_t stop = std::min(trials, start + kBlock);
                for (uint64_t t = start; t < stop; t++) {
                    Counts c = trial(t);
                    partial[w].failures += c.failures;
                    partial[w].heralded += c.heralded;
                }
            }
        } catch (...) {
            errors[w] = std::current_exception();
            next.store(trials);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; w++) {
            pool.emplace_back(worker, w);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    Counts total;
    for (const auto &c : partial) {
        total.failures += c.failures;
        total.heralded += c.heralded;
    }
    return total;
}

void check_probability(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("probability must lie in [0, 1]");
    }
}

}  // namespace

std::mt19937_64 trial_stream(uint64_t seed, uint64_t trial) {
    return std::mt19937_64(splitmix64(splitmix64(seed) ^ trial));
}

double uniform_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BinaryChain sample_bsc(size_t n, double p, std::mt19937_64 &rng) {
    check_probability(p);
    std::vector<uint32_t> support;
    for (size_t i = 0; i < n; i++) {
        if (uniform_unit(rng) < p) {
            support.push_back(static_cast<uint32_t>(i));
        }
    }
    return BinaryChain(n, std::move(support));
}

std::pair<double, double> wilson_interval(uint64_t k, uint64_t n) {
    if (n == 0) {
        return {0.0, 1.0};
    }
    const double z = 1.959963984540054;
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(k) / nn;
    const double denom = 1 + z * z / nn;
    const double center = (phat + z * z / (2 * nn)) / denom;
    const double half = z * std::sqrt(phat * (1 - phat) / nn + z * z / (4 * nn * nn)) / denom;
    double lo = k == 0 ? 0.0 : std::max(0.0, center - half);
    double hi = k == n ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

void finalize_stats(TrialStats &stats) {
    if (stats.failures > stats.trials || stats.heralded > stats.failures) {
        throw std::invalid_argument("trial counts are inconsistent");
    }
    stats.logical_rate = stats.trials == 0 ? 0.0 : static_cast<double>(stats.failures) / static_cast<double>(stats.trials);
    auto [lo, hi] = wilson_interval(stats.failures, stats.trials);
    stats.ci_low = std::min(lo, stats.logical_rate);
    stats.ci_high = std::max(hi, stats.logical_rate);
}

TrialStats run_color_trials(const ColorCode &code, double p, uint64_t trials, uint64_t seed, unsigned threads) {
    check_probability(p);
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    const size_t n = code.css.n;
    Counts c = run_parallel(trials, threads, [&](uint64_t t) {
        std::mt19937_64 rng = trial_stream(seed, t);
        BinaryChain x = sample_bsc(n, p, rng);
        DecodeOutcome outcome = decode_color(code, color_syndrome(code, x));
        Counts out;
        if (!outcome.estimate) {
            out.failures = out.heralded = 1;
        } else if (judge(code, x, outcome) == Verdict::kFailure) {
            out.failures = 1;
        }
        return out;
    });
    TrialStats stats;
    stats.code = kColorCodeLabel;
    stats.r = code.r;
    stats.n = n;
    stats.k = code.css.k;
    stats.p = p;
    stats.trials = trials;
    stats.failures = c.failures;
    stats.heralded = c.heralded;
    stats.seed = seed;
    finalize_stats(stats);
    return stats;
}

TrialStats run_color_trials(int r, double p, uint64_t trials, uint64_t seed, unsigned threads) {
    return run_color_trials(build_color_code(r), p, trials, seed, threads);
}

TrialStats run_surface_trials(const SurfaceCode &code, int r, double p, uint64_t trials, uint64_t seed,
                              unsigned threads) {
    check_probability(p);
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    const size_t n = code.complex.dim1();
    Counts c = run_parallel(trials, threads, [&](uint64_t t) {
        std::mt19937_64 rng = trial_stream(seed, t);
        BinaryChain x = sample_bsc(n, p, rng);
        BinaryChain correction = code.decoder.decode(syndrome(code.complex, x)).correction;
        Counts out;
        if (!code.stabilizers.contains(x + correction)) {
            out.failures = 1;
        }
        return out;
    });
    TrialStats stats;
    stats.code = kSurfaceCodeLabel;
    stats.r = r;
    stats.n = n;
    stats.k = n - rank(code.complex.d1().transpose()) - code.stabilizers.rank();
    stats.p = p;
    stats.trials = trials;
    stats.failures = c.failures;
    stats.heralded = 0;
    stats.seed = seed;
    finalize_stats(stats);
    return stats;
}

TrialStats run_surface_trials(int r, Color c, double p, uint64_t trials, uint64_t seed, unsigned threads) {
    return run_surface_trials(build_surface_code(r, c), r, p, trials, seed, threads);
}

std::array<ProjectedChannel, 3> projected_channel_rate(const ColorCode &code, double p, uint64_t trials,
                                                       uint64_t seed) {
    check_probability(p);
    constexpr size_t kCovarianceLimit = 1024;
    std::array<ProjectedChannel, 3> out;
    std::array<std::vector<uint64_t>, 3> flips;
    std::array<std::vector<uint64_t>, 3> joint;
    for (size_t c = 0; c < 3; c++) {
        size_t m = code.projections[c].subtiling.tiling.num_edges();
        flips[c].assign(m, 0);
        if (m <= kCovarianceLimit) {
            joint[c].assign(m * m, 0);
        }
    }
    for (uint64_t t = 0; t < trials; t++) {
        std::mt19937_64 rng = trial_stream(seed, t);
        BinaryChain x = sample_bsc(code.css.n, p, rng);
        for (size_t c = 0; c < 3; c++) {
            BinaryChain b = project_error(code.projections[c], x);
            const auto &s = b.support();
            size_t m = flips[c].size();
            for (size_t i = 0; i < s.size(); i++) {
                flips[c][s[i]]++;
                if (!joint[c].empty()) {
                    for (size_t j = i + 1; j < s.size(); j++) {
                        joint[c][s[i] * m + s[j]]++;
                    }
                }
            }
        }
    }
    for (size_t c = 0; c < 3; c++) {
        size_t m = flips[c].size();
        uint64_t total = 0;
        for (uint64_t f : flips[c]) {
            total += f;
        }
        out[c].color = kColors[c];
        out[c].samples = static_cast<uint64_t>(m) * trials;
        out[c].flip_rate = out[c].samples == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(out[c].samples);
        if (joint[c].empty()) {
            out[c].max_abs_covariance = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        const double tt = static_cast<double>(trials);
        for (size_t i = 0; i < m; i++) {
            for (size_t j = i + 1; j < m; j++) {
                double pi = static_cast<double>(flips[c][i]) / tt;
                double pj = static_cast<double>(flips[c][j]) / tt;
                double pij = static_cast<double>(joint[c][i * m + j]) / tt;
                out[c].max_abs_covariance = std::max(out[c].max_abs_covariance, std::abs(pij - pi * pj));
            }
        }
    }
    return out;
}

double theorem3_bound(double pc_surface) {
    if (!(pc_surface >= 0 && pc_surface <= 0.5)) {
        throw std::invalid_argument("theorem3_bound: argument must lie in [0, 1/2]");
    }
    return 0.5 * (1 - std::sqrt(1 - 2 * pc_surface));
}

std::vector<double> p_grid(double start, double stop, double step) {
    if (!(step > 0) || !(stop >= start) || !std::isfinite(start) || !std::isfinite(stop)) {
        throw std::invalid_argument("p grid needs step > 0 and stop >= start");
    }
    auto count = static_cast<size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    for (size_t i = 0; i < count; i++) {
        double v = std::round((start + static_cast<double>(i) * step) * 1e9) / 1e9;
        check_probability(v);
        out.push_back(v);
    }
    return out;
}

namespace {

std::string g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

void write_csv(std::ostream &out, std::vector<TrialStats> rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const TrialStats &a, const TrialStats &b) {
        return std::tie(a.code, a.r, a.p) < std::tie(b.code, b.r, b.p);
    });
    out << kCsvHeader << '\n';
    for (const auto &s : rows) {
        out << s.code << ',' << s.r << ',' << s.n << ',' << s.k << ',' << g6(s.p) << ',' << s.trials << ','
            << s.failures << ',' << s.heralded << ',' << g6(s.logical_rate) << ',' << g6(s.ci_low) << ','
            << g6(s.ci_high) << ',' << s.seed << '\n';
    }
}

std::vector<TrialStats> read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("csv: empty input");
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    if (line != kCsvHeader) {
        throw std::invalid_argument("csv: unexpected header");
    }
    std::vector<TrialStats> rows;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(cell);
        }
        if (f.size() != 12) {
            throw std::invalid_argument("csv: line " + std::to_string(line_no) + " has " + std::to_string(f.size()) +
                                        " fields");
        }
        try {
            TrialStats s;
            s.code = f[0];
            s.r = std::stoi(f[1]);
            s.n = std::stoull(f[2]);
            s.k = std::stoull(f[3]);
            s.p = std::stod(f[4]);
            s.trials = std::stoull(f[5]);
            s.failures = std::stoull(f[6]);
            s.heralded = std::stoull(f[7]);
            s.logical_rate = std::stod(f[8]);
            s.ci_low = std::stod(f[9]);
            s.ci_high = std::stod(f[10]);
            s.seed = std::stoull(f[11]);
            rows.push_back(std::move(s));
        } catch (const std::logic_error &) {
            throw std::invalid_argument("csv: malformed number on line " + std::to_string(line_no));
        }
    }
    return rows;
}

}  // namespace colorproj
