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

#include "colorproj_tools/cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "colorproj/color_code.h"
#include "colorproj/decode.h"
#include "colorproj/projection.h"

namespace colorproj::cli {

namespace {

using nlohmann::json;

const std::vector<int> kDefaultSurfaceSizes = {4, 8, 16};
const std::vector<int> kDefaultColorSizes = {2, 4, 8};

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

json stats_json(const TrialStats &s) {
    return json{{"code", s.code},         {"r", s.r},           {"n", s.n},
                {"k", s.k},               {"p", s.p},           {"trials", s.trials},
                {"failures", s.failures}, {"heralded", s.heralded}, {"logical_rate", s.logical_rate},
                {"ci_low", s.ci_low},     {"ci_high", s.ci_high}, {"seed", s.seed}};
}

json chain_json(const BinaryChain &c) {
    return json(c.support());
}

std::vector<uint32_t> parse_index_list(const std::string &text) {
    std::vector<uint32_t> result;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            continue;
        }
        size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(item, &used);
        } catch (const std::exception &) {
            throw UsageError("bad index '" + item + "'");
        }
        if (used != item.size() || item[0] == '-' || value > UINT32_MAX) {
            throw UsageError("bad index '" + item + "'");
        }
        result.push_back(static_cast<uint32_t>(value));
    }
    return result;
}

void apply_sweep_defaults(RunConfig &cfg) {
    bool surface = cfg.code == kSurfaceCodeLabel;
    if (cfg.r_list.empty()) {
        cfg.r_list = surface ? kDefaultSurfaceSizes : kDefaultColorSizes;
    }
    if (cfg.p_step == 0 && cfg.p_start == 0 && cfg.p_stop == 0) {
        cfg.p_start = surface ? 0.14 : 0.07;
        cfg.p_stop = surface ? 0.18 : 0.105;
        cfg.p_step = 0.005;
    }
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw UsageError("cannot open " + path + " for writing");
    }
    f << text;
    if (!f) {
        throw std::runtime_error("failed writing " + path);
    }
}

std::string format_rows(const std::vector<TrialStats> &rows, const std::string &format) {
    if (format == "json") {
        json arr = json::array();
        for (const auto &s : rows) {
            arr.push_back(stats_json(s));
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream ss;
    write_csv(ss, rows);
    return ss.str();
}

int cmd_info(int r, const std::string &format, std::ostream &out) {
    ColorCode code = build_color_code(r);
    json j;
    j["r"] = r;
    j["n"] = code.css.n;
    j["k"] = code.css.k;
    j["d_label"] = 4 * r;
    j["d_verified"] = r == 1;
    j["x_checks"] = code.css.hx.rows();
    j["z_checks"] = code.css.hz.rows();
    j["rank_hx"] = rank(code.css.hx);
    j["rank_hz"] = code.stabilizers.rank();
    json subs = json::array();
    for (Color c : kColors) {
        const auto &t = code.projection(c).subtiling.tiling;
        subs.push_back({{"color", std::string(1, color_letter(c))},
                        {"vertices", t.num_vertices()},
                        {"edges", t.num_edges()},
                        {"faces", t.num_faces()}});
    }
    j["subtilings"] = subs;
    if (format == "json") {
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "color code on the hexagonal torus, r = " << r << "\n";
    out << "  n = " << code.css.n << " qubits, k = " << code.css.k << " logical qubits\n";
    out << "  d = " << 4 * r << (r == 1 ? " (verified by exhaustive search)" : " (label, not verified)") << "\n";
    out << "  X checks " << code.css.hx.rows() << " (rank " << j["rank_hx"].get<size_t>() << "), Z checks "
        << code.css.hz.rows() << " (rank " << code.stabilizers.rank() << ")\n";
    for (const auto &s : subs) {
        out << "  subtiling " << s["color"].get<std::string>() << ": " << s["vertices"].get<size_t>() << " vertices, "
            << s["edges"].get<size_t>() << " edges, " << s["faces"].get<size_t>() << " faces\n";
    }
    return kExitOk;
}

int cmd_decode(int r, const std::vector<uint32_t> &errors, bool have_errors, double p, uint64_t seed,
               const std::string &format, std::ostream &out) {
    ColorCode code = build_color_code(r);
    BinaryChain x;
    if (have_errors) {
        for (uint32_t e : errors) {
            if (e >= code.css.n) {
                throw UsageError("hyperedge index " + std::to_string(e) + " out of range");
            }
        }
        x = BinaryChain::from_toggles(code.css.n, errors);
    } else {
        std::mt19937_64 rng = trial_stream(seed, 0);
        x = sample_bsc(code.css.n, p, rng);
    }
    BinaryChain s = color_syndrome(code, x);
    DecodeOutcome outcome = decode_color(code, s);
    DecodeStatus status = final_status(code, x, outcome);

    json j;
    j["r"] = r;
    j["n"] = code.css.n;
    j["error"] = chain_json(x);
    j["syndrome"] = chain_json(s);
    json colors = json::array();
    for (Color c : kColors) {
        auto i = static_cast<size_t>(c);
        colors.push_back({{"color", std::string(1, color_letter(c))},
                          {"defects", project_syndrome(code.projections[i], s).weight()},
                          {"matching_weight", outcome.per_color_weights[i]},
                          {"correction", chain_json(outcome.surface_corrections[i])}});
    }
    j["colors"] = colors;
    j["combined_boundary_weight"] = outcome.combined_boundary_weight;
    j["lifted"] = outcome.estimate.has_value();
    j["estimate"] = outcome.estimate ? chain_json(*outcome.estimate) : json(nullptr);
    j["status"] = status_name(status);
    if (format == "json") {
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    out << "r = " << r << ", n = " << code.css.n << "\n";
    out << "error     " << x.str() << "\n";
    out << "syndrome  " << s.str() << "\n";
    for (Color c : kColors) {
        auto i = static_cast<size_t>(c);
        out << "color " << color_letter(c) << ": " << colors[i]["defects"].get<size_t>() << " defects, matching weight "
            << outcome.per_color_weights[i] << ", correction " << outcome.surface_corrections[i].str() << "\n";
    }
    out << "combined boundary weight " << outcome.combined_boundary_weight << "\n";
    if (outcome.estimate) {
        out << "lifted    " << outcome.estimate->str() << "\n";
    } else {
        out << "lifted    no lifting\n";
    }
    out << "status    " << status_name(status) << "\n";
    return kExitOk;
}

ThresholdEstimate threshold_of(const std::vector<TrialStats> &rows, std::string code) {
    if (code.empty()) {
        std::map<std::string, int> labels;
        for (const auto &s : rows) {
            labels[s.code]++;
        }
        if (labels.size() != 1) {
            throw UsageError("input mixes several codes; pass --code");
        }
        code = labels.begin()->first;
    }
    return estimate_threshold(curves_from_rows(rows, code));
}

int print_threshold(const ThresholdEstimate &est, const std::string &format, std::ostream &out) {
    double bound = theorem3_bound(std::min(0.5, std::max(0.0, est.crossing_p)));
    if (format == "json") {
        json j{{"crossing_p", est.crossing_p},
               {"pair_crossings", est.pair_crossings},
               {"method", est.method},
               {"theorem3_bound", bound}};
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "crossing_p %.6g\n", est.crossing_p);
    out << buf;
    out << "pair_crossings";
    for (double c : est.pair_crossings) {
        std::snprintf(buf, sizeof(buf), " %.6g", c);
        out << buf;
    }
    out << "\nmethod " << est.method << "\n";
    std::snprintf(buf, sizeof(buf), "theorem3_bound %.6g\n", bound);
    out << buf;
    return kExitOk;
}

}  // namespace

std::vector<TrialStats> run_sweep(const RunConfig &config) {
    if (config.code != kColorCodeLabel && config.code != kSurfaceCodeLabel) {
        throw UsageError("unknown code family " + config.code);
    }
    if (config.r_list.empty()) {
        throw UsageError("no code sizes given");
    }
    if (config.trials < 1) {
        throw UsageError("trials must be at least 1");
    }
    std::vector<double> grid;
    try {
        grid = p_grid(config.p_start, config.p_stop, config.p_step);
    } catch (const std::invalid_argument &ex) {
        throw UsageError(std::string("empty or invalid p grid: ") + ex.what());
    }
    std::vector<TrialStats> rows;
    for (int r : config.r_list) {
        if (r < 1) {
            throw UsageError("code sizes must be positive");
        }
        if (config.code == kColorCodeLabel) {
            ColorCode code = build_color_code(r);
            for (double p : grid) {
                rows.push_back(run_color_trials(code, p, config.trials, config.seed, config.threads));
            }
        } else {
            SurfaceCode code = build_surface_code(r, config.color);
            for (double p : grid) {
                rows.push_back(run_surface_trials(code, r, p, config.trials, config.seed, config.threads));
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const TrialStats &a, const TrialStats &b) {
        return std::tie(a.code, a.r, a.p) < std::tie(b.code, b.r, b.p);
    });
    return rows;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Color code construction, decoding by projection, and threshold sweeps", "colorproj"};
    app.require_subcommand(1);

    RunConfig cfg;
    int r = 0;
    std::string format;
    std::string color_letter_arg = "R";
    std::string in_path;
    std::string errors_arg;
    double p = 0.05;

    auto *info = app.add_subcommand("info", "Print code parameters");
    info->add_option("--r", r, "Lattice size")->required()->check(CLI::PositiveNumber);
    info->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto *decode = app.add_subcommand("decode", "Decode a single shot");
    decode->add_option("--r", r, "Lattice size")->required()->check(CLI::PositiveNumber);
    auto *errors_opt =
        decode->add_option("--errors", errors_arg, "Comma-separated hyperedge indices (empty for none)");
    decode->add_option("--p", p, "Sample the error at this rate")->check(CLI::Range(0.0, 1.0));
    decode->add_option("--seed", cfg.seed, "Seed for the sampled error");
    decode->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto add_sweep_flags = [&](CLI::App *sub) {
        CLI::Option *code_opt = sub->add_option("--code", cfg.code, "color-hex or surface-hex")
            ->check(CLI::IsMember({std::string(kColorCodeLabel), std::string(kSurfaceCodeLabel)}));
        sub->add_option("--r", r, "Single lattice size")->check(CLI::PositiveNumber);
        sub->add_option("--r-list", cfg.r_list, "Comma-separated lattice sizes")->delimiter(',');
        sub->add_option("--p-start", cfg.p_start, "First physical error rate");
        sub->add_option("--p-stop", cfg.p_stop, "Last physical error rate");
        sub->add_option("--p-step", cfg.p_step, "Grid step");
        sub->add_option("--trials", cfg.trials, "Trials per point");
        sub->add_option("--seed", cfg.seed, "Base seed");
        sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
        sub->add_option("--color", color_letter_arg, "Subtiling color for surface-hex (R, G or B)")
            ->check(CLI::IsMember({"R", "G", "B"}));
        return code_opt;
    };

    auto *sweep = app.add_subcommand("sweep", "Monte Carlo sweep over a grid of error rates");
    add_sweep_flags(sweep);
    sweep->add_option("--out", cfg.out, "Output file (default stdout)");
    sweep->add_option("--plot", cfg.plot, "Also write an SVG plot here");
    sweep->add_flag("--log-y", cfg.log_y, "Logarithmic y axis in the plot");
    sweep->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto *threshold = app.add_subcommand("threshold", "Estimate the threshold from a sweep CSV or a fresh sweep");
    CLI::Option *threshold_code = add_sweep_flags(threshold);
    threshold->add_option("--in", in_path, "Sweep CSV to read instead of simulating");
    threshold->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::vector<const char *> argv;
    argv.push_back("colorproj");
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (r > 0 && (sweep->parsed() || threshold->parsed())) {
            if (!cfg.r_list.empty()) {
                throw UsageError("--r and --r-list are mutually exclusive");
            }
            cfg.r_list = {r};
        }
        cfg.color = color_from_letter(color_letter_arg[0]);

        if (info->parsed()) {
            return cmd_info(r, format, out);
        }
        if (decode->parsed()) {
            return cmd_decode(r, parse_index_list(errors_arg), errors_opt->count() > 0, p, cfg.seed, format, out);
        }
        if (sweep->parsed()) {
            cfg.command = "sweep";
            apply_sweep_defaults(cfg);
            std::vector<TrialStats> rows = run_sweep(cfg);
            std::string text = format_rows(rows, cfg.format);
            if (cfg.out.empty()) {
                out << text;
            } else {
                write_text_file(cfg.out, text);
            }
            if (!cfg.plot.empty()) {
                write_text_file(cfg.plot, render_svg(rows, cfg.log_y));
            }
            return kExitOk;
        }
        if (threshold->parsed()) {
            cfg.command = "threshold";
            std::vector<TrialStats> rows;
            if (!in_path.empty()) {
                std::ifstream f(in_path);
                if (!f) {
                    throw UsageError("cannot open " + in_path);
                }
                rows = read_csv(f);
            } else {
                apply_sweep_defaults(cfg);
                rows = run_sweep(cfg);
            }
            return print_threshold(threshold_of(rows, threshold_code->count() > 0 || in_path.empty() ? cfg.code : ""), format, out);
        }
    } catch (const GridDoesNotBracket &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitNoBracket;
    } catch (const InvariantViolation &ex) {
        err << "internal invariant violated: " << ex.what() << "\n";
        return kExitInvariant;
    } catch (const std::invalid_argument &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error &ex) {
        err << "internal invariant violated: " << ex.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception &ex) {
        err << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace colorproj::cli
