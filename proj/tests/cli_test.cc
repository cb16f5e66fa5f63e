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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "colorproj/threshold.h"

using namespace colorproj;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("colorproj_cli_test_" + name);
}

std::string synthetic_csv(double center) {
    std::vector<TrialStats> rows;
    for (int r : {2, 4, 8}) {
        for (double p : p_grid(0.07, 0.105, 0.005)) {
            TrialStats s;
            s.code = kColorCodeLabel;
            s.r = r;
            s.n = 18 * r * r;
            s.k = 4;
            s.p = p;
            s.trials = 100000;
            s.failures = uint64_t(std::llround(0.5 * (1 + std::tanh((p - center) * r * 60)) * 1e5));
            s.seed = 1;
            finalize_stats(s);
            rows.push_back(s);
        }
    }
    std::ostringstream out;
    write_csv(out, rows);
    return out.str();
}

}  // namespace

TEST(cli, info_text_and_json) {
    Result text = invoke({"info", "--r", "1"});
    ASSERT_EQ(text.code, 0) << text.err;
    EXPECT_NE(text.out.find("n = 18"), std::string::npos);
    EXPECT_NE(text.out.find("k = 4"), std::string::npos);

    Result js = invoke({"info", "--r", "2", "--format", "json"});
    ASSERT_EQ(js.code, 0);
    auto j = nlohmann::json::parse(js.out);
    EXPECT_EQ(j["n"], 72);
    EXPECT_EQ(j["k"], 4);
    EXPECT_EQ(j["subtilings"].size(), 3u);
}

TEST(cli, decode_examples) {
    Result empty = invoke({"decode", "--r", "2", "--errors", "", "--format", "json"});
    ASSERT_EQ(empty.code, 0) << empty.err;
    auto j = nlohmann::json::parse(empty.out);
    EXPECT_EQ(j["status"], "corrected");
    EXPECT_TRUE(j["estimate"].empty());

    Result single = invoke({"decode", "--r", "2", "--errors", "5", "--format", "json"});
    ASSERT_EQ(single.code, 0);
    j = nlohmann::json::parse(single.out);
    EXPECT_EQ(j["status"], "corrected");
    EXPECT_EQ(j["estimate"], nlohmann::json::array({5}));

    Result sampled = invoke({"decode", "--r", "2", "--p", "0.05", "--seed", "4"});
    EXPECT_EQ(sampled.code, 0);
    EXPECT_NE(sampled.out.find("status"), std::string::npos);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(invoke({}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"bogus"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"info"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"info", "--r", "0"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"decode", "--r", "2", "--errors", "9999"}).code, cli::kExitUsage);
    EXPECT_EQ(invoke({"decode", "--r", "2", "--errors", "1,x"}).code, cli::kExitUsage);
    Result empty_grid = invoke({"sweep", "--r", "2", "--p-start", "0.2", "--p-stop", "0.1", "--p-step", "0.01"});
    EXPECT_EQ(empty_grid.code, cli::kExitUsage);
    EXPECT_FALSE(empty_grid.err.empty());
    EXPECT_EQ(invoke({"sweep", "--r", "2", "--r-list", "2,4"}).code, cli::kExitUsage);
}

TEST(cli, sweep_is_identical_for_any_worker_count) {
    std::vector<std::string> base = {"sweep",   "--code",   "color-hex", "--r-list", "2,3",    "--p-start",
                                     "0.06",    "--p-stop", "0.1",       "--p-step", "0.02",   "--trials",
                                     "300",     "--seed",   "17"};
    auto with_threads = [&](const std::string &t) {
        auto args = base;
        args.push_back("--threads");
        args.push_back(t);
        return invoke(args);
    };
    Result one = with_threads("1");
    ASSERT_EQ(one.code, 0) << one.err;
    EXPECT_EQ(one.out.substr(0, one.out.find('\n')), kCsvHeader);
    EXPECT_EQ(std::count(one.out.begin(), one.out.end(), '\n'), 7);
    for (std::string t : {"1", "4", "8"}) {
        EXPECT_EQ(with_threads(t).out, one.out);
    }
}

TEST(cli, sweep_json_and_files) {
    auto csv = temp_path("sweep.csv");
    auto svg = temp_path("sweep.svg");
    Result res = invoke({"sweep", "--code", "surface-hex", "--color", "G", "--r-list", "2,4", "--p-start", "0.1",
                         "--p-stop", "0.12", "--p-step", "0.01", "--trials", "100", "--out", csv.string(), "--plot",
                         svg.string(), "--log-y"});
    ASSERT_EQ(res.code, 0) << res.err;
    std::ifstream in(csv);
    auto rows = read_csv(in);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0].code, "surface-hex");
    EXPECT_EQ(rows[0].n, 36u);
    std::ifstream plot(svg);
    std::string svg_text((std::istreambuf_iterator<char>(plot)), std::istreambuf_iterator<char>());
    EXPECT_NE(svg_text.find("<svg"), std::string::npos);
    EXPECT_NE(svg_text.find("polyline"), std::string::npos);
    std::filesystem::remove(csv);
    std::filesystem::remove(svg);

    Result js = invoke({"sweep", "--r", "2", "--p-start", "0.05", "--p-stop", "0.05", "--p-step", "0.01", "--trials",
                        "50", "--format", "json"});
    ASSERT_EQ(js.code, 0);
    auto j = nlohmann::json::parse(js.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["trials"], 50);
}

TEST(cli, threshold_from_csv) {
    auto csv = temp_path("synthetic.csv");
    {
        std::ofstream f(csv);
        f << synthetic_csv(0.087);
    }
    Result res = invoke({"threshold", "--in", csv.string(), "--format", "json"});
    ASSERT_EQ(res.code, 0) << res.err;
    auto j = nlohmann::json::parse(res.out);
    EXPECT_NEAR(j["crossing_p"].get<double>(), 0.087, 0.003);
    EXPECT_EQ(j["pair_crossings"].size(), 2u);
    EXPECT_EQ(j["method"], "pairwise-linear-interpolation");

    {
        std::ofstream f(csv);
        f << synthetic_csv(0.2);
    }
    Result none = invoke({"threshold", "--in", csv.string()});
    EXPECT_EQ(none.code, cli::kExitNoBracket);
    EXPECT_NE(none.err.find("grid does not bracket threshold"), std::string::npos);
    std::filesystem::remove(csv);
}

TEST(cli, threshold_of_sweep_matches_library) {
    auto csv = temp_path("round.csv");
    std::vector<std::string> flags = {"--r-list", "2,3",    "--p-start", "0.06", "--p-stop", "0.14",
                                      "--p-step", "0.04",   "--trials",  "400",  "--seed",   "5"};
    auto sweep_args = flags;
    sweep_args.insert(sweep_args.begin(), "sweep");
    sweep_args.push_back("--out");
    sweep_args.push_back(csv.string());
    ASSERT_EQ(invoke(sweep_args).code, 0);

    std::ifstream in(csv);
    auto rows = read_csv(in);
    int expected_code = cli::kExitOk;
    double expected = 0;
    try {
        expected = estimate_threshold(curves_from_rows(rows, kColorCodeLabel)).crossing_p;
    } catch (const GridDoesNotBracket &) {
        expected_code = cli::kExitNoBracket;
    }

    Result from_file = invoke({"threshold", "--in", csv.string(), "--format", "json"});
    auto fresh_args = flags;
    fresh_args.insert(fresh_args.begin(), "threshold");
    fresh_args.push_back("--format");
    fresh_args.push_back("json");
    Result fresh = invoke(fresh_args);
    EXPECT_EQ(from_file.code, expected_code);
    EXPECT_EQ(fresh.code, expected_code);
    if (expected_code == cli::kExitOk) {
        EXPECT_EQ(nlohmann::json::parse(from_file.out)["crossing_p"].get<double>(), expected);
        EXPECT_EQ(nlohmann::json::parse(fresh.out)["crossing_p"].get<double>(), expected);
    }
    std::filesystem::remove(csv);
}
