// Copyright 2026 The entverify Authors
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

#include "cli.hpp"

#include <filesystem>
#include <sstream>

#include "gtest/gtest.h"

#include "entverify/serialization.hpp"

using entverify::Json;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = entverify::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
    args.push_back("--json");
    Result r = run(args);
    EXPECT_EQ(r.code, expected_code) << r.err;
    return Json::parse(r.out);
}

}  // namespace

TEST(cli, gen_sic_d2) {
    Result r = run({"gen", "sic", "--d", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = Json::parse(r.out);
    EXPECT_EQ(j.at("count"), 4);
    EXPECT_EQ(j.at("scheme"), "sic");
    EXPECT_EQ(entverify::povm_from_json(j).size(), 4u);
}

TEST(cli, gen_mub_composite_is_usage_error) {
    Result r = run({"gen", "mub", "--d", "4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("d must be prime"), std::string::npos);
}

TEST(cli, gen_clifford_d3) {
    Json j = run_json({"gen", "clifford", "--d", "3"});
    EXPECT_EQ(j.at("count"), 216);
    EXPECT_EQ(j.at("parties"), "double");
}

TEST(cli, gen_writes_file) {
    fs::path file = fs::temp_directory_path() / "entverify-cli-gen.json";
    Result r = run({"gen", "mub", "--d", "3", "--out", file.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(entverify::read_json_file(file).at("count"), 12);
    fs::remove(file);
}

TEST(cli, verify_sic_d3) {
    Json j = run_json({"verify", "sic", "--d", "3"});
    EXPECT_EQ(j.at("overall"), true);
    for (const auto &c : j.at("checks")) {
        if (c.at("name") == "t_identity") {
            EXPECT_LT(c.at("measured").get<double>(), 1e-10);
        }
    }
}

TEST(cli, verify_clifford_d2_checks) {
    Json j = run_json({"verify", "clifford", "--d", "2"});
    EXPECT_EQ(j.at("overall"), true);
    std::vector<std::string> names;
    for (const auto &c : j.at("checks")) {
        names.push_back(c.at("name"));
    }
    std::vector<std::string> want{"completeness", "c1", "c2", "t2_identity", "trace", "cardinality"};
    EXPECT_EQ(names, want);
}

TEST(cli, verify_mub_d7) {
    Result r = run({"verify", "mub", "--d", "7"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(cli, verify_failure_still_emits_report) {
    Json j = run_json({"verify", "sic", "--d", "2", "--tol", "1e-300"}, 1);
    EXPECT_EQ(j.at("overall"), false);
    EXPECT_FALSE(j.at("checks").empty());
}

TEST(cli, verify_searched_sic) {
    Json j = run_json({"verify", "sic", "--d", "4"});
    EXPECT_EQ(j.at("overall"), true);
    Json again = run_json({"verify", "sic", "--d", "4"});
    EXPECT_EQ(again.at("metadata").at("fiducial_source"), "cache");
}

TEST(cli, simulate_mub_seed42) {
    Json j = run_json({"simulate", "--scheme", "mub", "--d", "2", "--fidelity", "0.9", "--shots", "100000", "--seed", "42"});
    EXPECT_NEAR(j.at("analytic").get<double>(), 0.9 + 0.1 / 3, 1e-12);
    EXPECT_LE(std::abs(j.at("estimate").get<double>() - (0.9 + 0.1 / 3)), 0.0024);
    EXPECT_EQ(j.at("within_3sigma"), true);
    EXPECT_EQ(j.at("noise_model"), "isotropic");
}

TEST(cli, simulate_pure_sic) {
    Json j = run_json({"simulate", "--scheme", "sic", "--d", "2", "--fidelity", "1", "--shots", "1000"});
    EXPECT_EQ(j.at("estimate").get<double>(), 1.0);
}

TEST(cli, simulate_rejects_bad_arguments) {
    EXPECT_EQ(run({"simulate", "--scheme", "sic", "--d", "2", "--fidelity", "1.5"}).code, 2);
    EXPECT_EQ(run({"simulate", "--scheme", "sic", "--d", "2", "--fidelity", "0.5", "--shots", "0"}).code, 2);
    EXPECT_EQ(run({"simulate", "--scheme", "mub", "--d", "6", "--fidelity", "0.5"}).code, 2);
    EXPECT_EQ(run({"simulate", "--scheme", "nope", "--d", "2", "--fidelity", "0.5"}).code, 2);
}

TEST(cli, simulate_is_reproducible) {
    std::vector<std::string> args{"simulate", "--scheme", "sic", "--d", "3", "--fidelity", "0.5", "--shots", "5000",
                                  "--seed", "9", "--json"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(cli, count_values) {
    Json d2 = run_json({"count", "--d", "2"});
    EXPECT_EQ(d2.at("formula_value"), 24);
    EXPECT_EQ(d2.at("prime_formula_value"), 24);
    EXPECT_EQ(d2.at("enumerated"), 24);

    Json d4 = run_json({"count", "--d", "4"});
    EXPECT_EQ(d4.at("formula_value"), 768);
    EXPECT_TRUE(d4.at("enumerated").is_null());
    EXPECT_FALSE(d4.contains("prime_formula_value"));
    EXPECT_EQ(d4.at("nu_values"), Json::parse("[8, 2, 4, 2]"));

    Json d5 = run_json({"count", "--d", "5"});
    EXPECT_EQ(d5.at("formula_value"), 3000);
    EXPECT_EQ(d5.at("prime_formula_value"), 3000);
}

TEST(cli, usage_errors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"verify", "sic"}).code, 2);
    EXPECT_EQ(run({"verify", "clifford", "--d", "7"}).code, 2);
    EXPECT_EQ(run({"count", "--d", "1"}).code, 2);
    EXPECT_EQ(run({"gen", "sic", "--d", "2", "--out", "/nonexistent/dir/x.json"}).code, 2);
}

TEST(cli, help_exits_zero) {
    Result r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("simulate"), std::string::npos);
}

TEST(cli, search_failure_exit_code) {
    Result r = run({"gen", "sic", "--d", "12", "--restarts", "1", "--no-cache", "--seed", "3"});
    // One restart from seed 3 does not converge at d = 12; the search is deterministic.
    EXPECT_EQ(r.code, 3) << r.err;
    EXPECT_NE(r.err.find("search"), std::string::npos);
}
