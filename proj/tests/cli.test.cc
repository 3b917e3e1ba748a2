// Copyright 2026 The netcert Authors
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

#include "netcert/cli.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"

#include "netcert/errors.h"
#include "netcert/serialize.h"

using namespace netcert;

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

static CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(cli, parse_int_range) {
    ASSERT_EQ(parse_int_range("3"), (std::vector<int>{3}));
    ASSERT_EQ(parse_int_range("2..5"), (std::vector<int>{2, 3, 4, 5}));
    ASSERT_EQ(parse_int_range("3,5..6,9"), (std::vector<int>{3, 5, 6, 9}));
    ASSERT_THROW(parse_int_range(""), ParseError);
    ASSERT_THROW(parse_int_range("5..2"), ParseError);
    ASSERT_THROW(parse_int_range("a"), ParseError);
    ASSERT_THROW(parse_int_range("2..x"), ParseError);
}

TEST(cli, certify_qubit_triangle) {
    auto r = run({"certify", "--inline", "2 3; 0 1 1; 0 2 1; 1 2 1"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    ASSERT_TRUE(r.err.empty());
    auto cert = parse_certificate(r.out);
    ASSERT_EQ(cert.fidelity_bound, 0.9);

    auto human = run({"certify", "--inline", "2 3; 0 1 1; 0 2 1; 1 2 1", "--format", "human"});
    ASSERT_NE(human.out.find("fidelity_bound: 0.9\n"), std::string::npos);
    auto tsv = run({"certify", "--inline", "3 3; 0 1 1; 0 2 1; 1 2 1", "--format", "tsv"});
    ASSERT_NE(tsv.out.find("\tcertified\tobs1\t0.954951\n"), std::string::npos) << tsv.out;
}

TEST(cli, certify_negative_control) {
    auto r = run({"certify", "--inline", "6 3; 0 1 3; 0 2 2"});
    ASSERT_EQ(r.code, EXIT_NOT_CERTIFIED);
    Json j = Json::parse(r.out);
    ASSERT_EQ(j["status"], "not_certified");
    ASSERT_NE(j["reasons"][0].get<std::string>().find("= 0 mod 6"), std::string::npos);
}

TEST(cli, certify_file_with_verification) {
    std::string path = testing::TempDir() + "cli_test_graph.json";
    {
        std::ofstream f(path);
        f << R"({"d": 5, "n": 4, "edges": [[0, 1, 2], [1, 2, 3], [2, 3, 4]]})";
    }
    auto r = run({"certify", path, "--verify"});
    ASSERT_EQ(r.code, EXIT_OK) << r.err;
    Json j = Json::parse(r.out);
    ASSERT_TRUE(j.contains("certificate"));
    ASSERT_EQ(j["verification"]["all_passed"], true);
    ASSERT_EQ(run({"certify", "--input", path}).code, EXIT_OK);
    std::remove(path.c_str());
}

TEST(cli, errors_exit_one_with_diagnostics_on_stderr) {
    for (auto args : std::vector<std::vector<std::string>>{
             {"certify", "--inline", "2 3; 0 1"},
             {"certify"},
             {"certify", "/nonexistent/graph.txt"},
             {"certify", "--inline", "2 2; 0 1 1"},
             {"certify", "--inline", "2 4; 0 1 1; 2 3 1"},
             {"enumerate", "--n", "3"},
             {"enumerate", "--n", "2", "--d", "3"},
             {"ghz-bound", "--d", "9..x"},
             {"certify", "--inline", "2 3; 0 1 1", "--format", "xml"},
             {"frobnicate"},
             {},
         }) {
        auto r = run(args);
        ASSERT_EQ(r.code, EXIT_ERROR) << (args.empty() ? "" : args[0]);
        ASSERT_FALSE(r.err.empty());
        ASSERT_TRUE(r.out.empty()) << r.out;
    }
}

TEST(cli, enumerate) {
    auto r = run({"enumerate", "--n", "3", "--d", "3"});
    ASSERT_EQ(r.code, EXIT_OK);
    Json j = Json::parse(r.out);
    ASSERT_EQ(j.size(), 1u);
    ASSERT_EQ(j[0]["all_certified"], true);
    ASSERT_EQ(j[0]["classes"], 7);

    auto tsv = run({"enumerate", "--n", "3..4", "--d", "2", "--format", "tsv"});
    ASSERT_EQ(tsv.code, EXIT_OK);
    ASSERT_NE(tsv.out.find("3\t2\t2\t2\t"), std::string::npos) << tsv.out;
    ASSERT_NE(tsv.out.find("4\t2\t6\t6\t"), std::string::npos) << tsv.out;

    auto control = run({"enumerate", "--n", "3", "--d", "6"});
    ASSERT_EQ(control.code, EXIT_NOT_CERTIFIED);

    auto partial = run({"enumerate", "--n", "4", "--d", "3", "--budget-graphs", "5"});
    ASSERT_EQ(partial.code, EXIT_BUDGET);
    ASSERT_EQ(Json::parse(partial.out)[0]["complete"], false);
    ASSERT_FALSE(partial.err.empty());
}

TEST(cli, ghz_bound_rows) {
    auto r = run({"ghz-bound", "--d", "2..5", "--format", "tsv"});
    ASSERT_EQ(r.code, EXIT_OK);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    ASSERT_EQ(line, "d\tclosed_form\tprime\tnumeric");
    std::vector<std::vector<std::string>> rows;
    while (std::getline(lines, line)) {
        std::vector<std::string> cells;
        std::istringstream cs(line);
        std::string cell;
        while (std::getline(cs, cell, '\t')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    ASSERT_EQ(rows.size(), 4u);
    const double closed[] = {0.9, 0.955, 0.9, 0.935};
    const double numeric[] = {0.893, 0.950, 0.881, 0.925};
    for (size_t k = 0; k < 4; k++) {
        ASSERT_NEAR(std::stod(rows[k][1]), closed[k], 5e-4);
        ASSERT_NEAR(std::stod(rows[k][3]), numeric[k], 0.01);
    }
    ASSERT_EQ(rows[2][2], "-");
    ASSERT_NEAR(std::stod(rows[1][2]), 0.951, 0.002);
}

TEST(cli, orbit_and_verify) {
    auto r = run({"orbit", "--inline", "6 3; 0 1 3; 0 2 2"});
    ASSERT_EQ(r.code, EXIT_OK);
    ASSERT_EQ(Json::parse(r.out)["size"], 1);
    auto truncated = run({"orbit", "--inline", "5 4; 0 1 1; 1 2 2; 2 3 3", "--budget-orbit", "2"});
    ASSERT_EQ(truncated.code, EXIT_BUDGET);

    std::string path = testing::TempDir() + "cli_test_cert.json";
    ASSERT_EQ(run({"certify", "--inline", "3 3; 0 1 1; 0 2 2", "--output", path}).code, EXIT_OK);
    auto v = run({"verify", path});
    ASSERT_EQ(v.code, EXIT_OK) << v.err;
    ASSERT_EQ(Json::parse(v.out)["all_passed"], true);

    Json cert = Json::parse(std::ifstream(path));
    cert["kappa"] = 0;
    {
        std::ofstream f(path);
        f << cert.dump(2);
    }
    auto bad = run({"verify", path, "--format", "human"});
    ASSERT_EQ(bad.code, EXIT_NOT_CERTIFIED);
    ASSERT_NE(bad.out.find("fail  kappa nonzero"), std::string::npos) << bad.out;
    std::remove(path.c_str());
}

TEST(cli, json_output_is_deterministic) {
    for (auto args : std::vector<std::vector<std::string>>{
             {"certify", "--inline", "4 4; 0 1 2; 1 2 3; 2 3 1", "--verify"},
             {"enumerate", "--n", "3..4", "--d", "4", "--workers", "2"},
             {"ghz-bound", "--d", "2..4"},
         }) {
        auto a = run(args);
        auto b = run(args);
        ASSERT_EQ(a.code, b.code);
        ASSERT_EQ(a.out, b.out);
    }
    auto serial = run({"enumerate", "--n", "4", "--d", "4"});
    auto parallel = run({"enumerate", "--n", "4", "--d", "4", "--workers", "3"});
    ASSERT_EQ(serial.out, parallel.out);
}

TEST(cli, selftest) {
    setenv("NETCERT_CAP", "256", 1);
    auto r = run({"selftest", "--trials", "100", "--seed", "5"});
    auto again = run({"selftest", "--trials", "100", "--seed", "5"});
    unsetenv("NETCERT_CAP");
    ASSERT_EQ(r.code, EXIT_OK) << r.out;
    ASSERT_EQ(r.out, again.out);
    Json j = Json::parse(r.out);
    ASSERT_EQ(j["seed"], 5);
    ASSERT_EQ(j["suites"].size(), 8u);
    for (const auto &s : j["suites"]) {
        ASSERT_EQ(s["violations"], 0) << s["name"];
    }
}

TEST(cli, help_exits_zero) {
    auto r = run({"--help"});
    ASSERT_EQ(r.code, EXIT_OK);
    ASSERT_NE(r.out.find("certify"), std::string::npos);
}
