// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& name) {
    static int counter = 0;
    return std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/susyq_cli_" +
           std::to_string(++counter) + "_" + name;
}

CliResult run_cli(const std::string& args) {
    std::string out_file = temp_path("stdout.txt");
    std::string cmd = std::string(SUSYQ_CLI_PATH) + " " + args + " > " + out_file + " 2> " +
                      out_file + ".err";
    int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_file);
    std::remove(out_file.c_str());
    std::remove((out_file + ".err").c_str());
    return r;
}

nlohmann::json parse_out(const CliResult& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("catalog list prints one JSON object per field", "[cli]") {
    auto r = run_cli("catalog list");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> names;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        names.push_back(j.at("name"));
        CHECK(j.contains("params"));
        CHECK(j.contains("expected_N"));
        CHECK(j.at("A").size() == 3);
    }
    CHECK(names == std::vector<std::string>{"free", "solenoid", "wire", "octopole"});
}

TEST_CASE("analyze predicts the supercharge counts", "[cli]") {
    auto free = run_cli("analyze --builtin free");
    REQUIRE(free.exit_code == 0);
    auto fj = parse_out(free);
    CHECK(fj.at("N") == 4);
    CHECK(fj.at("axes") == nlohmann::json::array({1, 2, 3}));

    auto sol = run_cli("analyze --builtin solenoid");
    REQUIRE(sol.exit_code == 0);
    CHECK(parse_out(sol).at("N") == 2);
}

TEST_CASE("usage and construction failures exit with 2", "[cli]") {
    CHECK(run_cli("analyze --field /nonexistent.json").exit_code == 2);
    CHECK(run_cli("analyze --builtin nosuchfield").exit_code == 2);
    CHECK(run_cli("analyze").exit_code == 2);  // no field given
    CHECK(run_cli("analyze --builtin free --nosuchflag").exit_code == 2);
    CHECK(run_cli("verify --builtin free --grid 4,4,4").exit_code == 2);
    CHECK(run_cli("verify --builtin free --grid 5,5").exit_code == 2);
    CHECK(run_cli("verify --builtin free --format yaml").exit_code == 2);
    CHECK(run_cli("verify --builtin free --tol-adm -1e-10").exit_code == 2);
    CHECK(run_cli("spectrum --builtin free --grid 17,17,17").exit_code == 2);  // dense limit
    CHECK(run_cli("").exit_code == 2);

    std::string bad = temp_path("bad_field.json");
    std::ofstream(bad) << R"({"name": "bad", "A": ["x + *", "0", "0"]})";
    CHECK(run_cli("analyze --field " + bad).exit_code == 2);
    std::remove(bad.c_str());
}

TEST_CASE("verify certifies and reports the superalgebra", "[cli]") {
    auto r = run_cli("verify --builtin free --grid 5,5,5");
    REQUIRE(r.exit_code == 0);
    auto j = parse_out(r);
    CHECK(j.at("N") == 4);
    CHECK(j.at("pass") == true);
    CHECK(j.at("ts").size() == 3);
    CHECK(j.at("pairs").size() == 10);

    auto wire = run_cli("verify --builtin wire --grid 5,5,5");
    REQUIRE(wire.exit_code == 0);
    CHECK(parse_out(wire).at("N") == 3);
}

TEST_CASE("verify exits 1 when the tolerance is tighter than roundoff", "[cli]") {
    // The free field certifies with exactly zero residuals (every entry stays
    // a small dyadic), so a generic field supplies the genuine roundoff.
    auto r = run_cli("verify --builtin solenoid --grid 5,5,5 --tol-algebra 1e-18");
    CHECK(r.exit_code == 1);
    CHECK(parse_out(r).at("pass") == false);
}

TEST_CASE("boundary condition flag reaches the engine", "[cli]") {
    auto r = run_cli("verify --builtin free --grid 3,3,3 --bc periodic");
    REQUIRE(r.exit_code == 0);
    CHECK(parse_out(r).at("N") == 4);
    CHECK(run_cli("verify --builtin free --grid 3,3,3 --bc reflective").exit_code == 2);
}

TEST_CASE("spectrum checks the degeneracy law", "[cli]") {
    auto r = run_cli("spectrum --builtin free --grid 5,5,5");
    REQUIRE(r.exit_code == 0);
    auto j = parse_out(r);
    CHECK(j.at("N") == 4);
    CHECK(j.at("pass") == true);
    CHECK(j.at("zero_modes") == 2);
    for (const auto& c : j.at("clusters")) {
        CHECK(c.at("divisible") == true);
        CHECK(c.at("mult").get<int>() % 4 == 0);
    }
}

TEST_CASE("reports are byte-identical across runs", "[cli]") {
    auto a = run_cli("verify --builtin octopole --grid 5,5,5 --seed 7");
    auto b = run_cli("verify --builtin octopole --grid 5,5,5 --seed 7");
    REQUIRE(a.exit_code == 0);
    CHECK(a.out == b.out);

    auto c = run_cli("analyze --builtin octopole --seed 7");
    auto d = run_cli("analyze --builtin octopole --seed 7");
    REQUIRE(c.exit_code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("config files configure runs and flags win", "[cli]") {
    std::string cfg_path = temp_path("config.json");
    std::ofstream(cfg_path) << R"({
        "field": {"builtin": "wire"},
        "grid": {"M": [5, 5, 5], "h": [0.5, 0.5, 0.5], "bc": "dirichlet"},
        "format": "text"
    })";

    auto text = run_cli("verify --config " + cfg_path);
    REQUIRE(text.exit_code == 0);
    CHECK(text.out.find("N=3") != std::string::npos);
    CHECK(text.out.find("PASS") != std::string::npos);

    auto json_wins = run_cli("verify --config " + cfg_path + " --format json");
    REQUIRE(json_wins.exit_code == 0);
    CHECK(parse_out(json_wins).at("N") == 3);

    auto field_wins = run_cli("verify --config " + cfg_path + " --builtin free --format json");
    REQUIRE(field_wins.exit_code == 0);
    CHECK(parse_out(field_wins).at("N") == 4);

    std::remove(cfg_path.c_str());
}

TEST_CASE("run executes the configured stages", "[cli]") {
    auto r = run_cli("run --builtin free --grid 3,3,3");
    REQUIRE(r.exit_code == 0);
    auto j = parse_out(r);
    CHECK(j.contains("analyze"));
    CHECK(j.contains("verify"));
    CHECK(j.contains("spectrum"));
    CHECK(j.at("verify").at("N") == 4);

    std::string cfg_path = temp_path("stages.json");
    std::ofstream(cfg_path) << R"({
        "field": {"builtin": "free"},
        "grid": {"M": [3, 3, 3], "h": [0.5, 0.5, 0.5]},
        "stages": ["analyze"]
    })";
    auto only_analyze = run_cli("run --config " + cfg_path);
    REQUIRE(only_analyze.exit_code == 0);
    auto oj = parse_out(only_analyze);
    CHECK(oj.contains("analyze"));
    CHECK_FALSE(oj.contains("verify"));
    std::remove(cfg_path.c_str());
}

TEST_CASE("--out writes the report to a file", "[cli]") {
    std::string out_path = temp_path("report.json");
    auto r = run_cli("verify --builtin free --grid 3,3,3 --out " + out_path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    auto j = nlohmann::json::parse(slurp(out_path));
    CHECK(j.at("N") == 4);
    std::remove(out_path.c_str());
}
