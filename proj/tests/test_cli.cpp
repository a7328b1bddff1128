// Copyright 2026 The qspeed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "../tools/cli.hpp"
#include "qspeed/scenarios.hpp"

namespace qspeed {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qspeed");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::map<std::string, std::string> keyed(const std::string& text) {
  std::map<std::string, std::string> fields;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq != std::string::npos && line.rfind("ladder", 0) != 0) {
      fields[line.substr(0, eq)] = line.substr(eq + 1);
    }
  }
  return fields;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("qspeed_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path path(const std::string& name) const { return dir_ / name; }
  std::filesystem::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::filesystem::path dir_;
};

TEST(CliTrace, HeaderAndRowCount) {
  const Outcome r = invoke({"trace", "--builtin", "fig1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 401u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "t,P,T,E,D,mt_bound,fisher_bound,gen_lower,gen_upper,in_mt_window,in_fisher_window");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].size(), 11u);
    EXPECT_TRUE(rows[i][1].empty());  // mixed state has no P column
    EXPECT_EQ(rows[i][10], "1");
  }
  EXPECT_TRUE(r.err.empty());
}

TEST(CliTrace, FigureOneOrdering) {
  const auto rows = csv_rows(invoke({"trace", "--builtin", "fig1"}).out);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double t = std::stod(rows[i][2]);
    const double e = std::stod(rows[i][3]);
    const double d = std::stod(rows[i][4]);
    const double fb = std::stod(rows[i][6]);
    EXPECT_GE(d, e - 1e-9);
    EXPECT_GE(e, t - 1e-9);
    EXPECT_GE(t, fb - 1e-9);
    if (!rows[i][5].empty()) {
      EXPECT_GE(fb, std::stod(rows[i][5]) - 1e-9);
    }
  }
}

TEST(CliTrace, FigureTwoTEqualsD) {
  const auto rows = csv_rows(invoke({"trace", "--builtin", "fig2"}).out);
  ASSERT_GT(rows.size(), 2u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_NEAR(std::stod(rows[i][2]), std::stod(rows[i][4]), 1e-9);
  }
}

TEST(CliTrace, CommutingTwoSteps) {
  const Outcome r = invoke({"trace", "--builtin", "commuting", "--t-max", "2", "--steps", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 1; i < 3; ++i) {
    for (std::size_t c = 1; c <= 4; ++c) EXPECT_EQ(rows[i][c], "1");
  }
}

TEST(CliTrace, ZeroFisherNeedsExplicitTMax) {
  const Outcome r = invoke({"trace", "--builtin", "commuting"});
  EXPECT_EQ(r.code, cli::kExitValidation);
  EXPECT_NE(r.err.find("[t_max]"), std::string::npos);
}

TEST(CliTrace, RejectsBadGridAndFormat) {
  EXPECT_EQ(invoke({"trace", "--builtin", "fig1", "--steps", "1"}).code, cli::kExitValidation);
  EXPECT_EQ(invoke({"trace", "--builtin", "fig1", "--t-max", "-1"}).code, cli::kExitValidation);
  EXPECT_EQ(invoke({"trace", "--builtin", "fig1", "--format", "json"}).code,
            cli::kExitValidation);
}

TEST_F(CliFiles, TraceToFileIsDeterministic) {
  const Outcome a = invoke({"trace", "--builtin", "fig1", "--out", path("a.csv").string()});
  const Outcome b = invoke({"trace", "--builtin", "fig1", "--out", path("b.csv").string()});
  ASSERT_EQ(a.code, cli::kExitOk) << a.err;
  ASSERT_EQ(b.code, cli::kExitOk) << b.err;
  const std::string bytes = slurp(path("a.csv"));
  EXPECT_FALSE(bytes.empty());
  EXPECT_EQ(bytes, slurp(path("b.csv")));
  EXPECT_EQ(bytes, invoke({"trace", "--builtin", "fig1"}).out);

  const auto summary = keyed(a.out);
  EXPECT_EQ(summary.at("scenario"), "fig1");
  EXPECT_EQ(summary.at("qfi"), "0.887301627792");
  EXPECT_EQ(summary.at("rows"), "400");
  EXPECT_EQ(summary.at("empirical_theta_perp_T"), "none in range");
  EXPECT_TRUE(summary.count("theta_perp_mt"));
  EXPECT_TRUE(summary.count("theta_perp_fisher"));
}

TEST_F(CliFiles, UnwritableOutputIsIoError) {
  const Outcome r =
      invoke({"trace", "--builtin", "fig1", "--out", (dir_ / "missing" / "x.csv").string()});
  EXPECT_EQ(r.code, cli::kExitIo);
  EXPECT_NE(r.err.find("io error"), std::string::npos);
}

TEST_F(CliFiles, ScenarioFileMatchesBuiltin) {
  save_scenario(builtin_scenario("fig2"), path("fig2.json"));
  const Outcome from_file = invoke({"trace", "--scenario", path("fig2.json").string()});
  ASSERT_EQ(from_file.code, cli::kExitOk) << from_file.err;
  EXPECT_EQ(from_file.out, invoke({"trace", "--builtin", "fig2"}).out);
}

TEST_F(CliFiles, MalformedFilesExitWithValidationCode) {
  const auto trace_bad = write("trace.json", R"({"format": 1, "name": "bad", "dim": 2,
    "rho": {"dense": [[[0.5, 0], [0, 0]], [[0, 0], [0.4, 0]]]},
    "hamiltonian": {"dense": [[[1, 0], [0, 0]], [[0, 0], [-1, 0]]]}})");
  const Outcome r = invoke({"validate", "--scenario", trace_bad.string()});
  EXPECT_EQ(r.code, cli::kExitValidation);
  EXPECT_NE(r.err.find("[trace]"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());

  const auto syntax = write("syntax.json", "{\"format\": 1,\n\"name\": }");
  const Outcome s = invoke({"trace", "--scenario", syntax.string()});
  EXPECT_EQ(s.code, cli::kExitValidation);
  EXPECT_NE(s.err.find("[parse]"), std::string::npos);
  EXPECT_NE(s.err.find("line 2"), std::string::npos) << s.err;
}

TEST_F(CliFiles, MissingFileIsIoError) {
  EXPECT_EQ(invoke({"validate", "--scenario", path("nope.json").string()}).code, cli::kExitIo);
}

TEST_F(CliFiles, ValidateReportsRank) {
  save_scenario(builtin_scenario("fig1"), path("fig1.json"));
  const Outcome r = invoke({"validate", "--scenario", path("fig1.json").string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out, "valid scenario=fig1 dim=4 rank=2\n");
}

TEST(CliWitness, GhzThree) {
  const Outcome r = invoke({"witness", "--state", "ghz", "--n", "3"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto f = keyed(r.out);
  EXPECT_EQ(f.at("entangled"), "true");
  EXPECT_EQ(f.at("min_k"), "3");
  EXPECT_EQ(f.at("qfi_normalized"), "9");
  EXPECT_NE(r.out.find("ladder k=2 s=1 bound=5\n"), std::string::npos);
}

TEST(CliWitness, ProductPlusThree) {
  const Outcome r = invoke({"witness", "--state", "product_plus", "--n", "3"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto f = keyed(r.out);
  EXPECT_EQ(f.at("entangled"), "false");
  EXPECT_EQ(f.at("min_k"), "1");
}

TEST(CliWitness, LadderForSix) {
  const Outcome r = invoke({"witness", "--state", "ghz", "--n", "6"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("ladder k=2 s=3 bound=12\n"), std::string::npos);
  EXPECT_EQ(keyed(r.out).at("min_k"), "6");
}

TEST_F(CliFiles, WitnessNeedsLocalMetadata) {
  const auto dense = write("dense.json", R"({"format": 1, "name": "dense", "dim": 2,
    "rho": {"dense": [[[0.5, 0], [0.5, 0]], [[0.5, 0], [0.5, 0]]]},
    "hamiltonian": {"dense": [[[1, 0], [0, 0]], [[0, 0], [-1, 0]]]}})");
  const Outcome r = invoke({"witness", "--scenario", dense.string()});
  EXPECT_EQ(r.code, cli::kExitValidation);
  EXPECT_NE(r.err.find("[metadata]"), std::string::npos) << r.err;

  const Outcome fig1 = invoke({"witness", "--builtin", "fig1"});
  ASSERT_EQ(fig1.code, cli::kExitOk) << fig1.err;
  EXPECT_EQ(keyed(fig1.out).at("n_qubits"), "2");
}

TEST(CliWitness, TooManyQubits) {
  EXPECT_EQ(invoke({"witness", "--state", "ghz", "--n", "11"}).code, cli::kExitValidation);
}

TEST(CliBounds, PlusZSaturates) {
  const Outcome r = invoke({"bounds", "--builtin", "plus_z"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto f = keyed(r.out);
  EXPECT_NEAR(std::stod(f.at("theta_perp_mt")), std::numbers::pi / 2, 1e-10);
  EXPECT_NEAR(std::stod(f.at("theta_perp_fisher")), std::numbers::pi / 2, 1e-10);
  EXPECT_NEAR(std::stod(f.at("empirical_theta_perp_T")), std::numbers::pi / 2, 1e-8);
  EXPECT_EQ(f.at("dichotomy"), "EXACT_EQUALITY");
}

TEST(CliBounds, CommutingHasNoPassageTime) {
  const Outcome r = invoke({"bounds", "--builtin", "commuting"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("no finite passage time"), std::string::npos);
  EXPECT_EQ(keyed(r.out).at("empirical_theta_perp_E"), "none in range");
}

TEST(CliBounds, FigureOneStrictlyAbove) {
  const Outcome r = invoke({"bounds", "--builtin", "fig1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto f = keyed(r.out);
  EXPECT_EQ(f.at("dichotomy"), "STRICT_ABOVE");
  EXPECT_GT(std::stod(f.at("theta_perp_gap")), 0.0);
}

TEST(CliBounds, CustomProjectorSkipsDichotomy) {
  const Outcome r = invoke({"bounds", "--builtin", "fig2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(keyed(r.out).at("dichotomy"), "n/a (custom projector)");
}

TEST(CliUsage, Errors) {
  EXPECT_EQ(invoke({}).code, cli::kExitValidation);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitValidation);
  EXPECT_EQ(invoke({"trace"}).code, cli::kExitValidation);
  EXPECT_EQ(invoke({"trace", "--builtin", "fig1", "--scenario", "x.json"}).code,
            cli::kExitValidation);
  EXPECT_EQ(invoke({"trace", "--builtin", "nope"}).code, cli::kExitValidation);
  EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);
}

TEST(CliUsage, RankToleranceOverride) {
  // a coarse threshold drops the small eigenvalue from the range of rho
  const Outcome fine = invoke({"validate", "--builtin", "fig1"});
  const Outcome coarse = invoke({"validate", "--builtin", "fig1", "--tol-rank", "0.5"});
  EXPECT_EQ(fine.out, "valid scenario=fig1 dim=4 rank=2\n");
  EXPECT_EQ(coarse.out, "valid scenario=fig1 dim=4 rank=1\n");
}

}  // namespace
}  // namespace qspeed
