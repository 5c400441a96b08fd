// Copyright 2026 The projevo Authors
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

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "projevo/io.hpp"

namespace projevo {
namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + PROJEVO_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("projevo_cli_" + name)).string();
}

TEST(Trajectory, EndpointsForFourItems) {
  const auto r = run("trajectory --n 4 --samples 3");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "x_C", "y_C", "z_C", "x_G", "y_G", "z_G"}));
  for (int k : {0, 3}) {
    EXPECT_NEAR(std::stod(rows[1][1 + k]), std::sqrt(3.0) / 2.0, 1e-9);
    EXPECT_NEAR(std::stod(rows[1][2 + k]), 0.0, 1e-9);
    EXPECT_NEAR(std::stod(rows[1][3 + k]), -0.5, 1e-9);
    EXPECT_NEAR(std::stod(rows[3][1 + k]), 0.0, 1e-9);
    EXPECT_NEAR(std::stod(rows[3][2 + k]), 0.0, 1e-9);
    EXPECT_NEAR(std::stod(rows[3][3 + k]), 1.0, 1e-9);
  }
}

TEST(Trajectory, MidpointsSeparateOnSphere) {
  const auto r = run("trajectory --n 16 --samples 5 --format json");
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_LT(doc["sphere_error"].get<double>(), 1e-9);
  const auto& mid = doc["rows"][2];
  double d2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double diff = mid["continuous"][i].get<double>() - mid["grover"][i].get<double>();
    d2 += diff * diff;
  }
  EXPECT_GT(std::sqrt(d2), 0.1);
}

TEST(Equivalence, DefaultSweepPasses) {
  const auto r = run("equivalence");
  ASSERT_EQ(r.code, 0);
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"N", "t", "Q_t", "beta", "residual"}));
  EXPECT_EQ(rows.size(), 1u + 5u * 20u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(std::stod(rows[i][4]), 1e-9);
}

TEST(Equivalence, FlagsTimesBeyondT) {
  const auto r = run("equivalence --n 16 --t 0,1,100");
  EXPECT_EQ(r.code, 2);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3].back(), "t>T");
  EXPECT_NE(rows[2].back(), "t>T");
}

TEST(Equivalence, ImpossibleToleranceIsAssertionFailure) {
  EXPECT_EQ(run("equivalence --n 16 --tolerance 1e-300").code, 3);
}

TEST(TrotterScan, RingSlopeInFooter) {
  const auto r = run("trotter-scan --model ring --length 8");
  ASSERT_EQ(r.code, 0);
  const auto pos = r.out.find("# ");
  ASSERT_NE(pos, std::string::npos);
  const Json footer = Json::parse(r.out.substr(pos + 2));
  EXPECT_NEAR(footer["slope"].get<double>(), 1.0, 0.1);
  EXPECT_NEAR(footer["norm_e2"].get<double>(), 1.0, 1e-12);
  const auto rows = csv_rows(r.out);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"dt", "n", "error", "bound"}));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LE(std::stod(rows[i][2]), std::stod(rows[i][3]));
}

TEST(TrotterScan, NeedsFourGridPoints) { EXPECT_EQ(run("trotter-scan --dt 0.1,0.05,0.025").code, 2); }

TEST(TrotterScan, StepCap) { EXPECT_EQ(run("trotter-scan --max-steps 10").code, 2); }

TEST(Decompose, HoneycombTermSetRoundTrips) {
  const auto path = temp_path("honeycomb.json");
  const auto r = run("decompose --lattice honeycomb --lx 3 --ly 4 --periodic --format json --out " + path);
  ASSERT_EQ(r.code, 0);
  const Json rep = Json::parse(r.out);
  EXPECT_EQ(rep["color_count"].get<int>(), 3);
  EXPECT_EQ(rep["method"].get<std::string>(), "bipartite");
  const auto terms = term_set_from_json(parse_json(read_text_file(path), path));
  EXPECT_EQ(terms.size(), 3u);
  EXPECT_EQ(terms.dimension(), 24);
  std::filesystem::remove(path);

  const auto mg = run("decompose --lattice honeycomb --lx 3 --ly 4 --periodic --coloring misra-gries --format json");
  ASSERT_EQ(mg.code, 0);
  EXPECT_LE(Json::parse(mg.out)["color_count"].get<int>(), 4);
}

TEST(Decompose, RingSpectrumCheck) {
  const auto r = run("decompose --lattice ring --length 16 --format json");
  ASSERT_EQ(r.code, 0);
  const Json rep = Json::parse(r.out);
  EXPECT_EQ(rep["color_count"].get<int>(), 2);
  EXPECT_EQ(rep["spectrum"].get<std::string>(), "pass");
  EXPECT_EQ(rep["terms"][0]["label"].get<std::string>(), "even");
}

TEST(Decompose, OpenChainKeepsBoundaryTerm) {
  const auto r = run("decompose --lattice chain --length 6 --format json");
  ASSERT_EQ(r.code, 0);
  const Json rep = Json::parse(r.out);
  EXPECT_EQ(rep["spectrum"].get<std::string>(), "pass");
  EXPECT_TRUE(rep["diagonal_term"].get<bool>());
  EXPECT_EQ(rep["color_count"].get<int>(), 2);
}

TEST(Decompose, GraphFile) {
  const auto path = temp_path("graph.json");
  write_text_file(path, R"({"vertices":4,"edges":[[0,1,2.0],[1,2],[2,3],[3,0]]})");
  const auto r = run("decompose --graph " + path + " --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["color_count"].get<int>(), 2);
  write_text_file(path, R"({"vertices":3,"edges":[[0,1],[0,1]]})");
  EXPECT_EQ(run("decompose --graph " + path).code, 2);
  std::filesystem::remove(path);
  EXPECT_EQ(run("decompose --graph /nonexistent/graph.json").code, 4);
}

TEST(Decompose, RejectsDegenerateRing) { EXPECT_EQ(run("decompose --lattice ring --length 2").code, 2); }

TEST(Grover, CurveAndAmplification) {
  const auto r = run("grover --n 16 --runs 5 --trials 100000 --seed 3");
  ASSERT_EQ(r.code, 0);
  const auto blank = r.out.find("\n\n");
  ASSERT_NE(blank, std::string::npos);
  const auto curve = csv_rows(r.out.substr(0, blank));
  EXPECT_EQ(curve[0], (std::vector<std::string>{"step", "probability"}));
  EXPECT_EQ(curve.size(), 1u + 7u);
  EXPECT_NEAR(std::stod(curve[1][1]), 1.0 / 16.0, 1e-15);
  const auto amp = csv_rows(r.out.substr(blank));
  EXPECT_EQ(amp[0], (std::vector<std::string>{"R", "bound", "exact", "empirical", "ci95"}));
  ASSERT_EQ(amp.size(), 4u);
  EXPECT_DOUBLE_EQ(std::stod(amp[2][1]), 1.0 / 64.0);
  EXPECT_NEAR(std::stod(amp[2][2]), 0.01123046875, 1e-15);
}

TEST(Grover, DeterministicAcrossThreadsAndEnvironment) {
  const std::string args = "grover --n 64 --runs 3 --trials 200000 --seed 11";
  const auto a = run(args + " --threads 1");
  const auto b = run(args + " --threads 4");
  const auto c = run(args, "PROJEVO_THREADS=3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_NE(a.out, run("grover --n 64 --runs 3 --trials 200000 --seed 12").out);
}

TEST(Grover, Validation) {
  EXPECT_EQ(run("grover --n 1").code, 2);
  EXPECT_EQ(run("grover --n 16 --runs 4").code, 2);
  EXPECT_EQ(run("grover --n 16 --runs 3 --trials 100").code, 2);
  EXPECT_EQ(run("grover --n 16 --target 16").code, 2);
}

TEST(Cost, NativeErrorSingleRun) {
  const auto r = run("cost --n 16 --eps 0.0625 --format json");
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["grover"]["R"].get<int>(), 1);
  EXPECT_NEAR(doc["inputs"]["t"].get<double>(), 2.0 * std::acos(-1.0), 1e-12);
  EXPECT_EQ(doc["convention"]["queries_per_trotter_step"].get<double>(), 2.0);
}

TEST(Cost, RegisterWidthReported) {
  const auto r = run("cost --n 1024 --eps 1e-9 --format json");
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["grover"]["R"].get<int>(), doc["grover"]["R_exact_search"].get<int>() - 2);
  EXPECT_GT(doc["trotter"]["b"].get<int>(), doc["grover"]["b"].get<int>());
  EXPECT_LT(doc["ratio"].get<double>(), 1.0);
}

TEST(CommonFlags, OutputFileAndErrors) {
  const auto path = temp_path("curve.csv");
  ASSERT_EQ(run("grover --n 4 --out " + path).code, 0);
  EXPECT_EQ(read_text_file(path).substr(0, 17), "step,probability\n");
  std::filesystem::remove(path);
  EXPECT_EQ(run("grover --n 4 --out /nonexistent/dir/curve.csv").code, 4);
  EXPECT_EQ(run("grover --format xml").code, 2);
  EXPECT_EQ(run("grover --bogus 1").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(ConfigFile, PrecedenceAndUnknownKeys) {
  const auto path = temp_path("config.ini");
  write_text_file(path, "n = 64\nformat = json\nruns = 3\ntrials = 20000\n");
  const auto from_file = run("grover --config " + path);
  ASSERT_EQ(from_file.code, 0);
  EXPECT_EQ(Json::parse(from_file.out)["N"].get<int>(), 64);
  const auto flag_wins = run("grover --config " + path + " --n 16");
  ASSERT_EQ(flag_wins.code, 0);
  const Json doc = Json::parse(flag_wins.out);
  EXPECT_EQ(doc["N"].get<int>(), 16);
  EXPECT_EQ(doc["amplification"].size(), 2u);

  write_text_file(path, "n = 64\nsamples = 3\n");
  EXPECT_EQ(run("grover --config " + path).code, 2);
  EXPECT_EQ(run("trajectory --config " + path + " --format json").code, 0);
  write_text_file(path, "format = xml\n");
  EXPECT_EQ(run("grover --config " + path).code, 2);
  std::filesystem::remove(path);
  EXPECT_EQ(run("grover --config /nonexistent/config.ini").code, 4);
}

}  // namespace
}  // namespace projevo
