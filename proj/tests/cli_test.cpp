// Copyright 2026 The pinch Authors
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


// Runs the command-line tool as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int status = -1;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  fs::path const dir = fs::temp_directory_path() / "pinch_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(fs::path const& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Outcome run(std::string const& args) {
  fs::path const err_path = scratch_dir() / "stderr.txt";
  std::string const command = std::string(PINCH_CLI_PATH) + " " + args + " 2>" +
                              err_path.string();
  Outcome result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), n);
  }
  int const raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  result.err = slurp(err_path);
  return result;
}

double field(std::string const& line, std::string const& key) {
  auto const at = line.find(key + "=");
  EXPECT_NE(at, std::string::npos) << key;
  return std::stod(line.substr(at + key.size() + 1));
}

std::vector<std::vector<std::string>> parse_csv(std::string const& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream split(line);
    while (std::getline(split, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

TEST(CliThresholds, PrintsMachineLineAndBlock) {
  Outcome const r = run("thresholds --epsilon 1e-5 --blocklength 256 --bits 256");
  ASSERT_EQ(r.status, 0) << r.err;
  std::string const first = r.out.substr(0, r.out.find('\n'));
  EXPECT_NEAR(field(first, "tau"), 0.266555675, 1e-9);
  EXPECT_NEAR(field(first, "nu2"), 1.55603272, 1e-8);
  EXPECT_NEAR(field(first, "target_bits"), 1.0, 1e-12);
  EXPECT_NE(r.out.find("nu2 (QoS minimum)"), std::string::npos);
}

TEST(CliThresholds, VanishingDispersion) {
  Outcome const r = run("thresholds --epsilon 0.499999999999 --blocklength 200 --bits 100");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_LT(field(r.out, "tau"), 1e-10);
  EXPECT_NEAR(field(r.out, "nu2"), std::sqrt(2.0) - 1.0, 1e-8);
}

TEST(CliThresholds, BadFlagValueIsUsageError) {
  Outcome const r = run("thresholds --epsilon 0.7");
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("epsilon must lie in (0, 0.5)"), std::string::npos) << r.err;

  Outcome const junk = run("thresholds --blocklength banana");
  EXPECT_EQ(junk.status, 1);
  EXPECT_FALSE(junk.err.empty());

  Outcome const none = run("");
  EXPECT_EQ(none.status, 1);
}

TEST(CliPlace, SingleAntennaAtUser) {
  Outcome const r = run("place --antennas 1 --user-x 4.25 --user-y 1");
  ASSERT_EQ(r.status, 0) << r.err;
  auto const rows = parse_csv(r.out);
  ASSERT_GE(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"field", "index", "value"}));
  EXPECT_EQ(rows[1], (std::vector<std::string>{"position_m", "1", "4.25"}));
  EXPECT_EQ(r.out.find("phase_residual_rad"), std::string::npos);
}

TEST(CliPlace, ThreeAntennasAreAligned) {
  Outcome const r = run("place --antennas 3 --user-x 5 --user-y 1 --format json");
  ASSERT_EQ(r.status, 0) << r.err;
  json const j = json::parse(r.out);
  ASSERT_EQ(j["positions_m"].size(), 3u);
  for (auto const& residual : j["phase_residuals_rad"]) {
    EXPECT_LE(std::abs(residual.get<double>()), 1e-9);
  }
  EXPECT_TRUE(j["qos_satisfied"].get<bool>());
  EXPECT_TRUE(j.contains("rate_bpcu"));
}

TEST(CliPlace, InfeasibleUserStillSucceeds) {
  fs::path const config = scratch_dir() / "weak.json";
  std::ofstream(config) << R"({"system": {"transmit_power_pt": 1e-12}})";
  Outcome const r = run("place --config " + config.string() +
                    " --user-x 3 --user-y 40 --nats --format json");
  ASSERT_EQ(r.status, 0) << r.err;
  json const j = json::parse(r.out);
  EXPECT_FALSE(j["qos_satisfied"].get<bool>());
  EXPECT_FALSE(j["feasibility"]["exact_ok"].get<bool>());
  EXPECT_TRUE(j.contains("rate_npcu"));
}

TEST(CliPlace, MissingUserIsUsageError) {
  EXPECT_EQ(run("place --user-x 1").status, 1);
}

TEST(CliSweep, ZeroTrialsIsUsageError) {
  fs::path const out = scratch_dir() / "never.csv";
  fs::remove(out);
  Outcome const r = run("sweep --trials 0 --out " + out.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_FALSE(r.err.empty());
  EXPECT_FALSE(fs::exists(out));
}

TEST(CliSweep, EmptyValuesIsUsageError) {
  EXPECT_EQ(run("sweep --kind power --values").status, 1);
  EXPECT_EQ(run("sweep --kind power").status, 1);
}

TEST(CliSweep, UnwritablePathNamesIt) {
  Outcome const r = run("sweep --trials 2 --values 0 --out /nonexistent/dir/out.csv");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("/nonexistent/dir/out.csv"), std::string::npos);
}

TEST(CliSweep, SameSeedSameBytes) {
  fs::path const a = scratch_dir() / "a.csv";
  fs::path const b = scratch_dir() / "b.csv";
  std::string const args = "sweep --kind power --values 0,20,40 --trials 40 --seed 77";
  ASSERT_EQ(run(args + " --threads 1 --out " + a.string()).status, 0);
  ASSERT_EQ(run(args + " --threads 3 --out " + b.string()).status, 0);
  std::string const first = slurp(a);
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, slurp(b));
}

TEST(CliSweep, CsvSchemaAndOutageFromDump) {
  fs::path const csv = scratch_dir() / "sweep.csv";
  fs::path const dump = scratch_dir() / "trials.json";
  Outcome const r = run("sweep --kind power --values -10 0 10 20 --trials 60 --seed 5 --out " +
                    csv.string() + " --dump-trials " + dump.string());
  ASSERT_EQ(r.status, 0) << r.err;
  auto const rows = parse_csv(slurp(csv));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{
                         "swept_parameter", "value", "mean_rate_pinching_bpcu",
                         "mean_rate_conventional_bpcu", "outage_fraction", "trials",
                         "seed"}));
  json const trials = json::parse(slurp(dump));
  ASSERT_EQ(trials.size(), 4u);
  double previous = -1.0;
  for (std::size_t s = 0; s < 4; ++s) {
    auto const& row = rows[s + 1];
    ASSERT_EQ(row.size(), 7u);
    EXPECT_EQ(row[0], "power");
    EXPECT_EQ(row[6], "5");
    auto const& records = trials[s]["trials"];
    int outages = 0;
    double sum = 0.0;
    for (auto const& t : records) {
      outages += !t["qos_ok"].get<bool>();
      sum += t["rate_pinching_nats"].get<double>();
    }
    char expected[32];
    std::snprintf(expected, sizeof expected, "%.9g",
                  static_cast<double>(outages) / static_cast<double>(records.size()));
    EXPECT_EQ(row[4], expected);
    EXPECT_EQ(row[5], std::to_string(records.size()));
    double const mean_bits = std::stod(row[2]);
    EXPECT_NEAR(mean_bits, sum / records.size() / std::log(2.0), 1e-8 * mean_bits + 1e-12);
    EXPECT_GE(mean_bits, previous);
    previous = mean_bits;
  }
}

TEST(CliSweep, ConfigDrivesSweep) {
  fs::path const config = scratch_dir() / "area.json";
  std::ofstream(config) << R"({"simulation": {"num_trials": 20,
      "sweep": {"kind": "area", "values": [5, 10]}}, "output_format": "json"})";
  Outcome const r = run("sweep --config " + config.string());
  ASSERT_EQ(r.status, 0) << r.err;
  json const rows = json::parse(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1]["swept_parameter"], "area");
  EXPECT_EQ(rows[1]["trials"], 20);
}

TEST(CliSweep, BadConfigFieldIsUsageError) {
  fs::path const config = scratch_dir() / "bad.json";
  std::ofstream(config) << R"({"simulation": {"trials": 20}})";
  Outcome const r = run("sweep --config " + config.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("simulation.trials"), std::string::npos) << r.err;
}

}  // namespace
