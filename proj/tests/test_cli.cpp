// Copyright 2026 The land-select Authors
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

// End-to-end checks that spawn the installed command-line binary. The binary
// path arrives through the LAND_CLI_PATH compile definition.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#ifndef LAND_CLI_PATH
#error "LAND_CLI_PATH must point at the CLI binary"
#endif

namespace {

using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("land_cli_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const TempDir& dir, const std::string& args, const std::string& env = "") {
  const std::string out_path = dir.file("stdout.txt");
  const std::string err_path = dir.file("stderr.txt");
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += std::string(LAND_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

// A small benchmark dataset shared by most cases: 3 relevant + 5 irrelevant
// + 4 near-copies, 80 observations.
std::string make_data(const TempDir& dir, const std::string& name = "data.csv") {
  const std::string path = dir.file(name);
  const RunResult r = run_cli(
      dir, "synth --n 80 --d-irrelevant 5 --d-redundant 4 --seed 11 --out " + path);
  REQUIRE(r.code == 0);
  REQUIRE(std::filesystem::exists(path));
  return path;
}

}  // namespace

TEST_CASE("cli: synth then select yields a full report") {
  TempDir dir;
  const std::string data = make_data(dir);
  const RunResult r = run_cli(dir, "select --input " + data + " --m 5");
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  CHECK(report.at("selected").size() == 5);
  CHECK(report.at("names").size() == 5);
  CHECK(report.at("alpha").size() == 5);
  CHECK(report.at("f").size() == 5);  // scores of the selected features
  CHECK(!report.at("steps").empty());
  CHECK(report.at("steps").front().contains("feature"));
  CHECK(report.at("steps").front().contains("score_level"));
  CHECK(report.at("steps").front().contains("lambda"));
  CHECK(report.at("metrics").contains("independence_rate"));
  const double reduction = report.at("metrics").at("reduction_rate").get<double>();
  CHECK(reduction == doctest::Approx(1.0 - 5.0 / 12.0));
}

TEST_CASE("cli: hsic score mode is accepted and reported") {
  TempDir dir;
  const std::string data = make_data(dir);
  const RunResult nhsic = run_cli(dir, "select --input " + data + " --m 4");
  const RunResult hsic = run_cli(dir, "select --input " + data + " --m 4 --score hsic");
  REQUIRE(nhsic.code == 0);
  REQUIRE(hsic.code == 0);
  CHECK(json::parse(hsic.out).at("selected").size() == 4);
  // the two normalizations score differently
  CHECK(json::parse(nhsic.out).at("f") != json::parse(hsic.out).at("f"));
}

TEST_CASE("cli: reports are byte-identical across worker counts") {
  TempDir dir;
  const std::string data = make_data(dir);
  const std::string base = "select --input " + data + " --m 5 --out ";
  const std::string o1 = dir.file("w1.json");
  const std::string o2 = dir.file("w2.json");
  const std::string o8 = dir.file("w8.json");
  REQUIRE(run_cli(dir, base + o1 + " --workers 1").code == 0);
  REQUIRE(run_cli(dir, base + o2 + " --workers 2").code == 0);
  REQUIRE(run_cli(dir, base + o8 + " --workers 8").code == 0);
  const std::string body = slurp(o1);
  CHECK(body == slurp(o2));
  CHECK(body == slurp(o8));

  const std::string oenv = dir.file("wenv.json");
  REQUIRE(run_cli(dir, base + oenv, "LAND_WORKERS=3").code == 0);
  CHECK(body == slurp(oenv));
}

TEST_CASE("cli: breakpoint table mirrors the report steps") {
  TempDir dir;
  const std::string data = make_data(dir);
  const std::string tsv = dir.file("path.tsv");
  const RunResult r =
      run_cli(dir, "select --input " + data + " --m 5 --path " + tsv);
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  std::ifstream in(tsv);
  std::string header;
  REQUIRE(std::getline(in, header));
  CHECK(header == "step\tfeature\tscore_level\tlambda\tactive_set\talpha");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == static_cast<int>(report.at("steps").size()));
}

TEST_CASE("cli: screen ranks by relevance") {
  TempDir dir;
  const std::string data = make_data(dir);
  const RunResult r = run_cli(dir, "screen --input " + data + " --m 6");
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  REQUIRE(report.at("selected").size() == 6);
  REQUIRE(report.at("f").size() == 6);  // scores follow the kept features
  const auto& f = report.at("f");
  for (std::size_t i = 1; i < f.size(); ++i) {
    CHECK(f[i - 1].get<double>() >= f[i].get<double>());
  }
}

TEST_CASE("cli: eval reports metrics for a feature list") {
  TempDir dir;
  const std::string data = make_data(dir);
  const RunResult r = run_cli(dir, "eval --input " + data + " 0 1 2");
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  CHECK(report.at("m") == 3);
  CHECK(report.at("d") == 12);
  CHECK(report.at("metrics").at("auc").is_null());  // regression target
  CHECK(report.at("metrics").at("independence_rate").is_number());

  const RunResult split =
      run_cli(dir, "eval --input " + data + " 0 1 2 --train-fraction 0.75 --seed 5");
  REQUIRE(split.code == 0);
  CHECK(json::parse(split.out).at("metrics").at("independence_rate").is_number());
}

TEST_CASE("cli: nhsic emits a square score table") {
  TempDir dir;
  const std::string data = make_data(dir);
  const RunResult r = run_cli(dir, "nhsic --input " + data + " 0 3 8");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    std::istringstream cells(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(cells, cell, '\t')) values.push_back(std::stod(cell));
    REQUIRE(values.size() == 3);
    CHECK(values[static_cast<std::size_t>(rows - 1)] == doctest::Approx(1.0).epsilon(1e-6));
  }
  CHECK(rows == 3);

  // feature 8 is a near-copy of feature 0 (3 relevant + 5 irrelevant before it)
  const RunResult oracle = run_cli(dir, "nhsic --input " + data + " 0 8 --oracle");
  REQUIRE(oracle.code == 0);
  std::istringstream oin(oracle.out);
  std::string first;
  REQUIRE(std::getline(oin, first));
  const std::size_t tab = first.find('\t');
  REQUIRE(tab != std::string::npos);
  CHECK(std::stod(first.substr(tab + 1)) > 0.99);
}

TEST_CASE("cli: exit codes distinguish usage, validation, and io failures") {
  TempDir dir;
  const std::string data = make_data(dir);
  CHECK(run_cli(dir, "select --input " + data + " --no-such-flag").code == 1);
  CHECK(run_cli(dir, "select --input " + dir.file("missing.csv")).code == 2);
  CHECK(run_cli(dir, "select --input " + data + " --m 0").code == 1);
  CHECK(run_cli(dir, "select --input " + data + " --m 999").code == 1);
  CHECK(run_cli(dir, "synth --d-relevant 4 --out " + dir.file("x.csv")).code == 1);
  CHECK(run_cli(dir, "eval --input " + data + " 99").code == 1);
  CHECK(run_cli(dir, "").code == 1);       // a subcommand is required
  CHECK(run_cli(dir, "--help").code == 0);
}
