// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "doctest.h"

using namespace modslab::cli;

namespace {

std::string run(const std::string& json, Mode mode, CommandOptions opts, int* code = nullptr) {
  std::ostringstream out;
  std::ostringstream log;
  const int rc = run_command(parse_config(json, mode), opts, out, log);
  if (code != nullptr) *code = rc;
  return out.str();
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

const char* kSweep = R"({"eta": 2.892, "im_n": 4.5e-5, "z1_re": 0.01, "a_um": 10,
  "lambda_alpha_nm": 1000, "lambda_start_nm": 420, "lambda_stop_nm": 990, "lambda_points": 9})";

}  // namespace

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS((void)parse_config(R"({"eta": 1.0, "a_um": 10, "lambda_alpha_nm": 1000,
      "modes": [[60, 1]]})", Mode::kLasing), ConfigError);
  CHECK_THROWS_AS((void)parse_config(R"({"eta": 2.0, "a_um": 10, "lambda_alpha_nm": 1000,
      "lambda_nm": 900, "colour": 1})", Mode::kAmplitudes), ConfigError);
  CHECK_THROWS_AS((void)parse_config(R"({"eta": 2.0, "a_um": 10, "lambda_alpha_nm": 1000,
      "lambda_start_nm": 900, "lambda_stop_nm": 800, "lambda_points": 5})", Mode::kSweep), ConfigError);
  CHECK_THROWS_AS((void)parse_config(R"({"eta": 2.0, "lambda_alpha_nm": 1000, "lambda_nm": 900})",
                                     Mode::kAmplitudes), ConfigError);
  CHECK_THROWS_AS((void)parse_config(R"({"mode": "sweep", "eta": 2.0, "a_um": 10,
      "lambda_alpha_nm": 1000, "lambda_nm": 900})", Mode::kAmplitudes), ConfigError);
  CHECK_THROWS_AS((void)parse_config("{not json", Mode::kSweep), ConfigError);
  CHECK_THROWS_AS((void)parse_mode("banana"), ConfigError);
}

TEST_CASE("sweep output does not depend on the worker count") {
  CommandOptions one;
  CommandOptions three;
  three.jobs = 3;
  const auto a = run(kSweep, Mode::kSweep, one);
  const auto b = run(kSweep, Mode::kSweep, three);
  CHECK(a == b);
  CHECK(data_lines(a).size() > 9);
}

TEST_CASE("without modulation the side channels are exactly zero") {
  const std::string json = R"({"eta": 2.892, "im_n": 4.5e-5, "a_um": 10, "lambda_alpha_nm": 1000,
      "lambda_start_nm": 420, "lambda_stop_nm": 990, "lambda_points": 5})";
  int code = -1;
  const auto csv = run(json, Mode::kSweep, {}, &code);
  CHECK(code == kExitOk);
  int checked = 0;
  for (const auto& line : data_lines(csv)) {
    const auto c = split(line);
    REQUIRE(c.size() >= 9);
    if (c[1] == "0") continue;
    for (int col = 2; col <= 5; ++col) CHECK(std::stod(c[col]) == 0.0);
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("figure1 emits one row per grid point") {
  const auto csv = run("{}", Mode::kFigure1, {});
  CHECK(data_lines(csv).size() == 512);
  CHECK(csv.find("# modslab-figure1") != std::string::npos);
  CHECK(csv.find("theta1_plus_min_deg") != std::string::npos);
}

TEST_CASE("lasing rows depend only on q") {
  const auto csv = run(R"({"eta": 2.892, "a_um": 10, "lambda_alpha_nm": 1000,
      "modes": [[60, 1], [120, 2]]})", Mode::kLasing, {});
  const auto rows = data_lines(csv);
  REQUIRE(rows.size() == 2);
  const auto r1 = split(rows[0]);
  const auto r2 = split(rows[1]);
  CHECK(r1[2] == r2[2]);  // q
  CHECK(r1[3] == r2[3]);  // theta
  CHECK(r1[4] == r2[4]);  // g*
}

TEST_CASE("oracle check mode agrees") {
  int code = -1;
  CommandOptions opts;
  opts.oracle_check = true;
  const auto csv = run(R"({"z0_re": 0.5, "z0_im": 0.01, "z1_re": 0.05, "z1_im": -0.02, "a_um": 4,
      "lambda_alpha_nm": 1000, "lambda_start_nm": 400, "lambda_stop_nm": 950, "lambda_points": 3})",
                       Mode::kSweep, opts, &code);
  CHECK(code == kExitOk);
  CHECK(csv.find("oracle_mismatch") == std::string::npos);
}

TEST_CASE("the binary exits with 2 on a configuration error") {
  const std::string path = "cli_test_bad_lasing.json";
  {
    std::ofstream f(path);
    f << R"({"eta": 1.0, "a_um": 10, "lambda_alpha_nm": 1000, "modes": [[60, 1]]})";
  }
  const std::string cmd = std::string(MODSLAB_BINARY) + " lasing --config " + path + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 2);
  std::remove(path.c_str());
}
