// Copyright 2026 The Ringvac Authors
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

// End-to-end checks of the command-line tool.  The binary path arrives in the
// RINGVAC_CLI environment variable (ctest sets it); without it the cases are
// skipped so the library suite can still run standalone.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ringvac/ringvac.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string cli_path() {
  const char* p = std::getenv("RINGVAC_CLI");
  return p ? p : "";
}

int run(const std::string& args) {
  const std::string cmd = "\"" + cli_path() + "\" " + args;
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const fs::path& p) { return json::parse(read_file(p)); }

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  return out;
}

struct TempDir {
  fs::path dir;
  TempDir() {
    static int counter = 0;
    dir = fs::temp_directory_path() /
          ("ringvac_cli_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++));
    fs::create_directories(dir);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
  std::string file(const std::string& name) const {
    return (dir / name).string();
  }
};

constexpr char kSweepHeader[] = "nu,M,C,e_zp,e_cl,e_total,l_total,at_jump";
constexpr char kSweepArgs[] =
    "sweep --beta 100 --i-cl-hat 9000 --nu-max 0.05 --nu-step 1e-4";

}  // namespace

TEST_CASE("cli: sweep writes the documented CSV") {
  if (cli_path().empty()) SKIP("RINGVAC_CLI not set");
  TempDir tmp;
  const auto out = tmp.file("sweep.csv");
  REQUIRE(run(std::string(kSweepArgs) + " --output " + out) == 0);

  std::vector<std::string> lines;
  {
    std::istringstream ss(read_file(out));
    std::string line;
    while (std::getline(ss, line)) lines.push_back(line);
  }
  REQUIRE(lines.size() == 505);  // 3 provenance comments, header, 501 rows
  CHECK(lines[0].rfind("# ", 0) == 0);
  CHECK(lines[3] == kSweepHeader);

  double best_e = 1e300, best_nu = -1.0;
  int jump_flags = 0;
  for (std::size_t k = 4; k < lines.size(); ++k) {
    const auto f = split(lines[k], ',');
    REQUIRE(f.size() == 8);
    const double nu = std::stod(f[0]);
    const double e_total = std::stod(f[5]);
    if (e_total < best_e) {
      best_e = e_total;
      best_nu = nu;
    }
    jump_flags += (f[7] == "1") ? 1 : 0;
    // Column consistency: e_total = e_cl + e_zp.
    CHECK_THAT(std::stod(f[3]) + std::stod(f[4]),
               Catch::Matchers::WithinRel(e_total, 1e-12));
  }
  // On this grid the deepest row sits just past the first jump frequency.
  CHECK(best_nu == 0.01);
  CHECK_THAT(best_e, Catch::Matchers::WithinRel(-0.09172083333333333, 1e-12));
  // Only nu = 0 has an integer flux argument on this grid.
  CHECK(jump_flags == 1);
}

TEST_CASE("cli: sweep output is byte-identical across runs") {
  if (cli_path().empty()) SKIP("RINGVAC_CLI not set");
  TempDir tmp;
  const auto a = tmp.file("a.csv"), b = tmp.file("b.csv");
  REQUIRE(run(std::string(kSweepArgs) + " --output " + a) == 0);
  REQUIRE(run(std::string(kSweepArgs) + " --output " + b) == 0);
  CHECK(read_file(a) == read_file(b));
}

TEST_CASE("cli: neutral sweep uses the one-branch energy") {
  if (cli_path().empty()) SKIP("RINGVAC_CLI not set");
  TempDir tmp;
  const auto out = tmp.file("neutral.csv");
  REQUIRE(run("sweep --field neutral --beta 0 --i-cl-hat 2 --nu-max 0.3 "
              "--nu-step 0.1 --output " +
              out) == 0);
  std::istringstream ss(read_file(out));
  std::string line;
  int rows = 0;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
    const auto f = split(line, ',');
    REQUIRE(f.size() == 8);
    const double nu = std::stod(f[0]);
    CHECK(f[1] == "0");
    CHECK(f[2] == "1");
    CHECK_THAT(std::stod(f[3]),
               Catch::Matchers::WithinRel(-(1.0 + nu * nu) / 48.0, 1e-12));
    ++rows;
  }
  CHECK(rows == 4);

  // The neutral field has no flux coupling.
  CHECK(run("sweep --field neutral --beta 100 --output /dev/null 2>/dev/null") !=
        0);
}

TEST_CASE("cli: invalid sweep ranges fail before the file is opened") {
  if (cli_path().empty()) SKIP("RINGVAC_CLI not set");
  TempDir tmp;
  const auto out = tmp.file("never.csv");
  CHECK(run("sweep --nu-step 0 --output " + out + " 2>/dev/null") != 0);
  CHECK(run("sweep --nu-max 1.0 --output " + out + " 2>/dev/null") != 0);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("cli: minimize reports the exact landscape minimum") {
  if (cli_path().empty()) SKIP("RINGVAC_CLI not set");
  TempDir tmp;
  const auto out = tmp.file("min.json");
  REQUIRE(run("minimize --beta 100 --i-cl-hat 9000 --nu-max 0.05 "
              "--radius-si 1e-6 --output " +
              out) == 0);
  const json j = read_json(out);
  CHECK_THAT(j["nu_star"].get<double>(),
             Catch::Matchers::WithinRel(0.009999000199950014, 1e-12));
  CHECK(j["branch_n"].get<long long>() == 1);
  CHECK(j["rotating_ground_state"].get<bool>());
  CHECK_FALSE(j["boundary_hit"].get<bool>());
  CHECK_THAT(j["e_at_zero"].get<double>(),
             Catch::Matchers::WithinRel(-1.0 / 24.0, 1e-14));
  CHECK(j["candidates"].size() == 12);
  CHECK_THAT(j["si"]["omega_star_rad_per_s"].get<double>(),
             Catch::Matchers::WithinRel(
                 0.009999000199950014 * 2.99792458e8 / 1e-6, 1e-10));
  CHECK(j["provenance"]["tool"] == "ringvac");
}

TEST_CASE("cli: branches table lists the winding intervals") {
  if (cli_path().empty()) SKIP("RINGVAC_CLI not set");
  TempDir tmp;
  const auto out = tmp.file("branches.json");
  REQUIRE(run("branches --beta 100 --nu-max 0.05 --output " + out) == 0);
  const json j = read_json(out);
  REQUIRE(j["branches"].size() == 6);
  for (int n = 0; n < 6; ++n)
    CHECK(j["branches"][n]["n"].get<long long>() == n);
  CHECK(j["branches"][5]["c_factor"].get<long long>() == 181);

  const auto csv = tmp.file("branches.csv");
  REQUIRE(run("branches --beta 100 --nu-max 0.05 --format csv --output " +
              csv) == 0);
  const auto text = read_file(csv);
  CHECK(text.rfind("n,nu_lo,nu_hi,c_factor,curvature\n", 0) == 0);
}

TEST_CASE("cli: greens evaluates series and closed form") {
  if (cli_path().empty()) SKIP("RINGVAC_CLI not set");
  TempDir tmp;
  const auto out = tmp.file("greens.json");
  REQUIRE(run("greens --x 0.7 --y 1.1 --z 0.3 --delta 1e-4 --m-max 1000000 "
              "--output " +
              out) == 0);
  const json j = read_json(out);
  CHECK(j["abs_diff"].get<double>() < 1e-12);
  CHECK_THAT(j["closed"]["re"].get<double>(),
             Catch::Matchers::WithinRel(0.8852468928055235, 1e-12));

  const auto g = tmp.file("rot.json");
  REQUIRE(run("greens --green rotating --t 0.4 --tp 0 --phi 2.2 --phip 1.3 "
              "--nu 0.35 --delta 1e-3 --output " +
              g) == 0);
  const json jr = read_json(g);
  const auto want = ringvac::green_rotating(0.4, 0.0, 2.2, 1.3, 0.35, 1e-3);
  CHECK_THAT(jr["green"]["re"].get<double>(),
             Catch::Matchers::WithinRel(want.real(), 1e-14));
  CHECK_THAT(jr["green"]["im"].get<double>(),
             Catch::Matchers::WithinRel(want.imag(), 1e-14));
}

TEST_CASE("cli: t00 reports density against the closed form") {
  if (cli_path().empty()) SKIP("RINGVAC_CLI not set");
  TempDir tmp;
  const auto out = tmp.file("t00.json");
  REQUIRE(run("t00 --nu 0.5 --output " + out) == 0);
  const json j = read_json(out);
  CHECK_THAT(j["target"].get<double>(),
             Catch::Matchers::WithinRel(-1.25 / (96.0 * ringvac::kPi), 1e-14));
  CHECK(j["rel_error"].get<double>() < 1e-4);

  // A caller-supplied splitting ladder is honored.
  const auto out2 = tmp.file("t00b.json");
  REQUIRE(run("t00 --nu 0 --dt 0.4 --dt 0.3 --dt 0.2 --dt 0.15 --output " +
              out2) == 0);
  CHECK(read_json(out2)["rel_error"].get<double>() < 1e-4);
}

TEST_CASE("cli: verify exits zero on a fresh seed") {
  if (cli_path().empty()) SKIP("RINGVAC_CLI not set");
  TempDir tmp;
  const auto out = tmp.file("verify.txt");
  REQUIRE(run("verify --seed 424242 --output " + out) == 0);
  const auto text = read_file(out);
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(text.find("checks passed") != std::string::npos);
  CHECK(text.find("not equated") != std::string::npos);

  const auto js = tmp.file("verify.json");
  REQUIRE(run("verify --format json --output " + js) == 0);
  CHECK(read_json(js)["all_pass"].get<bool>());
}

TEST_CASE("cli: estimate converts a physical ring") {
  if (cli_path().empty()) SKIP("RINGVAC_CLI not set");
  TempDir tmp;
  const auto out = tmp.file("estimate.json");
  REQUIRE(run("estimate --radius-si 1e-6 --b-field-si 10 --output " + out) ==
          0);
  const json j = read_json(out);
  CHECK_THAT(j["beta"].get<double>(),
             Catch::Matchers::WithinRel(15192.674488095105, 1e-12));
  CHECK(j["has_discontinuities"].get<bool>());
  // The first jump frequency differs from the nonrelativistic c / (beta R)
  // only at second order in 1 / beta.
  const double nonrel = 2.99792458e8 / (1e-6 * j["beta"].get<double>());
  CHECK_THAT(j["omega_ch_rad_per_s"].get<double>(),
             Catch::Matchers::WithinRel(nonrel, 1e-7));
  CHECK(j["ground_state"]["rotating_ground_state"].get<bool>());

  const auto quiet = tmp.file("quiet.json");
  REQUIRE(run("estimate --radius-si 1e-6 --output " + quiet) == 0);
  const json q = read_json(quiet);
  CHECK_FALSE(q["has_discontinuities"].get<bool>());
  CHECK(q["nu_ch"].is_null());
}

TEST_CASE("cli: bad invocations are rejected") {
  if (cli_path().empty()) SKIP("RINGVAC_CLI not set");
  CHECK(run("frobnicate 2>/dev/null") != 0);
  CHECK(run("2>/dev/null") != 0);           // a subcommand is required
  CHECK(run("estimate 2>/dev/null") != 0);  // --radius-si is required
  CHECK(run("sweep --format yaml --output /dev/null 2>/dev/null") != 0);
}
