// Copyright 2026 The Runway Planner Authors
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

#include "runway/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "runway/io.hpp"

namespace runway::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kData = RUNWAY_TEST_DATA_DIR;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "runway_planner");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path ScratchDir(const std::string& tag) {
  const fs::path dir = fs::temp_directory_path() /
                       ("runway_cli_" + tag + "_" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& p) { return io::ReadTextFile(p); }

TEST_CASE("validate") {
  auto r = Invoke({"validate", (kData / "env1.json").string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "configuration ENV1 J=3 mu_a_max=12.000000 mu_d_max=11.000000 "
        "q_a=2.000000 q_d=2.000000\nvalid\n");

  r = Invoke({"validate", (kData / "bad_concavity.json").string()});
  CHECK(r.code == kExitValidation);
  CHECK(r.err.find("ConvexityViolation") != std::string::npos);
  CHECK(r.err.find("index 1") != std::string::npos);

  r = Invoke({"validate", (kData / "malformed.json").string()});
  CHECK(r.code == kExitParse);
  r = Invoke({"validate", (kData / "does_not_exist.json").string()});
  CHECK(r.code == kExitParse);
}

TEST_CASE("optimize-slot on the worked example") {
  auto r = Invoke({"optimize-slot", (kData / "env1.json").string(), "--lambda-a",
                   "2", "--lambda-d", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "z_a=0.125000 z_d=0.166667 mu_a=10.000000 mu_d=8.000000 "
        "cost=0.833333\n");

  r = Invoke({"optimize-slot", (kData / "env1.json").string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("cost=0.000000") != std::string::npos);

  r = Invoke({"optimize-slot", (kData / "env1.json").string(), "--lambda-a",
              "9.5", "--lambda-d", "7.5"});
  CHECK(r.code == kExitNoSustainable);
}

TEST_CASE("domains writes polylines") {
  const auto dir = ScratchDir("domains");
  auto r = Invoke({"domains", (kData / "env1.json").string(), "--lambda-a", "2",
                   "--lambda-d", "2", "--out", dir.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("congestion_rates mu_a=3.000000 mu_d=3.000000") != std::string::npos);
  CHECK(Slurp(dir / "envelope.csv") == "x,y\n12,0\n10,8\n6,10\n0,11\n");
  CHECK(Slurp(dir / "sustainable_policy.csv") == "x,y\n11.25,3\n10,8\n6,10\n3,10.5\n");
  CHECK(Slurp(dir / "secondary_demand.csv").rfind("x,y\n10.75,0\n9,7\n5,9\n", 0) == 0);
  CHECK(fs::exists(dir / "delay_policy.csv"));

  r = Invoke({"domains", (kData / "env1.json").string(), "--lambda-a", "9.5",
              "--lambda-d", "7.5", "--out", dir.string()});
  CHECK(r.code == kExitNoSustainable);
  CHECK(r.out.find("verdict: no sustainable policy") != std::string::npos);

  r = Invoke({"domains", (kData / "env1.json").string(), "--configuration", "NOPE",
              "--out", dir.string()});
  CHECK(r.code == kExitValidation);
  fs::remove_all(dir);
}

TEST_CASE("plan-day writes a deterministic plan") {
  const auto dir = ScratchDir("plan");
  const auto first = dir / "a.json";
  const auto second = dir / "b.json";
  auto r = Invoke({"plan-day", (kData / "env1.json").string(),
                   (kData / "two_slots.json").string(), "--out", first.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("transfer_cost=0.500000") != std::string::npos);
  r = Invoke({"plan-day", (kData / "env1.json").string(),
              (kData / "two_slots.json").string(), "--out", second.string()});
  CHECK(r.code == kExitOk);
  CHECK(Slurp(first) == Slurp(second));

  const auto plan = nlohmann::json::parse(Slurp(first));
  CHECK(plan["s_a"][0].get<double>() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(plan["secondary_schedule"][1]["lambda_a"].get<double>() ==
        doctest::Approx(8.25).epsilon(1e-12));
  CHECK(plan["policies"][0]["source"] == "demand_vertex");

  r = Invoke({"plan-day", (kData / "env1.json").string(),
              (kData / "overloaded.json").string(), "--out", first.string()});
  CHECK(r.code == kExitInfeasibleSchedule);
  fs::remove_all(dir);
}

TEST_CASE("simulate honours seeds") {
  auto r = Invoke({"simulate", "--lambda", "1", "--mu", "2", "--n", "20000",
                   "--seed", "7"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("formula_z=1.000000") != std::string::npos);
  CHECK(r.out.find("seed=7") != std::string::npos);
  const auto again = Invoke({"simulate", "--lambda", "1", "--mu", "2", "--n",
                             "20000", "--seed", "7"});
  CHECK(again.out == r.out);

  ::setenv("RUNWAY_PLANNER_SEED", "42", 1);
  r = Invoke({"simulate", "--n", "1000"});
  CHECK(r.out.find("seed=42") != std::string::npos);
  ::setenv("RUNWAY_PLANNER_SEED", "not-a-number", 1);
  r = Invoke({"simulate", "--n", "1000"});
  CHECK(r.code == kExitValidation);
  ::unsetenv("RUNWAY_PLANNER_SEED");

  r = Invoke({"simulate", "--lambda", "2", "--mu", "2"});
  CHECK(r.code == kExitNoSustainable);
  r = Invoke({"simulate", "--qc", "0.5"});
  CHECK(r.code == kExitValidation);
}

TEST_CASE("usage errors") {
  CHECK(Invoke({}).code == kExitValidation);
  CHECK(Invoke({"frobnicate"}).code == kExitValidation);
  CHECK(Invoke({"optimize-slot", "x.json", "--lambda-a", "abc"}).code ==
        kExitValidation);
  CHECK(Invoke({"--help"}).code == kExitOk);
}

TEST_CASE("number formatting") {
  CHECK(io::FormatFixed(-0.0) == "0.000000");
  CHECK(io::FormatFixed(-1e-9) == "0.000000");
  CHECK(io::FormatFixed(5.0 / 6.0) == "0.833333");
  CHECK(io::FormatShortest(0.1) == "0.1");
  CHECK(io::FormatShortest(59.0 / 6.0) == "9.833333333333334");
}

}  // namespace
}  // namespace runway::cli
