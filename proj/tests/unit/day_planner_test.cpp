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

#include "runway/day_planner.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "runway/error.hpp"
#include "support/fixtures.hpp"
#include "support/transfer_instances.hpp"

namespace runway {
namespace {

using testing::RandomTransferInstance;
using testing::TransferInstance;
using testing::Uniform;
using testing::WorkedTransferInstance;

double Sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

void CheckInvariants(const TransferInstance& inst, const DayPlan& plan) {
  const auto& t = plan.transfers;
  const std::size_t n = inst.day.slots.size();
  REQUIRE(t.s_a.size() == n);
  REQUIRE(plan.policies.size() == n);
  CHECK(t.s_a.back() == 0.0);
  CHECK(t.s_d.back() == 0.0);
  double in_a = 0.0;
  double in_d = 0.0;
  for (const auto& slot : inst.day.slots) {
    in_a += slot.lambda_a;
    in_d += slot.lambda_d;
  }
  CHECK(std::fabs(Sum(t.lambda2_a) - in_a) <= 1e-12 * std::fmax(1.0, in_a));
  CHECK(std::fabs(Sum(t.lambda2_d) - in_d) <= 1e-12 * std::fmax(1.0, in_d));
  const auto& config = inst.configs.begin()->second;
  const auto domain = BuildSecondaryDemandDomain(
      config.envelope, config.q_a, config.q_d, inst.day.p_a, inst.day.p_d);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(t.s_a[i] >= 0.0);
    CHECK(t.s_d[i] >= 0.0);
    CHECK(domain.Contains(t.lambda2_a[i], t.lambda2_d[i], 1e-7));
    CHECK(config.envelope.Contains(plan.policies[i].mu_a, plan.policies[i].mu_d));
  }
}

TEST_CASE("worked two-slot instance shifts a quarter landing") {
  const auto inst = WorkedTransferInstance();
  const auto plan = PlanDay(inst.day, inst.configs, inst.costs);
  const auto& t = plan.transfers;
  CHECK(t.s_a[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(t.s_d[0] == 0.0);
  CHECK(t.lambda2_a[0] == doctest::Approx(10.75).epsilon(1e-12));
  CHECK(t.lambda2_a[1] == doctest::Approx(8.25).epsilon(1e-12));
  CHECK(plan.total_transfer_cost == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(plan.rounded_s_a[0] == 0);
  // Slot 0 sits on a demand vertex: the only policy is its service point.
  CHECK(plan.policies[0].source == PolicySource::kDemandVertex);
  CHECK(plan.policies[0].mu_a == doctest::Approx(11.75).epsilon(1e-12));
  CHECK(plan.policies[0].z_a == 1.0);
  CHECK(plan.policies[1].source == PolicySource::kDelayVertex);
  CheckInvariants(inst, plan);
}

TEST_CASE("transfer LP layout") {
  const auto inst = WorkedTransferInstance();
  const auto lp = BuildTransferLp(inst.day, inst.configs, inst.costs);
  CHECK(lp.slots == 2);
  CHECK(lp.program.variables() == 2);
  CHECK(lp.ArrivalVar(0) == 0);
  CHECK(lp.DepartureVar(0) == 1);
  CHECK(lp.domains.size() == 1);
  // Domain ENV1 has 3 segments per slot plus 2 nonnegativity rows for slot 0.
  CHECK(lp.program.constraints() == 8);
  // The first segment (10.75, 0)-(9, 7) binds slot 0 at s = 0.25.
  CHECK(lp.program.rows()[0][0] == doctest::Approx(-7.0).epsilon(1e-12));
  CHECK(lp.program.rows()[0][1] == doctest::Approx(-1.75).epsilon(1e-12));
  CHECK(lp.program.bounds()[0] == doctest::Approx(-1.75).epsilon(1e-12));
}

TEST_CASE("schedule errors") {
  auto inst = WorkedTransferInstance();
  inst.day.slots[1].config_id = "missing";
  try {
    PlanDay(inst.day, inst.configs, inst.costs);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kValidationError);
  }
  inst = WorkedTransferInstance();
  inst.day.slots[1].lambda_a = 11.0;
  try {
    PlanDay(inst.day, inst.configs, inst.costs);
    FAIL("expected an infeasible schedule");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInfeasibleSchedule);
  }
  inst.day.slots.clear();
  CHECK_THROWS_AS(PlanDay(inst.day, inst.configs, inst.costs), Error);
}

TEST_CASE("mixed configurations per slot") {
  auto inst = WorkedTransferInstance();
  inst.configs.emplace(
      "SMALL", RunwayConfiguration{ValidateEnvelope({{6, 0}, {4, 4}, {0, 5}}), 1.5, 1.5});
  inst.day.slots.push_back({3.0, 3.0, "SMALL"});
  inst.day.slots.push_back({1.0, 1.0, "SMALL"});
  const auto plan = PlanDay(inst.day, inst.configs, inst.costs);
  const auto lp = BuildTransferLp(inst.day, inst.configs, inst.costs);
  CHECK(lp.domains.size() == 2);
  CHECK(plan.policies.size() == 4);
  CHECK(plan.total_transfer_cost >= 0.5 - 1e-12);
}

TEST_CASE("boundary demand with q above 2 falls back to least violation") {
  // With q = 4 the chord between demand vertices passes outside the truly
  // sustainable region; its midpoint has no interior policy.
  TransferInstance inst;
  inst.configs.emplace("ENV1", RunwayConfiguration{testing::Env1(), 4.0, 4.0});
  const auto v = testing::DemandVertices(
      TransferInstance{inst.configs, DaySchedule{{}, 1.0, 1.0}, {1.0, 1.0}});
  const double la = 0.5 * (v[2].x + v[3].x);
  const double ld = 0.5 * (v[2].y + v[3].y);
  inst.day = DaySchedule{{{la, ld, "ENV1"}}, 1.0, 1.0};
  inst.costs = {1.0, 1.0};
  const auto plan = PlanDay(inst.day, inst.configs, inst.costs);
  REQUIRE(plan.policies.size() == 1);
  const auto& policy = plan.policies[0];
  CHECK(policy.source == PolicySource::kLeastViolation);
  CHECK(testing::Env1().Contains(policy.mu_a, policy.mu_d));
  CHECK(policy.z_a > 1.0);
  CHECK(policy.z_a < 1.05);
}

TEST_CASE("random instances: conservation, membership, oracle agreement") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 12; ++trial) {
    const auto inst = RandomTransferInstance(rng, 1 + trial % 3);
    const auto plan = PlanDay(inst.day, inst.configs, inst.costs);
    CheckInvariants(inst, plan);
    const double grid = testing::GridTransferCost(inst, 1e-3);
    CHECK(plan.total_transfer_cost <= grid + 1e-9);
    CHECK(grid - plan.total_transfer_cost <= 2e-3);
  }
}

TEST_CASE("feasible schedules need no transfers") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = RandomTransferInstance(rng, 2);
    const auto v = testing::DemandVertices(inst);
    for (auto& slot : inst.day.slots) {
      const auto b = testing::BoundaryPoint(rng, v);
      const double t = Uniform(rng, 0.0, 1.0);
      slot.lambda_a = t * b.x;
      slot.lambda_d = t * b.y;
    }
    const auto plan = PlanDay(inst.day, inst.configs, inst.costs);
    for (double s : plan.transfers.s_a) CHECK(s == 0.0);
    for (double s : plan.transfers.s_d) CHECK(s == 0.0);
    CHECK(plan.total_transfer_cost == 0.0);
  }
}

TEST_CASE("more landings never make the plan cheaper") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 30; ++trial) {
    auto inst = RandomTransferInstance(rng, 2);
    const double base = PlanDay(inst.day, inst.configs, inst.costs).total_transfer_cost;
    inst.day.slots[0].lambda_a *= 1.02;
    try {
      const double more =
          PlanDay(inst.day, inst.configs, inst.costs).total_transfer_cost;
      CHECK(more >= base - 1e-9);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kInfeasibleSchedule);
    }
  }
}

}  // namespace
}  // namespace runway
