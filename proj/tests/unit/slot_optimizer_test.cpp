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

#include "runway/slot_optimizer.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "doctest.h"
#include "runway/error.hpp"
#include "runway/lp.hpp"
#include "runway/queueing.hpp"
#include "support/fixtures.hpp"

namespace runway {
namespace {

using testing::RandomEnvelope;
using testing::Uniform;
using testing::WorkedContext;

std::optional<SlotContext> RandomSustainableContext(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const auto env = RandomEnvelope(rng);
    SlotContext ctx{env,
                    Uniform(rng, 1.0, 3.0),
                    Uniform(rng, 1.0, 3.0),
                    Uniform(rng, 0.5, 3.0),
                    Uniform(rng, 0.5, 3.0),
                    Uniform(rng, 0.0, 0.7 * env.max_arrival_rate()),
                    Uniform(rng, 0.0, 0.7 * env.max_departure_rate())};
    if (SustainableExists(ctx)) return ctx;
  }
  return std::nullopt;
}

TEST_CASE("worked slot with landing-heavy costs") {
  const auto policy = OptimizeSlot(WorkedContext(), {2.0, 1.0});
  CHECK(policy.z_a == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(policy.z_d == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(policy.mu_a == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(policy.mu_d == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(policy.expected_cost == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(policy.source == PolicySource::kDelayVertex);

  const auto lp = CrossCheckLp(WorkedContext(), {2.0, 1.0});
  CHECK(lp.expected_cost == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(lp.source == PolicySource::kLinearProgram);
}

TEST_CASE("worked slot with takeoff-heavy costs") {
  const auto policy = OptimizeSlot(WorkedContext(), {1.0, 100.0});
  CHECK(policy.z_a == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(policy.z_d == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(policy.mu_a == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(policy.mu_d == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("zero demand returns the fastest balanced vertex at no cost") {
  auto ctx = WorkedContext();
  ctx.lambda_a = 0.0;
  ctx.lambda_d = 0.0;
  const auto policy = OptimizeSlot(ctx, {1.0, 1.0});
  CHECK(policy.source == PolicySource::kZeroDemand);
  CHECK(policy.expected_cost == 0.0);
  // 1/mu summed over vertices: (10, 8) gives 0.225, the minimum.
  CHECK(policy.mu_a == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(policy.mu_d == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("invalid costs and missing policies") {
  CHECK_THROWS_AS(OptimizeSlot(WorkedContext(), {0.0, 1.0}), Error);
  auto ctx = WorkedContext();
  ctx.lambda_a = 9.5;
  ctx.lambda_d = 7.5;
  try {
    OptimizeSlot(ctx, {1.0, 1.0});
    FAIL("expected NoSustainablePolicy");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoSustainablePolicy);
  }
  try {
    CrossCheckLp(ctx, {1.0, 1.0});
    FAIL("expected NoSustainablePolicy");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNoSustainablePolicy);
  }
}

TEST_CASE("least violation policy balances normalized delays") {
  auto ctx = WorkedContext();
  ctx.lambda_a = 9.5;
  ctx.lambda_d = 7.5;
  const auto policy = LeastViolationPolicy(ctx, {1.0, 1.0});
  CHECK(policy.source == PolicySource::kLeastViolation);
  CHECK(ctx.envelope.Contains(policy.mu_a, policy.mu_d));
  CHECK(policy.z_a / ctx.p_a == doctest::Approx(policy.z_d / ctx.p_d).epsilon(1e-9));
  CHECK(policy.z_a > ctx.p_a);
}

TEST_CASE("random contexts: vertex optimality and consistency") {
  std::mt19937_64 rng(505);
  for (int trial = 0; trial < 150; ++trial) {
    const auto ctx = RandomSustainableContext(rng);
    REQUIRE(ctx.has_value());
    const DelayCosts costs{Uniform(rng, 0.1, 5.0), Uniform(rng, 0.1, 5.0)};
    const auto policy = OptimizeSlot(*ctx, costs);
    const auto domain = BuildDelayPolicyDomain(*ctx);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : domain.vertices) {
      best = std::fmin(best, DelayCost(*ctx, costs, v.x, v.y));
    }
    CHECK(policy.expected_cost == best);
    CHECK(policy.z_a <= ctx->p_a + 1e-12);
    CHECK(policy.z_d <= ctx->p_d + 1e-12);
    CHECK(ctx->envelope.Contains(policy.mu_a, policy.mu_d));
    CHECK(std::fabs(StableTransitTime(ctx->lambda_a, policy.mu_a, ctx->q_a) -
                    policy.z_a) <= 1e-9);
    CHECK(std::fabs(StableTransitTime(ctx->lambda_d, policy.mu_d, ctx->q_d) -
                    policy.z_d) <= 1e-9);
    const auto lp = CrossCheckLp(*ctx, costs);
    CHECK(std::fabs(lp.expected_cost - policy.expected_cost) <= 1e-7);

    // Scaling both costs leaves the argmin alone.
    const auto scaled = OptimizeSlot(*ctx, {7.5 * costs.c_a, 7.5 * costs.c_d});
    CHECK(scaled.z_a == policy.z_a);
    CHECK(scaled.z_d == policy.z_d);

    // A larger landing cost never lengthens the landing delay.
    const auto heavier = OptimizeSlot(*ctx, {2.0 * costs.c_a, costs.c_d});
    CHECK(heavier.z_a <= policy.z_a);
  }
}

}  // namespace
}  // namespace runway
