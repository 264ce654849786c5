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

#include "runway/lp.hpp"
#include "runway/queueing.hpp"

namespace runway {
namespace {

SlotPolicy FromTransitTimes(const SlotContext& ctx, const DelayCosts& costs,
                            double z_a, double z_d, PolicySource source) {
  SlotPolicy policy;
  policy.z_a = z_a;
  policy.z_d = z_d;
  policy.mu_a = ServiceRateForTransit(ctx.lambda_a, z_a, ctx.q_a);
  policy.mu_d = ServiceRateForTransit(ctx.lambda_d, z_d, ctx.q_d);
  policy.expected_cost = DelayCost(ctx, costs, z_a, z_d);
  policy.source = source;
  return policy;
}

[[noreturn]] void ThrowNoPolicy() {
  throw Error(ErrorCode::kNoSustainablePolicy,
              "no service policy keeps both transit times within tolerance");
}

}  // namespace

void ValidateCosts(const DelayCosts& costs) {
  if (!(std::isfinite(costs.c_a) && costs.c_a > 0.0 &&
        std::isfinite(costs.c_d) && costs.c_d > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "delay costs must be > 0");
  }
}

std::string_view ToString(PolicySource source) {
  switch (source) {
    case PolicySource::kDelayVertex: return "delay_vertex";
    case PolicySource::kZeroDemand: return "zero_demand";
    case PolicySource::kLinearProgram: return "linear_program";
    case PolicySource::kDemandVertex: return "demand_vertex";
    case PolicySource::kLeastViolation: return "least_violation";
  }
  return "unknown";
}

double DelayCost(const SlotContext& ctx, const DelayCosts& costs, double z_a,
                 double z_d) {
  return costs.c_a * ctx.lambda_a * z_a + costs.c_d * ctx.lambda_d * z_d;
}

SlotPolicy OptimizeSlot(const SlotContext& ctx, const DelayCosts& costs) {
  ValidateCosts(costs);
  const DelayPolicyDomain domain = BuildDelayPolicyDomain(ctx);
  if (ctx.lambda_a == 0.0 && ctx.lambda_d == 0.0) {
    const lp::VertexChoice pick =
        lp::EnumeratePolygonOptimum(domain.vertices, 1.0, 1.0);
    return FromTransitTimes(ctx, costs, pick.vertex.x, pick.vertex.y,
                            PolicySource::kZeroDemand);
  }
  const lp::VertexChoice pick = lp::EnumeratePolygonOptimum(
      domain.vertices, costs.c_a * ctx.lambda_a, costs.c_d * ctx.lambda_d);
  return FromTransitTimes(ctx, costs, pick.vertex.x, pick.vertex.y,
                          PolicySource::kDelayVertex);
}

SlotPolicy CrossCheckLp(const SlotContext& ctx, const DelayCosts& costs) {
  ValidateCosts(costs);
  const CongestionRates cong = CongestionRatesFor(ctx);

  // Service-rate space: maximize the margin t with mu >= mu_cong + t inside
  // the envelope. Variables (mu_a, mu_d, t).
  lp::LinearProgram margin(3);
  margin.SetObjective(2, -1.0);
  for (const HalfPlane& h : ctx.envelope.half_planes()) {
    margin.AddConstraint({h.a_coeff, h.d_coeff, 0.0}, h.rhs);
  }
  margin.AddConstraint({-1.0, 0.0, 1.0}, -cong.mu_a);
  margin.AddConstraint({0.0, -1.0, 1.0}, -cong.mu_d);
  margin.AddConstraint({0.0, 0.0, 1.0}, 1.0);
  const lp::LpSolution feasible = lp::Solve(margin);
  if (feasible.status != lp::LpStatus::kOptimal ||
      feasible.x[2] <= kBoundaryTolerance) {
    ThrowNoPolicy();
  }

  const DelayPolicyDomain domain = BuildDelayPolicyDomain(ctx);
  lp::LinearProgram program(2);
  program.SetObjective(0, costs.c_a * ctx.lambda_a);
  program.SetObjective(1, costs.c_d * ctx.lambda_d);
  program.AddConstraint({1.0, 0.0}, domain.cap_a);
  program.AddConstraint({0.0, 1.0}, domain.cap_d);
  for (const HalfPlane& h : domain.half_planes) {
    program.AddConstraint({h.a_coeff, h.d_coeff}, h.rhs);
  }
  const lp::LpSolution solution = lp::Solve(program);
  if (solution.status != lp::LpStatus::kOptimal) ThrowNoPolicy();
  return FromTransitTimes(ctx, costs, solution.x[0], solution.x[1],
                          PolicySource::kLinearProgram);
}

SlotPolicy LeastViolationPolicy(const SlotContext& ctx,
                                const DelayCosts& costs) {
  ValidateCosts(costs);
  ValidateContext(ctx);
  const CapacityEnvelope& env = ctx.envelope;
  if (ctx.lambda_d >= env.max_departure_rate()) ThrowNoPolicy();
  double lo = ctx.lambda_a;
  double hi = env.Psi(ctx.lambda_d);
  if (!(lo < hi)) ThrowNoPolicy();

  // z_a / p_a falls and z_d(Phi(mu_a)) / p_d rises with mu_a.
  auto imbalance = [&](double mu_a) {
    const double za = StableTransitTime(ctx.lambda_a, mu_a, ctx.q_a);
    const double zd = StableTransitTime(ctx.lambda_d, env.Phi(mu_a), ctx.q_d);
    return za / ctx.p_a - zd / ctx.p_d;
  };
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::fmax(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (imbalance(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  SlotPolicy policy;
  policy.mu_a = 0.5 * (lo + hi);
  policy.mu_d = env.Phi(policy.mu_a);
  if (!(policy.mu_a > ctx.lambda_a && policy.mu_d > ctx.lambda_d)) {
    ThrowNoPolicy();
  }
  policy.z_a = StableTransitTime(ctx.lambda_a, policy.mu_a, ctx.q_a);
  policy.z_d = StableTransitTime(ctx.lambda_d, policy.mu_d, ctx.q_d);
  policy.expected_cost = DelayCost(ctx, costs, policy.z_a, policy.z_d);
  policy.source = PolicySource::kLeastViolation;
  return policy;
}

}  // namespace runway
