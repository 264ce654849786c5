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

#include <algorithm>
#include <cmath>
#include <string>

namespace runway {
namespace {

const RunwayConfiguration& Resolve(const ConfigurationSet& configs,
                                   const std::string& id) {
  const auto it = configs.find(id);
  if (it == configs.end()) {
    throw Error(ErrorCode::kValidationError,
                "unknown runway configuration '" + id + "'");
  }
  return it->second;
}

SlotContext ContextFor(const RunwayConfiguration& config,
                       const DaySchedule& day, double lambda_a,
                       double lambda_d) {
  return SlotContext{config.envelope, config.q_a, config.q_d, day.p_a,
                     day.p_d,         lambda_a,   lambda_d};
}

}  // namespace

TransferLp BuildTransferLp(const DaySchedule& day,
                           const ConfigurationSet& configs,
                           const DelayCosts& transfer_costs) {
  ValidateCosts(transfer_costs);
  const std::size_t n = day.slots.size();
  if (n == 0) throw Error(ErrorCode::kInvalidInput, "a day needs at least one slot");

  TransferLp out;
  out.slots = n;
  out.program = lp::LinearProgram(2 * (n - 1));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    out.program.SetObjective(out.ArrivalVar(i), transfer_costs.c_a);
    out.program.SetObjective(out.DepartureVar(i), transfer_costs.c_d);
  }

  for (std::size_t i = 0; i < n; ++i) {
    const SlotDemand& slot = day.slots[i];
    if (!(slot.lambda_a >= 0.0 && slot.lambda_d >= 0.0)) {
      throw Error(ErrorCode::kInvalidInput,
                  "slot " + std::to_string(i) + " has negative demand");
    }
    const RunwayConfiguration& config = Resolve(configs, slot.config_id);
    auto found = out.domains.find(slot.config_id);
    if (found == out.domains.end()) {
      found = out.domains
                  .emplace(slot.config_id,
                           BuildSecondaryDemandDomain(config.envelope, config.q_a,
                                                      config.q_d, day.p_a,
                                                      day.p_d))
                  .first;
    }
    const DemandDomain& domain = found->second;

    // lambda2_i = lambda_i + s_{i-1} - s_i
    auto row = [&](double ca, double cd) {
      std::vector<double> coeffs(out.program.variables(), 0.0);
      if (i > 0) {
        coeffs[out.ArrivalVar(i - 1)] += ca;
        coeffs[out.DepartureVar(i - 1)] += cd;
      }
      if (i + 1 < n) {
        coeffs[out.ArrivalVar(i)] -= ca;
        coeffs[out.DepartureVar(i)] -= cd;
      }
      return coeffs;
    };
    for (const HalfPlane& h : domain.half_planes) {
      out.program.AddConstraint(
          row(h.a_coeff, h.d_coeff),
          h.rhs - h.a_coeff * slot.lambda_a - h.d_coeff * slot.lambda_d);
    }
    if (i + 1 < n) {
      out.program.AddConstraint(row(-1.0, 0.0), slot.lambda_a);
      out.program.AddConstraint(row(0.0, -1.0), slot.lambda_d);
    }
  }
  return out;
}

SlotPolicy VertexSlotPolicy(const SlotContext& ctx, const DemandDomain& domain,
                            const DelayCosts& costs) {
  constexpr double kMatch = 1e-9;
  for (std::size_t j = 0; j < domain.vertices.size(); ++j) {
    const ControlPoint& v = domain.vertices[j];
    if (std::fabs(v.x - ctx.lambda_a) <= kMatch &&
        std::fabs(v.y - ctx.lambda_d) <= kMatch) {
      const ControlPoint& service = domain.service_points.points[j];
      SlotPolicy policy;
      policy.mu_a = service.x;
      policy.mu_d = service.y;
      policy.z_a = ctx.p_a;
      policy.z_d = ctx.p_d;
      policy.expected_cost = DelayCost(ctx, costs, ctx.p_a, ctx.p_d);
      policy.source = PolicySource::kDemandVertex;
      return policy;
    }
  }
  throw Error(ErrorCode::kNotAVertex,
              "demand pair is not a vertex of the secondary demand domain");
}

DayPlan PlanDay(const DaySchedule& day, const ConfigurationSet& configs,
                const DelayCosts& transfer_costs,
                const DelayCosts& delay_costs) {
  ValidateCosts(delay_costs);
  const TransferLp transfer = BuildTransferLp(day, configs, transfer_costs);
  const lp::LpSolution solution = lp::Solve(transfer.program);
  if (solution.status != lp::LpStatus::kOptimal) {
    throw Error(ErrorCode::kInfeasibleSchedule,
                "no flight slot transfer makes every slot sustainable");
  }

  const std::size_t n = transfer.slots;
  DayPlan plan;
  TransferPlan& t = plan.transfers;
  t.s_a.assign(n, 0.0);
  t.s_d.assign(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    t.s_a[i] = solution.x[transfer.ArrivalVar(i)];
    t.s_d[i] = solution.x[transfer.DepartureVar(i)];
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double in_a = i > 0 ? t.s_a[i - 1] : 0.0;
    const double in_d = i > 0 ? t.s_d[i - 1] : 0.0;
    t.lambda2_a.push_back(
        std::max(0.0, day.slots[i].lambda_a + in_a - t.s_a[i]));
    t.lambda2_d.push_back(
        std::max(0.0, day.slots[i].lambda_d + in_d - t.s_d[i]));
    plan.rounded_s_a.push_back(std::llround(t.s_a[i]));
    plan.rounded_s_d.push_back(std::llround(t.s_d[i]));
  }
  t.total_cost = solution.objective_value;
  plan.total_transfer_cost = solution.objective_value;

  // Slots are independent once the secondary schedule is fixed.
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& id = day.slots[i].config_id;
    const SlotContext ctx = ContextFor(Resolve(configs, id), day,
                                       t.lambda2_a[i], t.lambda2_d[i]);
    const DemandDomain& domain = transfer.domains.find(id)->second;
    SlotPolicy policy;
    try {
      policy = VertexSlotPolicy(ctx, domain, delay_costs);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNotAVertex) throw;
      policy = SustainableExists(ctx) ? OptimizeSlot(ctx, delay_costs)
                                      : LeastViolationPolicy(ctx, delay_costs);
    }
    plan.total_delay_cost += policy.expected_cost;
    plan.policies.push_back(policy);
  }
  return plan;
}

}  // namespace runway
