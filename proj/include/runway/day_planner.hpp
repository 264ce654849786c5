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

#ifndef RUNWAY_DAY_PLANNER_HPP_
#define RUNWAY_DAY_PLANNER_HPP_

// Day-level flight slot transfers. Flights that a slot cannot serve
// sustainably are moved to the following slot; the transfer LP finds the
// cheapest (possibly fractional) transfers that put every slot's adjusted
// demand inside its secondary demand domain. Each slot's service policy is
// then chosen for the adjusted demand.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "runway/domains.hpp"
#include "runway/lp.hpp"
#include "runway/slot_optimizer.hpp"

namespace runway {

struct RunwayConfiguration {
  CapacityEnvelope envelope;
  double q_a = 2.0;
  double q_d = 2.0;
};

using ConfigurationSet = std::map<std::string, RunwayConfiguration, std::less<>>;

struct SlotDemand {
  double lambda_a = 0.0;
  double lambda_d = 0.0;
  std::string config_id;
};

struct DaySchedule {
  std::vector<SlotDemand> slots;
  double p_a = 1.0;
  double p_d = 1.0;
};

// Transfer LP plus the bookkeeping needed to read its solution. Variables
// are s_a[1..N-1] followed by s_d[1..N-1]; transfers out of the last slot
// are fixed at zero and never become variables.
struct TransferLp {
  lp::LinearProgram program{0};
  std::size_t slots = 0;
  // Demand domain of each slot (shared per configuration).
  std::map<std::string, DemandDomain, std::less<>> domains;

  std::size_t ArrivalVar(std::size_t slot) const { return slot; }
  std::size_t DepartureVar(std::size_t slot) const { return slots - 1 + slot; }
};

// Slot indices are zero-based. Throws kInfeasibleTolerance if some slot's
// configuration cannot meet the tolerances, kValidationError if a config id
// does not resolve.
TransferLp BuildTransferLp(const DaySchedule& day,
                           const ConfigurationSet& configs,
                           const DelayCosts& transfer_costs);

struct TransferPlan {
  std::vector<double> s_a;  // length N, s_a.back() == 0
  std::vector<double> s_d;
  std::vector<double> lambda2_a;  // secondary schedule
  std::vector<double> lambda2_d;
  double total_cost = 0.0;
};

struct DayPlan {
  TransferPlan transfers;
  std::vector<SlotPolicy> policies;
  std::vector<long long> rounded_s_a;  // reported only, never enforced
  std::vector<long long> rounded_s_d;
  double total_delay_cost = 0.0;
  double total_transfer_cost = 0.0;
};

// Throws kInfeasibleSchedule if no transfer plan reaches sustainability.
DayPlan PlanDay(const DaySchedule& day, const ConfigurationSet& configs,
                const DelayCosts& transfer_costs,
                const DelayCosts& delay_costs);
inline DayPlan PlanDay(const DaySchedule& day, const ConfigurationSet& configs,
                       const DelayCosts& costs) {
  return PlanDay(day, configs, costs, costs);
}

// When (lambda_a, lambda_d) of `ctx` matches a vertex of `domain` within
// 1e-9, the only sustainable policy is the matching clipped service point
// with both transit times at tolerance. Throws kNotAVertex otherwise.
SlotPolicy VertexSlotPolicy(const SlotContext& ctx, const DemandDomain& domain,
                            const DelayCosts& costs);

}  // namespace runway

#endif  // RUNWAY_DAY_PLANNER_HPP_
