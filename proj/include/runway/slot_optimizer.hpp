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

#ifndef RUNWAY_SLOT_OPTIMIZER_HPP_
#define RUNWAY_SLOT_OPTIMIZER_HPP_

#include <cstddef>
#include <string_view>

#include "runway/domains.hpp"

namespace runway {

// Cost of one slot of delay for one landing (c_a) or takeoff (c_d) flight.
struct DelayCosts {
  double c_a = 1.0;
  double c_d = 1.0;
};

void ValidateCosts(const DelayCosts& costs);

enum class PolicySource {
  kDelayVertex,      // cheapest vertex of the delay-policy domain
  kZeroDemand,       // no demand: minimal z_a + z_d vertex, cost 0
  kLinearProgram,    // simplex on the linearized delay domain
  kDemandVertex,     // demand sits on a demand-domain vertex; unique policy
  kLeastViolation,   // no interior sustainable policy; balanced fallback
};

std::string_view ToString(PolicySource source);

struct SlotPolicy {
  double z_a = 0.0;
  double z_d = 0.0;
  double mu_a = 0.0;
  double mu_d = 0.0;
  double expected_cost = 0.0;
  PolicySource source = PolicySource::kDelayVertex;
};

// c_a * lambda_a * z_a + c_d * lambda_d * z_d
double DelayCost(const SlotContext& ctx, const DelayCosts& costs, double z_a,
                 double z_d);

// Picks the delay-policy vertex with the smallest expected delay cost and
// maps it back to service rates. The corner (p_a, p_d) is never a
// candidate. Throws kNoSustainablePolicy.
SlotPolicy OptimizeSlot(const SlotContext& ctx, const DelayCosts& costs);

// Same problem through the simplex: a margin LP in service-rate space
// decides existence, then the linearized delay-space LP is solved.
SlotPolicy CrossCheckLp(const SlotContext& ctx, const DelayCosts& costs);

// Envelope point minimizing max(z_a / p_a, z_d / p_d). Used when the demand
// pair sits on (or, through linearization error, just past) the sustainable
// boundary. Throws kNoSustainablePolicy when the demand saturates every
// envelope policy.
SlotPolicy LeastViolationPolicy(const SlotContext& ctx, const DelayCosts& costs);

}  // namespace runway

#endif  // RUNWAY_SLOT_OPTIMIZER_HPP_
