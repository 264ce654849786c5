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

#ifndef RUNWAY_DOMAINS_HPP_
#define RUNWAY_DOMAINS_HPP_

// Regions derived from a capacity envelope once delay tolerances are fixed:
//
//  * sustainable-policy domain: service-rate pairs on or under the envelope
//    that keep both transit times within tolerance;
//  * delay-policy domain: the same region mapped to transit-time space;
//  * secondary demand domain: demand-rate pairs admitting some sustainable
//    policy.
//
// Each is carried as an ordered polyline of control points plus the
// half-planes through consecutive control points.

#include <span>
#include <vector>

#include "runway/envelope.hpp"

namespace runway {

struct SlotContext {
  CapacityEnvelope envelope;
  double q_a = 2.0;
  double q_d = 2.0;
  double p_a = 1.0;
  double p_d = 1.0;
  double lambda_a = 0.0;
  double lambda_d = 0.0;
};

// Throws kInvalidInput unless q, p > 0 and lambda >= 0.
void ValidateContext(const SlotContext& ctx);

struct CongestionRates {
  double mu_a = 0.0;
  double mu_d = 0.0;
};

CongestionRates CongestionRatesFor(const SlotContext& ctx);

// Psi(mu_cong_d) - mu_cong_a; -inf when mu_cong_d exceeds the envelope.
// Zero means the sustainable region has collapsed to a single policy.
double SustainabilityMargin(const SlotContext& ctx);

// SustainabilityMargin(ctx) > kBoundaryTolerance.
bool SustainableExists(const SlotContext& ctx);

// The envelope restricted to x >= corner.x and y >= corner.y. `points` runs
// from (Psi(corner.y), corner.y) to (corner.x, Phi(corner.x)); control
// points that fall outside the corner quadrant are replaced by these two
// endpoints and coincident repeats are collapsed.
struct ClippedEnvelope {
  ControlPoint corner;
  std::vector<ControlPoint> points;

  std::vector<HalfPlane> HalfPlanes() const { return SegmentHalfPlanes(points); }
  bool Contains(double x, double y,
                double tolerance = kMembershipTolerance) const;
};

// Throws kEmptyDomain if min_x >= Psi(min_y) (or min_y exceeds the envelope).
ClippedEnvelope ClipEnvelope(const CapacityEnvelope& env, double min_x,
                             double min_y);

struct SustainablePolicyDomain {
  ClippedEnvelope clipped;  // corner = (mu_cong_a, mu_cong_d)
  std::vector<HalfPlane> half_planes;

  bool Contains(double mu_a, double mu_d,
                double tolerance = kMembershipTolerance) const;
};

// Throws kNoSustainablePolicy when no sustainable policy exists.
SustainablePolicyDomain BuildSustainablePolicyDomain(const SlotContext& ctx);

// Transit-time image of the sustainable-policy vertices. The domain is the
// region above the polyline through `vertices` and below the caps; the
// corner images are pinned exactly to the caps.
struct DelayPolicyDomain {
  std::vector<ControlPoint> vertices;  // (z_a, z_d), z_a increasing
  double cap_a = 0.0;
  double cap_d = 0.0;
  std::vector<HalfPlane> half_planes;

  bool Contains(double z_a, double z_d,
                double tolerance = kMembershipTolerance) const;
};

DelayPolicyDomain BuildDelayPolicyDomain(const SlotContext& ctx);

// Demand-rate image (via the congestion demand rates) of the envelope
// clipped at (1/p_a, 1/p_d). The first vertex lies on the lambda_a axis and
// the last on the lambda_d axis.
struct DemandDomain {
  ClippedEnvelope service_points;      // clip at (1/p_a, 1/p_d)
  std::vector<ControlPoint> vertices;  // (lambda_a, lambda_d)
  std::vector<HalfPlane> half_planes;

  bool Contains(double lambda_a, double lambda_d,
                double tolerance = kMembershipTolerance) const;
};

// Throws kInfeasibleTolerance when the tolerances cannot be met by any
// policy of the envelope.
DemandDomain BuildSecondaryDemandDomain(const CapacityEnvelope& env, double q_a,
                                        double q_d, double p_a, double p_d);

}  // namespace runway

#endif  // RUNWAY_DOMAINS_HPP_
