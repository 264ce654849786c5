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

#include "runway/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "runway/queueing.hpp"

namespace runway {
namespace {

bool InsideAll(std::span<const HalfPlane> planes, double x, double y,
               double tolerance) {
  return std::all_of(planes.begin(), planes.end(), [&](const HalfPlane& h) {
    return h.Excess(x, y) <= tolerance;
  });
}

bool Coincident(const ControlPoint& a, const ControlPoint& b) {
  return std::fabs(a.x - b.x) <= kBoundaryTolerance &&
         std::fabs(a.y - b.y) <= kBoundaryTolerance;
}

void PushCollapsed(std::vector<ControlPoint>& out, const ControlPoint& p) {
  if (out.empty() || !Coincident(out.back(), p)) out.push_back(p);
}

}  // namespace

void ValidateContext(const SlotContext& ctx) {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  auto non_negative = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!positive(ctx.q_a) || !positive(ctx.q_d)) {
    throw Error(ErrorCode::kInvalidInput, "variability coefficients must be > 0");
  }
  if (!positive(ctx.p_a) || !positive(ctx.p_d)) {
    throw Error(ErrorCode::kInvalidInput, "delay tolerances must be > 0");
  }
  if (!non_negative(ctx.lambda_a) || !non_negative(ctx.lambda_d)) {
    throw Error(ErrorCode::kInvalidInput, "demand rates must be >= 0");
  }
}

CongestionRates CongestionRatesFor(const SlotContext& ctx) {
  ValidateContext(ctx);
  return {CongestionServiceRate(ctx.lambda_a, ctx.p_a, ctx.q_a),
          CongestionServiceRate(ctx.lambda_d, ctx.p_d, ctx.q_d)};
}

double SustainabilityMargin(const SlotContext& ctx) {
  const CongestionRates cong = CongestionRatesFor(ctx);
  const CapacityEnvelope& env = ctx.envelope;
  if (cong.mu_d > env.max_departure_rate() + kBoundaryTolerance) {
    return -std::numeric_limits<double>::infinity();
  }
  return env.Psi(std::fmin(cong.mu_d, env.max_departure_rate())) - cong.mu_a;
}

bool SustainableExists(const SlotContext& ctx) {
  return SustainabilityMargin(ctx) > kBoundaryTolerance;
}

bool ClippedEnvelope::Contains(double x, double y, double tolerance) const {
  if (x < corner.x - tolerance || y < corner.y - tolerance) return false;
  return InsideAll(HalfPlanes(), x, y, tolerance);
}

ClippedEnvelope ClipEnvelope(const CapacityEnvelope& env, double min_x,
                             double min_y) {
  if (!(min_x >= 0.0) || !(min_y >= 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "clip corner must be non-negative");
  }
  if (min_y > env.max_departure_rate() || min_x > env.max_arrival_rate()) {
    throw Error(ErrorCode::kEmptyDomain, "clip corner lies outside the envelope");
  }
  const double start_x = env.Psi(min_y);
  if (!(min_x < start_x - kBoundaryTolerance)) {
    throw Error(ErrorCode::kEmptyDomain,
                "clip corner (" + std::to_string(min_x) + ", " +
                    std::to_string(min_y) + ") leaves an empty region");
  }
  ClippedEnvelope clip;
  clip.corner = {min_x, min_y};
  PushCollapsed(clip.points, {start_x, min_y});
  for (const ControlPoint& p : env.points()) {
    if (p.x > min_x && p.y > min_y) PushCollapsed(clip.points, p);
  }
  PushCollapsed(clip.points, {min_x, env.Phi(min_x)});
  return clip;
}

bool SustainablePolicyDomain::Contains(double mu_a, double mu_d,
                                       double tolerance) const {
  return clipped.Contains(mu_a, mu_d, tolerance);
}

SustainablePolicyDomain BuildSustainablePolicyDomain(const SlotContext& ctx) {
  if (!SustainableExists(ctx)) {
    throw Error(ErrorCode::kNoSustainablePolicy,
                "no service policy keeps both transit times within tolerance");
  }
  const CongestionRates cong = CongestionRatesFor(ctx);
  SustainablePolicyDomain domain;
  try {
    domain.clipped = ClipEnvelope(ctx.envelope, cong.mu_a, cong.mu_d);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptyDomain) throw;
    throw Error(ErrorCode::kNoSustainablePolicy, e.what());
  }
  domain.half_planes = domain.clipped.HalfPlanes();
  return domain;
}

bool DelayPolicyDomain::Contains(double z_a, double z_d,
                                 double tolerance) const {
  if (z_a > cap_a + tolerance || z_d > cap_d + tolerance) return false;
  if (z_a < -tolerance || z_d < -tolerance) return false;
  return InsideAll(half_planes, z_a, z_d, tolerance);
}

DelayPolicyDomain BuildDelayPolicyDomain(const SlotContext& ctx) {
  const SustainablePolicyDomain policies = BuildSustainablePolicyDomain(ctx);
  DelayPolicyDomain domain;
  domain.cap_a = ctx.p_a;
  domain.cap_d = ctx.p_d;
  for (const ControlPoint& p : policies.clipped.points) {
    domain.vertices.push_back(
        {StableTransitTime(ctx.lambda_a, p.x, ctx.q_a),
         StableTransitTime(ctx.lambda_d, p.y, ctx.q_d)});
  }
  domain.vertices.front().y = ctx.p_d;
  domain.vertices.back().x = ctx.p_a;
  domain.half_planes = SegmentHalfPlanes(domain.vertices);
  return domain;
}

bool DemandDomain::Contains(double lambda_a, double lambda_d,
                            double tolerance) const {
  if (lambda_a < -tolerance || lambda_d < -tolerance) return false;
  return InsideAll(half_planes, lambda_a, lambda_d, tolerance);
}

DemandDomain BuildSecondaryDemandDomain(const CapacityEnvelope& env, double q_a,
                                        double q_d, double p_a, double p_d) {
  SlotContext probe{env, q_a, q_d, p_a, p_d, 0.0, 0.0};
  ValidateContext(probe);
  DemandDomain domain;
  try {
    domain.service_points = ClipEnvelope(env, 1.0 / p_a, 1.0 / p_d);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptyDomain) throw;
    throw Error(ErrorCode::kInfeasibleTolerance,
                "delay tolerances cannot be met by configuration '" +
                    env.name() + "': " + e.what());
  }
  for (const ControlPoint& p : domain.service_points.points) {
    domain.vertices.push_back({CongestionDemandRate(p.x, p_a, q_a),
                               CongestionDemandRate(p.y, p_d, q_d)});
  }
  domain.vertices.front().y = 0.0;
  domain.vertices.back().x = 0.0;
  domain.half_planes = SegmentHalfPlanes(domain.vertices);
  return domain;
}

}  // namespace runway
