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

#ifndef RUNWAY_ENVELOPE_HPP_
#define RUNWAY_ENVELOPE_HPP_

#include <span>
#include <string>
#include <vector>

#include "runway/error.hpp"

namespace runway {

// (arrival service rate, departure service rate), aircraft per slot.
struct ControlPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const ControlPoint&, const ControlPoint&) = default;
};

// a_coeff * mu_a + d_coeff * mu_d <= rhs
struct HalfPlane {
  double a_coeff = 0.0;
  double d_coeff = 0.0;
  double rhs = 0.0;

  double Residual(double a, double d) const {
    return a_coeff * a + d_coeff * d - rhs;
  }
  // Signed Euclidean distance of (a, d) past the boundary line.
  double Excess(double a, double d) const;
};

// Half-plane through consecutive polyline vertices `prev` -> `next`, with the
// coefficients (y_j - y_{j-1}, x_{j-1} - x_j, x_{j-1} y_j - x_j y_{j-1}).
HalfPlane SegmentHalfPlane(const ControlPoint& prev, const ControlPoint& next);

// One half-plane per consecutive pair of `vertices`.
std::vector<HalfPlane> SegmentHalfPlanes(std::span<const ControlPoint> vertices);

// Operational throughput envelope of one runway configuration: a concave
// polyline from (mu_a_max, 0) to (0, mu_d_max) whose hypograph, together
// with the axes, is the convex set of achievable service-rate pairs.
//
// Instances are only produced by ValidateEnvelope and are immutable.
class CapacityEnvelope {
 public:
  const std::string& name() const { return name_; }
  std::span<const ControlPoint> points() const { return points_; }
  const std::vector<HalfPlane>& half_planes() const { return half_planes_; }

  // Number of segments J.
  std::size_t segments() const { return points_.size() - 1; }
  double max_arrival_rate() const { return points_.front().x; }
  double max_departure_rate() const { return points_.back().y; }

  // Maximal departure rate compatible with arrival rate `mu_a`.
  // Throws kOutOfRange outside [0, max_arrival_rate()].
  double Phi(double mu_a) const;
  // Maximal arrival rate compatible with departure rate `mu_d`; inverse of
  // Phi. Throws kOutOfRange outside [0, max_departure_rate()].
  double Psi(double mu_d) const;

  // Non-negative and inside every half-plane, up to `tolerance` in distance.
  bool Contains(double mu_a, double mu_d,
                double tolerance = kMembershipTolerance) const;

 private:
  friend CapacityEnvelope ValidateEnvelope(std::vector<ControlPoint>,
                                           std::string);
  CapacityEnvelope(std::vector<ControlPoint> points, std::string name);

  std::vector<ControlPoint> points_;
  std::vector<HalfPlane> half_planes_;
  std::string name_;
};

// Checks, in order: at least two points, strict ordering (x decreasing,
// y increasing), endpoints (y_0 == 0, x_J == 0), strict concavity.
// Failures carry the offending index.
CapacityEnvelope ValidateEnvelope(std::vector<ControlPoint> points,
                                  std::string name = "");

// Phi/Psi evaluated directly on a half-plane list.
double MinOverHalfPlanesForArrival(std::span<const HalfPlane> planes,
                                   double mu_a);
double MinOverHalfPlanesForDeparture(std::span<const HalfPlane> planes,
                                     double mu_d);

}  // namespace runway

#endif  // RUNWAY_ENVELOPE_HPP_
