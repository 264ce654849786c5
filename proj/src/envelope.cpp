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

#include "runway/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace runway {
namespace {

std::string PointText(std::size_t i, const ControlPoint& p) {
  return "control point " + std::to_string(i) + " (" + std::to_string(p.x) +
         ", " + std::to_string(p.y) + ")";
}

// Within kBoundaryTolerance of an endpoint counts as the endpoint.
double ClampToRange(double v, double hi, const char* what) {
  if (!(v >= -kBoundaryTolerance && v <= hi + kBoundaryTolerance)) {
    throw Error(ErrorCode::kOutOfRange,
                std::string(what) + " " + std::to_string(v) +
                    " outside [0, " + std::to_string(hi) + "]");
  }
  return std::clamp(v, 0.0, hi);
}

}  // namespace

double HalfPlane::Excess(double a, double d) const {
  return Residual(a, d) / std::hypot(a_coeff, d_coeff);
}

HalfPlane SegmentHalfPlane(const ControlPoint& prev, const ControlPoint& next) {
  return HalfPlane{next.y - prev.y, prev.x - next.x,
                   prev.x * next.y - next.x * prev.y};
}

std::vector<HalfPlane> SegmentHalfPlanes(
    std::span<const ControlPoint> vertices) {
  std::vector<HalfPlane> planes;
  for (std::size_t j = 1; j < vertices.size(); ++j) {
    planes.push_back(SegmentHalfPlane(vertices[j - 1], vertices[j]));
  }
  return planes;
}

double MinOverHalfPlanesForArrival(std::span<const HalfPlane> planes,
                                   double mu_a) {
  double best = std::numeric_limits<double>::infinity();
  for (const HalfPlane& h : planes) {
    best = std::min(best, (h.rhs - mu_a * h.a_coeff) / h.d_coeff);
  }
  return best;
}

double MinOverHalfPlanesForDeparture(std::span<const HalfPlane> planes,
                                     double mu_d) {
  double best = std::numeric_limits<double>::infinity();
  for (const HalfPlane& h : planes) {
    best = std::min(best, (h.rhs - mu_d * h.d_coeff) / h.a_coeff);
  }
  return best;
}

CapacityEnvelope::CapacityEnvelope(std::vector<ControlPoint> points,
                                   std::string name)
    : points_(std::move(points)),
      half_planes_(SegmentHalfPlanes(points_)),
      name_(std::move(name)) {}

double CapacityEnvelope::Phi(double mu_a) const {
  mu_a = ClampToRange(mu_a, max_arrival_rate(), "arrival rate");
  // Exact at the vertices, where the min formula only matches up to rounding.
  for (const ControlPoint& p : points_) {
    if (p.x == mu_a) return p.y;
  }
  return std::max(0.0, MinOverHalfPlanesForArrival(half_planes_, mu_a));
}

double CapacityEnvelope::Psi(double mu_d) const {
  mu_d = ClampToRange(mu_d, max_departure_rate(), "departure rate");
  for (const ControlPoint& p : points_) {
    if (p.y == mu_d) return p.x;
  }
  return std::max(0.0, MinOverHalfPlanesForDeparture(half_planes_, mu_d));
}

bool CapacityEnvelope::Contains(double mu_a, double mu_d,
                                double tolerance) const {
  if (mu_a < -tolerance || mu_d < -tolerance) return false;
  return std::all_of(half_planes_.begin(), half_planes_.end(),
                     [&](const HalfPlane& h) {
                       return h.Excess(mu_a, mu_d) <= tolerance;
                     });
}

CapacityEnvelope ValidateEnvelope(std::vector<ControlPoint> points,
                                  std::string name) {
  if (points.size() < 2) {
    throw Error(ErrorCode::kInvalidInput,
                "an envelope needs at least two control points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const ControlPoint& p = points[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.x < 0.0 || p.y < 0.0) {
      throw Error(ErrorCode::kInvalidInput,
                  PointText(i, p) + " must be finite and non-negative", i);
    }
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].x < points[i - 1].x) || !(points[i].y > points[i - 1].y)) {
      throw Error(ErrorCode::kOrderingViolation,
                  PointText(i, points[i]) +
                      " breaks the order (x decreasing, y increasing)",
                  i);
    }
  }
  if (points.front().y != 0.0) {
    throw Error(ErrorCode::kEndpointViolation,
                PointText(0, points.front()) + " must lie on the x axis", 0);
  }
  if (points.back().x != 0.0) {
    const std::size_t last = points.size() - 1;
    throw Error(ErrorCode::kEndpointViolation,
                PointText(last, points.back()) + " must lie on the y axis",
                last);
  }
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    const double ux = points[i].x - points[i - 1].x;
    const double uy = points[i].y - points[i - 1].y;
    const double vx = points[i + 1].x - points[i].x;
    const double vy = points[i + 1].y - points[i].y;
    if (!(ux * vy - uy * vx > 0.0)) {
      throw Error(ErrorCode::kConvexityViolation,
                  PointText(i, points[i]) + " makes the envelope non-concave",
                  i);
    }
  }
  return CapacityEnvelope(std::move(points), std::move(name));
}

}  // namespace runway
