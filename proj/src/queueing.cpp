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

#include "runway/queueing.hpp"

#include <cmath>
#include <string>

#include "runway/error.hpp"

namespace runway {
namespace {

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidInput, what);
}

bool Finite(double v) { return std::isfinite(v); }

// Larger root mu of  z*mu^2 - (1 + lambda*z)*mu + lambda*(1 - q/2) = 0.
double InvertTransit(double lambda, double z, double q) {
  const double lz = lambda * z;
  const double disc = 1.0 + lz * lz + 2.0 * lz * (q - 1.0);
  return (1.0 + lz + std::sqrt(disc)) / (2.0 * z);
}

}  // namespace

std::string_view ToString(Regime regime) {
  switch (regime) {
    case Regime::kSaturation: return "saturation";
    case Regime::kCongestion: return "congestion";
    case Regime::kSustainable: return "sustainable";
  }
  return "unknown";
}

double StableTransitTime(double lambda, double mu, double q) {
  Require(Finite(lambda) && lambda >= 0.0, "demand rate must be >= 0");
  Require(Finite(mu) && mu > 0.0, "service rate must be > 0");
  Require(Finite(q) && q >= 0.0, "variability coefficient must be >= 0");
  if (mu <= lambda) {
    throw Error(ErrorCode::kSaturatedQueue,
                "service rate " + std::to_string(mu) +
                    " does not exceed demand rate " + std::to_string(lambda));
  }
  return (1.0 + q * lambda / (2.0 * (mu - lambda))) / mu;
}

double ServiceRateForTransit(double lambda, double z, double q) {
  Require(Finite(lambda) && lambda >= 0.0, "demand rate must be >= 0");
  Require(Finite(z) && z > 0.0, "transit time must be > 0");
  Require(Finite(q) && q > 0.0, "variability coefficient must be > 0");
  return InvertTransit(lambda, z, q);
}

double DemandRateForTransit(double mu, double z, double q) {
  Require(Finite(mu) && mu > 0.0, "service rate must be > 0");
  Require(Finite(z) && z > 0.0, "transit time must be > 0");
  Require(Finite(q) && q > 0.0, "variability coefficient must be > 0");
  const double excess = z * mu - 1.0;
  if (excess < -kBoundaryTolerance) {
    throw Error(ErrorCode::kInvalidInput,
                "transit time is below the pure service time 1/mu");
  }
  if (excess <= 0.0) return 0.0;
  return mu * 2.0 * excess / (q + 2.0 * excess);
}

double ExpectedQueueLength(double lambda, double mu, double q_service,
                           double q_arrival) {
  Require(Finite(lambda) && lambda >= 0.0, "demand rate must be >= 0");
  Require(Finite(mu) && mu > 0.0, "service rate must be > 0");
  Require(Finite(q_service) && q_service >= 1.0, "q_S must be >= 1");
  Require(Finite(q_arrival) && q_arrival >= 1.0, "q_C must be >= 1");
  if (mu <= lambda) {
    throw Error(ErrorCode::kSaturatedQueue, "queue is saturated");
  }
  const double rho = lambda / mu;
  return rho * rho / (1.0 - rho) * (q_service + q_arrival - 2.0) / 2.0;
}

double CongestionServiceRate(double lambda, double tolerance, double q) {
  Require(Finite(tolerance) && tolerance > 0.0, "delay tolerance must be > 0");
  return ServiceRateForTransit(lambda, tolerance, q);
}

double CongestionDemandRate(double mu, double tolerance, double q) {
  Require(Finite(tolerance) && tolerance > 0.0, "delay tolerance must be > 0");
  Require(Finite(mu) && mu > 0.0, "service rate must be > 0");
  if (mu * tolerance < 1.0 - kBoundaryTolerance) {
    throw Error(ErrorCode::kInvalidInput,
                "service rate is below 1/tolerance; no demand is sustainable");
  }
  return DemandRateForTransit(mu, tolerance, q);
}

Regime ClassifyRegime(double lambda, double mu, double q, double tolerance) {
  Require(Finite(mu) && mu > 0.0, "service rate must be > 0");
  Require(Finite(tolerance) && tolerance > 0.0, "delay tolerance must be > 0");
  if (lambda >= mu) return Regime::kSaturation;
  const double z = StableTransitTime(lambda, mu, q);
  // Relative slack: the boundary round-trip z(lambda_cong(mu)) == p holds
  // only up to a few ulps of p.
  if (z > tolerance + kBoundaryTolerance * std::fmax(1.0, tolerance)) {
    return Regime::kCongestion;
  }
  return Regime::kSustainable;
}

}  // namespace runway
