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

#ifndef RUNWAY_QUEUEING_HPP_
#define RUNWAY_QUEUEING_HPP_

// Stationary single-server queue algebra built on Kingman's mean queue-length
// estimate. Rates are per slot, times are in slots.
//
// The combined variability coefficient is q = q_S + q_C - 2, where q_S and
// q_C are the quadratic ratios of momenta E(X^2)/E(X)^2 of the service and
// interarrival times.

#include <string_view>

namespace runway {

struct QueueParams {
  double lambda = 0.0;  // demand rate
  double mu = 1.0;      // service rate
  double q = 2.0;       // combined variability coefficient

  double utilization() const { return lambda / mu; }
};

enum class Regime { kSaturation, kCongestion, kSustainable };

std::string_view ToString(Regime regime);

// Expected time a client spends in the stable system (wait plus service):
//   z = (1/mu) * (1 + q*lambda / (2*(mu - lambda)))
// Throws kSaturatedQueue if mu <= lambda.
double StableTransitTime(double lambda, double mu, double q);
inline double StableTransitTime(const QueueParams& p) {
  return StableTransitTime(p.lambda, p.mu, p.q);
}

// Service rate that yields transit time `z` for demand `lambda`; the larger
// root of the quadratic obtained from StableTransitTime. Requires q > 0.
double ServiceRateForTransit(double lambda, double z, double q);

// Demand rate that yields transit time `z` at service rate `mu`. Requires
// z*mu >= 1 and q > 0.
double DemandRateForTransit(double mu, double z, double q);

// Long-run expected queue length rho^2/(1-rho) * (q_S + q_C - 2)/2.
double ExpectedQueueLength(double lambda, double mu, double q_service,
                           double q_arrival);

// Minimal service rate keeping the transit time at most `tolerance`.
double CongestionServiceRate(double lambda, double tolerance, double q);

// Largest demand rate a service rate `mu` sustains within `tolerance`.
// Inverse of CongestionServiceRate; requires mu >= 1/tolerance.
double CongestionDemandRate(double mu, double tolerance, double q);

// z == tolerance counts as sustainable, lambda == mu as saturation.
Regime ClassifyRegime(double lambda, double mu, double q, double tolerance);

}  // namespace runway

#endif  // RUNWAY_QUEUEING_HPP_
