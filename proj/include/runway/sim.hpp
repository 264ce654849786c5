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

#ifndef RUNWAY_SIM_HPP_
#define RUNWAY_SIM_HPP_

// Discrete-event FIFO single-server queue, used to check the closed-form
// transit times empirically.

#include <cstddef>
#include <cstdint>
#include <random>

namespace runway::sim {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Interarrival and service laws, each given by mean and quadratic ratio of
// momenta q = E(X^2)/E(X)^2 >= 1. A mean interarrival of +inf disables
// arrivals.
struct ArrivalServiceModel {
  double mean_interarrival = 1.0;
  double mean_service = 0.5;
  double q_arrival = 2.0;  // q_C
  double q_service = 2.0;  // q_S

  static ArrivalServiceModel FromRates(double lambda, double mu,
                                       double q_arrival, double q_service);
  double arrival_rate() const { return 1.0 / mean_interarrival; }
  double service_rate() const { return 1.0 / mean_service; }
};

// Positive variate with a given mean and quadratic ratio q: gamma with shape
// 1/(q-1) for q > 1, the constant `mean` for q == 1.
class MomentMatchedSampler {
 public:
  MomentMatchedSampler(double mean, double q);
  double operator()(std::mt19937_64& rng);

 private:
  double mean_;
  bool constant_;
  std::gamma_distribution<double> gamma_;
};

struct SimResult {
  double mean_transit_time = 0.0;
  double mean_waiting_time = 0.0;
  double mean_queue_length = 0.0;  // time average of the waiting line
  std::size_t arrivals_served = 0;
  std::uint64_t seed = 0;
};

// Lindley recursion W_{k+1} = max(0, W_k + S_k - C_k). Statistics skip the
// first `warmup` arrivals. Throws kUnstableSystem if lambda >= mu and
// kInvalidVariability if a q is below 1.
SimResult SimulateQueue(const ArrivalServiceModel& model,
                        std::size_t n_arrivals, std::size_t warmup,
                        std::uint64_t seed);

struct KingmanComparison {
  double simulated_z = 0.0;
  double formula_z = 0.0;
  double relative_gap = 0.0;  // |simulated - formula| / formula
  SimResult simulation;
};

KingmanComparison CompareToKingman(const ArrivalServiceModel& model,
                                   std::size_t n_arrivals, std::size_t warmup,
                                   std::uint64_t seed);

}  // namespace runway::sim

#endif  // RUNWAY_SIM_HPP_
