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

#include "runway/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "runway/error.hpp"
#include "runway/queueing.hpp"

namespace runway::sim {
namespace {

void CheckModel(const ArrivalServiceModel& model) {
  if (!(model.q_arrival >= 1.0) || !(model.q_service >= 1.0)) {
    throw Error(ErrorCode::kInvalidVariability,
                "quadratic ratios of momenta must be >= 1");
  }
  if (!(model.mean_service > 0.0) || !std::isfinite(model.mean_service) ||
      !(model.mean_interarrival > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "means must be positive");
  }
  if (model.mean_interarrival <= model.mean_service) {
    throw Error(ErrorCode::kUnstableSystem,
                "demand rate must stay below the service rate");
  }
}

// Running mean; stays exact for constant sequences.
class Mean {
 public:
  void Add(double v) {
    ++count_;
    value_ += (v - value_) / static_cast<double>(count_);
  }
  double value() const { return value_; }

 private:
  double value_ = 0.0;
  std::size_t count_ = 0;
};

}  // namespace

ArrivalServiceModel ArrivalServiceModel::FromRates(double lambda, double mu,
                                                   double q_arrival,
                                                   double q_service) {
  if (!(lambda >= 0.0) || !(mu > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "rates must satisfy lambda >= 0, mu > 0");
  }
  const double interarrival =
      lambda == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / lambda;
  return {interarrival, 1.0 / mu, q_arrival, q_service};
}

MomentMatchedSampler::MomentMatchedSampler(double mean, double q)
    : mean_(mean),
      constant_(q == 1.0),
      gamma_(q > 1.0 ? 1.0 / (q - 1.0) : 1.0,
             q > 1.0 ? mean * (q - 1.0) : 1.0) {
  if (!(q >= 1.0)) {
    throw Error(ErrorCode::kInvalidVariability,
                "quadratic ratio of momenta must be >= 1");
  }
}

double MomentMatchedSampler::operator()(std::mt19937_64& rng) {
  return constant_ ? mean_ : gamma_(rng);
}

SimResult SimulateQueue(const ArrivalServiceModel& model,
                        std::size_t n_arrivals, std::size_t warmup,
                        std::uint64_t seed) {
  CheckModel(model);
  if (n_arrivals == 0) {
    throw Error(ErrorCode::kInvalidInput, "need at least one arrival");
  }
  if (warmup >= n_arrivals) {
    throw Error(ErrorCode::kInvalidInput, "warmup must leave some arrivals");
  }
  SimResult result;
  result.arrivals_served = n_arrivals;
  result.seed = seed;
  if (!std::isfinite(model.mean_interarrival)) {
    // No arrivals: a lone client never waits.
    result.mean_transit_time = model.mean_service;
    return result;
  }

  std::mt19937_64 rng(seed);
  MomentMatchedSampler interarrival(model.mean_interarrival, model.q_arrival);
  MomentMatchedSampler service(model.mean_service, model.q_service);

  // Arrival epochs and waits; the waiting line's time average is taken over
  // [first measured arrival, last arrival].
  std::vector<double> arrivals(n_arrivals);
  std::vector<double> waits(n_arrivals);
  Mean transit;
  Mean waiting;
  double wait = 0.0;
  double arrival = 0.0;
  for (std::size_t k = 0; k < n_arrivals; ++k) {
    arrivals[k] = arrival;
    waits[k] = wait;
    const double s = service(rng);
    if (k >= warmup) {
      transit.Add(wait + s);
      waiting.Add(wait);
    }
    if (k + 1 == n_arrivals) break;
    const double c = interarrival(rng);
    wait = std::max(0.0, wait + s - c);
    arrival += c;
  }
  result.mean_transit_time = transit.value();
  result.mean_waiting_time = waiting.value();

  const double window_start = arrivals[warmup];
  const double window_end = arrivals.back();
  if (window_end > window_start) {
    double area = 0.0;
    for (std::size_t k = 0; k < n_arrivals; ++k) {
      const double from = std::max(arrivals[k], window_start);
      const double to = std::min(arrivals[k] + waits[k], window_end);
      if (to > from) area += to - from;
    }
    result.mean_queue_length = area / (window_end - window_start);
  }
  return result;
}

KingmanComparison CompareToKingman(const ArrivalServiceModel& model,
                                   std::size_t n_arrivals, std::size_t warmup,
                                   std::uint64_t seed) {
  KingmanComparison out;
  out.simulation = SimulateQueue(model, n_arrivals, warmup, seed);
  out.simulated_z = out.simulation.mean_transit_time;
  const double lambda =
      std::isfinite(model.mean_interarrival) ? model.arrival_rate() : 0.0;
  out.formula_z = StableTransitTime(lambda, model.service_rate(),
                                    model.q_service + model.q_arrival - 2.0);
  out.relative_gap = std::fabs(out.simulated_z - out.formula_z) / out.formula_z;
  return out;
}

}  // namespace runway::sim
