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

#ifndef RUNWAY_TESTS_FIXTURES_HPP_
#define RUNWAY_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "runway/day_planner.hpp"
#include "runway/domains.hpp"
#include "runway/envelope.hpp"

namespace runway::testing {

// Four control points, three segments with slopes -4, -1/2, -1/6.
inline CapacityEnvelope Env1() {
  return ValidateEnvelope({{12, 0}, {10, 8}, {6, 10}, {0, 11}}, "ENV1");
}

// The worked slot: lambda = (2, 2), p = (1, 1), q = (2, 2).
inline SlotContext WorkedContext() {
  return SlotContext{Env1(), 2.0, 2.0, 1.0, 1.0, 2.0, 2.0};
}

inline double Uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Random strictly concave envelope with `segments` segments. Segment
// directions (-cos t, sin t) with t strictly decreasing from steep to flat.
inline CapacityEnvelope RandomEnvelope(std::mt19937_64& rng, int segments) {
  std::vector<double> angles;
  const double lo = 0.08;
  const double hi = 1.49;
  const double gap = (hi - lo) / segments;
  for (int j = 0; j < segments; ++j) {
    // One angle per disjoint band keeps turns strictly positive.
    angles.push_back(Uniform(rng, lo + j * gap + 0.1 * gap, lo + (j + 1) * gap - 0.1 * gap));
  }
  std::sort(angles.rbegin(), angles.rend());
  std::vector<double> u;
  std::vector<double> v;
  double width = 0.0;
  for (double t : angles) {
    const double len = Uniform(rng, 2.0, 10.0);
    u.push_back(len * std::cos(t));
    v.push_back(len * std::sin(t));
    width += u.back();
  }
  std::vector<ControlPoint> pts{{width, 0.0}};
  for (int j = 0; j < segments; ++j) {
    pts.push_back({pts.back().x - u[j], pts.back().y + v[j]});
  }
  pts.back().x = 0.0;
  return ValidateEnvelope(std::move(pts), "random");
}

inline CapacityEnvelope RandomEnvelope(std::mt19937_64& rng) {
  return RandomEnvelope(rng, std::uniform_int_distribution<int>(1, 5)(rng));
}

}  // namespace runway::testing

#endif  // RUNWAY_TESTS_FIXTURES_HPP_
