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

#ifndef RUNWAY_LP_HPP_
#define RUNWAY_LP_HPP_

// Small dense linear programs in the form
//
//   minimize c.x  subject to  A x <= b,  x >= 0.
//
// Solved with a two-phase tableau simplex using Bland's rule, which is
// enough for the few hundred rows and columns a day of slots produces.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "runway/envelope.hpp"

namespace runway::lp {

inline constexpr double kPivotTolerance = 1e-11;
inline constexpr double kFeasibilityTolerance = 1e-9;

class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables)
      : objective_(variables, 0.0) {}
  LinearProgram(std::vector<double> objective,
                std::vector<std::vector<double>> rows,
                std::vector<double> bounds);

  std::size_t variables() const { return objective_.size(); }
  std::size_t constraints() const { return rows_.size(); }

  void SetObjective(std::size_t var, double coeff) { objective_.at(var) = coeff; }
  // Appends `coeffs . x <= bound`; `coeffs` must have variables() entries.
  void AddConstraint(std::vector<double> coeffs, double bound);

  const std::vector<double>& objective() const { return objective_; }
  const std::vector<std::vector<double>>& rows() const { return rows_; }
  const std::vector<double>& bounds() const { return bounds_; }

  // Largest violation of A x <= b and x >= 0 (0 when feasible).
  double MaxViolation(std::span<const double> x) const;
  double Evaluate(std::span<const double> x) const;

 private:
  std::vector<double> objective_;
  std::vector<std::vector<double>> rows_;
  std::vector<double> bounds_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view ToString(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;  // empty unless kOptimal
  double objective_value = 0.0;
};

// Throws Error(kNumericalFailure) if pivoting breaks down or the reported
// optimum fails the feasibility check.
LpSolution Solve(const LinearProgram& program);

struct VertexChoice {
  std::size_t index = 0;
  ControlPoint vertex;
  double cost = 0.0;
};

// Vertex minimizing weight_x * x + weight_y * y; ties go to the lowest index.
VertexChoice EnumeratePolygonOptimum(std::span<const ControlPoint> vertices,
                                     double weight_x, double weight_y);

}  // namespace runway::lp

#endif  // RUNWAY_LP_HPP_
