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

#include "runway/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "runway/error.hpp"

namespace runway::lp {
namespace {

constexpr double kOptimalityTolerance = 1e-10;
constexpr std::size_t kMaxIterations = 200000;

// Dense tableau. Rows 0..m-1 are constraints, row m holds reduced costs with
// the negated objective value in the rhs column.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_((rows + 1) * (cols + 1), 0.0),
        basis_(rows, 0) {}

  double& at(std::size_t r, std::size_t c) { return data_[r * (cols_ + 1) + c]; }
  double at(std::size_t r, std::size_t c) const {
    return data_[r * (cols_ + 1) + c];
  }
  double& rhs(std::size_t r) { return at(r, cols_); }
  double& cost(std::size_t c) { return at(rows_, c); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void Pivot(std::size_t pr, std::size_t pc) {
    const double inv = 1.0 / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    at(pr, pc) = 1.0;
    for (std::size_t r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) {
        double& v = at(r, c);
        v -= f * at(pr, c);
        if (std::fabs(v) < 1e-15) v = 0.0;
      }
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  // Removes constraint row `r` (the objective row stays last).
  void EraseRow(std::size_t r) {
    const auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1));
    data_.erase(first, first + static_cast<std::ptrdiff_t>(cols_ + 1));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
  std::vector<std::size_t> basis_;
};

enum class Outcome { kOptimal, kUnbounded };

// Bland's rule: lowest-index improving column, ratio ties to the lowest
// basic index. Columns at or beyond `allowed_cols` never enter.
Outcome RunSimplex(Tableau& t, std::size_t allowed_cols) {
  for (std::size_t iter = 0; iter < kMaxIterations; ++iter) {
    std::size_t entering = allowed_cols;
    for (std::size_t c = 0; c < allowed_cols; ++c) {
      if (t.cost(c) < -kOptimalityTolerance) {
        entering = c;
        break;
      }
    }
    if (entering == allowed_cols) return Outcome::kOptimal;

    std::size_t leaving = t.rows();
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, entering);
      if (a <= kPivotTolerance) continue;
      const double ratio = std::max(0.0, t.rhs(r)) / a;
      if (leaving == t.rows()) {
        leaving = r;
        best_ratio = ratio;
        continue;
      }
      const double slack = 1e-12 * std::max(1.0, best_ratio);
      if (ratio < best_ratio - slack) {
        leaving = r;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + slack &&
                 t.basis()[r] < t.basis()[leaving]) {
        leaving = r;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    if (leaving == t.rows()) return Outcome::kUnbounded;
    t.Pivot(leaving, entering);
  }
  throw Error(ErrorCode::kNumericalFailure,
              "simplex exceeded its iteration budget");
}

}  // namespace

LinearProgram::LinearProgram(std::vector<double> objective,
                             std::vector<std::vector<double>> rows,
                             std::vector<double> bounds)
    : objective_(std::move(objective)) {
  if (rows.size() != bounds.size()) {
    throw Error(ErrorCode::kInvalidInput,
                "constraint matrix and bound vector disagree in length");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    AddConstraint(std::move(rows[i]), bounds[i]);
  }
}

void LinearProgram::AddConstraint(std::vector<double> coeffs, double bound) {
  if (coeffs.size() != variables()) {
    throw Error(ErrorCode::kInvalidInput,
                "constraint has " + std::to_string(coeffs.size()) +
                    " coefficients, expected " + std::to_string(variables()));
  }
  const bool finite =
      std::isfinite(bound) &&
      std::all_of(coeffs.begin(), coeffs.end(),
                  [](double v) { return std::isfinite(v); });
  if (!finite) throw Error(ErrorCode::kInvalidInput, "non-finite LP entry");
  rows_.push_back(std::move(coeffs));
  bounds_.push_back(bound);
}

double LinearProgram::MaxViolation(std::span<const double> x) const {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += rows_[i][j] * x[j];
    worst = std::max(worst, lhs - bounds_[i]);
  }
  return worst;
}

double LinearProgram::Evaluate(std::span<const double> x) const {
  double value = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) value += objective_[j] * x[j];
  return value;
}

std::string_view ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

LpSolution Solve(const LinearProgram& program) {
  const std::size_t n = program.variables();
  const std::size_t m = program.constraints();
  for (double c : program.objective()) {
    if (!std::isfinite(c)) {
      throw Error(ErrorCode::kInvalidInput, "non-finite objective coefficient");
    }
  }

  // Columns: structural [0, n), slacks [n, n+m), artificials [n+m, ...).
  std::vector<std::size_t> artificial_rows;
  for (std::size_t i = 0; i < m; ++i) {
    if (program.bounds()[i] < 0.0) artificial_rows.push_back(i);
  }
  const std::size_t real_cols = n + m;
  Tableau t(m, real_cols + artificial_rows.size());

  std::size_t next_artificial = real_cols;
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = program.bounds()[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign * program.rows()[i][j];
    t.at(i, n + i) = sign;
    t.rhs(i) = sign * program.bounds()[i];
    if (sign < 0.0) {
      t.at(i, next_artificial) = 1.0;
      t.basis()[i] = next_artificial++;
    } else {
      t.basis()[i] = n + i;
    }
  }

  double bound_scale = 1.0;
  for (double b : program.bounds()) bound_scale = std::max(bound_scale, std::fabs(b));

  if (!artificial_rows.empty()) {
    // Phase one: minimize the sum of artificials.
    for (std::size_t i : artificial_rows) {
      for (std::size_t c = 0; c <= t.cols(); ++c) {
        if (c >= real_cols && c < t.cols()) continue;
        t.at(m, c) -= t.at(i, c);
      }
    }
    RunSimplex(t, t.cols());
    const double infeasibility = -t.rhs(t.rows());
    if (infeasibility > kFeasibilityTolerance * bound_scale) {
      return LpSolution{LpStatus::kInfeasible, {}, 0.0};
    }
    // Drive remaining (zero-level) artificials out of the basis.
    for (std::size_t r = 0; r < t.rows();) {
      if (t.basis()[r] < real_cols) {
        ++r;
        continue;
      }
      std::size_t col = real_cols;
      for (std::size_t c = 0; c < real_cols; ++c) {
        if (std::fabs(t.at(r, c)) > kPivotTolerance) {
          col = c;
          break;
        }
      }
      if (col == real_cols) {
        t.EraseRow(r);  // redundant constraint
      } else {
        t.Pivot(r, col);
        ++r;
      }
    }
  }

  // Phase two objective row.
  for (std::size_t c = 0; c <= t.cols(); ++c) t.at(t.rows(), c) = 0.0;
  for (std::size_t j = 0; j < n; ++j) t.cost(j) = program.objective()[j];
  for (std::size_t r = 0; r < t.rows(); ++r) {
    const std::size_t b = t.basis()[r];
    const double cb = b < n ? program.objective()[b] : 0.0;
    if (cb == 0.0) continue;
    for (std::size_t c = 0; c <= t.cols(); ++c) t.at(t.rows(), c) -= cb * t.at(r, c);
  }
  if (RunSimplex(t, real_cols) == Outcome::kUnbounded) {
    return LpSolution{LpStatus::kUnbounded, {}, 0.0};
  }

  LpSolution solution{LpStatus::kOptimal, std::vector<double>(n, 0.0), 0.0};
  for (std::size_t r = 0; r < t.rows(); ++r) {
    if (t.basis()[r] < n) solution.x[t.basis()[r]] = std::max(0.0, t.rhs(r));
  }
  solution.objective_value = program.Evaluate(solution.x);
  if (program.MaxViolation(solution.x) > 1e-7 * bound_scale) {
    throw Error(ErrorCode::kNumericalFailure,
                "simplex optimum violates its constraints");
  }
  return solution;
}

VertexChoice EnumeratePolygonOptimum(std::span<const ControlPoint> vertices,
                                     double weight_x, double weight_y) {
  if (vertices.empty()) {
    throw Error(ErrorCode::kInvalidInput, "no vertices to enumerate");
  }
  VertexChoice best{0, vertices[0],
                    weight_x * vertices[0].x + weight_y * vertices[0].y};
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const double cost = weight_x * vertices[i].x + weight_y * vertices[i].y;
    if (cost < best.cost - 1e-12 * std::max(1.0, std::fabs(best.cost))) {
      best = {i, vertices[i], cost};
    }
  }
  return best;
}

}  // namespace runway::lp
