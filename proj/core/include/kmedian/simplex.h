// Copyright 2026 The kmedian-fpt Authors
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

#ifndef KMEDIAN_SIMPLEX_H_
#define KMEDIAN_SIMPLEX_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace kmedian {

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

// min c'x  s.t.  rows (<=, =, >=),  x >= 0.
class LinearProgram {
 public:
  int AddVariable(double cost, std::string name = {});
  int AddRow(std::vector<std::pair<int, double>> coefficients, RowSense sense,
             double rhs, std::string name = {});

  int num_variables() const { return static_cast<int>(costs_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }

  struct Row {
    std::vector<std::pair<int, double>> coefficients;
    RowSense sense;
    double rhs;
    std::string name;
  };

  const std::vector<double>& costs() const { return costs_; }
  const std::vector<Row>& rows() const { return rows_; }
  const std::string& variable_name(int j) const { return names_[j]; }

  // Largest violation of any row or nonnegativity bound at `x`.
  double MaxViolation(const std::vector<double>& x) const;
  double Objective(const std::vector<double>& x) const;

 private:
  std::vector<double> costs_;
  std::vector<std::string> names_;
  std::vector<Row> rows_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* LpStatusName(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kIterationLimit;
  std::vector<double> values;
  double objective = 0.0;
  int64_t pivots = 0;
};

struct SimplexOptions {
  double feasibility_tolerance = 1e-7;
  double optimality_tolerance = 1e-9;
  double pivot_tolerance = 1e-9;
  // Consecutive degenerate pivots tolerated under Dantzig pricing before
  // switching to Bland's rule for the rest of the degenerate run.
  int degenerate_streak_limit = 25;
  // Use Bland's rule for every pivot.
  bool bland_only = false;
  int64_t max_pivots = 1'000'000;
};

// Dense two-phase tableau simplex. The result is a basic (vertex) solution
// and the pivot sequence is fully determined by the model.
LpResult SolveSimplex(const LinearProgram& program, const SimplexOptions& options = {});

// CPLEX-style LP text: objective, constraint rows, bounds.
void WriteLpFormat(const LinearProgram& program, std::ostream& out);

}  // namespace kmedian

#endif  // KMEDIAN_SIMPLEX_H_
