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

#include "kmedian/simplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "kmedian/errors.h"

namespace kmedian {

int LinearProgram::AddVariable(double cost, std::string name) {
  costs_.push_back(cost);
  if (name.empty()) name = "v" + std::to_string(costs_.size() - 1);
  names_.push_back(std::move(name));
  return static_cast<int>(costs_.size()) - 1;
}

int LinearProgram::AddRow(std::vector<std::pair<int, double>> coefficients,
                          RowSense sense, double rhs, std::string name) {
  for (const auto& [j, a] : coefficients) {
    if (j < 0 || j >= num_variables()) throw InternalError("LP row references unknown variable");
    (void)a;
  }
  if (name.empty()) name = "r" + std::to_string(rows_.size());
  rows_.push_back({std::move(coefficients), sense, rhs, std::move(name)});
  return static_cast<int>(rows_.size()) - 1;
}

double LinearProgram::MaxViolation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (const Row& row : rows_) {
    double lhs = 0.0;
    for (const auto& [j, a] : row.coefficients) lhs += a * x[j];
    switch (row.sense) {
      case RowSense::kLessEqual:
        worst = std::max(worst, lhs - row.rhs);
        break;
      case RowSense::kGreaterEqual:
        worst = std::max(worst, row.rhs - lhs);
        break;
      case RowSense::kEqual:
        worst = std::max(worst, std::abs(lhs - row.rhs));
        break;
    }
  }
  return worst;
}

double LinearProgram::Objective(const std::vector<double>& x) const {
  double z = 0.0;
  for (size_t j = 0; j < costs_.size(); ++j) z += costs_[j] * x[j];
  return z;
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration_limit";
  }
  return "unknown";
}

namespace {

constexpr double kDropTolerance = 1e-13;

// Row-major dense tableau. Rows [0, m) are constraints, row m is the phase-one
// objective and row m + 1 the phase-two objective; the last column is the
// right-hand side. Objective rows hold reduced costs and -z in the rhs.
class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), width_(cols + 1), data_(static_cast<size_t>(rows + 2) * width_, 0.0) {}

  double* row(int i) { return data_.data() + static_cast<size_t>(i) * width_; }
  double& at(int i, int j) { return row(i)[j]; }
  double& rhs(int i) { return row(i)[width_ - 1]; }
  int rows() const { return rows_; }
  int cols() const { return width_ - 1; }

  void Pivot(int r, int c) {
    double* pr = row(r);
    const double inv = 1.0 / pr[c];
    nonzero_.clear();
    for (int j = 0; j < width_; ++j) {
      if (pr[j] != 0.0) {
        pr[j] *= inv;
        nonzero_.push_back(j);
      }
    }
    pr[c] = 1.0;
    for (int i = 0; i < rows_ + 2; ++i) {
      if (i == r) continue;
      double* ri = row(i);
      const double f = ri[c];
      if (f == 0.0) continue;
      for (int j : nonzero_) {
        double v = ri[j] - f * pr[j];
        if (std::abs(v) < kDropTolerance) v = 0.0;
        ri[j] = v;
      }
      ri[c] = 0.0;
    }
  }

 private:
  int rows_;
  int width_;
  std::vector<double> data_;
  std::vector<int> nonzero_;
};

class Solver {
 public:
  Solver(const LinearProgram& program, const SimplexOptions& options)
      : program_(program), options_(options) {}

  LpResult Run();

 private:
  // Returns kOptimal, kUnbounded or kIterationLimit for the objective row.
  LpStatus Iterate(int objective_row, int allowed_cols);
  int ChooseEntering(int objective_row, int allowed_cols, bool bland);
  int ChooseLeaving(int col, bool bland, double* ratio);

  const LinearProgram& program_;
  SimplexOptions options_;
  Tableau tableau_{0, 0};
  std::vector<int> basis_;
  int structural_ = 0;
  int artificial_begin_ = 0;
  int64_t pivots_ = 0;
};

int Solver::ChooseEntering(int objective_row, int allowed_cols, bool bland) {
  double* obj = tableau_.row(objective_row);
  int best = -1;
  double best_value = -options_.optimality_tolerance;
  for (int j = 0; j < allowed_cols; ++j) {
    if (obj[j] < best_value) {
      best = j;
      if (bland) return j;
      best_value = obj[j];
    }
  }
  return best;
}

int Solver::ChooseLeaving(int col, bool bland, double* ratio) {
  int best = -1;
  double best_ratio = std::numeric_limits<double>::infinity();
  double best_pivot = 0.0;
  for (int i = 0; i < tableau_.rows(); ++i) {
    const double a = tableau_.at(i, col);
    if (a <= options_.pivot_tolerance) continue;
    const double r = std::max(0.0, tableau_.rhs(i)) / a;
    const bool tie = best != -1 && std::abs(r - best_ratio) <= 1e-12 * (1.0 + best_ratio);
    bool take = false;
    if (best == -1 || (!tie && r < best_ratio)) {
      take = true;
    } else if (tie) {
      take = bland ? basis_[i] < basis_[best] : a > best_pivot;
    }
    if (take) {
      best = i;
      best_ratio = r;
      best_pivot = a;
    }
  }
  *ratio = best_ratio;
  return best;
}

LpStatus Solver::Iterate(int objective_row, int allowed_cols) {
  int degenerate_streak = 0;
  while (true) {
    if (pivots_ >= options_.max_pivots) return LpStatus::kIterationLimit;
    const bool bland =
        options_.bland_only || degenerate_streak >= options_.degenerate_streak_limit;
    const int col = ChooseEntering(objective_row, allowed_cols, bland);
    if (col < 0) return LpStatus::kOptimal;
    double ratio = 0.0;
    const int row = ChooseLeaving(col, bland, &ratio);
    if (row < 0) return LpStatus::kUnbounded;
    degenerate_streak = ratio <= 1e-12 ? degenerate_streak + 1 : 0;
    tableau_.Pivot(row, col);
    basis_[row] = col;
    ++pivots_;
  }
}

LpResult Solver::Run() {
  const int m = program_.num_rows();
  structural_ = program_.num_variables();

  // Normalize every row to a nonnegative rhs, flipping its sense as needed.
  std::vector<int> sign(m, 1);
  std::vector<RowSense> sense(m);
  int slacks = 0;
  int artificials = 0;
  for (int i = 0; i < m; ++i) {
    const auto& row = program_.rows()[i];
    sense[i] = row.sense;
    if (row.rhs < 0.0) {
      sign[i] = -1;
      if (sense[i] == RowSense::kLessEqual) {
        sense[i] = RowSense::kGreaterEqual;
      } else if (sense[i] == RowSense::kGreaterEqual) {
        sense[i] = RowSense::kLessEqual;
      }
    }
    if (sense[i] != RowSense::kEqual) ++slacks;
    if (sense[i] != RowSense::kLessEqual) ++artificials;
  }
  artificial_begin_ = structural_ + slacks;
  tableau_ = Tableau(m, artificial_begin_ + artificials);
  basis_.assign(m, -1);

  int next_slack = structural_;
  int next_artificial = artificial_begin_;
  for (int i = 0; i < m; ++i) {
    const auto& row = program_.rows()[i];
    for (const auto& [j, a] : row.coefficients) tableau_.at(i, j) += sign[i] * a;
    tableau_.rhs(i) = sign[i] * row.rhs;
    if (sense[i] == RowSense::kLessEqual) {
      tableau_.at(i, next_slack) = 1.0;
      basis_[i] = next_slack++;
    } else {
      if (sense[i] == RowSense::kGreaterEqual) tableau_.at(i, next_slack++) = -1.0;
      tableau_.at(i, next_artificial) = 1.0;
      basis_[i] = next_artificial++;
    }
  }

  // Phase-one objective: minimize the sum of artificials, priced out.
  const int phase1 = m;
  const int phase2 = m + 1;
  for (int j = artificial_begin_; j < tableau_.cols(); ++j) tableau_.at(phase1, j) = 1.0;
  for (int j = 0; j < structural_; ++j) tableau_.at(phase2, j) = program_.costs()[j];
  for (int i = 0; i < m; ++i) {
    if (basis_[i] < artificial_begin_) continue;
    double* obj = tableau_.row(phase1);
    const double* ri = tableau_.row(i);
    for (int j = 0; j <= tableau_.cols(); ++j) obj[j] -= ri[j];
  }

  LpResult result;
  double scale = 1.0;
  for (const auto& row : program_.rows()) scale = std::max(scale, std::abs(row.rhs));

  if (artificials > 0) {
    const LpStatus s1 = Iterate(phase1, tableau_.cols());
    if (s1 == LpStatus::kIterationLimit) {
      result.status = s1;
      result.pivots = pivots_;
      return result;
    }
    if (-tableau_.rhs(phase1) > options_.feasibility_tolerance * scale) {
      result.status = LpStatus::kInfeasible;
      result.pivots = pivots_;
      return result;
    }
    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are redundant and their artificial stays basic at zero.
    for (int i = 0; i < m; ++i) {
      if (basis_[i] < artificial_begin_) continue;
      for (int j = 0; j < artificial_begin_; ++j) {
        if (std::abs(tableau_.at(i, j)) > options_.pivot_tolerance) {
          tableau_.Pivot(i, j);
          basis_[i] = j;
          ++pivots_;
          break;
        }
      }
    }
  }

  const LpStatus s2 = Iterate(phase2, artificial_begin_);
  result.status = s2;
  result.pivots = pivots_;
  if (s2 != LpStatus::kOptimal) return result;

  result.values.assign(structural_, 0.0);
  for (int i = 0; i < m; ++i) {
    if (basis_[i] < structural_) result.values[basis_[i]] = std::max(0.0, tableau_.rhs(i));
  }
  result.objective = program_.Objective(result.values);
  return result;
}

}  // namespace

LpResult SolveSimplex(const LinearProgram& program, const SimplexOptions& options) {
  return Solver(program, options).Run();
}

void WriteLpFormat(const LinearProgram& program, std::ostream& out) {
  auto term = [&](double a, int j, bool first) {
    if (a < 0) {
      out << " - ";
    } else if (!first) {
      out << " + ";
    } else {
      out << " ";
    }
    out << std::abs(a) << " " << program.variable_name(j);
  };
  out.precision(17);
  out << "Minimize\n obj:";
  bool first = true;
  for (int j = 0; j < program.num_variables(); ++j) {
    if (program.costs()[j] == 0.0) continue;
    term(program.costs()[j], j, first);
    first = false;
  }
  if (first) out << " 0 " << (program.num_variables() > 0 ? program.variable_name(0) : "x");
  out << "\nSubject To\n";
  for (const auto& row : program.rows()) {
    out << " " << row.name << ":";
    bool row_first = true;
    for (const auto& [j, a] : row.coefficients) {
      term(a, j, row_first);
      row_first = false;
    }
    switch (row.sense) {
      case RowSense::kLessEqual:
        out << " <= ";
        break;
      case RowSense::kEqual:
        out << " = ";
        break;
      case RowSense::kGreaterEqual:
        out << " >= ";
        break;
    }
    out << row.rhs << "\n";
  }
  out << "Bounds\n";
  for (int j = 0; j < program.num_variables(); ++j) {
    out << " " << program.variable_name(j) << " >= 0\n";
  }
  out << "End\n";
}

}  // namespace kmedian
