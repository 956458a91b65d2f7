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

#ifndef KMEDIAN_RELAXATION_H_
#define KMEDIAN_RELAXATION_H_

#include <iosfwd>
#include <optional>
#include <vector>

#include "kmedian/coreset.h"
#include "kmedian/guessing.h"
#include "kmedian/metric.h"
#include "kmedian/simplex.h"

namespace kmedian {

inline constexpr double kLpFeasibilityTolerance = 1e-7;
inline constexpr double kSplitTolerance = 1e-9;

// The LP relaxation for one guess. Variables: y_e for every candidate entry
// e, then x_{v,e} for every coreset point v and entry e that is not too
// close, i.e. d(v, e) >= d(leader of e's cluster, e) - 1e-9.
//
//   min  sum_v w_v sum_e d(v, e) x_{v,e}
//   s.t. x_{v,e} <= y_e
//        sum_{e in C_i} y_e = 1        for every cluster i
//        sum_e x_{v,e} = 1             for every coreset point v
struct LpModel {
  struct XVar {
    int point_pos;  // position in the coreset
    int entry;
    double distance;
  };

  CandidateSets candidates;
  std::vector<int> points;  // coreset point indices
  std::vector<double> weights;
  std::vector<XVar> x_vars;                 // LP column = num_entries + index
  std::vector<std::vector<int>> x_by_point;  // x var ids per coreset position
  LinearProgram program;

  int y_column(int entry) const { return entry; }
  int x_column(int x_var) const { return candidates.num_entries() + x_var; }
};

// Throws InfeasibleGuess when some coreset point has no admissible entry.
LpModel BuildLp(const WeightedSubset& coreset, const CandidateSets& candidates,
                const MetricInstance& instance);

struct Connection {
  int entry;
  double value;
};

struct FractionalSolution {
  std::vector<double> y;                   // per candidate entry
  std::vector<std::vector<Connection>> x;  // per coreset position, nonzero only
  double objective = 0.0;
  bool split = false;
};

// Optimal vertex of the model. Throws InfeasibleGuess when the LP is
// infeasible and InternalError if it reports unbounded or stalls.
FractionalSolution SolveLp(const LpModel& model, const SimplexOptions& options = {});

struct SplitResult {
  FractionalSolution solution;
  CandidateSets candidates;  // expanded with the split copies
};

// Splits every entry e with some 0 < x_{v,e} < y_e into copies so that each
// connection becomes all-or-nothing: points sorted by x (ties by coreset
// position), copy masses x_1, x_2 - x_1, ..., y_e - x_t, and point j
// connects to the first j copies. Zero-mass copies are dropped.
SplitResult SplitCenters(const FractionalSolution& solution, const LpModel& model);

// Largest violation of the LP rows, constraint (too-close pairs) and bounds
// for a solution over the given candidate sets.
double MaxLpViolation(const FractionalSolution& solution, const CandidateSets& candidates,
                      const LpModel& model, const MetricInstance& instance);

// max |x_{v,e} - y_e| over nonzero connections.
double MaxSplitDeviation(const FractionalSolution& solution);

double Objective(const FractionalSolution& solution, const CandidateSets& candidates,
                 const LpModel& model, const MetricInstance& instance);

// The integral solution that opens `centers[i]` in cluster i (through an
// ordinary entry on that physical point) and connects each coreset point to
// the given cluster, or nullopt if some chosen center is not a candidate of
// its cluster or a connection is too close.
std::optional<FractionalSolution> CanonicalSolution(const LpModel& model, const MetricInstance& instance,
                                     const std::vector<int>& centers,
                                     const std::vector<int>& cluster_of_point);

void WriteLp(const LpModel& model, std::ostream& out);

}  // namespace kmedian

#endif  // KMEDIAN_RELAXATION_H_
