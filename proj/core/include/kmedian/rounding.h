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

#ifndef KMEDIAN_ROUNDING_H_
#define KMEDIAN_ROUNDING_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "kmedian/coreset.h"
#include "kmedian/guessing.h"
#include "kmedian/metric.h"
#include "kmedian/relaxation.h"

namespace kmedian {

// (10 - 6 sqrt 2) / 7, the leader-opening probability minimizing the
// worst-case per-point ratio.
double AutoLeaderProbability();

// One opening event per cluster: the leader, or one candidate entry.
struct OpeningEvent {
  bool leader = false;
  int entry = -1;  // candidate entry id when !leader
};

struct OpenedSolution {
  std::vector<OpeningEvent> events;  // one per cluster
  std::vector<int> centers;          // distinct physical points, sorted

  int PhysicalCenter(int cluster, const CandidateSets& candidates) const;
};

// Independently per cluster: the leader with probability p, otherwise one
// entry drawn from the cluster's y distribution. The draw for
// (seed, stream, trial, cluster) is fixed regardless of evaluation order.
OpenedSolution Round(const FractionalSolution& solution, const CandidateSets& candidates,
                     double p, uint64_t seed, uint64_t stream = 0, uint64_t trial = 0);

// Per-point view used by the assignment rule. Clusters the point is
// connected to are sorted by mean connection distance s (ties by cluster
// index). cap = 3 s_1 (1 + eps); D holds the connections of clusters with
// s_i <= cap.
struct PointContext {
  struct ClusterFlow {
    int cluster = 0;
    double flow = 0.0;  // mu_i
    double mean = 0.0;  // s_i
    bool in_a = false;  // s_i <= 1.5 s_1
  };

  int point_pos = -1;
  int point = -1;
  std::vector<ClusterFlow> clusters;  // I_v in s-order
  std::vector<int> rank;              // cluster -> position in `clusters`, or -1
  std::vector<int> d_entries;         // D: connected entries, sorted
  std::vector<double> d_distance;     // distance per D entry, capped at `cap`
  double s1 = 0.0;
  double cap = 0.0;
  double lp_cost = 0.0;      // LP(v) with clusters outside D capped at `cap`
  double raw_lp_cost = 0.0;  // sum_e x_{v,e} * d(v, e)
  double epsilon = 0.0;

  // Truncated distance to an entry in D, or nullopt if e is not in D.
  std::optional<double> DDistance(int entry) const;
};

PointContext BuildPointContext(int point_pos, const FractionalSolution& solution,
                               const CandidateSets& candidates, const LpModel& model,
                               const MetricInstance& instance, double epsilon);

struct Assignment {
  enum class Case { kDirect = 1, kLeader = 2, kFallback = 3 };
  Case which = Case::kFallback;
  int cluster = -1;
  int center = -1;           // physical point
  double label = 0.0;        // s_{i*}, 2 s_{j*} or 3 s_1 (1 + eps)
  double realized = 0.0;     // distance to the center, capped for D entries
};

Assignment Assign(const PointContext& context, const OpenedSolution& opened,
                  const CandidateSets& candidates, const MetricInstance& instance);

enum class SolveMode { kFull, kPlanted };
enum class CoresetMode { kIdentity, kSampling };

struct SolveOptions {
  int k = 1;
  double epsilon = 0.5;
  std::optional<double> p;  // nullopt selects AutoLeaderProbability()
  int trials = 50;
  SolveMode mode = SolveMode::kFull;
  CoresetMode coreset = CoresetMode::kIdentity;
  uint64_t seed = 0;
  // Planted mode: optimal centers in original indices. Brute force when empty.
  std::vector<int> planted_centers;
  int threads = 1;
  int64_t guess_budget = kDefaultGuessBudget;
  int64_t oracle_budget = 10'000'000;
  // Skip guesses equal to an earlier one up to cluster relabeling or a
  // radius class that selects the same candidate set.
  bool skip_equivalent_guesses = true;
};

struct SolveStats {
  int64_t guesses_enumerated = 0;
  int64_t lps_solved = 0;
  int64_t infeasible_guesses = 0;
  double p = 0.0;
  int coreset_size = 0;
  double rescale_factor = 1.0;
};

// rescale -> coreset -> guesses -> per guess (candidate sets, LP, split,
// `trials` roundings scored by true nearest-center cost on the input)
// -> best solution. Deterministic in (instance, options).
SolutionReport Solve(const MetricInstance& instance, const SolveOptions& options,
                     SolveStats* stats = nullptr);

}  // namespace kmedian

#endif  // KMEDIAN_ROUNDING_H_
