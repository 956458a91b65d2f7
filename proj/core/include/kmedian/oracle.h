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

#ifndef KMEDIAN_ORACLE_H_
#define KMEDIAN_ORACLE_H_

#include <cstdint>
#include <vector>

#include "kmedian/hypergraph.h"
#include "kmedian/metric.h"

namespace kmedian {

inline constexpr int64_t kDefaultOracleBudget = 10'000'000;

struct OracleResult {
  std::vector<int> best_set;  // sorted
  double best_value = 0.0;
  int64_t enumerated = 0;
};

// C(n, k), saturating at `cap` + 1.
int64_t Binomial(int n, int k, int64_t cap = INT64_MAX - 1);

// k-subsets of {0..n-1} in revolving-door order: consecutive subsets differ
// by exactly one element swapped out and one swapped in.
class RevolvingDoor {
 public:
  RevolvingDoor(int n, int k);

  const std::vector<int>& current() const { return c_; }  // ascending
  // Advances; false once every subset has been visited. On success `out` and
  // `in` hold the swapped elements.
  bool Next(int* out, int* in);

 private:
  int n_;
  int k_;
  std::vector<int> c_;  // c_[0] < c_[1] < ...
};

// Exact minimizer of the weighted k-median cost over all k-subsets. Ties go
// to the lexicographically smallest subset. Throws BudgetExceeded when
// C(n, k) exceeds `budget`.
OracleResult BruteForceKMedian(const MetricInstance& instance, int k,
                               int64_t budget = kDefaultOracleBudget);

// Exact maximizer of covered edge weight over vertex k-subsets.
OracleResult BruteForceCoverage(const Hypergraph& graph, int k,
                                int64_t budget = kDefaultOracleBudget);

// Repeatedly adds the vertex covering the most uncovered weight (ties by
// index).
OracleResult GreedyCoverage(const Hypergraph& graph, int k);

}  // namespace kmedian

#endif  // KMEDIAN_ORACLE_H_
