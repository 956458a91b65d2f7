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

#ifndef KMEDIAN_GUESSING_H_
#define KMEDIAN_GUESSING_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kmedian/coreset.h"
#include "kmedian/metric.h"

namespace kmedian {

inline constexpr int64_t kDefaultGuessBudget = 10'000'000;

// One guess of the optimal clustering's structure: an ordered leader per
// cluster and a radius class t meaning R* = (1 + epsilon)^t.
struct Guess {
  std::vector<int> leaders;  // physical point indices
  std::vector<int> radius_class;
  double epsilon = 0.0;

  int k() const { return static_cast<int>(leaders.size()); }
  double radius(int cluster) const;
  // Candidate threshold R*(1 + epsilon) = (1 + epsilon)^(t + 1).
  double threshold(int cluster) const;

  friend bool operator==(const Guess&, const Guess&) = default;
};

// An opening candidate of one cluster. Entries of different clusters are
// distinct objects even when they sit on the same physical point.
struct CandidateEntry {
  int cluster = 0;
  int point = 0;
  bool leader_copy = false;

  friend bool operator==(const CandidateEntry&, const CandidateEntry&) = default;
};

struct CandidateSets {
  std::vector<CandidateEntry> entries;      // grouped by cluster
  std::vector<std::vector<int>> by_cluster;  // entry ids per cluster
  std::vector<int> leaders;
  double epsilon = 0.0;

  int k() const { return static_cast<int>(by_cluster.size()); }
  int num_entries() const { return static_cast<int>(entries.size()); }
  // Distance from v to the physical point behind an entry.
  double Distance(const MetricInstance& instance, int v, int entry) const {
    return instance.distance(v, entries[entry].point);
  }
};

// Exponents 0..ceil(log_{1+eps}(max distance)); expects a rescaled instance.
std::vector<int> RadiusClasses(const MetricInstance& instance, double epsilon);

// Lexicographic stream over (leader tuple, radius-class tuple) with leaders
// drawn from the coreset. Construction throws BudgetExceeded when the total
// |V'|^k * |classes|^k exceeds the budget.
class GuessEnumerator {
 public:
  GuessEnumerator(const WeightedSubset& coreset, std::vector<int> classes, int k,
                  double epsilon, int64_t budget = kDefaultGuessBudget);

  int64_t count() const { return count_; }
  // Writes the next guess and returns true, or returns false when exhausted.
  bool Next(Guess& guess);
  void Reset();

 private:
  std::vector<int> points_;
  std::vector<int> classes_;
  int k_;
  double epsilon_;
  int64_t count_ = 0;
  int64_t emitted_ = 0;
  std::vector<int> leader_digits_;
  std::vector<int> class_digits_;
};

// Counts |V'|^k * |classes|^k, saturating above the budget.
int64_t CountGuesses(int coreset_size, int num_classes, int k, int64_t budget);

// The guess consistent with known optimal centers: coreset points are
// partitioned to their nearest center (ties to the lower center index), the
// leader is the part's point closest to its center, and the class is
// floor(log_{1+eps} d(leader, center)), zero for distances up to one. Empty
// parts use the coreset point nearest to the center.
Guess PlantedGuess(const MetricInstance& instance, const WeightedSubset& coreset,
                   double epsilon, std::span<const int> optimal_centers);

// Per cluster: every physical point within the threshold of the leader, plus
// one leader-copy entry.
CandidateSets BuildCandidateSets(const MetricInstance& instance, const Guess& guess);

}  // namespace kmedian

#endif  // KMEDIAN_GUESSING_H_
