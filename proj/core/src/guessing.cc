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

#include "kmedian/guessing.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kmedian/errors.h"

namespace kmedian {
namespace {

// Guards floor/ceil of logarithms against values like 2.9999999999999996.
constexpr double kLogSlack = 1e-9;

double LogBase(double value, double epsilon) {
  return std::log(value) / std::log1p(epsilon);
}

}  // namespace

double Guess::radius(int cluster) const {
  return std::pow(1.0 + epsilon, radius_class[cluster]);
}

double Guess::threshold(int cluster) const {
  return std::pow(1.0 + epsilon, radius_class[cluster] + 1);
}

std::vector<int> RadiusClasses(const MetricInstance& instance, double epsilon) {
  if (!(epsilon > 0.0)) throw InputError("radius classes need epsilon > 0");
  const double max_d = instance.max_distance();
  int top = 0;
  if (max_d > 1.0) top = static_cast<int>(std::ceil(LogBase(max_d, epsilon) - kLogSlack));
  std::vector<int> classes(top + 1);
  for (int t = 0; t <= top; ++t) classes[t] = t;
  return classes;
}

int64_t CountGuesses(int coreset_size, int num_classes, int k, int64_t budget) {
  const double per_cluster = static_cast<double>(coreset_size) * num_classes;
  double total = 1.0;
  for (int i = 0; i < k; ++i) {
    total *= per_cluster;
    if (total > static_cast<double>(budget)) return budget + 1;
  }
  return static_cast<int64_t>(std::llround(total));
}

GuessEnumerator::GuessEnumerator(const WeightedSubset& coreset, std::vector<int> classes,
                                 int k, double epsilon, int64_t budget)
    : points_(coreset.indices), classes_(std::move(classes)), k_(k), epsilon_(epsilon) {
  if (points_.empty()) throw InputError("guess enumeration needs a nonempty coreset");
  if (classes_.empty()) throw InputError("guess enumeration needs radius classes");
  if (k_ < 1) throw InputError("guess enumeration needs k >= 1");
  count_ = CountGuesses(static_cast<int>(points_.size()),
                        static_cast<int>(classes_.size()), k_, budget);
  if (count_ > budget) {
    throw BudgetExceeded("guess budget exceeded — use planted mode");
  }
  Reset();
}

void GuessEnumerator::Reset() {
  emitted_ = 0;
  leader_digits_.assign(k_, 0);
  class_digits_.assign(k_, 0);
}

bool GuessEnumerator::Next(Guess& guess) {
  if (emitted_ >= count_) return false;
  guess.epsilon = epsilon_;
  guess.leaders.resize(k_);
  guess.radius_class.resize(k_);
  for (int i = 0; i < k_; ++i) {
    guess.leaders[i] = points_[leader_digits_[i]];
    guess.radius_class[i] = classes_[class_digits_[i]];
  }
  ++emitted_;
  // Mixed-radix increment: class digits are least significant, leaders lead.
  for (int i = k_ - 1; i >= 0; --i) {
    if (++class_digits_[i] < static_cast<int>(classes_.size())) return true;
    class_digits_[i] = 0;
  }
  for (int i = k_ - 1; i >= 0; --i) {
    if (++leader_digits_[i] < static_cast<int>(points_.size())) return true;
    leader_digits_[i] = 0;
  }
  return true;
}

Guess PlantedGuess(const MetricInstance& instance, const WeightedSubset& coreset,
                   double epsilon, std::span<const int> optimal_centers) {
  const int k = static_cast<int>(optimal_centers.size());
  if (k < 1) throw InputError("planted guess needs at least one center");
  if (coreset.size() == 0) throw InputError("planted guess needs a nonempty coreset");
  Guess guess;
  guess.epsilon = epsilon;
  guess.leaders.assign(k, -1);
  guess.radius_class.assign(k, 0);
  std::vector<double> leader_d(k, std::numeric_limits<double>::infinity());

  for (int v : coreset.indices) {
    int part = 0;
    for (int i = 1; i < k; ++i) {
      if (instance.distance(v, optimal_centers[i]) <
          instance.distance(v, optimal_centers[part])) {
        part = i;
      }
    }
    const double d = instance.distance(v, optimal_centers[part]);
    if (d < leader_d[part]) {
      leader_d[part] = d;
      guess.leaders[part] = v;
    }
  }
  for (int i = 0; i < k; ++i) {
    if (guess.leaders[i] != -1) continue;
    for (int v : coreset.indices) {
      const double d = instance.distance(v, optimal_centers[i]);
      if (d < leader_d[i]) {
        leader_d[i] = d;
        guess.leaders[i] = v;
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    const double d = leader_d[i];
    if (d > 1.0 && epsilon > 0.0) {
      guess.radius_class[i] =
          std::max(0, static_cast<int>(std::floor(LogBase(d, epsilon) + kLogSlack)));
    }
  }
  return guess;
}

CandidateSets BuildCandidateSets(const MetricInstance& instance, const Guess& guess) {
  CandidateSets sets;
  sets.epsilon = guess.epsilon;
  sets.leaders = guess.leaders;
  sets.by_cluster.resize(guess.k());
  for (int i = 0; i < guess.k(); ++i) {
    const int leader = guess.leaders[i];
    if (leader < 0 || leader >= instance.size()) {
      throw InputError("guess leader out of range");
    }
    const double threshold = guess.threshold(i) + kMetricTolerance;
    for (int c = 0; c < instance.size(); ++c) {
      if (instance.distance(leader, c) <= threshold) {
        sets.by_cluster[i].push_back(sets.num_entries());
        sets.entries.push_back({i, c, false});
      }
    }
    sets.by_cluster[i].push_back(sets.num_entries());
    sets.entries.push_back({i, leader, true});
  }
  return sets;
}

}  // namespace kmedian
