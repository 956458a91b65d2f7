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

#include "kmedian/coreset.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "kmedian/errors.h"
#include "kmedian/random.h"

namespace kmedian {

double WeightedSubset::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

MetricInstance WeightedSubset::AsWeightedInstance(const MetricInstance& parent) const {
  std::vector<double> w(parent.size(), 0.0);
  for (int i = 0; i < size(); ++i) w[indices[i]] = weights[i];
  return parent.WithWeights(std::move(w));
}

WeightedSubset IdentityCoreset(const MetricInstance& instance) {
  WeightedSubset s;
  s.indices.resize(instance.size());
  std::iota(s.indices.begin(), s.indices.end(), 0);
  s.weights = instance.weights();
  s.epsilon = 0.0;
  return s;
}

int64_t SamplingBudget(int n, int k, double epsilon, double size_constant) {
  if (n <= 1) return n;
  const double raw = size_constant * k * std::log(static_cast<double>(n)) /
                     (epsilon * epsilon);
  if (raw > 1e15) return std::numeric_limits<int64_t>::max() / 2;
  return static_cast<int64_t>(std::ceil(raw));
}

std::vector<int> GreedyKCenter(const MetricInstance& instance, int k) {
  const int n = instance.size();
  std::vector<int> centers;
  if (n == 0 || k <= 0) return centers;
  std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
  int next = 0;
  while (static_cast<int>(centers.size()) < std::min(k, n)) {
    centers.push_back(next);
    const auto row = instance.row(next);
    int far = -1;
    double far_d = -1.0;
    for (int v = 0; v < n; ++v) {
      nearest[v] = std::min(nearest[v], row[v]);
      if (nearest[v] > far_d) {
        far_d = nearest[v];
        far = v;
      }
    }
    if (far_d <= 0.0) break;
    next = far;
  }
  return centers;
}

WeightedSubset SamplingCoreset(const MetricInstance& instance, int k, double epsilon,
                               uint64_t seed, const SamplingOptions& options) {
  if (k < 1) throw InputError("sampling coreset needs k >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InputError("sampling coreset needs 0 < epsilon < 1");
  }
  const int n = instance.size();
  const int64_t budget = SamplingBudget(n, k, epsilon, options.size_constant);
  if (budget >= n) return IdentityCoreset(instance);

  const std::vector<int> seeds = GreedyKCenter(instance, k);
  std::vector<double> to_seed(n);
  double weighted_sum = 0.0;
  const double total_weight = instance.total_weight();
  for (int v = 0; v < n; ++v) {
    double best = std::numeric_limits<double>::infinity();
    for (int c : seeds) best = std::min(best, instance.distance(v, c));
    to_seed[v] = best;
    weighted_sum += instance.weight(v) * best;
  }
  const double average = total_weight > 0.0 ? weighted_sum / total_weight : 0.0;

  std::vector<double> score(n);
  for (int v = 0; v < n; ++v) score[v] = instance.weight(v) * (to_seed[v] + average);
  double normalizer = std::accumulate(score.begin(), score.end(), 0.0);
  if (normalizer <= 0.0) {
    // All-zero distances: fall back to sampling by weight.
    score = instance.weights();
    normalizer = std::accumulate(score.begin(), score.end(), 0.0);
  }
  if (normalizer <= 0.0) return IdentityCoreset(instance);

  std::mt19937_64 engine(CounterRng(seed, {static_cast<uint64_t>(Stream::kCoreset)}).Seed());
  std::discrete_distribution<int> pick(score.begin(), score.end());
  std::map<int, double> drawn;
  for (int64_t draw = 0; draw < budget; ++draw) {
    const int v = pick(engine);
    const double q = score[v] / normalizer;
    drawn[v] += instance.weight(v) / (static_cast<double>(budget) * q);
  }

  WeightedSubset s;
  s.epsilon = epsilon;
  for (const auto& [v, w] : drawn) {
    s.indices.push_back(v);
    s.weights.push_back(w);
  }
  return s;
}

double CoresetError(const MetricInstance& instance, const WeightedSubset& subset,
                    int num_probes, int k, uint64_t seed) {
  if (num_probes < 1) throw InputError("coreset error needs at least one probe");
  const int n = instance.size();
  if (n == 0 || k < 1) return 0.0;
  const MetricInstance reweighted = subset.AsWeightedInstance(instance);
  std::mt19937_64 engine(
      CounterRng(seed, {static_cast<uint64_t>(Stream::kCoresetProbe)}).Seed());
  std::vector<int> order(n);
  double worst = 0.0;
  for (int probe = 0; probe < num_probes; ++probe) {
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), engine);
    const std::span<const int> centers(order.data(), std::min(k, n));
    const double full = Cost(instance, centers);
    if (full == 0.0) continue;
    worst = std::max(worst, std::abs(Cost(reweighted, centers) / full - 1.0));
  }
  return worst;
}

}  // namespace kmedian
