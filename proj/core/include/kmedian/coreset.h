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

#ifndef KMEDIAN_CORESET_H_
#define KMEDIAN_CORESET_H_

#include <cstdint>
#include <vector>

#include "kmedian/metric.h"

namespace kmedian {

// A weighted subset of a parent instance standing in for the full point set.
struct WeightedSubset {
  std::vector<int> indices;  // distinct, into the parent instance
  std::vector<double> weights;
  double epsilon = 0.0;

  int size() const { return static_cast<int>(indices.size()); }
  double total_weight() const;

  // The parent's distances with the subset's weights (zero elsewhere).
  MetricInstance AsWeightedInstance(const MetricInstance& parent) const;
};

// All points, original weights, epsilon = 0. Costs are reproduced exactly.
WeightedSubset IdentityCoreset(const MetricInstance& instance);

struct SamplingOptions {
  double size_constant = 20.0;
};

// Sensitivity-sampling heuristic: greedy k-center as the bicriteria seed,
// probability proportional to w_v * (d(v, B) + average), inverse-probability
// weights. Falls back to IdentityCoreset when the budget covers every point.
// Carries no provable guarantee.
WeightedSubset SamplingCoreset(const MetricInstance& instance, int k,
                               double epsilon, uint64_t seed,
                               const SamplingOptions& options = {});

// ceil(size_constant * k * ln(n) / epsilon^2).
int64_t SamplingBudget(int n, int k, double epsilon, double size_constant);

// Farthest-point traversal from point 0.
std::vector<int> GreedyKCenter(const MetricInstance& instance, int k);

// max over random k-center probes of |cost(V', C) / cost(V, C) - 1|,
// skipping probes where cost(V, C) = 0.
double CoresetError(const MetricInstance& instance, const WeightedSubset& subset,
                    int num_probes, int k, uint64_t seed);

}  // namespace kmedian

#endif  // KMEDIAN_CORESET_H_
