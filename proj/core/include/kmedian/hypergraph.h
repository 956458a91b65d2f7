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

#ifndef KMEDIAN_HYPERGRAPH_H_
#define KMEDIAN_HYPERGRAPH_H_

#include <span>
#include <vector>

namespace kmedian {

// A weighted d-uniform hypergraph. Parallel edges are allowed. Edges of the
// dictatorship test are tuples and may repeat a vertex; those graphs set
// `tuple_edges`.
struct Hypergraph {
  int n = 0;
  int d = 0;
  std::vector<std::vector<int>> edges;
  std::vector<double> weights;  // empty means all ones
  bool tuple_edges = false;

  int num_edges() const { return static_cast<int>(edges.size()); }
  double weight(int e) const { return weights.empty() ? 1.0 : weights[e]; }
  double total_weight() const;

  // Throws InputError on an edge of the wrong size, an out-of-range or
  // (unless tuple_edges) repeated vertex, or a nonpositive weight.
  void Validate() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

// Total weight of edges meeting `vertices`.
double CoveredWeight(const Hypergraph& graph, std::span<const int> vertices);

}  // namespace kmedian

#endif  // KMEDIAN_HYPERGRAPH_H_
