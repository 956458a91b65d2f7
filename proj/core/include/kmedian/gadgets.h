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

#ifndef KMEDIAN_GADGETS_H_
#define KMEDIAN_GADGETS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "kmedian/hypergraph.h"
#include "kmedian/metric.h"

namespace kmedian {

struct PlantedHypergraph {
  Hypergraph graph;
  std::vector<int> cover;  // sorted, size n / (d - 1)
};

// Every edge holds one vertex of a random cover U and d - 1 vertices outside it.
PlantedHypergraph PlantedCoverHypergraph(int n, int d, int m, uint64_t seed);

// m independent uniformly random d-subsets.
Hypergraph RandomHypergraph(int n, int d, int m, uint64_t seed);

struct ReductionOptions {
  int copies = 10;
  bool complete_triples = false;  // add every absent d-subset as one more edge node
};

struct Reduction {
  MetricInstance instance;
  int k = 0;
  std::vector<int> vertex_side;  // point index of hypergraph vertex u
  std::vector<int> edge_side;    // edge-node point indices
  std::vector<int> source_edge;  // per edge node: hypergraph edge, or -1 if completed
};

// Shortest-path metric of the vertex/edge incidence graph with unit edges.
Reduction IncidenceReduction(const Hypergraph& graph, const ReductionOptions& options = {});

// Probability distribution on [q]^d with q = d - 1; values are 1..q.
struct Distribution {
  int d = 0;
  std::vector<std::vector<int>> support;
  std::vector<double> probabilities;

  int q() const { return d - 1; }
  void Validate() const;
};

// Feasible point of the pairwise-independence system over vectors that contain a 1.
Distribution PairwiseIndependentDistribution(int d);
// Uniform over {111, 122, 212, 221}.
Distribution XorDistribution3();
// max over coordinate pairs and value pairs of |Pr - 1/q^2|.
double MaxPairwiseDeviation(const Distribution& mu);
double MaxSingleDeviation(const Distribution& mu);

// Each coordinate independently resampled uniformly with probability delta.
Distribution NoisedDistribution(const Distribution& mu, double delta);

struct DictatorshipOptions {
  int64_t exact_limit = 10'000'000;  // max q^{dR} for exact enumeration
  int samples = 10'000;              // edge count in sampled mode
  uint64_t seed = 0;
  std::optional<Distribution> base;  // defaults to PairwiseIndependentDistribution(d)
};

struct DictatorshipHypergraph {
  Hypergraph graph;  // tuple edges over q^R strings
  bool exact = true;
  int d = 0;
  int rounds = 0;
  Distribution noised;
};

DictatorshipHypergraph DictatorshipTestHypergraph(int d, int rounds, double delta,
                                                  const DictatorshipOptions& options = {});

// Base-q index of a string in [q]^R, coordinate 0 most significant.
int EncodeString(const std::vector<int>& x, int q);
std::vector<int> DecodeVertex(int vertex, int q, int rounds);

// {x : x_coordinate = 1}.
std::vector<int> DictatorSet(int q, int rounds, int coordinate);

// Covered-weight fraction of `draws` uniformly random vertex sets of size round(alpha n).
std::vector<double> RandomSubsetCoverage(const Hypergraph& graph, double alpha, int draws,
                                         uint64_t seed);

}  // namespace kmedian

#endif  // KMEDIAN_GADGETS_H_
