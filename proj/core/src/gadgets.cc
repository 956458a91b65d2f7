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

#include "kmedian/gadgets.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>
#include <string>

#include "kmedian/errors.h"
#include "kmedian/oracle.h"
#include "kmedian/random.h"
#include "kmedian/simplex.h"

namespace kmedian {
namespace {

std::mt19937_64 Engine(uint64_t seed, Stream stream, uint64_t sub = 0) {
  return std::mt19937_64(CounterRng(seed, {static_cast<uint64_t>(stream), sub}).Seed());
}

int64_t IntPow(int64_t base, int exponent, int64_t cap) {
  int64_t value = 1;
  for (int i = 0; i < exponent; ++i) {
    if (value > cap / std::max<int64_t>(base, 1)) return cap + 1;
    value *= base;
  }
  return value;
}

// Distinct uniform draws from `pool`, sorted.
std::vector<int> SampleDistinct(const std::vector<int>& pool, int count, std::mt19937_64& rng) {
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::vector<int> out;
  while (static_cast<int>(out.size()) < count) {
    const int v = pool[pick(rng)];
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Digits(int64_t index, int q, int length) {
  std::vector<int> x(length);
  for (int i = length - 1; i >= 0; --i) {
    x[i] = static_cast<int>(index % q) + 1;
    index /= q;
  }
  return x;
}

void Combinations(int n, int d, std::vector<std::vector<int>>* out) {
  RevolvingDoor door(n, d);
  out->push_back(door.current());
  int a = 0;
  int b = 0;
  while (door.Next(&a, &b)) out->push_back(door.current());
}

}  // namespace

double Hypergraph::total_weight() const {
  if (weights.empty()) return static_cast<double>(edges.size());
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

void Hypergraph::Validate() const {
  if (n < 0 || d < 1) throw InputError("hypergraph needs n >= 0 and d >= 1");
  if (!weights.empty() && weights.size() != edges.size()) {
    throw InputError("hypergraph weights and edges differ in length");
  }
  for (size_t e = 0; e < edges.size(); ++e) {
    const auto& edge = edges[e];
    const std::string where = "edge " + std::to_string(e);
    if (static_cast<int>(edge.size()) != d) throw InputError(where + " does not have d vertices");
    for (size_t i = 0; i < edge.size(); ++i) {
      if (edge[i] < 0 || edge[i] >= n) throw InputError(where + " has an out-of-range vertex");
      if (tuple_edges) continue;
      for (size_t j = 0; j < i; ++j) {
        if (edge[j] == edge[i]) throw InputError(where + " repeats a vertex");
      }
    }
    if (!weights.empty() && !(weights[e] > 0)) throw InputError(where + " has nonpositive weight");
  }
}

double CoveredWeight(const Hypergraph& graph, std::span<const int> vertices) {
  std::vector<char> chosen(graph.n, 0);
  for (int v : vertices) chosen.at(v) = 1;
  double covered = 0.0;
  for (int e = 0; e < graph.num_edges(); ++e) {
    for (int u : graph.edges[e]) {
      if (chosen[u]) {
        covered += graph.weight(e);
        break;
      }
    }
  }
  return covered;
}

PlantedHypergraph PlantedCoverHypergraph(int n, int d, int m, uint64_t seed) {
  if (d < 2 || n < d) throw InputError("planted hypergraph needs 2 <= d <= n");
  if (n % (d - 1) != 0) throw InputError("planted hypergraph needs (d - 1) | n");
  if (m < 1) throw InputError("planted hypergraph needs m >= 1");
  const int cover_size = n / (d - 1);
  if (n - cover_size < d - 1) throw InputError("too few vertices outside the planted cover");

  std::mt19937_64 rng = Engine(seed, Stream::kHypergraph, 1);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  PlantedHypergraph out;
  out.cover = SampleDistinct(all, cover_size, rng);
  std::vector<int> outside;
  std::set_difference(all.begin(), all.end(), out.cover.begin(), out.cover.end(),
                      std::back_inserter(outside));

  out.graph.n = n;
  out.graph.d = d;
  std::uniform_int_distribution<int> pick(0, cover_size - 1);
  for (int e = 0; e < m; ++e) {
    std::vector<int> edge = SampleDistinct(outside, d - 1, rng);
    edge.push_back(out.cover[pick(rng)]);
    std::sort(edge.begin(), edge.end());
    out.graph.edges.push_back(std::move(edge));
  }
  return out;
}

Hypergraph RandomHypergraph(int n, int d, int m, uint64_t seed) {
  if (d < 1 || n < d) throw InputError("random hypergraph needs 1 <= d <= n");
  if (m < 0) throw InputError("random hypergraph needs m >= 0");
  std::mt19937_64 rng = Engine(seed, Stream::kHypergraph, 2);
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  Hypergraph graph;
  graph.n = n;
  graph.d = d;
  for (int e = 0; e < m; ++e) graph.edges.push_back(SampleDistinct(all, d, rng));
  return graph;
}

Reduction IncidenceReduction(const Hypergraph& graph, const ReductionOptions& options) {
  graph.Validate();
  if (graph.d < 2) throw InputError("reduction needs d >= 2");
  if (graph.n % (graph.d - 1) != 0) throw InputError("reduction needs (d - 1) | n");
  if (options.copies < 1) throw InputError("reduction needs at least one copy per edge");

  std::vector<std::vector<int>> edge_nodes;
  Reduction out;
  for (int e = 0; e < graph.num_edges(); ++e) {
    for (int c = 0; c < options.copies; ++c) {
      edge_nodes.push_back(graph.edges[e]);
      out.source_edge.push_back(e);
    }
  }
  if (options.complete_triples) {
    if (Binomial(graph.n, graph.d, 100'000) > 100'000) {
      throw BudgetExceeded("complete_triples would add more than 100000 edge nodes");
    }
    std::vector<std::vector<int>> present;
    for (auto edge : graph.edges) {
      std::sort(edge.begin(), edge.end());
      present.push_back(std::move(edge));
    }
    std::sort(present.begin(), present.end());
    std::vector<std::vector<int>> all;
    Combinations(graph.n, graph.d, &all);
    for (auto& subset : all) {
      if (!std::binary_search(present.begin(), present.end(), subset)) {
        edge_nodes.push_back(std::move(subset));
        out.source_edge.push_back(-1);
      }
    }
  }

  const int n = graph.n;
  const int total = n + static_cast<int>(edge_nodes.size());
  std::vector<std::vector<int>> adjacency(total);
  for (size_t i = 0; i < edge_nodes.size(); ++i) {
    const int node = n + static_cast<int>(i);
    for (int u : edge_nodes[i]) {
      if (std::find(adjacency[node].begin(), adjacency[node].end(), u) != adjacency[node].end()) {
        continue;
      }
      adjacency[node].push_back(u);
      adjacency[u].push_back(node);
    }
  }

  std::vector<std::vector<double>> matrix(total, std::vector<double>(total, 0.0));
  std::vector<int> depth(total);
  for (int source = 0; source < total; ++source) {
    std::fill(depth.begin(), depth.end(), -1);
    std::deque<int> queue{source};
    depth[source] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adjacency[u]) {
        if (depth[v] < 0) {
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int v = 0; v < total; ++v) {
      if (depth[v] < 0) {
        throw InputError("instance disconnected; enable complete_triples or connect input");
      }
      matrix[source][v] = depth[v];
    }
  }

  std::vector<std::string> labels;
  for (int u = 0; u < n; ++u) {
    labels.push_back("v" + std::to_string(u));
    out.vertex_side.push_back(u);
  }
  std::vector<int> copy_of(graph.num_edges(), 0);
  for (size_t i = 0; i < edge_nodes.size(); ++i) {
    const int e = out.source_edge[i];
    labels.push_back(e >= 0 ? "e" + std::to_string(e) + "." + std::to_string(copy_of[e]++)
                            : "t" + std::to_string(i));
    out.edge_side.push_back(n + static_cast<int>(i));
  }
  out.instance = MetricInstance::FromMatrix(std::move(matrix), {}, std::move(labels));
  out.k = n / (graph.d - 1);
  return out;
}

void Distribution::Validate() const {
  if (d < 2) throw InputError("distribution needs d >= 2");
  if (support.size() != probabilities.size()) {
    throw InputError("distribution support and probabilities differ in length");
  }
  double total = 0.0;
  for (size_t s = 0; s < support.size(); ++s) {
    if (static_cast<int>(support[s].size()) != d) throw InputError("support vector of wrong length");
    for (int x : support[s]) {
      if (x < 1 || x > q()) throw InputError("support entry out of range");
    }
    if (!(probabilities[s] > 0)) throw InputError("nonpositive probability");
    total += probabilities[s];
  }
  if (std::abs(total - 1.0) > 1e-12) throw InputError("probabilities do not sum to 1");
}

Distribution PairwiseIndependentDistribution(int d) {
  if (d < 3) throw InputError("pairwise-independent distribution needs d >= 3");
  const int q = d - 1;
  const int64_t points = IntPow(q, d, 200'000);
  if (points > 200'000) throw BudgetExceeded("(d - 1)^d too large for the pairwise system");

  LinearProgram lp;
  std::vector<std::vector<int>> vectors;
  for (int64_t index = 0; index < points; ++index) {
    std::vector<int> x = Digits(index, q, d);
    if (std::find(x.begin(), x.end(), 1) == x.end()) continue;
    lp.AddVariable(0.0);
    vectors.push_back(std::move(x));
  }
  const double target = 1.0 / (static_cast<double>(q) * q);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      for (int a = 1; a <= q; ++a) {
        for (int b = 1; b <= q; ++b) {
          std::vector<std::pair<int, double>> row;
          for (size_t s = 0; s < vectors.size(); ++s) {
            if (vectors[s][i] == a && vectors[s][j] == b) row.emplace_back(static_cast<int>(s), 1.0);
          }
          lp.AddRow(std::move(row), RowSense::kEqual, target);
        }
      }
    }
  }
  std::vector<std::pair<int, double>> sum;
  for (size_t s = 0; s < vectors.size(); ++s) sum.emplace_back(static_cast<int>(s), 1.0);
  lp.AddRow(std::move(sum), RowSense::kEqual, 1.0);

  const LpResult result = SolveSimplex(lp);
  if (result.status != LpStatus::kOptimal) {
    throw InternalError(std::string("pairwise-independence system: ") + LpStatusName(result.status));
  }
  Distribution mu;
  mu.d = d;
  for (size_t s = 0; s < vectors.size(); ++s) {
    if (result.values[s] > 1e-12) {
      mu.support.push_back(vectors[s]);
      mu.probabilities.push_back(result.values[s]);
    }
  }
  mu.Validate();
  return mu;
}

Distribution XorDistribution3() {
  Distribution mu;
  mu.d = 3;
  mu.support = {{1, 1, 1}, {1, 2, 2}, {2, 1, 2}, {2, 2, 1}};
  mu.probabilities.assign(4, 0.25);
  return mu;
}

double MaxPairwiseDeviation(const Distribution& mu) {
  const int q = mu.q();
  const double target = 1.0 / (static_cast<double>(q) * q);
  double worst = 0.0;
  for (int i = 0; i < mu.d; ++i) {
    for (int j = i + 1; j < mu.d; ++j) {
      std::vector<double> joint(static_cast<size_t>(q) * q, 0.0);
      for (size_t s = 0; s < mu.support.size(); ++s) {
        joint[(mu.support[s][i] - 1) * q + (mu.support[s][j] - 1)] += mu.probabilities[s];
      }
      for (double pr : joint) worst = std::max(worst, std::abs(pr - target));
    }
  }
  return worst;
}

double MaxSingleDeviation(const Distribution& mu) {
  const int q = mu.q();
  double worst = 0.0;
  for (int i = 0; i < mu.d; ++i) {
    std::vector<double> marginal(q, 0.0);
    for (size_t s = 0; s < mu.support.size(); ++s) {
      marginal[mu.support[s][i] - 1] += mu.probabilities[s];
    }
    for (double pr : marginal) worst = std::max(worst, std::abs(pr - 1.0 / q));
  }
  return worst;
}

Distribution NoisedDistribution(const Distribution& mu, double delta) {
  if (!(delta >= 0 && delta <= 1)) throw InputError("delta must lie in [0, 1]");
  mu.Validate();
  const int q = mu.q();
  const int d = mu.d;
  const int64_t points = IntPow(q, d, 10'000'000);
  if (points > 10'000'000) throw BudgetExceeded("(d - 1)^d too large to noise exactly");

  std::vector<double> tensor(points, 0.0);
  for (size_t s = 0; s < mu.support.size(); ++s) {
    tensor[EncodeString(mu.support[s], q)] += mu.probabilities[s];
  }
  // One coordinate at a time: keep with 1 - delta, else uniform over [q].
  int64_t stride = points;
  for (int i = 0; i < d; ++i) {
    stride /= q;
    for (int64_t base = 0; base < points; ++base) {
      if ((base / stride) % q != 0) continue;
      double line_total = 0.0;
      for (int a = 0; a < q; ++a) line_total += tensor[base + a * stride];
      for (int a = 0; a < q; ++a) {
        double& cell = tensor[base + a * stride];
        cell = (1 - delta) * cell + delta * line_total / q;
      }
    }
  }
  Distribution out;
  out.d = d;
  for (int64_t index = 0; index < points; ++index) {
    if (tensor[index] > 0) {
      out.support.push_back(Digits(index, q, d));
      out.probabilities.push_back(tensor[index]);
    }
  }
  return out;
}

int EncodeString(const std::vector<int>& x, int q) {
  int index = 0;
  for (int v : x) index = index * q + (v - 1);
  return index;
}

std::vector<int> DecodeVertex(int vertex, int q, int rounds) { return Digits(vertex, q, rounds); }

std::vector<int> DictatorSet(int q, int rounds, int coordinate) {
  if (coordinate < 0 || coordinate >= rounds) throw InputError("dictator coordinate out of range");
  const int64_t vertices = IntPow(q, rounds, INT32_MAX);
  std::vector<int> out;
  for (int v = 0; v < vertices; ++v) {
    if (DecodeVertex(v, q, rounds)[coordinate] == 1) out.push_back(v);
  }
  return out;
}

DictatorshipHypergraph DictatorshipTestHypergraph(int d, int rounds, double delta,
                                                  const DictatorshipOptions& options) {
  if (d < 3 || rounds < 1) throw InputError("dictatorship test needs d >= 3 and R >= 1");
  const int q = d - 1;
  const int64_t vertices = IntPow(q, rounds, 10'000);
  if (vertices > 10'000) throw BudgetExceeded("(d - 1)^R exceeds 10^4 vertices");

  DictatorshipHypergraph out;
  out.d = d;
  out.rounds = rounds;
  const Distribution base = options.base.value_or(PairwiseIndependentDistribution(d));
  if (base.d != d) throw InputError("base distribution has the wrong dimension");
  out.noised = NoisedDistribution(base, delta);
  const Distribution& mu = out.noised;
  const int support = static_cast<int>(mu.support.size());

  out.graph.n = static_cast<int>(vertices);
  out.graph.d = d;
  out.graph.tuple_edges = true;
  // Column r of an edge is a draw z_r ~ mu; vertex i is the string (z_1[i], ..., z_R[i]).
  auto emit = [&](const std::vector<int>& columns, double weight) {
    std::vector<int> edge(d, 0);
    for (int i = 0; i < d; ++i) {
      for (int r = 0; r < rounds; ++r) edge[i] = edge[i] * q + (mu.support[columns[r]][i] - 1);
    }
    out.graph.edges.push_back(std::move(edge));
    out.graph.weights.push_back(weight);
  };

  const int64_t tuples = IntPow(support, rounds, options.exact_limit);
  out.exact = IntPow(q, d * rounds, options.exact_limit) <= options.exact_limit &&
              tuples <= options.exact_limit;
  if (out.exact) {
    std::vector<int> columns(rounds, 0);
    for (int64_t t = 0; t < tuples; ++t) {
      int64_t rest = t;
      double weight = 1.0;
      for (int r = rounds - 1; r >= 0; --r) {
        columns[r] = static_cast<int>(rest % support);
        rest /= support;
        weight *= mu.probabilities[columns[r]];
      }
      if (weight > 0) emit(columns, weight);
    }
  } else {
    if (options.samples < 1) throw InputError("sampled dictatorship test needs samples >= 1");
    std::mt19937_64 rng = Engine(options.seed, Stream::kDictatorship);
    std::discrete_distribution<int> draw(mu.probabilities.begin(), mu.probabilities.end());
    std::vector<int> columns(rounds);
    for (int s = 0; s < options.samples; ++s) {
      for (int r = 0; r < rounds; ++r) columns[r] = draw(rng);
      emit(columns, 1.0 / options.samples);
    }
  }
  return out;
}

std::vector<double> RandomSubsetCoverage(const Hypergraph& graph, double alpha, int draws,
                                         uint64_t seed) {
  if (!(alpha >= 0 && alpha <= 1)) throw InputError("alpha must lie in [0, 1]");
  const int size = static_cast<int>(std::lround(alpha * graph.n));
  const double total = graph.total_weight();
  std::vector<int> vertices(graph.n);
  std::vector<double> fractions;
  for (int t = 0; t < draws; ++t) {
    std::iota(vertices.begin(), vertices.end(), 0);
    std::mt19937_64 rng = Engine(seed, Stream::kCoverageDraws, static_cast<uint64_t>(t));
    std::shuffle(vertices.begin(), vertices.end(), rng);
    const std::span<const int> chosen(vertices.data(), static_cast<size_t>(size));
    fractions.push_back(total > 0 ? CoveredWeight(graph, chosen) / total : 0.0);
  }
  return fractions;
}

}  // namespace kmedian
