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

#ifndef KMEDIAN_METRIC_H_
#define KMEDIAN_METRIC_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kmedian {

// Absolute tolerance for every metric-axiom check.
inline constexpr double kMetricTolerance = 1e-9;

// A finite weighted metric space. The dense distance matrix is the canonical
// form; Euclidean inputs are materialized into it on construction and their
// coordinates are kept only for serialization.
class MetricInstance {
 public:
  MetricInstance() = default;

  // Dense matrix input. `weights` defaults to all ones.
  static MetricInstance FromMatrix(std::vector<std::vector<double>> matrix,
                                   std::vector<double> weights = {},
                                   std::vector<std::string> labels = {});
  static MetricInstance FromPoints(std::vector<std::vector<double>> points,
                                   std::vector<double> weights = {},
                                   std::vector<std::string> labels = {});

  int size() const { return n_; }
  double distance(int u, int v) const { return dist_[Index(u, v)]; }
  std::span<const double> row(int u) const {
    return {dist_.data() + static_cast<size_t>(u) * n_, static_cast<size_t>(n_)};
  }
  double weight(int u) const { return weights_[u]; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<std::vector<std::vector<double>>>& coordinates() const {
    return coordinates_;
  }
  double total_weight() const;
  double max_distance() const;

  // Distinct points at distance zero are only legal when this is set.
  bool semi_metric() const { return semi_metric_; }
  void set_semi_metric(bool on) { semi_metric_ = on; }

  // Same distances, different weights (zero allowed).
  MetricInstance WithWeights(std::vector<double> weights) const;

 private:
  size_t Index(int u, int v) const {
    return static_cast<size_t>(u) * static_cast<size_t>(n_) +
           static_cast<size_t>(v);
  }

  int n_ = 0;
  std::vector<double> dist_;
  std::vector<double> weights_;
  std::vector<std::string> labels_;
  std::optional<std::vector<std::vector<double>>> coordinates_;
  bool semi_metric_ = false;
};

struct MetricViolation {
  enum class Kind { kNegative, kDiagonal, kAsymmetric, kTriangle, kCoincident };
  Kind kind;
  int u = -1;
  int v = -1;
  int w = -1;  // intermediate point for triangle violations
  double excess = 0.0;
};

const char* ViolationKindName(MetricViolation::Kind kind);

// Reports negative entries, nonzero diagonal, asymmetric pairs (u < v),
// triangle violations d(u,w) > d(u,v) + d(v,w) (u < w, v distinct) and, unless
// the instance is flagged semi-metric, distinct points at distance zero.
// An empty result means the instance is a valid metric.
std::vector<MetricViolation> Validate(const MetricInstance& instance);

// Weighted nearest-center cost. Throws InputError("no centers") when empty.
double Cost(const MetricInstance& instance, std::span<const int> centers);

// Floyd-Warshall closure of the matrix; equals the matrix for valid metrics.
std::vector<double> ShortestPathClosure(const MetricInstance& instance);

struct RescaledInstance {
  MetricInstance instance;
  // Original distances = factor * rescaled distances.
  double factor = 1.0;
  // collapse_map[original point] = point in the rescaled instance.
  std::vector<int> collapse_map;
  // representative[rescaled point] = smallest original index in its group.
  std::vector<int> representative;
  bool degenerate = false;
};

// Collapses coincident points (summing weights) and divides by the minimum
// nonzero distance so that all nonzero distances are at least one.
RescaledInstance Rescale(const MetricInstance& instance);

struct SolutionReport {
  std::vector<int> centers;
  double cost = 0.0;
  std::optional<double> lp_objective;
  int64_t trials_used = 0;
  uint64_t seed = 0;
};

}  // namespace kmedian

#endif  // KMEDIAN_METRIC_H_
