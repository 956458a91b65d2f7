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

#include "kmedian/metric.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "kmedian/errors.h"

namespace kmedian {
namespace {

void CheckWeights(std::vector<double>& weights, int n) {
  if (weights.empty()) weights.assign(n, 1.0);
  if (static_cast<int>(weights.size()) != n) {
    throw InputError("weights length " + std::to_string(weights.size()) +
                     " does not match point count " + std::to_string(n));
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InputError("weights must be finite and nonnegative");
    }
  }
}

void CheckLabels(const std::vector<std::string>& labels, int n) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n) {
    throw InputError("labels length does not match point count");
  }
}

}  // namespace

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput:
      return "input";
    case ErrorKind::kBudget:
      return "budget";
    case ErrorKind::kInfeasible:
      return "infeasible";
    case ErrorKind::kInternal:
      return "internal";
  }
  return "unknown";
}

MetricInstance MetricInstance::FromMatrix(std::vector<std::vector<double>> matrix,
                                          std::vector<double> weights,
                                          std::vector<std::string> labels) {
  MetricInstance m;
  m.n_ = static_cast<int>(matrix.size());
  m.dist_.resize(static_cast<size_t>(m.n_) * m.n_);
  for (int u = 0; u < m.n_; ++u) {
    if (static_cast<int>(matrix[u].size()) != m.n_) {
      throw InputError("distance matrix must be square");
    }
    for (int v = 0; v < m.n_; ++v) {
      if (!std::isfinite(matrix[u][v])) {
        throw InputError("distance matrix entries must be finite");
      }
      m.dist_[m.Index(u, v)] = matrix[u][v];
    }
  }
  CheckWeights(weights, m.n_);
  CheckLabels(labels, m.n_);
  m.weights_ = std::move(weights);
  m.labels_ = std::move(labels);
  return m;
}

MetricInstance MetricInstance::FromPoints(std::vector<std::vector<double>> points,
                                          std::vector<double> weights,
                                          std::vector<std::string> labels) {
  MetricInstance m;
  m.n_ = static_cast<int>(points.size());
  const size_t dim = points.empty() ? 0 : points.front().size();
  for (const auto& p : points) {
    if (p.size() != dim) throw InputError("points must share one dimension");
  }
  m.dist_.resize(static_cast<size_t>(m.n_) * m.n_);
  for (int u = 0; u < m.n_; ++u) {
    for (int v = u + 1; v < m.n_; ++v) {
      double s = 0.0;
      for (size_t a = 0; a < dim; ++a) {
        const double diff = points[u][a] - points[v][a];
        s += diff * diff;
      }
      const double d = std::sqrt(s);
      m.dist_[m.Index(u, v)] = d;
      m.dist_[m.Index(v, u)] = d;
    }
  }
  CheckWeights(weights, m.n_);
  CheckLabels(labels, m.n_);
  m.weights_ = std::move(weights);
  m.labels_ = std::move(labels);
  m.coordinates_ = std::move(points);
  return m;
}

double MetricInstance::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

double MetricInstance::max_distance() const {
  double best = 0.0;
  for (double d : dist_) best = std::max(best, d);
  return best;
}

MetricInstance MetricInstance::WithWeights(std::vector<double> weights) const {
  MetricInstance m = *this;
  CheckWeights(weights, n_);
  m.weights_ = std::move(weights);
  return m;
}

const char* ViolationKindName(MetricViolation::Kind kind) {
  switch (kind) {
    case MetricViolation::Kind::kNegative:
      return "negative";
    case MetricViolation::Kind::kDiagonal:
      return "diagonal";
    case MetricViolation::Kind::kAsymmetric:
      return "asymmetric";
    case MetricViolation::Kind::kTriangle:
      return "triangle";
    case MetricViolation::Kind::kCoincident:
      return "coincident";
  }
  return "unknown";
}

std::vector<MetricViolation> Validate(const MetricInstance& instance) {
  using Kind = MetricViolation::Kind;
  std::vector<MetricViolation> out;
  const int n = instance.size();
  for (int u = 0; u < n; ++u) {
    if (std::abs(instance.distance(u, u)) > kMetricTolerance) {
      out.push_back({Kind::kDiagonal, u, u, -1, std::abs(instance.distance(u, u))});
    }
    for (int v = 0; v < n; ++v) {
      if (instance.distance(u, v) < -kMetricTolerance) {
        out.push_back({Kind::kNegative, u, v, -1, -instance.distance(u, v)});
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double gap = std::abs(instance.distance(u, v) - instance.distance(v, u));
      if (gap > kMetricTolerance) out.push_back({Kind::kAsymmetric, u, v, -1, gap});
      if (!instance.semi_metric() && instance.distance(u, v) == 0.0 &&
          instance.distance(v, u) == 0.0) {
        out.push_back({Kind::kCoincident, u, v, -1, 0.0});
      }
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      const double direct = instance.distance(u, w);
      for (int v = 0; v < n; ++v) {
        if (v == u || v == w) continue;
        const double excess =
            direct - (instance.distance(u, v) + instance.distance(v, w));
        if (excess > kMetricTolerance) out.push_back({Kind::kTriangle, u, v, w, excess});
      }
    }
  }
  return out;
}

double Cost(const MetricInstance& instance, std::span<const int> centers) {
  if (centers.empty()) throw InputError("no centers");
  for (int c : centers) {
    if (c < 0 || c >= instance.size()) throw InputError("center index out of range");
  }
  double total = 0.0;
  for (int v = 0; v < instance.size(); ++v) {
    if (instance.weight(v) == 0.0) continue;
    const auto row = instance.row(v);
    double best = std::numeric_limits<double>::infinity();
    for (int c : centers) best = std::min(best, row[c]);
    total += instance.weight(v) * best;
  }
  return total;
}

std::vector<double> ShortestPathClosure(const MetricInstance& instance) {
  const int n = instance.size();
  std::vector<double> d(static_cast<size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) d[static_cast<size_t>(u) * n + v] = instance.distance(u, v);
  }
  for (int w = 0; w < n; ++w) {
    for (int u = 0; u < n; ++u) {
      const double duw = d[static_cast<size_t>(u) * n + w];
      for (int v = 0; v < n; ++v) {
        double& duv = d[static_cast<size_t>(u) * n + v];
        duv = std::min(duv, duw + d[static_cast<size_t>(w) * n + v]);
      }
    }
  }
  return d;
}

RescaledInstance Rescale(const MetricInstance& instance) {
  const int n = instance.size();
  RescaledInstance out;

  double min_nonzero = std::numeric_limits<double>::infinity();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double d = instance.distance(u, v);
      if (d > 0.0) min_nonzero = std::min(min_nonzero, d);
    }
  }
  if (!std::isfinite(min_nonzero)) {
    out.instance = instance;
    out.factor = 1.0;
    out.collapse_map.resize(n);
    std::iota(out.collapse_map.begin(), out.collapse_map.end(), 0);
    out.representative = out.collapse_map;
    out.degenerate = true;
    return out;
  }

  // Distance zero is an equivalence relation in a (semi-)metric, so grouping
  // by the first coincident predecessor is enough.
  out.collapse_map.assign(n, -1);
  for (int u = 0; u < n; ++u) {
    if (out.collapse_map[u] != -1) continue;
    const int group = static_cast<int>(out.representative.size());
    out.representative.push_back(u);
    out.collapse_map[u] = group;
    for (int v = u + 1; v < n; ++v) {
      if (out.collapse_map[v] == -1 && instance.distance(u, v) == 0.0) {
        out.collapse_map[v] = group;
      }
    }
  }

  const int m = static_cast<int>(out.representative.size());
  std::vector<std::vector<double>> matrix(m, std::vector<double>(m, 0.0));
  std::vector<double> weights(m, 0.0);
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      matrix[a][b] =
          instance.distance(out.representative[a], out.representative[b]) / min_nonzero;
    }
  }
  for (int u = 0; u < n; ++u) weights[out.collapse_map[u]] += instance.weight(u);
  if (!instance.labels().empty()) {
    for (int a = 0; a < m; ++a) labels.push_back(instance.labels()[out.representative[a]]);
  }
  out.instance = MetricInstance::FromMatrix(std::move(matrix), std::move(weights),
                                            std::move(labels));
  out.factor = min_nonzero;
  return out;
}

}  // namespace kmedian
