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

// Reference implementations used only by tests. They share no code with the
// library beyond MetricInstance accessors.

#ifndef KMEDIAN_TESTS_SUPPORT_TEST_ORACLES_H_
#define KMEDIAN_TESTS_SUPPORT_TEST_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "kmedian/hypergraph.h"
#include "kmedian/metric.h"

namespace kmedian::testing {

using Real = long double;

// Symmetric matrix with off-diagonal entries uniform in [lo, 2 lo]; any such
// matrix satisfies the triangle inequality.
inline MetricInstance RandomBandMetric(int n, uint64_t seed, double lo = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, 2 * lo);
  std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) m[i][j] = m[j][i] = std::round(dist(rng) * 1000) / 1000;
  }
  return MetricInstance::FromMatrix(std::move(m));
}

inline MetricInstance RandomPlaneMetric(int n, uint64_t seed, double side = 10.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, side);
  std::vector<std::vector<double>> pts(n);
  for (auto& p : pts) p = {coord(rng), coord(rng)};
  return MetricInstance::FromPoints(std::move(pts));
}

// Clustered points in the plane with integer weights 1..3.
inline MetricInstance RandomClusteredMetric(int n, int groups, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> center(0.0, 20.0);
  std::normal_distribution<double> jitter(0.0, 1.0);
  std::uniform_int_distribution<int> weight(1, 3);
  std::vector<std::vector<double>> anchors(groups);
  for (auto& a : anchors) a = {center(rng), center(rng)};
  std::vector<std::vector<double>> pts(n);
  std::vector<double> weights(n);
  for (int i = 0; i < n; ++i) {
    const auto& a = anchors[i % groups];
    pts[i] = {a[0] + jitter(rng), a[1] + jitter(rng)};
    weights[i] = weight(rng);
  }
  return MetricInstance::FromPoints(std::move(pts), std::move(weights));
}

inline double ReferenceCost(const MetricInstance& inst, const std::vector<int>& centers) {
  double total = 0.0;
  for (int v = 0; v < inst.size(); ++v) {
    double best = std::numeric_limits<double>::infinity();
    for (int c : centers) best = std::min(best, inst.distance(v, c));
    total += inst.weight(v) * best;
  }
  return total;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
inline void ForEachSubset(int n, int k, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> set;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(set.size()) == k) {
      visit(set);
      return;
    }
    for (int v = start; v <= n - (k - static_cast<int>(set.size())); ++v) {
      set.push_back(v);
      rec(v + 1);
      set.pop_back();
    }
  };
  rec(0);
}

struct ReferenceOptimum {
  std::vector<int> set;
  double value = 0.0;
};

inline ReferenceOptimum ReferenceKMedian(const MetricInstance& inst, int k) {
  ReferenceOptimum best{{}, std::numeric_limits<double>::infinity()};
  ForEachSubset(inst.size(), k, [&](const std::vector<int>& s) {
    const double c = ReferenceCost(inst, s);
    if (c < best.value - 1e-12) best = {s, c};
  });
  return best;
}

inline double ReferenceCovered(const Hypergraph& g, const std::vector<int>& set) {
  double covered = 0.0;
  for (int e = 0; e < g.num_edges(); ++e) {
    bool hit = false;
    for (int u : g.edges[e]) hit = hit || std::find(set.begin(), set.end(), u) != set.end();
    if (hit) covered += g.weights.empty() ? 1.0 : g.weights[e];
  }
  return covered;
}

inline ReferenceOptimum ReferenceCoverage(const Hypergraph& g, int k) {
  ReferenceOptimum best{{}, -1.0};
  ForEachSubset(g.n, k, [&](const std::vector<int>& s) {
    const double c = ReferenceCovered(g, s);
    if (c > best.value + 1e-12) best = {s, c};
  });
  return best;
}

// Closed forms written out independently of the library.
inline Real RefG(Real p, int d) {
  return 1 + std::pow(1 - (1 - p) / d, (Real)d) + std::pow((1 - p) * (d - 1) / d, (Real)d);
}

inline Real RefH(Real p, int d) {
  Real third = 1 - (1 - p + p * d) / (d - 1);
  if (third < 0) third = 0;
  return 1 + std::pow(1 - (1 - p) / (d - 1), (Real)d) + std::pow(third, (Real)d);
}

inline Real RefPsi(Real p, int d, Real a, Real b, Real c) {
  const Real pa = std::pow(1 - (1 - p) / d, (Real)d);
  const Real x = 1 - a + a * pa;
  const Real y = 1 - b + std::exp(p - 1) * b;
  const Real q = std::pow(1 - p, (Real)d);
  const Real bracket = q - a * q + std::pow(1 - (Real)1 / d, (Real)d) * a * q;
  const Real zeta = 1 + x / 2 + y * x / 2 + c * (1 - p) * y * x + (1 - c * (1 - p)) * y * bracket;
  return zeta / (a + 1.5L * b + 3 * c);
}

// Minimum of f on [0, 1]: dense scan, then repeated local refinement.
inline std::pair<Real, Real> ScanMinimize(const std::function<Real(Real)>& f, int steps = 20000) {
  Real best_p = 0;
  Real best = f(0);
  for (int i = 1; i <= steps; ++i) {
    const Real p = (Real)i / steps;
    const Real v = f(p);
    if (v < best) {
      best = v;
      best_p = p;
    }
  }
  Real width = (Real)1 / steps;
  for (int round = 0; round < 40; ++round) {
    for (int i = -10; i <= 10; ++i) {
      const Real p = std::clamp<Real>(best_p + i * width / 10, 0, 1);
      const Real v = f(p);
      if (v < best) {
        best = v;
        best_p = p;
      }
    }
    width /= 5;
  }
  return {best_p, best};
}

}  // namespace kmedian::testing

#endif  // KMEDIAN_TESTS_SUPPORT_TEST_ORACLES_H_
