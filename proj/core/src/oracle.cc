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

#include "kmedian/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "kmedian/errors.h"

namespace kmedian {
namespace {

bool NearlyEqual(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

void CheckBudget(int n, int k, int64_t budget, const char* what) {
  if (k < 0 || k > n) throw InputError(std::string(what) + ": need 0 <= k <= n");
  if (Binomial(n, k, budget) > budget) {
    throw BudgetExceeded(std::string(what) + ": C(" + std::to_string(n) + ", " +
                         std::to_string(k) + ") exceeds the oracle budget of " +
                         std::to_string(budget));
  }
}

void Diff(const std::vector<int>& before, const std::vector<int>& after, int* out, int* in) {
  *out = -1;
  *in = -1;
  for (int x : before) {
    if (!std::binary_search(after.begin(), after.end(), x)) *out = x;
  }
  for (int x : after) {
    if (!std::binary_search(before.begin(), before.end(), x)) *in = x;
  }
}

}  // namespace

int64_t Binomial(int n, int k, int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // C(n-k+i, i) = C(n-k+i-1, i-1) * (n-k+i) / i; after dividing out
  // gcd(value, i), the rest of i divides n-k+i.
  int64_t value = 1;
  for (int i = 1; i <= k; ++i) {
    const int64_t g = std::gcd(value, static_cast<int64_t>(i));
    const int64_t factor = (n - k + i) / (i / g);
    value /= g;
    if (value > cap / factor) return cap + 1;
    value *= factor;
  }
  return value;
}

RevolvingDoor::RevolvingDoor(int n, int k) : n_(n), k_(k), c_(k) {
  for (int j = 0; j < k; ++j) c_[j] = j;
}

bool RevolvingDoor::Next(int* out, int* in) {
  // Knuth's Algorithm R (TAOCP 7.2.1.3), 1-indexed through c(j) = c_[j - 1].
  if (k_ == 0 || k_ == n_) return false;
  const std::vector<int> before = c_;
  auto c = [&](int j) -> int& { return c_[j - 1]; };
  auto at = [&](int j) { return j > k_ ? n_ : c_[j - 1]; };
  const int t = k_;
  bool advanced = false;
  int j = 0;
  bool try_decrease = false;
  if (t % 2 == 1) {
    if (c(1) + 1 < at(2)) {
      ++c(1);
      advanced = true;
    } else {
      j = 2;
      try_decrease = true;
    }
  } else {
    if (c(1) > 0) {
      --c(1);
      advanced = true;
    } else {
      j = 2;
      try_decrease = false;
    }
  }
  while (!advanced) {
    if (j > t) return false;
    if (try_decrease) {
      if (c(j) >= j) {
        c(j) = c(j - 1);
        c(j - 1) = j - 2;
        advanced = true;
      } else {
        ++j;
        try_decrease = false;
      }
    } else {
      if (c(j) + 1 < at(j + 1)) {
        c(j - 1) = c(j);
        ++c(j);
        advanced = true;
      } else {
        ++j;
        try_decrease = true;
      }
    }
  }
  Diff(before, c_, out, in);
  return true;
}

OracleResult BruteForceKMedian(const MetricInstance& instance, int k, int64_t budget) {
  const int n = instance.size();
  if (k < 1) throw InputError("no centers");
  CheckBudget(n, k, budget, "brute-force k-median");

  RevolvingDoor door(n, k);
  std::vector<int> set = door.current();
  std::vector<double> nearest(n);
  std::vector<int> nearest_center(n);
  auto refresh = [&](int v) {
    const auto row = instance.row(v);
    nearest[v] = std::numeric_limits<double>::infinity();
    for (int c : set) {
      if (row[c] < nearest[v]) {
        nearest[v] = row[c];
        nearest_center[v] = c;
      }
    }
  };
  auto total = [&]() {
    double s = 0.0;
    for (int v = 0; v < n; ++v) s += instance.weight(v) * nearest[v];
    return s;
  };
  for (int v = 0; v < n; ++v) refresh(v);

  OracleResult result;
  result.best_set = set;
  result.best_value = total();
  result.enumerated = 1;
  int out = -1;
  int in = -1;
  while (door.Next(&out, &in)) {
    set = door.current();
    for (int v = 0; v < n; ++v) {
      if (nearest_center[v] == out) {
        refresh(v);
      } else if (instance.distance(v, in) < nearest[v]) {
        nearest[v] = instance.distance(v, in);
        nearest_center[v] = in;
      }
    }
    ++result.enumerated;
    const double value = total();
    if (NearlyEqual(value, result.best_value)) {
      if (set < result.best_set) result.best_set = set;
    } else if (value < result.best_value) {
      result.best_value = value;
      result.best_set = set;
    }
  }
  result.best_value = Cost(instance, result.best_set);
  return result;
}

OracleResult BruteForceCoverage(const Hypergraph& graph, int k, int64_t budget) {
  const int n = graph.n;
  CheckBudget(n, k, budget, "brute-force coverage");
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < graph.num_edges(); ++e) {
    for (int u : graph.edges[e]) {
      if (incident[u].empty() || incident[u].back() != e) incident[u].push_back(e);
    }
  }
  std::vector<int> hits(graph.num_edges(), 0);
  double covered = 0.0;
  auto add = [&](int u) {
    for (int e : incident[u]) {
      if (hits[e]++ == 0) covered += graph.weight(e);
    }
  };
  auto remove = [&](int u) {
    for (int e : incident[u]) {
      if (--hits[e] == 0) covered -= graph.weight(e);
    }
  };

  RevolvingDoor door(n, k);
  for (int u : door.current()) add(u);
  OracleResult result;
  result.best_set = door.current();
  result.best_value = covered;
  result.enumerated = 1;
  int out = -1;
  int in = -1;
  while (door.Next(&out, &in)) {
    remove(out);
    add(in);
    ++result.enumerated;
    if (NearlyEqual(covered, result.best_value)) {
      if (door.current() < result.best_set) result.best_set = door.current();
    } else if (covered > result.best_value) {
      result.best_value = covered;
      result.best_set = door.current();
    }
  }
  result.best_value = CoveredWeight(graph, result.best_set);
  return result;
}

OracleResult GreedyCoverage(const Hypergraph& graph, int k) {
  const int n = graph.n;
  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < graph.num_edges(); ++e) {
    for (int u : graph.edges[e]) {
      if (incident[u].empty() || incident[u].back() != e) incident[u].push_back(e);
    }
  }
  std::vector<bool> covered(graph.num_edges(), false);
  std::vector<bool> chosen(n, false);
  OracleResult result;
  for (int step = 0; step < std::min(k, n); ++step) {
    int best = -1;
    double best_gain = -1.0;
    for (int u = 0; u < n; ++u) {
      if (chosen[u]) continue;
      double gain = 0.0;
      for (int e : incident[u]) {
        if (!covered[e]) gain += graph.weight(e);
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = u;
      }
      ++result.enumerated;
    }
    chosen[best] = true;
    result.best_set.push_back(best);
    for (int e : incident[best]) covered[e] = true;
  }
  std::sort(result.best_set.begin(), result.best_set.end());
  result.best_value = CoveredWeight(graph, result.best_set);
  return result;
}

}  // namespace kmedian
