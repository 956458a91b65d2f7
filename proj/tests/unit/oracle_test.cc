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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "kmedian/errors.h"
#include "kmedian/gadgets.h"
#include "support/test_oracles.h"

namespace kmedian {
namespace {

MetricInstance Line(std::vector<double> xs) {
  std::vector<std::vector<double>> pts;
  for (double x : xs) pts.push_back({x});
  return MetricInstance::FromPoints(std::move(pts));
}

TEST(Binomial, SmallValuesAndCap) {
  EXPECT_EQ(Binomial(5, 2), 10);
  EXPECT_EQ(Binomial(50, 25), 126410606437752LL);
  EXPECT_EQ(Binomial(4, 5), 0);
  EXPECT_EQ(Binomial(100, 50, 1000), 1001);
  EXPECT_EQ(Binomial(7, 0), 1);
}

TEST(RevolvingDoor, VisitsEverySubsetOnceWithSingleSwaps) {
  for (int n = 1; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      RevolvingDoor door(n, k);
      std::set<std::vector<int>> seen{door.current()};
      std::vector<int> previous = door.current();
      int out = -1;
      int in = -1;
      while (door.Next(&out, &in)) {
        const auto& now = door.current();
        ASSERT_TRUE(std::is_sorted(now.begin(), now.end()));
        ASSERT_TRUE(seen.insert(now).second) << "n=" << n << " k=" << k;
        ASSERT_TRUE(std::binary_search(previous.begin(), previous.end(), out));
        ASSERT_FALSE(std::binary_search(now.begin(), now.end(), out));
        ASSERT_TRUE(std::binary_search(now.begin(), now.end(), in));
        ASSERT_FALSE(std::binary_search(previous.begin(), previous.end(), in));
        previous = now;
      }
      EXPECT_EQ(static_cast<int64_t>(seen.size()), Binomial(n, k)) << "n=" << n << " k=" << k;
    }
  }
}

TEST(BruteForceKMedian, LineExamples) {
  const auto inst = Line({0, 1, 3});
  const auto two = BruteForceKMedian(inst, 2);
  EXPECT_DOUBLE_EQ(two.best_value, 1.0);
  EXPECT_EQ(two.best_set, (std::vector<int>{0, 2}));  // lexicographically first of {0,2},{1,2}
  EXPECT_EQ(two.enumerated, 3);
  const auto one = BruteForceKMedian(inst, 1);
  EXPECT_EQ(one.best_set, (std::vector<int>{1}));
  EXPECT_DOUBLE_EQ(one.best_value, 3.0);
  EXPECT_DOUBLE_EQ(BruteForceKMedian(inst, 3).best_value, 0.0);
}

TEST(BruteForceKMedian, MatchesReferenceEnumeration) {
  for (uint64_t seed = 0; seed < 25; ++seed) {
    const auto inst = seed % 2 ? testing::RandomClusteredMetric(11, 3, seed)
                               : testing::RandomBandMetric(11, seed);
    for (int k = 1; k <= 4; ++k) {
      const auto got = BruteForceKMedian(inst, k);
      const auto want = testing::ReferenceKMedian(inst, k);
      EXPECT_NEAR(got.best_value, want.value, 1e-9);
      EXPECT_NEAR(got.best_value, Cost(inst, got.best_set), 0.0);
      EXPECT_EQ(got.enumerated, Binomial(11, k));
    }
  }
}

TEST(BruteForceKMedian, NoProbedSubsetBeatsIt) {
  const auto inst = testing::RandomPlaneMetric(12, 4);
  const auto best = BruteForceKMedian(inst, 3);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> all(12);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(3);
    EXPECT_LE(best.best_value, Cost(inst, all) + 1e-12);
  }
}

TEST(BruteForceKMedian, BudgetExceeded) {
  const auto inst = testing::RandomPlaneMetric(30, 1);
  EXPECT_THROW(BruteForceKMedian(inst, 15, 1000), BudgetExceeded);
}

Hypergraph Graph(int n, int d, std::vector<std::vector<int>> edges) {
  Hypergraph g;
  g.n = n;
  g.d = d;
  g.edges = std::move(edges);
  return g;
}

TEST(BruteForceCoverage, Examples) {
  EXPECT_DOUBLE_EQ(BruteForceCoverage(Graph(3, 3, {{0, 1, 2}}), 1).best_value, 1.0);
  const auto two_edges = Graph(4, 2, {{0, 1}, {2, 3}});
  EXPECT_DOUBLE_EQ(BruteForceCoverage(two_edges, 1).best_value, 1.0);
  const auto k2 = BruteForceCoverage(two_edges, 2);
  EXPECT_DOUBLE_EQ(k2.best_value, 2.0);
  EXPECT_EQ(k2.best_set, (std::vector<int>{0, 2}));
  EXPECT_DOUBLE_EQ(CoveredWeight(two_edges, std::vector<int>{0, 2}), 2.0);
}

TEST(BruteForceCoverage, MatchesReferenceAndBeatsGreedyBound) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Hypergraph g = RandomHypergraph(12, 3, 25, seed);
    g.weights.resize(25);
    std::mt19937_64 rng(seed);
    for (double& w : g.weights) w = 1 + static_cast<double>(rng() % 5);
    for (int k = 1; k <= 4; ++k) {
      const auto exact = BruteForceCoverage(g, k);
      EXPECT_NEAR(exact.best_value, testing::ReferenceCoverage(g, k).value, 1e-9);
      EXPECT_EQ(exact.best_value, CoveredWeight(g, exact.best_set));
      const auto greedy = GreedyCoverage(g, k);
      EXPECT_GE(greedy.best_value, (1 - std::exp(-1.0)) * exact.best_value - 1e-9);
      EXPECT_LE(greedy.best_value, exact.best_value + 1e-9);
    }
  }
}

TEST(BruteForceCoverage, PlantedCoverIsFull) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const auto planted = PlantedCoverHypergraph(8, 3, 30, seed);
    const auto r = BruteForceCoverage(planted.graph, 4);
    EXPECT_DOUBLE_EQ(r.best_value, 30.0);
  }
}

TEST(GreedyCoverage, Basics) {
  const auto g = Graph(6, 2, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_DOUBLE_EQ(GreedyCoverage(g, 0).best_value, 0.0);
  EXPECT_DOUBLE_EQ(GreedyCoverage(g, 3).best_value, 3.0);
  EXPECT_EQ(GreedyCoverage(g, 3).best_set, (std::vector<int>{0, 2, 4}));
}

}  // namespace
}  // namespace kmedian
