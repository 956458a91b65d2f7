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

#include <gtest/gtest.h>

#include <random>

#include "kmedian/errors.h"
#include "support/test_oracles.h"

namespace kmedian {
namespace {

MetricInstance Line(std::vector<double> xs, std::vector<double> weights = {}) {
  std::vector<std::vector<double>> pts;
  for (double x : xs) pts.push_back({x});
  return MetricInstance::FromPoints(std::move(pts), std::move(weights));
}

TEST(MetricValidate, LineIsValid) { EXPECT_TRUE(Validate(Line({0, 1, 3})).empty()); }

TEST(MetricValidate, ReportsTriangleViolation) {
  const auto inst = MetricInstance::FromMatrix({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}});
  const auto v = Validate(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, MetricViolation::Kind::kTriangle);
  EXPECT_EQ(v[0].u, 0);
  EXPECT_EQ(v[0].v, 1);
  EXPECT_EQ(v[0].w, 2);
  EXPECT_NEAR(v[0].excess, 3.0, 1e-12);
}

TEST(MetricValidate, ReportsAsymmetry) {
  const auto inst = MetricInstance::FromMatrix({{0, 1}, {2, 0}});
  const auto v = Validate(inst);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, MetricViolation::Kind::kAsymmetric);
}

TEST(MetricValidate, ReportsNegativeAndDiagonal) {
  const auto inst = MetricInstance::FromMatrix({{1, -1}, {-1, 0}});
  bool negative = false;
  bool diagonal = false;
  for (const auto& v : Validate(inst)) {
    negative = negative || v.kind == MetricViolation::Kind::kNegative;
    diagonal = diagonal || v.kind == MetricViolation::Kind::kDiagonal;
  }
  EXPECT_TRUE(negative);
  EXPECT_TRUE(diagonal);
}

TEST(MetricValidate, CoincidentPointsNeedSemiMetricFlag) {
  auto inst = MetricInstance::FromMatrix({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
  ASSERT_EQ(Validate(inst).size(), 1u);
  EXPECT_EQ(Validate(inst)[0].kind, MetricViolation::Kind::kCoincident);
  inst.set_semi_metric(true);
  EXPECT_TRUE(Validate(inst).empty());
}

TEST(MetricValidate, ValidMatrixIsItsOwnShortestPathClosure) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = testing::RandomPlaneMetric(15, seed);
    ASSERT_TRUE(Validate(inst).empty());
    const auto closure = ShortestPathClosure(inst);
    for (int u = 0; u < inst.size(); ++u) {
      for (int v = 0; v < inst.size(); ++v) {
        EXPECT_NEAR(closure[u * inst.size() + v], inst.distance(u, v), 1e-9);
      }
    }
  }
}

TEST(MetricCost, LineExamples) {
  EXPECT_DOUBLE_EQ(Cost(Line({0, 1, 3}), std::vector<int>{1}), 3.0);
  EXPECT_DOUBLE_EQ(Cost(Line({0, 1, 3}, {2, 1, 1}), std::vector<int>{2}), 8.0);
  EXPECT_DOUBLE_EQ(Cost(Line({0, 1, 3}), std::vector<int>{0, 1, 2}), 0.0);
}

TEST(MetricCost, EmptyCenterSetThrows) {
  EXPECT_THROW(Cost(Line({0, 1}), std::vector<int>{}), InputError);
}

TEST(MetricCost, MonotoneUnderInclusion) {
  std::mt19937_64 rng(5);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = testing::RandomClusteredMetric(12, 3, seed);
    std::vector<int> centers{static_cast<int>(rng() % 12)};
    double previous = Cost(inst, centers);
    for (int step = 0; step < 5; ++step) {
      centers.push_back(static_cast<int>(rng() % 12));
      const double now = Cost(inst, centers);
      EXPECT_LE(now, previous + 1e-12);
      EXPECT_NEAR(now, testing::ReferenceCost(inst, centers), 1e-9);
      previous = now;
    }
  }
}

TEST(MetricRescale, DividesByMinimumDistance) {
  const auto r = Rescale(Line({0, 0.5, 1.5}));
  EXPECT_DOUBLE_EQ(r.factor, 0.5);
  EXPECT_DOUBLE_EQ(r.instance.distance(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(r.instance.distance(1, 2), 2.0);
  EXPECT_DOUBLE_EQ(r.instance.distance(0, 2), 3.0);
  EXPECT_FALSE(r.degenerate);
}

TEST(MetricRescale, CollapsesCoincidentPoints) {
  auto inst = MetricInstance::FromMatrix({{0, 0, 2}, {0, 0, 2}, {2, 2, 0}});
  inst.set_semi_metric(true);
  const auto r = Rescale(inst);
  ASSERT_EQ(r.instance.size(), 2);
  EXPECT_DOUBLE_EQ(r.instance.weight(0), 2.0);
  EXPECT_EQ(r.collapse_map, (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(r.representative, (std::vector<int>{0, 2}));
}

TEST(MetricRescale, SinglePointIsDegenerate) {
  const auto r = Rescale(Line({4}));
  EXPECT_TRUE(r.degenerate);
  EXPECT_DOUBLE_EQ(r.factor, 1.0);
  EXPECT_EQ(r.instance.size(), 1);
}

TEST(MetricRescale, PreservesCostsUpToFactor) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = testing::RandomClusteredMetric(10, 2, seed);
    const auto r = Rescale(inst);
    testing::ForEachSubset(inst.size(), 2, [&](const std::vector<int>& c) {
      std::vector<int> mapped;
      for (int x : c) mapped.push_back(r.collapse_map[x]);
      EXPECT_NEAR(Cost(inst, c), r.factor * Cost(r.instance, mapped), 1e-9);
    });
    for (int u = 0; u < r.instance.size(); ++u) {
      for (int v = 0; v < r.instance.size(); ++v) {
        if (u != v) EXPECT_GE(r.instance.distance(u, v), 1.0 - 1e-12);
      }
    }
  }
}

TEST(MetricInstance, RejectsMalformedInput) {
  EXPECT_THROW(MetricInstance::FromMatrix({{0, 1}, {1}}), InputError);
  EXPECT_THROW(MetricInstance::FromMatrix({{0, 1}, {1, 0}}, {1.0}), InputError);
  EXPECT_THROW(MetricInstance::FromMatrix({{0, 1}, {1, 0}}, {1.0, -1.0}), InputError);
  EXPECT_THROW(MetricInstance::FromPoints({{0, 1}, {1}}), InputError);
}

}  // namespace
}  // namespace kmedian
