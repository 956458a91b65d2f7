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

#include "kmedian/coreset.h"

#include <gtest/gtest.h>

#include <cmath>

#include "kmedian/errors.h"
#include "support/test_oracles.h"

namespace kmedian {
namespace {

TEST(IdentityCoreset, PassesEverythingThrough) {
  const auto inst = testing::RandomClusteredMetric(5, 2, 1);
  const auto subset = IdentityCoreset(inst);
  EXPECT_EQ(subset.indices, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(subset.weights, inst.weights());
  EXPECT_EQ(subset.epsilon, 0.0);
  EXPECT_DOUBLE_EQ(CoresetError(inst, subset, 20, 2, 3), 0.0);
}

TEST(IdentityCoreset, EmptyInstance) {
  EXPECT_EQ(IdentityCoreset(MetricInstance::FromMatrix({})).size(), 0);
}

TEST(SamplingCoreset, FallsBackToIdentityWhenBudgetCoversInstance) {
  const auto inst = testing::RandomPlaneMetric(10, 2);
  const auto subset = SamplingCoreset(inst, 2, 0.5, 1);
  EXPECT_EQ(subset.indices, IdentityCoreset(inst).indices);
  EXPECT_EQ(subset.weights, IdentityCoreset(inst).weights);
}

TEST(SamplingCoreset, SizeWeightAndDeterminism) {
  const auto inst = testing::RandomPlaneMetric(1000, 7, 100.0);
  const int64_t budget = SamplingBudget(1000, 3, 0.3, 20.0);
  EXPECT_EQ(budget, static_cast<int64_t>(std::ceil(20.0 * 3 * std::log(1000.0) / 0.09)));
  // Budget here exceeds n, so shrink the constant to force sampling.
  SamplingOptions options;
  options.size_constant = 1.0;
  const auto a = SamplingCoreset(inst, 3, 0.3, 1, options);
  const auto b = SamplingCoreset(inst, 3, 0.3, 1, options);
  EXPECT_EQ(a.indices, b.indices);
  EXPECT_EQ(a.weights, b.weights);
  EXPECT_LE(a.size(), SamplingBudget(1000, 3, 0.3, 1.0));
  EXPECT_LT(a.size(), 1000);
  EXPECT_NEAR(a.total_weight(), 1000.0, 150.0);
  for (double w : a.weights) EXPECT_GT(w, 0.0);
  for (size_t i = 1; i < a.indices.size(); ++i) EXPECT_LT(a.indices[i - 1], a.indices[i]);
  const double error = CoresetError(inst, a, 50, 3, 9);
  RecordProperty("sampling_coreset_error", std::to_string(error));
  EXPECT_TRUE(std::isfinite(error));
}

TEST(SamplingCoreset, RejectsBadParameters) {
  const auto inst = testing::RandomPlaneMetric(10, 2);
  EXPECT_THROW(SamplingCoreset(inst, 0, 0.5, 1), InputError);
  EXPECT_THROW(SamplingCoreset(inst, 2, 1.5, 1), InputError);
}

TEST(GreedyKCenter, FarthestPointOrder) {
  const auto inst = MetricInstance::FromPoints({{0}, {1}, {10}, {4}});
  EXPECT_EQ(GreedyKCenter(inst, 3), (std::vector<int>{0, 2, 3}));
}

TEST(CoresetError, AllCenterProbeIsSkipped) {
  const auto inst = testing::RandomPlaneMetric(4, 3);
  WeightedSubset half;
  half.indices = {0, 1};
  half.weights = {2, 2};
  // k = n makes every probe cost zero, so nothing is measured.
  EXPECT_DOUBLE_EQ(CoresetError(inst, half, 10, 4, 1), 0.0);
}

}  // namespace
}  // namespace kmedian
