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

#include "kmedian/io.h"

#include <gtest/gtest.h>

#include <sstream>

#include "support/test_oracles.h"

namespace kmedian {
namespace {

TEST(InstanceJson, MatrixRoundTrip) {
  const auto inst = testing::RandomBandMetric(5, 2);
  const auto back = InstanceFromJson(InstanceToJson(inst));
  ASSERT_EQ(back.size(), 5);
  for (int u = 0; u < 5; ++u) {
    for (int v = 0; v < 5; ++v) EXPECT_EQ(back.distance(u, v), inst.distance(u, v));
  }
  EXPECT_EQ(Dump(InstanceToJson(back)), Dump(InstanceToJson(inst)));
}

TEST(InstanceJson, EuclideanWithLabels) {
  std::istringstream in(R"({"format": 1, "metric": "euclidean", "points": [[0, 0], [3, 4]],
                           "weights": [2, 1], "labels": ["a", "b"]})");
  const auto inst = InstanceFromJson(ParseJson(in));
  EXPECT_DOUBLE_EQ(inst.distance(0, 1), 5.0);
  EXPECT_DOUBLE_EQ(inst.weight(0), 2.0);
  EXPECT_EQ(inst.labels()[1], "b");
  const auto j = InstanceToJson(inst);
  EXPECT_EQ(j["metric"], "euclidean");
  EXPECT_EQ(InstanceFromJson(j).labels(), inst.labels());
}

TEST(InstanceJson, Errors) {
  std::istringstream bad("{not json");
  EXPECT_THROW(ParseJson(bad), InputError);
  EXPECT_THROW(InstanceFromJson(Json::array()), InputError);
  EXPECT_THROW(InstanceFromJson(Json{{"metric", "taxicab"}}), InputError);
  EXPECT_THROW(InstanceFromJson(Json{{"matrix", "x"}}), InputError);
  EXPECT_THROW(ParseJsonFile("/nonexistent/file.json"), InputError);
}

TEST(HypergraphJson, RoundTrip) {
  Hypergraph g{5, 3, {{0, 1, 2}, {2, 3, 4}}, {1.5, 2.0}, false};
  EXPECT_EQ(HypergraphFromJson(HypergraphToJson(g)), g);
  Hypergraph t{2, 3, {{0, 0, 1}}, {}, true};
  EXPECT_EQ(HypergraphFromJson(HypergraphToJson(t)), t);
  auto j = HypergraphToJson(g);
  j["edges"][0] = {0, 0, 1};
  EXPECT_THROW(HypergraphFromJson(j), InputError);
}

TEST(ReportJson, Fields) {
  SolutionReport r;
  r.centers = {1, 4};
  r.cost = 2.5;
  r.trials_used = 10;
  r.seed = 3;
  auto j = ReportToJson(r);
  EXPECT_EQ(j["format"], 1);
  EXPECT_TRUE(j["lp_objective"].is_null());
  EXPECT_FALSE(j.contains("stats"));
  SolveStats s;
  s.lps_solved = 7;
  j = ReportToJson(r, &s);
  EXPECT_EQ(j["stats"]["lps_solved"], 7);
}

TEST(ErrorJson, Shape) {
  const auto j = ErrorToJson(ErrorKind::kBudget, "too many");
  EXPECT_EQ(j["format"], 1);
  EXPECT_EQ(j["error"]["message"], "too many");
  EXPECT_TRUE(j["error"]["kind"].is_string());
}

TEST(Dump, TrailingNewline) {
  const std::string s = Dump(Json{{"a", 1}});
  EXPECT_EQ(s.back(), '\n');
  EXPECT_NE(s.find("  \"a\": 1"), std::string::npos);
}

}  // namespace
}  // namespace kmedian
