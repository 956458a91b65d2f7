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

#include "kmedian/relaxation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "kmedian/errors.h"

namespace kmedian {
namespace {

// Values this close to zero or to y_e are treated as exactly zero or y_e.
constexpr double kSnap = 1e-12;

bool TooClose(const MetricInstance& instance, const CandidateSets& candidates, int v,
              int entry) {
  const CandidateEntry& e = candidates.entries[entry];
  if (e.leader_copy) return false;  // d(leader, copy) = 0
  const int leader = candidates.leaders[e.cluster];
  return instance.distance(v, e.point) <
         instance.distance(leader, e.point) - kMetricTolerance;
}

}  // namespace

LpModel BuildLp(const WeightedSubset& coreset, const CandidateSets& candidates,
                const MetricInstance& instance) {
  for (int i = 0; i < candidates.k(); ++i) {
    if (candidates.by_cluster[i].empty()) throw InputError("empty candidate set");
  }
  LpModel model;
  model.candidates = candidates;
  model.points = coreset.indices;
  model.weights = coreset.weights;
  model.x_by_point.resize(coreset.size());

  LinearProgram& lp = model.program;
  for (int e = 0; e < candidates.num_entries(); ++e) {
    lp.AddVariable(0.0, "y" + std::to_string(e));
  }
  for (int pos = 0; pos < coreset.size(); ++pos) {
    const int v = coreset.indices[pos];
    for (int e = 0; e < candidates.num_entries(); ++e) {
      if (TooClose(instance, candidates, v, e)) continue;
      const double d = candidates.Distance(instance, v, e);
      model.x_by_point[pos].push_back(static_cast<int>(model.x_vars.size()));
      model.x_vars.push_back({pos, e, d});
      lp.AddVariable(coreset.weights[pos] * d,
                     "x" + std::to_string(pos) + "_" + std::to_string(e));
    }
    if (model.x_by_point[pos].empty()) throw InfeasibleGuess();
  }

  for (int i = 0; i < candidates.k(); ++i) {
    std::vector<std::pair<int, double>> row;
    for (int e : candidates.by_cluster[i]) row.emplace_back(model.y_column(e), 1.0);
    lp.AddRow(std::move(row), RowSense::kEqual, 1.0, "open" + std::to_string(i));
  }
  for (int pos = 0; pos < coreset.size(); ++pos) {
    std::vector<std::pair<int, double>> row;
    for (int xv : model.x_by_point[pos]) row.emplace_back(model.x_column(xv), 1.0);
    lp.AddRow(std::move(row), RowSense::kEqual, 1.0, "serve" + std::to_string(pos));
  }
  for (int xv = 0; xv < static_cast<int>(model.x_vars.size()); ++xv) {
    lp.AddRow({{model.x_column(xv), 1.0}, {model.y_column(model.x_vars[xv].entry), -1.0}},
              RowSense::kLessEqual, 0.0, "link" + std::to_string(xv));
  }
  return model;
}

FractionalSolution SolveLp(const LpModel& model, const SimplexOptions& options) {
  const LpResult result = SolveSimplex(model.program, options);
  if (result.status == LpStatus::kInfeasible) throw InfeasibleGuess();
  if (result.status != LpStatus::kOptimal) {
    throw InternalError(std::string("LP solve failed: ") + LpStatusName(result.status));
  }
  FractionalSolution sol;
  const int entries = model.candidates.num_entries();
  sol.y.assign(entries, 0.0);
  for (int e = 0; e < entries; ++e) sol.y[e] = result.values[model.y_column(e)];
  sol.x.resize(model.points.size());
  for (int xv = 0; xv < static_cast<int>(model.x_vars.size()); ++xv) {
    const double value = result.values[model.x_column(xv)];
    if (value > kSnap) {
      sol.x[model.x_vars[xv].point_pos].push_back({model.x_vars[xv].entry, value});
    }
  }
  sol.objective = result.objective;
  return sol;
}

SplitResult SplitCenters(const FractionalSolution& solution, const LpModel& model) {
  const CandidateSets& in = model.candidates;
  const int num_points = static_cast<int>(solution.x.size());

  // connected[e] = (value, coreset position) for every point with x_{v,e} > 0.
  std::vector<std::vector<std::pair<double, int>>> connected(in.num_entries());
  for (int pos = 0; pos < num_points; ++pos) {
    for (const Connection& c : solution.x[pos]) {
      if (c.value > kSnap) connected[c.entry].emplace_back(c.value, pos);
    }
  }

  SplitResult out;
  CandidateSets& sets = out.candidates;
  sets.leaders = in.leaders;
  sets.epsilon = in.epsilon;
  sets.by_cluster.resize(in.k());
  FractionalSolution& sol = out.solution;
  sol.x.resize(num_points);

  auto add_entry = [&](const CandidateEntry& proto, double mass) {
    const int id = sets.num_entries();
    sets.entries.push_back(proto);
    sets.by_cluster[proto.cluster].push_back(id);
    sol.y.push_back(mass);
    return id;
  };

  for (int i = 0; i < in.k(); ++i) {
    for (int e : in.by_cluster[i]) {
      const double y = solution.y[e];
      auto& points = connected[e];
      const bool qualifies = std::any_of(points.begin(), points.end(), [&](const auto& p) {
        return std::abs(p.first - y) > kSnap;
      });
      if (!qualifies) {
        const int id = add_entry(in.entries[e], y);
        for (const auto& [value, pos] : points) sol.x[pos].push_back({id, y});
        continue;
      }
      std::sort(points.begin(), points.end());
      double previous = 0.0;
      std::vector<int> copies;  // ids of copies created so far
      for (const auto& [value, pos] : points) {
        const double level = std::min(value, y);
        if (level - previous > kSnap) {
          copies.push_back(add_entry(in.entries[e], level - previous));
          previous = level;
        }
        for (int id : copies) sol.x[pos].push_back({id, sol.y[id]});
      }
      if (y - previous > kSnap) add_entry(in.entries[e], y - previous);
    }
  }
  // Each point's connections to the copies of e sum to its old x_{v,e}, so
  // the objective is unchanged.
  sol.split = true;
  sol.objective = solution.objective;
  return out;
}

double Objective(const FractionalSolution& solution, const CandidateSets& candidates,
                 const LpModel& model, const MetricInstance& instance) {
  double z = 0.0;
  for (size_t pos = 0; pos < solution.x.size(); ++pos) {
    for (const Connection& c : solution.x[pos]) {
      z += model.weights[pos] * c.value * candidates.Distance(instance, model.points[pos], c.entry);
    }
  }
  return z;
}

double MaxLpViolation(const FractionalSolution& solution, const CandidateSets& candidates,
                      const LpModel& model, const MetricInstance& instance) {
  double worst = 0.0;
  for (double y : solution.y) {
    worst = std::max(worst, -y);
    worst = std::max(worst, y - 1.0);
  }
  for (int i = 0; i < candidates.k(); ++i) {
    double mass = 0.0;
    for (int e : candidates.by_cluster[i]) mass += solution.y[e];
    worst = std::max(worst, std::abs(mass - 1.0));
  }
  for (size_t pos = 0; pos < solution.x.size(); ++pos) {
    double served = 0.0;
    for (const Connection& c : solution.x[pos]) {
      served += c.value;
      worst = std::max(worst, -c.value);
      worst = std::max(worst, c.value - solution.y[c.entry]);
      if (c.value > kSnap && TooClose(instance, candidates, model.points[pos], c.entry)) {
        worst = std::max(worst, c.value);
      }
    }
    worst = std::max(worst, std::abs(served - 1.0));
  }
  return worst;
}

double MaxSplitDeviation(const FractionalSolution& solution) {
  double worst = 0.0;
  for (const auto& row : solution.x) {
    for (const Connection& c : row) {
      worst = std::max(worst, std::min(std::abs(c.value), std::abs(c.value - solution.y[c.entry])));
    }
  }
  return worst;
}

std::optional<FractionalSolution> CanonicalSolution(const LpModel& model,
                                                    const MetricInstance& instance,
                                                    const std::vector<int>& centers,
                                                    const std::vector<int>& cluster_of_point) {
  const CandidateSets& sets = model.candidates;
  FractionalSolution sol;
  sol.y.assign(sets.num_entries(), 0.0);
  std::vector<int> open_entry(sets.k(), -1);
  for (int i = 0; i < sets.k(); ++i) {
    for (int e : sets.by_cluster[i]) {
      if (sets.entries[e].point == centers[i] && !sets.entries[e].leader_copy) {
        open_entry[i] = e;
        break;
      }
    }
    if (open_entry[i] < 0) return std::nullopt;
    sol.y[open_entry[i]] = 1.0;
  }
  sol.x.resize(model.points.size());
  for (size_t pos = 0; pos < model.points.size(); ++pos) {
    const int e = open_entry[cluster_of_point[pos]];
    if (TooClose(instance, sets, model.points[pos], e)) return std::nullopt;
    sol.x[pos].push_back({e, 1.0});
  }
  sol.objective = Objective(sol, sets, model, instance);
  sol.split = true;
  return sol;
}

void WriteLp(const LpModel& model, std::ostream& out) {
  WriteLpFormat(model.program, out);
}

}  // namespace kmedian
