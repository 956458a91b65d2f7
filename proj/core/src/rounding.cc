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

#include "kmedian/rounding.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "kmedian/errors.h"
#include "kmedian/oracle.h"
#include "kmedian/random.h"

namespace kmedian {

double AutoLeaderProbability() { return (10.0 - 6.0 * std::sqrt(2.0)) / 7.0; }

int OpenedSolution::PhysicalCenter(int cluster, const CandidateSets& candidates) const {
  const OpeningEvent& ev = events[cluster];
  return ev.leader ? candidates.leaders[cluster] : candidates.entries[ev.entry].point;
}

OpenedSolution Round(const FractionalSolution& solution, const CandidateSets& candidates,
                     double p, uint64_t seed, uint64_t stream, uint64_t trial) {
  const CounterRng rng(seed, {static_cast<uint64_t>(Stream::kRounding), stream, trial});
  OpenedSolution opened;
  opened.events.resize(candidates.k());
  for (int i = 0; i < candidates.k(); ++i) {
    OpeningEvent& ev = opened.events[i];
    const uint64_t base = 2 * static_cast<uint64_t>(i);
    if (rng.Uniform(base) < p) {
      ev.leader = true;
    } else {
      const auto& ids = candidates.by_cluster[i];
      double total = 0.0;
      for (int e : ids) total += std::max(0.0, solution.y[e]);
      const double target = rng.Uniform(base + 1) * total;
      double cumulative = 0.0;
      for (int e : ids) {
        const double y = std::max(0.0, solution.y[e]);
        if (y <= 0.0) continue;
        ev.entry = e;
        cumulative += y;
        if (target < cumulative) break;
      }
      if (ev.entry < 0) ev.entry = ids.back();
    }
    opened.centers.push_back(opened.PhysicalCenter(i, candidates));
  }
  std::sort(opened.centers.begin(), opened.centers.end());
  opened.centers.erase(std::unique(opened.centers.begin(), opened.centers.end()),
                       opened.centers.end());
  return opened;
}

std::optional<double> PointContext::DDistance(int entry) const {
  const auto it = std::lower_bound(d_entries.begin(), d_entries.end(), entry);
  if (it == d_entries.end() || *it != entry) return std::nullopt;
  return d_distance[it - d_entries.begin()];
}

PointContext BuildPointContext(int point_pos, const FractionalSolution& solution,
                               const CandidateSets& candidates, const LpModel& model,
                               const MetricInstance& instance, double epsilon) {
  PointContext ctx;
  ctx.point_pos = point_pos;
  ctx.point = model.points[point_pos];
  ctx.epsilon = epsilon;
  const int k = candidates.k();
  const auto& links = solution.x[point_pos];

  std::vector<double> flow(k, 0.0);
  std::vector<double> mean(k, 0.0);
  for (const Connection& c : links) {
    const int cluster = candidates.entries[c.entry].cluster;
    const double d = candidates.Distance(instance, ctx.point, c.entry);
    flow[cluster] += c.value;
    mean[cluster] += c.value * d;
    ctx.raw_lp_cost += c.value * d;
  }
  double s1 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < k; ++i) {
    if (flow[i] > 0.0) {
      mean[i] /= flow[i];
      s1 = std::min(s1, mean[i]);
    }
  }
  ctx.s1 = std::isfinite(s1) ? s1 : 0.0;
  ctx.cap = 3.0 * ctx.s1 * (1.0 + epsilon);

  for (int i = 0; i < k; ++i) {
    if (flow[i] > 0.0) ctx.clusters.push_back({i, flow[i], mean[i], false});
  }
  std::stable_sort(ctx.clusters.begin(), ctx.clusters.end(),
                   [](const auto& a, const auto& b) { return a.mean < b.mean; });
  ctx.rank.assign(k, -1);
  const double a_limit = 1.5 * ctx.s1 * (1.0 + 1e-12);
  for (size_t r = 0; r < ctx.clusters.size(); ++r) {
    ctx.clusters[r].in_a = ctx.clusters[r].mean <= a_limit;
    ctx.rank[ctx.clusters[r].cluster] = static_cast<int>(r);
  }

  // Clusters with s_i above the cap are left out of D; their distances are
  // capped in LP(v). Distances inside D are reported capped as well.
  const double d_limit = ctx.cap * (1.0 + 1e-12);
  std::vector<std::pair<int, double>> d;
  for (const Connection& c : links) {
    const int cluster = candidates.entries[c.entry].cluster;
    const double dist = candidates.Distance(instance, ctx.point, c.entry);
    if (mean[cluster] > d_limit) {
      ctx.lp_cost += c.value * std::min(dist, ctx.cap);
      continue;
    }
    ctx.lp_cost += c.value * dist;
    d.emplace_back(c.entry, std::min(dist, ctx.cap));
  }
  std::sort(d.begin(), d.end());
  for (const auto& [e, dist] : d) {
    ctx.d_entries.push_back(e);
    ctx.d_distance.push_back(dist);
  }
  return ctx;
}

Assignment Assign(const PointContext& context, const OpenedSolution& opened,
                  const CandidateSets& candidates, const MetricInstance& instance) {
  Assignment out;
  for (const auto& cl : context.clusters) {
    const OpeningEvent& ev = opened.events[cl.cluster];
    if (ev.leader) continue;
    if (const auto dist = context.DDistance(ev.entry)) {
      out.which = Assignment::Case::kDirect;
      out.cluster = cl.cluster;
      out.center = candidates.entries[ev.entry].point;
      out.label = cl.mean;
      out.realized = *dist;
      return out;
    }
  }
  for (const auto& cl : context.clusters) {
    if (!cl.in_a || !opened.events[cl.cluster].leader) continue;
    out.which = Assignment::Case::kLeader;
    out.cluster = cl.cluster;
    out.center = candidates.leaders[cl.cluster];
    out.label = 2.0 * cl.mean;
    out.realized = instance.distance(context.point, out.center);
    return out;
  }
  out.which = Assignment::Case::kFallback;
  out.cluster = context.clusters.empty() ? 0 : context.clusters.front().cluster;
  out.center = opened.PhysicalCenter(out.cluster, candidates);
  out.label = context.cap;
  out.realized = instance.distance(context.point, out.center);
  return out;
}

namespace {

// Candidate set of (leader, class) is the prefix of points sorted by
// distance from the leader, so its size identifies it.
class GuessCanonicalizer {
 public:
  explicit GuessCanonicalizer(const MetricInstance& instance) : instance_(instance) {
    sorted_.resize(instance.size());
    for (int u = 0; u < instance.size(); ++u) {
      const auto row = instance.row(u);
      sorted_[u].assign(row.begin(), row.end());
      std::sort(sorted_[u].begin(), sorted_[u].end());
    }
  }

  int CandidateCount(int leader, double threshold) const {
    const auto& s = sorted_[leader];
    return static_cast<int>(
        std::upper_bound(s.begin(), s.end(), threshold + kMetricTolerance) - s.begin());
  }

  bool IsCanonical(const Guess& guess) const {
    std::pair<int, int> previous{-1, -1};
    for (int i = 0; i < guess.k(); ++i) {
      const int leader = guess.leaders[i];
      const int count = CandidateCount(leader, guess.threshold(i));
      if (guess.radius_class[i] > 0) {
        const double lower = std::pow(1.0 + guess.epsilon, guess.radius_class[i]);
        if (CandidateCount(leader, lower) == count) return false;
      }
      const std::pair<int, int> token{leader, count};
      if (token < previous) return false;
      previous = token;
    }
    return true;
  }

 private:
  const MetricInstance& instance_;
  std::vector<std::vector<double>> sorted_;
};

struct Candidate {
  double cost = std::numeric_limits<double>::infinity();
  int64_t ordinal = std::numeric_limits<int64_t>::max();
  int trial = 0;
  std::vector<int> centers;
  double lp_objective = 0.0;

  bool Beats(const Candidate& other) const {
    if (cost != other.cost) return cost < other.cost;
    if (ordinal != other.ordinal) return ordinal < other.ordinal;
    return trial < other.trial;
  }
};

}  // namespace

SolutionReport Solve(const MetricInstance& instance, const SolveOptions& options,
                     SolveStats* stats) {
  if (options.k < 1) throw InputError("k must be at least 1");
  if (options.trials < 1) throw InputError("trials must be at least 1");
  if (!(options.epsilon > 0.0)) throw InputError("epsilon must be positive");
  if (instance.size() == 0) throw InputError("instance has no points");
  const double p = options.p.value_or(AutoLeaderProbability());
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("p must lie in [0, 1]");

  SolveStats local_stats;
  SolveStats& st = stats ? *stats : local_stats;
  st = SolveStats{};
  st.p = p;

  SolutionReport report;
  report.seed = options.seed;

  const RescaledInstance rescaled = Rescale(instance);
  st.rescale_factor = rescaled.factor;
  const MetricInstance& work = rescaled.instance;
  const int distinct = rescaled.degenerate && instance.size() > 0 ? 1 : work.size();
  if (options.k >= distinct) {
    report.centers = rescaled.degenerate ? std::vector<int>{0} : rescaled.representative;
    report.cost = Cost(instance, report.centers);
    report.lp_objective = 0.0;
    return report;
  }

  const WeightedSubset coreset =
      options.coreset == CoresetMode::kIdentity
          ? IdentityCoreset(work)
          : SamplingCoreset(work, options.k, options.epsilon, options.seed);
  st.coreset_size = coreset.size();

  std::vector<Guess> planted;
  std::optional<GuessEnumerator> enumerator;
  if (options.mode == SolveMode::kPlanted) {
    std::vector<int> centers;
    if (!options.planted_centers.empty()) {
      if (static_cast<int>(options.planted_centers.size()) != options.k) {
        throw InputError("planted centers must have exactly k entries");
      }
      for (int c : options.planted_centers) {
        if (c < 0 || c >= instance.size()) throw InputError("planted center out of range");
        centers.push_back(rescaled.collapse_map[c]);
      }
    } else {
      centers = BruteForceKMedian(coreset.AsWeightedInstance(work), options.k,
                                  options.oracle_budget)
                    .best_set;
    }
    planted.push_back(PlantedGuess(work, coreset, options.epsilon, centers));
  } else {
    enumerator.emplace(coreset, RadiusClasses(work, options.epsilon), options.k,
                       options.epsilon, options.guess_budget);
  }
  const GuessCanonicalizer canonical(work);

  std::mutex source_mutex;
  int64_t next_ordinal = 0;
  auto next_guess = [&](Guess& guess, int64_t& ordinal) {
    std::lock_guard<std::mutex> lock(source_mutex);
    while (true) {
      if (enumerator) {
        if (!enumerator->Next(guess)) return false;
      } else {
        if (next_ordinal >= static_cast<int64_t>(planted.size())) return false;
        guess = planted[next_ordinal];
      }
      ordinal = next_ordinal++;
      ++st.guesses_enumerated;
      if (!enumerator || !options.skip_equivalent_guesses || canonical.IsCanonical(guess)) {
        return true;
      }
    }
  };

  std::atomic<int64_t> lps{0};
  std::atomic<int64_t> infeasible{0};
  std::atomic<int64_t> trials_run{0};

  auto worker = [&](Candidate& best) {
    Guess guess;
    int64_t ordinal = 0;
    std::vector<int> physical;
    while (next_guess(guess, ordinal)) {
      const CandidateSets candidates = BuildCandidateSets(work, guess);
      SplitResult split;
      double lp_objective = 0.0;
      try {
        const LpModel model = BuildLp(coreset, candidates, work);
        const FractionalSolution solution = SolveLp(model);
        ++lps;
        lp_objective = solution.objective;
        split = SplitCenters(solution, model);
      } catch (const InfeasibleGuess&) {
        ++infeasible;
        continue;
      }
      for (int t = 0; t < options.trials; ++t) {
        const OpenedSolution opened = Round(split.solution, split.candidates, p,
                                            options.seed, static_cast<uint64_t>(ordinal),
                                            static_cast<uint64_t>(t));
        physical.clear();
        for (int c : opened.centers) physical.push_back(rescaled.representative[c]);
        std::sort(physical.begin(), physical.end());
        Candidate trial{Cost(instance, physical), ordinal, t, {}, lp_objective};
        if (trial.Beats(best)) {
          trial.centers = physical;
          best = std::move(trial);
        }
      }
      trials_run += options.trials;
    }
  };

  const int threads = std::max(1, options.threads);
  std::vector<Candidate> bests(threads);
  if (threads == 1) {
    worker(bests[0]);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          worker(bests[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  Candidate best;
  for (const Candidate& c : bests) {
    if (c.Beats(best)) best = c;
  }
  st.lps_solved = lps.load();
  st.infeasible_guesses = infeasible.load();
  if (best.centers.empty()) throw InternalError("no feasible guess produced a solution");

  report.centers = best.centers;
  report.cost = best.cost;
  report.lp_objective = best.lp_objective * rescaled.factor;
  report.trials_used = trials_run.load();
  return report;
}

}  // namespace kmedian
