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

#include "kmedian/bounds.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "kmedian/errors.h"

namespace kmedian {
namespace {

constexpr Real kGridSlack = 1e-9L;
constexpr size_t kMaxWitnesses = 16;

Real Pow(Real base, int exponent) { return std::pow(base, static_cast<Real>(exponent)); }

void Regression(const std::string& what) {
  throw InternalError("analysis regression: " + what);
}

EnvelopeInputs At(Real p, int d, Real mu_a, Real mu_b, Real mu_c) {
  EnvelopeInputs in;
  in.p = p;
  in.d_a = d;
  in.mu_a = mu_a;
  in.mu_b = mu_b;
  in.mu_c = mu_c;
  return in;
}

// Two-coordinate face mu_c = 0 used by the monotonicity and small-d claims.
Real Face(Real p, int d, Real mu) { return Psi(At(p, d, mu, 1 - mu, 0)); }

struct Shard {
  long long grid_points = 0;
  long long violations = 0;
  long long convexity_violations = 0;
  long long monotonicity_violations = 0;
  Real max_psi = -1;
  EnvelopeWitness argmax;
  std::vector<EnvelopeWitness> witnesses;

  void Witness(EnvelopeWitness w) {
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
  }
};

void CheckDegree(Real p, int d, int r, Real alpha, Shard* s) {
  const Real step = 1.0L / r;
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; i + j <= r; ++j) {
      const Real mu_a = i * step;
      const Real mu_b = j * step;
      const Real mu_c = (r - i - j) * step;
      const Real value = Psi(At(p, d, mu_a, mu_b, mu_c));
      ++s->grid_points;
      if (value > s->max_psi) {
        s->max_psi = value;
        s->argmax = {"max psi", d, mu_a, mu_b, mu_c, value, alpha};
      }
      if (value > alpha + kGridSlack) {
        ++s->violations;
        s->Witness({"psi <= alpha", d, mu_a, mu_b, mu_c, value, alpha});
      }
    }
  }

  // zeta is convex in mu_c along (mu_a fixed) and along (mu_b fixed).
  for (int fixed = 0; fixed <= r; ++fixed) {
    const int span = r - fixed;
    for (int c = 1; c < span; ++c) {
      auto along_a = [&](int cc) {
        return Zeta(At(p, d, fixed * step, (span - cc) * step, cc * step));
      };
      auto along_b = [&](int cc) {
        return Zeta(At(p, d, (span - cc) * step, fixed * step, cc * step));
      };
      const Real da = along_a(c - 1) - 2 * along_a(c) + along_a(c + 1);
      const Real db = along_b(c - 1) - 2 * along_b(c) + along_b(c + 1);
      if (da < -kGridSlack) {
        ++s->convexity_violations;
        s->Witness({"zeta convex in mu_c (mu_a fixed)", d, fixed * step, (span - c) * step,
                    c * step, da, -kGridSlack});
      }
      if (db < -kGridSlack) {
        ++s->convexity_violations;
        s->Witness({"zeta convex in mu_c (mu_b fixed)", d, (span - c) * step, fixed * step,
                    c * step, db, -kGridSlack});
      }
    }
  }

  if (d >= 3) {
    for (int i = 0; i < r; ++i) {
      const Real lo = Face(p, d, i * step);
      const Real hi = Face(p, d, (i + 1) * step);
      if (!(hi > lo)) {
        ++s->monotonicity_violations;
        s->Witness({"psi increasing in mu_a", d, i * step, 1 - i * step, 0, hi - lo, 0});
      }
    }
  }
}

Real FaceMax(Real p, int d) {
  Real best = 0;
  for (int i = 0; i <= 1000; ++i) best = std::max(best, Face(p, d, i / 1000.0L));
  return best;
}

}  // namespace

Real LeaderProbabilityStar() { return (10 - 6 * std::sqrt(2.0L)) / 7; }

Real G(Real p, int d) {
  return 1 + Pow(1 - (1 - p) / d, d) + Pow((1 - p) * (1 - 1.0L / d), d);
}

Real H(Real p, int d) {
  const Real third = 1 - std::min<Real>(1, (1 - p + p * d) / (d - 1));
  return 1 + Pow(1 - (1 - p) / (d - 1), d) + Pow(third, d);
}

void EnvelopeInputs::Validate() const {
  if (!(p >= 0 && p <= 1)) throw InputError("p must lie in [0, 1]");
  if (d_a < 1) throw InputError("d_A must be a positive integer");
  if (mu_a < 0 || mu_b < 0 || mu_c < 0) throw InputError("flows must be nonnegative");
  if (std::abs(mu_a + mu_b + mu_c - 1) > 1e-12L) throw InputError("flows must sum to 1");
}

TPrimeTerms TPrime(const EnvelopeInputs& in) {
  const int d = in.d_a;
  const Real x = Pow(1 - (1 - in.p) * in.mu_a / d, d);
  const Real e = std::exp((in.p - 1) * in.mu_b);
  const Real rest = Pow((1 - in.p) * (1 - in.mu_a / d), d);
  TPrimeTerms t;
  t.t1_5 = x;
  t.t2 = x * e;
  t.t3 = x * e * in.mu_c * (1 - in.p) + rest * e * (1 - in.mu_c * (1 - in.p));
  return t;
}

Real CostPrime(const EnvelopeInputs& in) {
  const TPrimeTerms t = TPrime(in);
  return 1 + 0.5L * t.t1_5 + 0.5L * t.t2 + t.t3;
}

Real Zeta(const EnvelopeInputs& in) {
  const Real p = in.p;
  const int d = in.d_a;
  const Real x = 1 - in.mu_a + in.mu_a * Pow(1 - (1 - p) / d, d);
  const Real y = 1 - in.mu_b + std::exp(p - 1) * in.mu_b;
  const Real q = Pow(1 - p, d);
  const Real tail = q - in.mu_a * q + Pow(1 - 1.0L / d, d) * in.mu_a * q;
  return 1 + 0.5L * x + 0.5L * y * x + in.mu_c * (1 - p) * y * x + (1 - in.mu_c * (1 - p)) * y * tail;
}

Real Psi(const EnvelopeInputs& in) {
  const Real denominator = in.mu_a + 1.5L * in.mu_b + 3 * in.mu_c;
  if (denominator == 0) throw InputError("psi: zero denominator (all flows zero)");
  return Zeta(in) / denominator;
}

ScalarOptimum GoldenSectionMinimize(const std::function<Real(Real)>& f, Real lo, Real hi,
                                    Real tolerance) {
  const Real ratio = (std::sqrt(5.0L) - 1) / 2;
  Real a = lo;
  Real b = hi;
  Real c = b - ratio * (b - a);
  Real d = a + ratio * (b - a);
  Real fc = f(c);
  Real fd = f(d);
  while (b - a > tolerance) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = f(d);
    }
  }
  // The endpoints are candidates too, since the minimum may sit on the boundary.
  ScalarOptimum best{(a + b) / 2, f((a + b) / 2)};
  for (Real x : {lo, hi}) {
    const Real fx = f(x);
    if (fx < best.value) best = {x, fx};
  }
  return best;
}

MinMaxGReport MinMaxG(int d_max) {
  MinMaxGReport r;
  r.d_max = d_max;
  r.p_closed_form = LeaderProbabilityStar();
  auto max_g = [d_max](Real p) {
    Real best = G(p, 1);
    for (int d = 2; d <= d_max; ++d) best = std::max(best, G(p, d));
    return best;
  };
  const ScalarOptimum outer = GoldenSectionMinimize(max_g, 0, 1);
  r.p_minimizer = outer.arg;
  r.min_max = outer.value;

  r.max_min = 0;
  for (int d = 1; d <= d_max; ++d) {
    const ScalarOptimum inner = GoldenSectionMinimize([d](Real p) { return G(p, d); }, 0, 1);
    r.max_min = std::max(r.max_min, inner.value);
  }
  r.gap = std::abs(r.min_max - r.max_min);

  const Real p = r.p_closed_form;
  r.alpha = G(p, 3);
  r.d_star = 1;
  for (int d = 2; d <= d_max; ++d) {
    if (G(p, d) > G(p, r.d_star)) r.d_star = d;
  }
  r.limit = 1 + std::exp(p - 1);
  r.tail_bound = r.limit + Pow(1 - p, 7) / std::exp(1.0L);

  if (std::abs(r.p_minimizer - r.p_closed_form) > 1e-6L) {
    Regression("minimizer of max_d g is " + std::to_string(static_cast<double>(r.p_minimizer)));
  }
  if (r.d_star != 3) Regression("argmax_d g(p*, d) is " + std::to_string(r.d_star));
  if (r.gap > 1e-9L) Regression("min-max gap " + std::to_string(static_cast<double>(r.gap)));
  if (r.tail_bound > 1.542L) Regression("tail bound above 1.542");
  return r;
}

MaxMinHReport MaxMinH(int d_lo, int d_hi) {
  if (d_lo < 3 || d_hi < d_lo) throw InputError("hardness range must satisfy 3 <= d_lo <= d_hi");
  MaxMinHReport r;
  r.d_lo = d_lo;
  r.value = -1;
  for (int d = d_lo; d <= d_hi; ++d) {
    const ScalarOptimum inner = GoldenSectionMinimize([d](Real p) { return H(p, d); }, 0, 1);
    r.inner_min.push_back(inner.value);
    if (inner.value > r.value) {
      r.value = inner.value;
      r.d = d;
      r.p = inner.arg;
    }
  }
  return r;
}

EnvelopeReport VerifyEnvelope(int resolution, std::optional<Real> p_override, int d_max,
                              int threads) {
  if (resolution < 100) throw InputError("envelope grid resolution must be at least 100");
  if (d_max < 1) throw InputError("envelope d_max must be positive");
  EnvelopeReport report;
  report.p = p_override.value_or(LeaderProbabilityStar());
  report.resolution = resolution;
  report.d_max = d_max;
  report.alpha = G(LeaderProbabilityStar(), 3);

  std::vector<Shard> shards(d_max);
  const int workers = std::clamp(threads, 1, d_max);
  auto work = [&](int offset) {
    for (int d = 1 + offset; d <= d_max; d += workers) {
      CheckDegree(report.p, d, resolution, report.alpha, &shards[d - 1]);
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  report.max_psi = -1;
  for (Shard& s : shards) {
    report.grid_points += s.grid_points;
    report.violations += s.violations;
    report.convexity_violations += s.convexity_violations;
    report.monotonicity_violations += s.monotonicity_violations;
    if (s.max_psi > report.max_psi) {
      report.max_psi = s.max_psi;
      report.argmax = s.argmax;
    }
    for (EnvelopeWitness& w : s.witnesses) {
      if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(std::move(w));
    }
  }

  const Real p = report.p;
  auto witness = [&](EnvelopeWitness w) {
    if (report.witnesses.size() < kMaxWitnesses) report.witnesses.push_back(std::move(w));
  };
  report.face_d1_max = FaceMax(p, 1);
  report.face_d2_max = FaceMax(p, 2);
  if (report.face_d1_max > kFaceD1Bound) {
    witness({"d = 1 face", 1, 0, 0, 0, report.face_d1_max, kFaceD1Bound});
  }
  if (d_max >= 2 && report.face_d2_max > kFaceD2Bound) {
    witness({"d = 2 face", 2, 0, 0, 0, report.face_d2_max, kFaceD2Bound});
  }
  report.corner_c_max = 0;
  for (int d = 1; d <= d_max; ++d) {
    const Real corner = Psi(At(p, d, 0, 0, 1));
    report.corner_c_max = std::max(report.corner_c_max, corner);
    if (!(corner < 1)) witness({"psi at mu_c = 1 below 1", d, 0, 0, 1, corner, 1});
  }
  report.corner_d3 = Psi(At(p, 3, 1, 0, 0));
  if (d_max >= 3 && std::abs(report.corner_d3 - report.alpha) > kGridSlack) {
    witness({"d = 3, mu_a = 1 corner equals alpha", 3, 1, 0, 0, report.corner_d3, report.alpha});
  }
  return report;
}

AnalysisConstants ComputeConstants() {
  AnalysisConstants c;
  c.p_star = LeaderProbabilityStar();
  c.d_star = 3;
  c.alpha_alg = G(c.p_star, 3);
  const MaxMinHReport hardness = MaxMinH(3, 200);
  c.hardness_value = hardness.value;
  c.hardness_d = hardness.d;
  c.hardness_p = hardness.p;
  return c;
}

}  // namespace kmedian
