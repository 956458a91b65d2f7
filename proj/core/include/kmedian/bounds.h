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

#ifndef KMEDIAN_BOUNDS_H_
#define KMEDIAN_BOUNDS_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kmedian {

using Real = long double;

// (10 - 6 sqrt 2) / 7.
Real LeaderProbabilityStar();

Real G(Real p, int d);
Real H(Real p, int d);

struct TPrimeTerms {
  Real t1_5 = 0;
  Real t2 = 0;
  Real t3 = 0;
};

struct EnvelopeInputs {
  Real p = 0;
  int d_a = 1;
  Real mu_a = 1;
  Real mu_b = 0;
  Real mu_c = 0;

  // Throws InputError unless p in [0,1], d_a >= 1, every mu >= 0 and the mus
  // sum to 1 within 1e-12.
  void Validate() const;
};

TPrimeTerms TPrime(const EnvelopeInputs& in);
// 1 + 0.5 t'_{1.5} + 0.5 t'_2 + t'_3.
Real CostPrime(const EnvelopeInputs& in);
// Numerator of psi after the Jensen relaxations.
Real Zeta(const EnvelopeInputs& in);
// Throws InputError when mu_a + 1.5 mu_b + 3 mu_c is zero.
Real Psi(const EnvelopeInputs& in);

struct ScalarOptimum {
  Real arg = 0;
  Real value = 0;
};

// Minimizes a unimodal f on [lo, hi] to an interval width of `tolerance`.
ScalarOptimum GoldenSectionMinimize(const std::function<Real(Real)>& f, Real lo, Real hi,
                                    Real tolerance = 1e-10L);

struct MinMaxGReport {
  Real p_closed_form = 0;
  Real p_minimizer = 0;  // golden-section argmin of max_d g
  Real min_max = 0;      // min_p max_d g
  Real max_min = 0;      // max_d min_p g
  Real gap = 0;          // |min_max - max_min|
  int d_star = 0;        // argmax_d g(p*, d)
  int d_max = 0;
  Real alpha = 0;        // g(p*, 3)
  Real tail_bound = 0;   // 1 + e^{p*-1} + (1-p*)^7 / e, covers every d >= 7
  Real limit = 0;        // lim_{d -> inf} g(p*, d) = 1 + e^{p*-1}
};

// Throws InternalError when the minimizer, argmax or gap checks regress.
MinMaxGReport MinMaxG(int d_max = 200);

struct MaxMinHReport {
  Real value = 0;
  int d = 0;
  Real p = 0;
  std::vector<Real> inner_min;  // min_p h(p, d) for d = d_lo..d_hi
  int d_lo = 3;
};

MaxMinHReport MaxMinH(int d_lo = 3, int d_hi = 200);

struct EnvelopeWitness {
  std::string check;
  int d_a = 0;
  Real mu_a = 0;
  Real mu_b = 0;
  Real mu_c = 0;
  Real value = 0;
  Real limit = 0;
};

struct EnvelopeReport {
  Real p = 0;
  int resolution = 0;
  int d_max = 0;
  Real alpha = 0;
  long long grid_points = 0;
  long long violations = 0;  // psi > alpha + 1e-9
  Real max_psi = 0;
  EnvelopeWitness argmax;
  long long convexity_violations = 0;    // second differences in mu_c < -1e-9
  long long monotonicity_violations = 0;  // d >= 3 face not increasing in mu_a
  Real face_d1_max = 0;  // max over mu of psi(p, 1, mu, 1 - mu, 0), 1e-3 grid
  Real face_d2_max = 0;
  Real corner_c_max = 0;  // max_d zeta(p, d, 0, 0, 1)
  Real corner_d3 = 0;     // psi(p, 3, 1, 0, 0)
  std::vector<EnvelopeWitness> witnesses;  // first few failures of any check

  bool ok() const {
    return violations == 0 && convexity_violations == 0 && monotonicity_violations == 0 &&
           witnesses.empty();
  }
};

inline constexpr Real kFaceD1Bound = 1.46L;
inline constexpr Real kFaceD2Bound = 1.537L;

// Grid check of psi <= alpha over d_a in 1..d_max and the mu simplex at step
// 1/resolution, plus the structural claims used to reduce to g.
EnvelopeReport VerifyEnvelope(int resolution = 100, std::optional<Real> p = std::nullopt,
                              int d_max = 50, int threads = 1);

struct AnalysisConstants {
  Real p_star = 0;
  int d_star = 3;
  Real alpha_alg = 0;
  Real hardness_value = 0;
  int hardness_d = 0;
  Real hardness_p = 0;
};

AnalysisConstants ComputeConstants();

}  // namespace kmedian

#endif  // KMEDIAN_BOUNDS_H_
