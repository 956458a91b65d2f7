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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "kmedian/errors.h"
#include "support/test_oracles.h"

namespace kmedian {
namespace {

using testing::RefG;
using testing::RefH;
using testing::RefPsi;

EnvelopeInputs In(Real p, int d, Real a, Real b, Real c) {
  EnvelopeInputs in;
  in.p = p;
  in.d_a = d;
  in.mu_a = a;
  in.mu_b = b;
  in.mu_c = c;
  return in;
}

TEST(G, Examples) {
  for (int d = 1; d <= 20; ++d) EXPECT_NEAR(static_cast<double>(G(1, d)), 2.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(G(0, 1)), 1.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(G(LeaderProbabilityStar(), 3)), 1.546, 1e-3);
}

TEST(G, MatchesReference) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> p(0, 1);
  std::uniform_int_distribution<int> d(1, 200);
  for (int i = 0; i < 200; ++i) {
    const Real pp = p(rng);
    const int dd = d(rng);
    EXPECT_NEAR(static_cast<double>(G(pp, dd)), static_cast<double>(RefG(pp, dd)), 1e-13);
  }
}

TEST(H, Examples) {
  EXPECT_NEAR(static_cast<double>(H(0, 3)), 1.25, 1e-15);
  for (int d = 3; d <= 20; ++d) EXPECT_NEAR(static_cast<double>(H(1, d)), 2.0, 1e-15);
}

TEST(H, MatchesReference) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> p(0, 1);
  std::uniform_int_distribution<int> d(3, 200);
  for (int i = 0; i < 20; ++i) {
    const Real pp = p(rng);
    const int dd = d(rng);
    EXPECT_NEAR(static_cast<double>(H(pp, dd)), static_cast<double>(RefH(pp, dd)), 1e-13);
  }
}

TEST(LeaderProbabilityStar, ClosedForm) {
  const Real expected = (10 - 6 * std::sqrt(2.0L)) / 7;
  EXPECT_NEAR(static_cast<double>(LeaderProbabilityStar() - expected), 0.0, 1e-18);
  EXPECT_NEAR(static_cast<double>(LeaderProbabilityStar()), 0.216388, 1e-6);
}

TEST(GoldenSection, FindsInteriorAndEndpointMinima) {
  auto quad = GoldenSectionMinimize([](Real x) { return (x - 0.3L) * (x - 0.3L); }, 0, 1);
  EXPECT_NEAR(static_cast<double>(quad.arg), 0.3, 1e-8);
  auto lin = GoldenSectionMinimize([](Real x) { return x; }, 0, 1);
  EXPECT_EQ(lin.arg, 0);
}

TEST(MinMaxG, PinnedConstants) {
  const auto r = MinMaxG();
  EXPECT_NEAR(static_cast<double>(r.p_minimizer), 0.21638837510877567, 1e-6);
  EXPECT_EQ(r.d_star, 3);
  EXPECT_NEAR(static_cast<double>(r.alpha), 1.546, 1e-3);
  EXPECT_LE(static_cast<double>(r.gap), 1e-9);
  EXPECT_LE(static_cast<double>(r.tail_bound), 1.542);
  for (int d = 1; d <= 200; ++d) {
    EXPECT_LE(static_cast<double>(G(r.p_closed_form, d)), static_cast<double>(r.alpha) + 1e-15);
  }
}

TEST(MinMaxG, IndependentScanAgrees) {
  auto max_g = [](Real p) {
    Real m = 0;
    for (int d = 1; d <= 200; ++d) m = std::max(m, RefG(p, d));
    return m;
  };
  const auto [p, value] = testing::ScanMinimize(max_g);
  EXPECT_NEAR(static_cast<double>(p), 0.216388, 1e-5);
  EXPECT_NEAR(static_cast<double>(value), static_cast<double>(MinMaxG().min_max), 1e-9);
}

TEST(MaxMinH, PinnedHardness) {
  const auto r = MaxMinH();
  EXPECT_EQ(r.d, 11);
  EXPECT_NEAR(static_cast<double>(r.value), 1.4168990837908744, 1e-6);
  EXPECT_NEAR(static_cast<double>(r.value), 1.416, 1e-3);
  ASSERT_FALSE(r.inner_min.empty());
  EXPECT_LE(static_cast<double>(r.inner_min[0]), 1.416 + 1e-9 + 1e-3);
  EXPECT_LE(r.inner_min[0], r.value);
}

TEST(MaxMinH, IndependentScanAgreesAtOptimum) {
  const auto [p, value] = testing::ScanMinimize([](Real q) { return RefH(q, 11); });
  EXPECT_NEAR(static_cast<double>(value), 1.4168990837908744, 1e-9);
  for (int d : {3, 7, 15, 40}) {
    const auto [q, v] = testing::ScanMinimize([d](Real x) { return RefH(x, d); });
    EXPECT_LE(v, 1.4168990837908744L + 1e-9L) << d;
  }
}

TEST(TPrime, Examples) {
  const auto one = TPrime(In(1, 4, 0.2, 0.3, 0.5));
  EXPECT_NEAR(static_cast<double>(one.t1_5), 1.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(one.t2), 1.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(one.t3), 0.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(TPrime(In(0, 1, 1, 0, 0)).t1_5), 0.0, 1e-15);
}

TEST(TPrime, ReducesToGOnAFace) {
  for (int i = 0; i < 100; ++i) {
    const Real p = static_cast<Real>(i) / 99;
    for (int d = 1; d <= 10; ++d) {
      const auto t = TPrime(In(p, d, 1, 0, 0));
      EXPECT_NEAR(static_cast<double>(1 + t.t1_5 / 2 + t.t2 / 2 + t.t3),
                  static_cast<double>(G(p, d)), 1e-12);
    }
  }
}

TEST(Psi, FaceEqualsG) {
  for (int i = 0; i <= 100; ++i) {
    const Real p = static_cast<Real>(i) / 100;
    for (int d = 1; d <= 12; ++d) {
      EXPECT_NEAR(static_cast<double>(Psi(In(p, d, 1, 0, 0))), static_cast<double>(G(p, d)),
                  1e-12);
    }
  }
}

TEST(Psi, MatchesReference) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 500; ++i) {
    Real a = u(rng);
    Real b = u(rng);
    Real c = u(rng);
    const Real s = a + b + c;
    a /= s;
    b /= s;
    c = 1 - a - b;
    const Real p = u(rng);
    const int d = 1 + static_cast<int>(u(rng) * 30);
    EXPECT_NEAR(static_cast<double>(Psi(In(p, d, a, b, c))),
                static_cast<double>(RefPsi(p, d, a, b, c)), 1e-12);
  }
}

TEST(Psi, CornerBelowOne) {
  const Real p = LeaderProbabilityStar();
  for (int d = 1; d <= 50; ++d) {
    EXPECT_LT(Psi(In(p, d, 0, 0, 1)), 1);
    EXPECT_NEAR(static_cast<double>(Psi(In(p, d, 0, 0, 1))),
                static_cast<double>((3 - p + p * std::pow(1 - p, (Real)d)) / 3), 1e-15);
  }
}

TEST(Psi, FaceBounds) {
  const Real p = LeaderProbabilityStar();
  for (int i = 0; i <= 1000; ++i) {
    const Real mu = static_cast<Real>(i) / 1000;
    EXPECT_LE(Psi(In(p, 1, mu, 1 - mu, 0)), 1.46L + 1e-6L);
    EXPECT_LE(Psi(In(p, 2, mu, 1 - mu, 0)), 1.537L + 1e-6L);
  }
}

TEST(EnvelopeInputs, Validation) {
  EXPECT_THROW(In(0.5, 1, 0.5, 0.5, 0.5).Validate(), InputError);
  EXPECT_THROW(In(1.5, 1, 1, 0, 0).Validate(), InputError);
  EXPECT_THROW(In(0.5, 0, 1, 0, 0).Validate(), InputError);
  EXPECT_THROW(In(0.5, 1, 1.5, -0.5, 0).Validate(), InputError);
  EXPECT_NO_THROW(In(0.5, 1, 0.2, 0.3, 0.5).Validate());
  EXPECT_THROW(Psi(In(0.5, 1, 0, 0, 0)), InputError);
}

TEST(VerifyEnvelope, CoarseGridHolds) {
  const auto r = VerifyEnvelope(100, std::nullopt, 12, 2);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.violations, 0);
  EXPECT_LE(r.face_d1_max, kFaceD1Bound + 1e-3L);
  EXPECT_LE(r.face_d2_max, kFaceD2Bound + 1e-3L);
  EXPECT_LT(r.corner_c_max, 1);
  EXPECT_NEAR(static_cast<double>(r.corner_d3), static_cast<double>(r.alpha), 1e-9);
  EXPECT_NEAR(static_cast<double>(r.max_psi), static_cast<double>(r.alpha), 1e-9);
  EXPECT_EQ(r.argmax.d_a, 3);
}

TEST(VerifyEnvelope, PerturbedProbabilityFails) {
  const auto r = VerifyEnvelope(100, LeaderProbabilityStar() + 0.3L, 12, 2);
  EXPECT_FALSE(r.ok());
  EXPECT_GT(r.violations, 0);
  EXPECT_FALSE(r.witnesses.empty());
}

TEST(VerifyEnvelope, ThreadCountDoesNotChangeResult) {
  const auto a = VerifyEnvelope(100, std::nullopt, 6, 1);
  const auto b = VerifyEnvelope(100, std::nullopt, 6, 4);
  EXPECT_EQ(a.grid_points, b.grid_points);
  EXPECT_EQ(a.max_psi, b.max_psi);
  EXPECT_EQ(a.argmax.d_a, b.argmax.d_a);
}

TEST(ComputeConstants, WithinRanges) {
  const auto c = ComputeConstants();
  EXPECT_GT(c.alpha_alg, 1.545L);
  EXPECT_LT(c.alpha_alg, 1.547L);
  EXPECT_GT(c.hardness_value, 1.41L);
  EXPECT_LT(c.hardness_value, 1.42L);
  EXPECT_EQ(c.d_star, 3);
  EXPECT_EQ(c.hardness_d, 11);
}

}  // namespace
}  // namespace kmedian
