// Copyright 2026 The gnmd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gnmd/giant.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "gnmd/error.hpp"
#include "gtest/gtest.h"

namespace gnmd {
namespace {

constexpr std::array<double, 4> kCubic = {0.0, 0.0, 0.0, 1.0};  // all mass on degree 3

std::vector<double> rate_grid() {
  std::vector<double> grid;
  for (double x = 0.01; x <= 20.0; x *= 2.0) grid.push_back(x);
  return grid;
}

TEST(GEval, VanishesAtBothEndsExactly) {
  for (int d = 2; d <= 10; ++d) {
    for (double lambda : rate_grid()) {
      const DegreeLaw law = DegreeLaw::from_rate(d, lambda);
      const double big_d = mean_degree(law.probs());
      EXPECT_EQ(g_eval(law, 0.0), 0.0);
      EXPECT_EQ(g_eval(law, big_d / 2.0), 0.0);
    }
  }
}

TEST(GEval, CubicHandValue) {
  EXPECT_NEAR(g_eval(kCubic, 5.0 / 6.0), 4.0 / 9.0, 1e-14);
}

TEST(GEval, RejectsOutsideDomain) {
  const DegreeLaw law = make_degree_law(3, 1.5);
  EXPECT_THROW(g_eval(law, -1e-9), DomainError);
  EXPECT_THROW(g_eval(law, 0.75 + 1e-9), DomainError);
}

TEST(GEval, SlopeAtZeroIsQOverD) {
  for (int d = 2; d <= 10; ++d) {
    for (double lambda : rate_grid()) {
      const DegreeLaw law = DegreeLaw::from_rate(d, lambda);
      const double big_d = mean_degree(law.probs());
      const double h = 1e-4 * big_d;
      // Second-order one-sided difference.
      const double slope =
          (-3.0 * g_eval(law, 0.0) + 4.0 * g_eval(law, h) - g_eval(law, 2.0 * h)) / (2.0 * h);
      EXPECT_NEAR(slope, molloy_reed_q(law) / big_d, 1e-6) << "d=" << d << " lambda=" << lambda;
    }
  }
}

TEST(MeanDegree, EqualsMu) {
  for (int d = 2; d <= 10; ++d) {
    for (double lambda : rate_grid()) {
      const DegreeLaw law = DegreeLaw::from_rate(d, lambda);
      EXPECT_NEAR(mean_degree(law.probs()), truncated_mean(d, lambda), 1e-10);
    }
  }
}

TEST(SolvePsi, CubicRootIsEndpoint) {
  EXPECT_DOUBLE_EQ(solve_psi(kCubic), 1.5);
  EXPECT_DOUBLE_EQ(theta(kCubic, 1.5), 1.0);
}

TEST(SolvePsi, InteriorRootMatchesDenseGrid) {
  const DegreeLaw law = make_degree_law(3, 2.0);
  const double psi = solve_psi(law);
  EXPECT_GT(psi, 0.0);
  EXPECT_LT(psi, 1.0);
  EXPECT_LE(std::abs(g_eval(law, psi)), 1e-10);

  // Independent locator: first sign change on a much finer grid, skipping
  // the trivial root at 0.
  constexpr int kPoints = 1000000;
  const double half = mean_degree(law.probs()) / 2.0;
  double first_change = -1.0;
  for (int k = 1; k < kPoints; ++k) {
    const double x = half * k / kPoints;
    if (g_eval(law, x) <= 0.0) {
      first_change = x;
      break;
    }
  }
  ASSERT_GT(first_change, 0.0);
  EXPECT_NEAR(psi, first_change, 2.0 * half / kPoints);
}

TEST(SolvePsi, PositiveBeforeRootOnScanGrid) {
  for (int d = 3; d <= 8; ++d) {
    for (double mu = mu_star(d) + 0.05; mu < d; mu += 0.25) {
      const DegreeLaw law = make_degree_law(d, mu);
      const double psi = solve_psi(law);
      const double half = mean_degree(law.probs()) / 2.0;
      EXPECT_GT(psi, 0.0);
      EXPECT_LE(psi, half);
      EXPECT_LE(std::abs(g_eval(law, psi)), 1e-10);
      for (int k = 1; k < kPsiScanPoints; ++k) {
        const double x = half * k / kPsiScanPoints;
        if (x >= psi) break;
        ASSERT_GT(g_eval(law, x), 0.0) << "d=" << d << " mu=" << mu << " x=" << x;
      }
    }
  }
}

TEST(SolvePsi, NearThresholdIsSmall) {
  const DegreeLaw law = make_degree_law(4, 1.06);
  const double psi = solve_psi(law);
  EXPECT_GT(psi, 0.0);
  EXPECT_LT(psi, 0.05);
  EXPECT_LT(theta(law, psi), 0.05);
  EXPECT_GT(theta(law, psi), 0.0);
}

TEST(SolvePsi, SubcriticalIsPreconditionError) {
  EXPECT_THROW(solve_psi(make_degree_law(4, 0.9)), PreconditionError);
  EXPECT_THROW(solve_psi(make_degree_law(2, 1.9)), PreconditionError);
}

TEST(Theta, VanishesAsPsiShrinks) {
  const DegreeLaw law = make_degree_law(3, 1.5);
  EXPECT_LT(theta(law, 1e-12), 1e-9);
  EXPECT_THROW(theta(law, 0.0), DomainError);
  EXPECT_THROW(theta(law, 0.75 + 1e-9), DomainError);
}

TEST(Theta, IsolatedVerticesExcluded) {
  for (int d = 3; d <= 8; ++d) {
    for (double mu = mu_star(d) + 0.01; mu < d; mu += 0.1) {
      const DegreeLaw law = make_degree_law(d, mu);
      const double t = theta(law, solve_psi(law));
      EXPECT_GT(t, 0.0);
      EXPECT_LE(t, 1.0 - law.prob(0) + 1e-15);
    }
  }
}

TEST(Theta, IncreasingInMeanDegree) {
  for (int d = 3; d <= 8; ++d) {
    double previous = 0.0;
    for (double mu = mu_star(d) + 0.01; mu < d - 0.01; mu += 0.05) {
      const DegreeLaw law = make_degree_law(d, mu);
      const double t = theta(law, solve_psi(law));
      EXPECT_GT(t, previous) << "d=" << d << " mu=" << mu;
      previous = t;
    }
  }
}

TEST(Predict, SubcriticalBelowThreshold) {
  const PhasePrediction p = predict(4, 0.9);
  EXPECT_EQ(p.phase, Phase::Subcritical);
  EXPECT_LT(p.q, 0.0);
  EXPECT_FALSE(p.psi);
  EXPECT_FALSE(p.theta);
  EXPECT_FALSE(p.near_critical);
}

TEST(Predict, NearCriticalAtExactThreshold) {
  const PhasePrediction p = predict(3, 3.0 * (std::sqrt(2.0) - 1.0));
  EXPECT_LT(std::abs(p.q), 1e-4);
  EXPECT_TRUE(p.near_critical);
}

TEST(Predict, SupercriticalAboveThreshold) {
  const PhasePrediction p = predict(3, 2.0);
  EXPECT_EQ(p.phase, Phase::Supercritical);
  ASSERT_TRUE(p.theta);
  ASSERT_TRUE(p.psi);
  EXPECT_GT(*p.theta, 0.0);
  EXPECT_LT(*p.theta, 1.0);
  EXPECT_LE(*p.psi, p.big_d / 2.0);
  EXPECT_NEAR(p.big_d, p.mu, 1e-10);
}

TEST(Predict, PhaseAgreesWithThreshold) {
  for (int d = 2; d <= 8; ++d) {
    for (double mu = 0.1; mu < d; mu += 0.1) {
      const PhasePrediction p = predict(d, mu);
      if (std::abs(mu - p.mu_star) < 1e-6) continue;
      EXPECT_EQ(p.phase == Phase::Supercritical, mu > p.mu_star) << "d=" << d << " mu=" << mu;
      EXPECT_EQ(p.phase == Phase::Supercritical, p.q > 0.0);
      EXPECT_EQ(p.psi.has_value(), p.phase == Phase::Supercritical);
    }
  }
}

}  // namespace
}  // namespace gnmd
