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

#include <cmath>
#include <string>

#include "gnmd/error.hpp"

namespace gnmd {
namespace {

// sum_{i >= first} weight(i) p_i xi^i
template <typename Weight>
double power_sum(std::span<const double> probs, double xi, std::size_t first,
                 Weight weight) {
  double sum = 0.0;
  double power = 1.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (i >= first) sum += weight(i) * probs[i] * power;
    power *= xi;
  }
  return sum;
}

double checked_mean_degree(std::span<const double> probs) {
  const double big_d = mean_degree(probs);
  if (!(big_d > 0.0)) throw DomainError("degree distribution has zero mean");
  return big_d;
}

}  // namespace

double mean_degree(std::span<const double> probs) {
  double sum = 0.0;
  for (std::size_t i = 1; i < probs.size(); ++i) {
    sum += static_cast<double>(i) * probs[i];
  }
  return sum;
}

double g_eval(std::span<const double> probs, double x) {
  const double big_d = checked_mean_degree(probs);
  if (!(x >= 0.0) || !(x <= big_d / 2.0)) {
    throw DomainError("g_eval: x = " + std::to_string(x) + " outside [0, D/2]");
  }
  const double xi = std::sqrt(1.0 - 2.0 * x / big_d);
  return big_d - 2.0 * x -
         power_sum(probs, xi, 1, [](std::size_t i) { return static_cast<double>(i); });
}

double solve_psi(std::span<const double> probs) {
  const double q = molloy_reed_q(probs);
  if (!(q > 0.0)) {
    throw PreconditionError("solve_psi: Q = " + std::to_string(q) +
                            " <= 0, no giant component predicted");
  }
  const double half = checked_mean_degree(probs) / 2.0;
  // g(0) = 0 and g'(0) = Q/D > 0; find the first grid point where g <= 0.
  double lo = 0.0;
  double hi = half;
  for (int k = 1; k <= kPsiScanPoints; ++k) {
    const double x = k == kPsiScanPoints ? half : half * k / kPsiScanPoints;
    if (g_eval(probs, x) <= 0.0) {
      hi = x;
      break;
    }
    lo = x;
  }
  if (hi == half) {
    // No sign change strictly inside (0, D/2): the endpoint, where g vanishes
    // identically, is the first root.
    return half;
  }
  // g(lo) > 0, or lo == 0 with g increasing there; g(hi) <= 0.
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (g_eval(probs, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

double theta(std::span<const double> probs, double psi) {
  const double big_d = checked_mean_degree(probs);
  if (!(psi > 0.0) || !(psi <= big_d / 2.0)) {
    throw DomainError("theta: psi = " + std::to_string(psi) + " outside (0, D/2]");
  }
  const double xi = std::sqrt(1.0 - 2.0 * psi / big_d);
  return 1.0 - power_sum(probs, xi, 0, [](std::size_t) { return 1.0; });
}

const char* to_string(Phase phase) {
  return phase == Phase::Supercritical ? "supercritical" : "subcritical";
}

PhasePrediction predict(int d, double mu) {
  const DegreeLaw law = make_degree_law(d, mu);
  PhasePrediction p;
  p.d = d;
  p.mu = mu;
  p.lambda = law.lambda();
  p.q = molloy_reed_q(law);
  p.mu_star = mu_star(d);
  p.big_d = mean_degree(law.probs());
  p.near_critical = std::abs(mu - p.mu_star) < kNearCriticalBand;
  if (p.q > 0.0) {
    p.phase = Phase::Supercritical;
    p.psi = solve_psi(law);
    p.theta = theta(law, *p.psi);
  }
  return p;
}

}  // namespace gnmd
