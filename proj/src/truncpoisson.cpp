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

#include "gnmd/truncpoisson.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gnmd/error.hpp"

namespace gnmd {
namespace {

void check_rate(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("rate must be positive and finite, got " +
                      std::to_string(lambda));
  }
}

}  // namespace

double partial_exp_sum(int d, double lambda) {
  check_rate(lambda);
  if (d < 0) throw DomainError("partial_exp_sum: d must be >= 0");
  double term = 1.0;
  double sum = 1.0;
  for (int j = 0; j < d; ++j) {
    term *= lambda / (j + 1);
    sum += term;
  }
  return sum;
}

double truncated_mean(int k, double lambda) {
  if (k < 1) throw DomainError("truncated_mean: k must be >= 1");
  return lambda * partial_exp_sum(k - 1, lambda) / partial_exp_sum(k, lambda);
}

double invert_truncated_mean(int k, double target) {
  if (k < 1) throw DomainError("invert_truncated_mean: k must be >= 1");
  if (!(target > 0.0) || !(target < k)) {
    throw DomainError("invert_truncated_mean: target " + std::to_string(target) +
                      " outside (0, " + std::to_string(k) + ")");
  }
  double lo = 0.0;
  double hi = 1.0;
  while (truncated_mean(k, hi) <= target) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) {
      throw DomainError("invert_truncated_mean: target too close to k");
    }
  }
  // truncated_mean has slope below 1 (it equals Var/lambda <= mean/lambda),
  // so a relative bracket of a few ulps pins the mean to ~1e-15.
  constexpr double kRelWidth = 4.0 * std::numeric_limits<double>::epsilon();
  while (hi - lo > kRelWidth * hi) {
    const double mid = lo + 0.5 * (hi - lo);
    if (truncated_mean(k, mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (lo <= 0.0) return hi;
  const double err_lo = std::abs(truncated_mean(k, lo) - target);
  const double err_hi = std::abs(truncated_mean(k, hi) - target);
  return err_lo < err_hi ? lo : hi;
}

DegreeLaw DegreeLaw::from_rate(int d, double lambda) {
  check_rate(lambda);
  if (d < 1) throw DomainError("degree law needs d >= 1");
  std::vector<double> probs(static_cast<std::size_t>(d) + 1);
  double term = 1.0;
  probs[0] = 1.0;
  for (int i = 1; i <= d; ++i) {
    term *= lambda / i;
    probs[static_cast<std::size_t>(i)] = term;
  }
  const double s = partial_exp_sum(d, lambda);
  for (double& p : probs) p /= s;
  return DegreeLaw(d, lambda, truncated_mean(d, lambda), std::move(probs));
}

DegreeLaw make_degree_law(int d, double mu) {
  if (d < 2) throw DomainError("make_degree_law: d must be >= 2");
  if (!(mu > 0.0) || !(mu < d)) {
    throw DomainError("make_degree_law: mean degree " + std::to_string(mu) +
                      " outside (0, " + std::to_string(d) + ")");
  }
  DegreeLaw law = DegreeLaw::from_rate(d, invert_truncated_mean(d, mu));
  law.mu_ = mu;
  return law;
}

double variance(const DegreeLaw& law) {
  double first = 0.0;
  double second = 0.0;
  const auto probs = law.probs();
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double x = static_cast<double>(i);
    first += x * probs[i];
    second += x * x * probs[i];
  }
  return second - first * first;
}

double molloy_reed_q(std::span<const double> probs) {
  double q = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double x = static_cast<double>(i);
    q += x * (x - 2.0) * probs[i];
  }
  return q;
}

double molloy_reed_q(const DegreeLaw& law) { return molloy_reed_q(law.probs()); }

double molloy_reed_q_closed_form(int d, double lambda) {
  if (d < 2) throw DomainError("molloy_reed_q_closed_form: d must be >= 2");
  return truncated_mean(d, lambda) * (truncated_mean(d - 1, lambda) - 1.0);
}

double mu_star(int d) {
  if (d < 2) throw DomainError("mu_star: d must be >= 2");
  if (d == 2) return std::numeric_limits<double>::infinity();
  return truncated_mean(d, invert_truncated_mean(d - 1, 1.0));
}

int sample_degree(const DegreeLaw& law, double uniform_draw) {
  const auto probs = law.probs();
  double cdf = 0.0;
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    cdf += probs[i];
    if (cdf >= uniform_draw) return static_cast<int>(i);
  }
  return law.max_degree();
}

}  // namespace gnmd
