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

#ifndef GNMD_TRUNCPOISSON_HPP_
#define GNMD_TRUNCPOISSON_HPP_

#include <span>
#include <vector>

namespace gnmd {

// s_d(lambda) = sum_{j=0}^{d} lambda^j / j!, summed in ascending order with a
// running term so neither lambda^j nor j! is formed on its own.
double partial_exp_sum(int d, double lambda);

// Mean of the Poisson(lambda) law truncated to {0, ..., k}:
// lambda * s_{k-1}(lambda) / s_k(lambda). Strictly increasing in lambda and
// onto (0, k).
double truncated_mean(int k, double lambda);

// The unique lambda > 0 with truncated_mean(k, lambda) == target.
// Throws DomainError unless 0 < target < k.
double invert_truncated_mean(int k, double target);

// Truncated Poisson degree law on {0, ..., d}: probs[i] = lambda^i / (i! s_d).
// Immutable once built.
class DegreeLaw {
 public:
  // Law with the given rate; d >= 1, lambda > 0.
  static DegreeLaw from_rate(int d, double lambda);

  int max_degree() const { return d_; }
  double lambda() const { return lambda_; }
  double mean() const { return mu_; }
  std::span<const double> probs() const { return probs_; }
  double prob(int i) const { return probs_.at(static_cast<std::size_t>(i)); }

 private:
  friend DegreeLaw make_degree_law(int d, double mu);
  DegreeLaw(int d, double lambda, double mu, std::vector<double> probs)
      : d_(d), lambda_(lambda), mu_(mu), probs_(std::move(probs)) {}

  int d_;
  double lambda_;
  double mu_;
  std::vector<double> probs_;
};

// Degree law with maximum degree d >= 2 and mean mu in (0, d).
DegreeLaw make_degree_law(int d, double mu);

// Variance from the raw moments of probs.
double variance(const DegreeLaw& law);

// Molloy-Reed quantity Q = sum_i i (i - 2) p_i for an arbitrary degree
// distribution p_0..p_d.
double molloy_reed_q(std::span<const double> probs);
double molloy_reed_q(const DegreeLaw& law);

// Closed form of Q for a truncated Poisson law:
// truncated_mean(d, lambda) * (truncated_mean(d - 1, lambda) - 1). d >= 2.
double molloy_reed_q_closed_form(int d, double lambda);

// Critical mean degree truncated_mean(d, invert_truncated_mean(d - 1, 1)).
// Returns +infinity for d == 2, where no finite threshold exists. Throws
// DomainError for d < 2.
double mu_star(int d);

// Inverse-CDF lookup: smallest i with P(Z <= i) >= draw, for draw in [0, 1).
int sample_degree(const DegreeLaw& law, double uniform_draw);

}  // namespace gnmd

#endif  // GNMD_TRUNCPOISSON_HPP_
