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

#include "gnmd/oracle.hpp"

#include <cmath>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>

#include "gnmd/error.hpp"
#include "gnmd/parallel.hpp"
#include "gnmd/rng.hpp"
#include "gnmd/sampler.hpp"
#include "gnmd/truncpoisson.hpp"

namespace gnmd {
namespace {

std::size_t pair_index(std::size_t n, Vertex u, Vertex v) {
  return u * n - static_cast<std::size_t>(u) * (u + 1) / 2 + (v - u - 1);
}

double binomial_coefficient(double n, double k) {
  if (k < 0 || k > n) return 0.0;
  return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

// Walks m-subsets of the pair list in lexicographic order, skipping any
// prefix that already violates the degree bound.
class Enumerator {
 public:
  Enumerator(std::size_t n, std::size_t m, int d) : m_(m), d_(d), degree_(n, 0) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs_.push_back({u, v});
    }
  }

  std::vector<std::vector<Edge>> run() {
    walk(0);
    return std::move(found_);
  }

 private:
  void walk(std::size_t first) {
    if (chosen_.size() == m_) {
      found_.push_back(chosen_);
      return;
    }
    const std::size_t needed = m_ - chosen_.size();
    for (std::size_t i = first; i + needed <= pairs_.size(); ++i) {
      const Edge e = pairs_[i];
      if (degree_[e.u] >= d_ || degree_[e.v] >= d_) continue;
      ++degree_[e.u];
      ++degree_[e.v];
      chosen_.push_back(e);
      walk(i + 1);
      chosen_.pop_back();
      --degree_[e.u];
      --degree_[e.v];
    }
  }

  std::size_t m_;
  int d_;
  std::vector<int> degree_;
  std::vector<Edge> pairs_;
  std::vector<Edge> chosen_;
  std::vector<std::vector<Edge>> found_;
};

std::vector<double> truncated_pmf(int d, double lambda) {
  const DegreeLaw law = DegreeLaw::from_rate(d, lambda);
  return {law.probs().begin(), law.probs().end()};
}

std::vector<double> convolve_power(std::span<const double> pmf, std::size_t copies) {
  std::vector<double> result{1.0};
  for (std::size_t c = 0; c < copies; ++c) {
    std::vector<double> next(result.size() + pmf.size() - 1, 0.0);
    for (std::size_t s = 0; s < result.size(); ++s) {
      for (std::size_t k = 0; k < pmf.size(); ++k) next[s + k] += result[s] * pmf[k];
    }
    result = std::move(next);
  }
  return result;
}

void check_exact_size(std::size_t n, int d) {
  if (n == 0 || n > kMaxExactSumTerms) {
    throw DomainError("exact sum distribution needs 1 <= n <= " +
                      std::to_string(kMaxExactSumTerms));
  }
  if (d < 1) throw DomainError("exact sum distribution needs d >= 1");
}

}  // namespace

std::uint64_t canonical_key(std::size_t n, std::span<const Edge> edges) {
  if (n > 11) throw DomainError("canonical_key supports n <= 11");
  std::uint64_t key = 0;
  for (const Edge& raw : edges) {
    const Edge e = raw.normalized();
    if (e.u == e.v || e.v >= n) throw DomainError("canonical_key: not a simple edge");
    key |= std::uint64_t{1} << pair_index(n, e.u, e.v);
  }
  return key;
}

EnumeratedEnsemble::EnumeratedEnsemble(std::size_t n, std::size_t m, int d,
                                       std::vector<std::vector<Edge>> graphs)
    : n_(n), m_(m), d_(d), graphs_(std::move(graphs)) {
  index_.reserve(graphs_.size());
  for (std::size_t i = 0; i < graphs_.size(); ++i) {
    if (!index_.emplace(canonical_key(n_, graphs_[i]), i).second) {
      throw std::invalid_argument("duplicate graph in ensemble");
    }
  }
}

std::optional<std::size_t> EnumeratedEnsemble::find(std::span<const Edge> edges) const {
  if (edges.size() != m_) return std::nullopt;
  const auto it = index_.find(canonical_key(n_, edges));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

EnumeratedEnsemble enumerate(std::size_t n, std::size_t m, int d) {
  if (n > kMaxEnumerationVertices) {
    throw DomainError("enumeration supports n <= " + std::to_string(kMaxEnumerationVertices));
  }
  const double pairs = static_cast<double>(n * (n - (n > 0 ? 1 : 0)) / 2);
  const double subsets = binomial_coefficient(pairs, static_cast<double>(m));
  if (subsets > kMaxEnumerationSubsets) {
    throw DomainError("enumeration would walk about " + std::to_string(subsets) +
                      " edge subsets (limit 1e8)");
  }
  return EnumeratedEnsemble(n, m, d, Enumerator(n, m, d).run());
}

UniformityReport uniformity_test(const EnumeratedEnsemble& ensemble, std::size_t trials,
                                 std::uint64_t seed) {
  UniformityReport r;
  r.count = ensemble.count();
  r.trials = trials;
  if (r.count == 0) throw PreconditionError("uniformity_test: empty ensemble");
  if (r.count >= 2 && trials < 100 * r.count) {
    throw PreconditionError("uniformity_test: need at least 100 trials per graph (" +
                            std::to_string(100 * r.count) + ")");
  }
  std::vector<std::uint32_t> hit(trials);
  parallel_for(trials, [&](std::size_t t) {
    Rng rng = Rng::stream(seed, t);
    const SimpleGraph g = sample_graph(ensemble.n(), ensemble.m(), ensemble.d(), rng);
    const auto index = ensemble.find(g.edges());
    if (!index) {
      throw OracleMismatch("trial " + std::to_string(t) +
                           " produced a graph outside the enumerated ensemble");
    }
    hit[t] = static_cast<std::uint32_t>(*index);
  });

  r.frequencies.assign(r.count, 0);
  for (std::uint32_t i : hit) ++r.frequencies[i];

  const double expected = static_cast<double>(trials) / static_cast<double>(r.count);
  double l1 = 0.0;
  for (std::uint64_t f : r.frequencies) {
    const double diff = static_cast<double>(f) - expected;
    l1 += std::abs(diff);
    r.chi_square += diff * diff / expected;
  }
  r.tv_distance = 0.5 * l1 / static_cast<double>(trials);
  r.degrees_of_freedom = r.count - 1;
  if (r.degrees_of_freedom > 0) {
    const boost::math::chi_squared_distribution<double> reference(
        static_cast<double>(r.degrees_of_freedom));
    r.chi_square_critical = boost::math::quantile(reference, kChiSquareQuantile);
  }
  return r;
}

SumDistribution exact_conditional_pmf(std::size_t n, std::size_t target_sum, int d,
                                      double lambda) {
  check_exact_size(n, d);
  const auto pmf = truncated_pmf(d, lambda);
  return SumDistribution{convolve_power(pmf, n), target_sum};
}

std::vector<double> conditional_degree_marginal(std::size_t n, std::size_t target_sum,
                                                int d, double lambda) {
  check_exact_size(n, d);
  const auto pmf = truncated_pmf(d, lambda);
  const auto rest = convolve_power(pmf, n - 1);
  std::vector<double> marginal(pmf.size(), 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    if (k <= target_sum && target_sum - k < rest.size()) {
      marginal[k] = pmf[k] * rest[target_sum - k];
      total += marginal[k];
    }
  }
  if (!(total > 0.0)) throw DomainError("target sum has zero probability");
  for (double& p : marginal) p /= total;
  return marginal;
}

}  // namespace gnmd
