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

#ifndef GNMD_ORACLE_HPP_
#define GNMD_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "gnmd/graph.hpp"

namespace gnmd {

// Largest vertex count enumerate() accepts.
inline constexpr std::size_t kMaxEnumerationVertices = 8;
// Cap on C(C(n, 2), m), the number of edge subsets enumerate() walks.
inline constexpr double kMaxEnumerationSubsets = 1e8;

// Bitmask over the lexicographically ordered vertex pairs of K_n. Two edge
// lists describe the same labeled graph iff their keys agree. n <= 11.
std::uint64_t canonical_key(std::size_t n, std::span<const Edge> edges);

// Every labeled simple graph on n vertices with m edges and maximum degree
// at most d, each as a sorted edge list.
class EnumeratedEnsemble {
 public:
  EnumeratedEnsemble(std::size_t n, std::size_t m, int d,
                     std::vector<std::vector<Edge>> graphs);

  std::size_t n() const { return n_; }
  std::size_t m() const { return m_; }
  int d() const { return d_; }
  std::size_t count() const { return graphs_.size(); }
  const std::vector<std::vector<Edge>>& graphs() const { return graphs_; }

  // Position of the graph with these edges (any order), if present.
  std::optional<std::size_t> find(std::span<const Edge> edges) const;

 private:
  std::size_t n_;
  std::size_t m_;
  int d_;
  std::vector<std::vector<Edge>> graphs_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

// Exhaustive enumeration. Throws DomainError when n exceeds
// kMaxEnumerationVertices or C(C(n, 2), m) exceeds kMaxEnumerationSubsets.
EnumeratedEnsemble enumerate(std::size_t n, std::size_t m, int d);

struct UniformityReport {
  std::size_t count = 0;
  std::size_t trials = 0;
  std::vector<std::uint64_t> frequencies;  // per ensemble graph
  double tv_distance = 0.0;
  double chi_square = 0.0;
  std::size_t degrees_of_freedom = 0;
  double chi_square_critical = 0.0;  // 0.999 quantile

  bool chi_square_passes() const { return chi_square < chi_square_critical || count < 2; }
};

inline constexpr double kChiSquareQuantile = 0.999;

// Draws `trials` graphs with sample_graph (trial t uses stream (seed, t)) and
// tallies them against the ensemble. Throws OracleMismatch if a sample is not
// in the ensemble, PreconditionError if count >= 2 and trials < 100 * count.
UniformityReport uniformity_test(const EnumeratedEnsemble& ensemble, std::size_t trials,
                                 std::uint64_t seed);

// Distribution of Z_1 + ... + Z_n for i.i.d. truncated Poisson Z_i, by direct
// convolution.
struct SumDistribution {
  std::vector<double> pmf;  // index s = 0..d n
  std::size_t target_sum = 0;

  double at_target() const { return target_sum < pmf.size() ? pmf[target_sum] : 0.0; }
};

inline constexpr std::size_t kMaxExactSumTerms = 30;

SumDistribution exact_conditional_pmf(std::size_t n, std::size_t target_sum, int d,
                                      double lambda);

// P(Z_1 = k | Z_1 + ... + Z_n = target_sum) for k = 0..d.
std::vector<double> conditional_degree_marginal(std::size_t n, std::size_t target_sum,
                                                int d, double lambda);

}  // namespace gnmd

#endif  // GNMD_ORACLE_HPP_
