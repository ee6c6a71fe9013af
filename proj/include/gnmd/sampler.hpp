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

#ifndef GNMD_SAMPLER_HPP_
#define GNMD_SAMPLER_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gnmd/graph.hpp"
#include "gnmd/rng.hpp"
#include "gnmd/truncpoisson.hpp"

namespace gnmd {

// Degrees x_0..x_{n-1} in [0, d] with sum 2m.
struct DegreeSequence {
  std::size_t n = 0;
  std::size_t m = 0;
  int d = 0;
  std::vector<int> degrees;
};

struct SamplerLimits {
  // Degree-sequence proposals allowed per sequence: factor * sqrt(n).
  double conditioning_factor = 1e4;
  // Configuration-model restarts allowed per graph.
  std::size_t simplicity_restarts = 1000;
};

// Counters filled in by the sampling routines when a non-null pointer is
// passed. Accumulates across calls.
struct SamplerStats {
  std::uint64_t proposals = 0;        // degree-vector draws
  std::uint64_t sequences = 0;        // accepted degree sequences
  std::uint64_t pairings = 0;         // configuration multigraphs built
  std::uint64_t simple = 0;           // of which simple
  std::vector<double> alphas;         // alpha_diagnostic per pairing
};

// Counts (c_0..c_d) of n i.i.d. draws from the law: a multinomial vector
// drawn by sequential binomials. Same law as tallying n sample_degree draws.
std::vector<std::uint64_t> draw_degree_counts(const DegreeLaw& law, std::size_t n,
                                              Rng& rng);

// n i.i.d. draws from the law, one uniform each.
std::vector<int> draw_iid_degrees(const DegreeLaw& law, std::size_t n, Rng& rng);

// Degree vector distributed like n i.i.d. truncated Poisson variables
// conditioned on summing to target_sum, i.e. P(x) proportional to 1/prod x_i!.
// The rate is mean-matched to target_sum / n. Proposals are drawn as degree
// counts and, once the sum matches, laid out in uniformly random order.
// Throws InfeasibleInstance if target_sum > d n and RetryLimitExceeded past
// the proposal cap.
std::vector<int> sample_degrees_with_sum(std::size_t n, std::size_t target_sum, int d,
                                         Rng& rng, const SamplerLimits& limits = {},
                                         SamplerStats* stats = nullptr);

// Degree sequence with sum 2m; see sample_degrees_with_sum.
DegreeSequence sample_degree_sequence(std::size_t n, std::size_t m, int d, Rng& rng,
                                      const SamplerLimits& limits = {},
                                      SamplerStats* stats = nullptr);

// Uniform random pairing of the 2m half-edges of x.
Multigraph pair_configuration(const DegreeSequence& x, Rng& rng);

// No loops and no repeated unordered pair.
bool is_simple(const Multigraph& g);

// Exactly uniform sample from the graphs on n labeled vertices with m edges
// and maximum degree at most d. Each rejection draws a fresh degree sequence.
SimpleGraph sample_graph(std::size_t n, std::size_t m, int d, Rng& rng,
                         const SamplerLimits& limits = {},
                         SamplerStats* stats = nullptr);

// Uniform random d-regular simple graph on n vertices (d n even).
SimpleGraph sample_regular_graph(std::size_t n, int d, Rng& rng,
                                 const SamplerLimits& limits = {},
                                 SamplerStats* stats = nullptr);

// Keeps each edge independently with probability p.
SimpleGraph percolate(const SimpleGraph& g, double p, Rng& rng);

// sum_i x_i (x_i - 1) / (2m).
double alpha_diagnostic(const DegreeSequence& x);

}  // namespace gnmd

#endif  // GNMD_SAMPLER_HPP_
