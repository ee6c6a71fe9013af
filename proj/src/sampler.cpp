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

#include "gnmd/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/random/binomial_distribution.hpp>

#include "gnmd/error.hpp"

namespace gnmd {
namespace {

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(items[i - 1], items[j]);
  }
}

void check_instance(std::size_t n, std::size_t target_sum, int d) {
  if (n == 0) throw DomainError("vertex count must be positive");
  if (d < 1) throw DomainError("maximum degree must be positive");
  if (target_sum > static_cast<std::size_t>(d) * n) {
    throw InfeasibleInstance("degree sum " + std::to_string(target_sum) +
                             " exceeds d * n = " +
                             std::to_string(static_cast<std::size_t>(d) * n));
  }
}

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n, std::vector<Edge> edges, int max_degree)
    : n_(n), max_degree_(max_degree), edges_(std::move(edges)) {
  std::vector<std::size_t> degree(n, 0);
  for (Edge& e : edges_) {
    e = e.normalized();
    if (e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("loop in simple graph");
    ++degree[e.u];
    ++degree[e.v];
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("repeated edge in simple graph");
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] > static_cast<std::size_t>(max_degree)) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " exceeds maximum degree");
    }
    offsets_[v + 1] = offsets_[v] + degree[v];
  }
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
}

std::vector<std::uint64_t> draw_degree_counts(const DegreeLaw& law, std::size_t n,
                                              Rng& rng) {
  const auto probs = law.probs();
  const std::size_t classes = probs.size();
  // Tail masses summed from the top so small conditional ratios stay accurate.
  std::vector<double> tail(classes + 1, 0.0);
  for (std::size_t i = classes; i-- > 0;) tail[i] = tail[i + 1] + probs[i];

  std::vector<std::uint64_t> counts(classes, 0);
  auto remaining = static_cast<long long>(n);
  for (std::size_t i = 0; i + 1 < classes && remaining > 0; ++i) {
    const double p = std::min(1.0, probs[i] / tail[i]);
    boost::random::binomial_distribution<long long, double> binomial(remaining, p);
    const long long c = binomial(rng);
    counts[i] = static_cast<std::uint64_t>(c);
    remaining -= c;
  }
  counts[classes - 1] += static_cast<std::uint64_t>(remaining);
  return counts;
}

std::vector<int> draw_iid_degrees(const DegreeLaw& law, std::size_t n, Rng& rng) {
  std::vector<int> degrees(n);
  for (int& x : degrees) x = sample_degree(law, rng.uniform01());
  return degrees;
}

std::vector<int> sample_degrees_with_sum(std::size_t n, std::size_t target_sum, int d,
                                         Rng& rng, const SamplerLimits& limits,
                                         SamplerStats* stats) {
  check_instance(n, target_sum, d);
  const auto full = static_cast<std::size_t>(d) * n;
  if (target_sum == 0 || target_sum == full) {
    // Single feasible vector.
    if (stats) ++stats->proposals, ++stats->sequences;
    return std::vector<int>(n, target_sum == 0 ? 0 : d);
  }
  const double mean = static_cast<double>(target_sum) / static_cast<double>(n);
  const DegreeLaw law = DegreeLaw::from_rate(d, invert_truncated_mean(d, mean));
  const auto cap = static_cast<std::uint64_t>(
      std::ceil(limits.conditioning_factor * std::sqrt(static_cast<double>(n))));

  for (std::uint64_t attempt = 0; attempt < cap; ++attempt) {
    const auto counts = draw_degree_counts(law, n, rng);
    if (stats) ++stats->proposals;
    std::size_t sum = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) sum += i * counts[i];
    if (sum != target_sum) continue;

    std::vector<int> degrees;
    degrees.reserve(n);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      degrees.insert(degrees.end(), counts[i], static_cast<int>(i));
    }
    shuffle(degrees, rng);
    if (stats) ++stats->sequences;
    return degrees;
  }
  throw RetryLimitExceeded("no degree vector with sum " + std::to_string(target_sum) +
                           " after " + std::to_string(cap) + " proposals (n = " +
                           std::to_string(n) + ", d = " + std::to_string(d) + ")");
}

DegreeSequence sample_degree_sequence(std::size_t n, std::size_t m, int d, Rng& rng,
                                      const SamplerLimits& limits, SamplerStats* stats) {
  return DegreeSequence{n, m, d, sample_degrees_with_sum(n, 2 * m, d, rng, limits, stats)};
}

Multigraph pair_configuration(const DegreeSequence& x, Rng& rng) {
  std::vector<Vertex> tokens;
  tokens.reserve(2 * x.m);
  for (std::size_t v = 0; v < x.degrees.size(); ++v) {
    tokens.insert(tokens.end(), static_cast<std::size_t>(x.degrees[v]),
                  static_cast<Vertex>(v));
  }
  if (tokens.size() != 2 * x.m) {
    throw std::invalid_argument("degree sequence does not sum to 2m");
  }
  shuffle(tokens, rng);
  Multigraph g{x.n, {}};
  g.edges.reserve(x.m);
  for (std::size_t i = 0; i + 1 < tokens.size(); i += 2) {
    g.edges.push_back(Edge{tokens[i], tokens[i + 1]});
  }
  return g;
}

bool is_simple(const Multigraph& g) {
  // Bucket the larger endpoints by smaller endpoint, then look for repeats
  // inside each bucket.
  std::vector<std::size_t> start(g.n + 1, 0);
  for (const Edge& e : g.edges) {
    if (e.u == e.v) return false;
    ++start[std::min(e.u, e.v) + 1];
  }
  std::partial_sum(start.begin(), start.end(), start.begin());
  std::vector<Vertex> upper(g.edges.size());
  std::vector<std::size_t> cursor(start.begin(), start.end() - 1);
  for (const Edge& e : g.edges) {
    const Edge n = e.normalized();
    upper[cursor[n.u]++] = n.v;
  }
  for (std::size_t v = 0; v < g.n; ++v) {
    auto first = upper.begin() + static_cast<std::ptrdiff_t>(start[v]);
    auto last = upper.begin() + static_cast<std::ptrdiff_t>(start[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) return false;
  }
  return true;
}

double alpha_diagnostic(const DegreeSequence& x) {
  if (x.m == 0) throw DomainError("alpha_diagnostic: m must be positive");
  double sum = 0.0;
  for (int k : x.degrees) sum += static_cast<double>(k) * (k - 1);
  return sum / (2.0 * static_cast<double>(x.m));
}

SimpleGraph sample_graph(std::size_t n, std::size_t m, int d, Rng& rng,
                         const SamplerLimits& limits, SamplerStats* stats) {
  if (m == 0) throw DomainError("sample_graph: m must be positive");
  if (d < 2) throw DomainError("sample_graph: d must be >= 2");
  check_instance(n, 2 * m, d);
  for (std::size_t restart = 0; restart < limits.simplicity_restarts; ++restart) {
    const DegreeSequence x = sample_degree_sequence(n, m, d, rng, limits, stats);
    Multigraph g = pair_configuration(x, rng);
    const bool simple = is_simple(g);
    if (stats) {
      ++stats->pairings;
      stats->alphas.push_back(alpha_diagnostic(x));
      if (simple) ++stats->simple;
    }
    if (simple) return SimpleGraph(n, std::move(g.edges), d);
  }
  throw RetryLimitExceeded("no simple configuration after " +
                           std::to_string(limits.simplicity_restarts) +
                           " restarts (n = " + std::to_string(n) +
                           ", m = " + std::to_string(m) + ", d = " + std::to_string(d) + ")");
}

SimpleGraph sample_regular_graph(std::size_t n, int d, Rng& rng,
                                 const SamplerLimits& limits, SamplerStats* stats) {
  if (d < 1) throw DomainError("sample_regular_graph: d must be positive");
  if (static_cast<std::size_t>(d) >= n || (static_cast<std::size_t>(d) * n) % 2 != 0) {
    throw InfeasibleInstance("no " + std::to_string(d) + "-regular graph on " +
                             std::to_string(n) + " vertices");
  }
  const DegreeSequence x{n, static_cast<std::size_t>(d) * n / 2, d,
                         std::vector<int>(n, d)};
  for (std::size_t restart = 0; restart < limits.simplicity_restarts; ++restart) {
    Multigraph g = pair_configuration(x, rng);
    const bool simple = is_simple(g);
    if (stats) {
      ++stats->pairings;
      if (simple) ++stats->simple;
    }
    if (simple) return SimpleGraph(n, std::move(g.edges), d);
  }
  throw RetryLimitExceeded("no simple " + std::to_string(d) + "-regular configuration after " +
                           std::to_string(limits.simplicity_restarts) + " restarts");
}

SimpleGraph percolate(const SimpleGraph& g, double p, Rng& rng) {
  if (!(p >= 0.0) || !(p <= 1.0)) throw DomainError("percolate: p outside [0, 1]");
  std::vector<Edge> kept;
  kept.reserve(static_cast<std::size_t>(p * static_cast<double>(g.edge_count())) + 16);
  for (const Edge& e : g.edges()) {
    if (rng.uniform01() < p) kept.push_back(e);
  }
  return SimpleGraph(g.vertex_count(), std::move(kept), g.max_degree());
}

}  // namespace gnmd
