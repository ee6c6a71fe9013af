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

#ifndef GNMD_COMPONENTS_HPP_
#define GNMD_COMPONENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gnmd/graph.hpp"

namespace gnmd {

// Union-find over 0..n-1 with union by size and path halving.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  Vertex find(Vertex x);
  // Returns false if a and b were already joined.
  bool unite(Vertex a, Vertex b);
  std::size_t size_of(Vertex x) { return size_[find(x)]; }
  std::size_t element_count() const { return parent_.size(); }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
};

// Component sizes, largest first. Components of equal size are ordered by
// their smallest vertex label.
std::vector<std::size_t> component_sizes(std::size_t n, std::span<const Edge> edges);
std::vector<std::size_t> connected_components(const SimpleGraph& g);

struct ComponentReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::size_t> sizes;  // descending
  double largest_fraction = 0.0;
  double second_fraction = 0.0;
  std::vector<std::uint64_t> degree_counts;  // nu_0..nu_d
};

ComponentReport report(const SimpleGraph& g);

// max_i |nu_i / n - probs[i]| over i = 0..max(d, probs.size() - 1).
double degree_deviation(const ComponentReport& r, std::span<const double> probs);

}  // namespace gnmd

#endif  // GNMD_COMPONENTS_HPP_
