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

#include "gnmd/components.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace gnmd {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex DisjointSets::find(Vertex x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(Vertex a, Vertex b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

std::vector<std::size_t> component_sizes(std::size_t n, std::span<const Edge> edges) {
  DisjointSets sets(n);
  for (const Edge& e : edges) sets.unite(e.u, e.v);

  // (size, smallest label) per root; roots are visited in label order so the
  // first visit of a root carries its smallest label.
  struct Component {
    std::size_t size;
    Vertex smallest;
  };
  std::vector<Component> components;
  std::vector<bool> seen(n, false);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex root = sets.find(v);
    if (!seen[root]) {
      seen[root] = true;
      components.push_back({sets.size_of(root), v});
    }
  }
  std::sort(components.begin(), components.end(), [](const Component& a, const Component& b) {
    return a.size != b.size ? a.size > b.size : a.smallest < b.smallest;
  });
  std::vector<std::size_t> sizes;
  sizes.reserve(components.size());
  for (const Component& c : components) sizes.push_back(c.size);
  return sizes;
}

std::vector<std::size_t> connected_components(const SimpleGraph& g) {
  return component_sizes(g.vertex_count(), g.edges());
}

ComponentReport report(const SimpleGraph& g) {
  ComponentReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.sizes = connected_components(g);
  assert(std::accumulate(r.sizes.begin(), r.sizes.end(), std::size_t{0}) == r.n);
  if (r.n > 0) {
    const auto n = static_cast<double>(r.n);
    r.largest_fraction = static_cast<double>(r.sizes[0]) / n;
    r.second_fraction = r.sizes.size() > 1 ? static_cast<double>(r.sizes[1]) / n : 0.0;
  }
  r.degree_counts.assign(static_cast<std::size_t>(g.max_degree()) + 1, 0);
  for (Vertex v = 0; v < r.n; ++v) ++r.degree_counts[static_cast<std::size_t>(g.degree(v))];
  return r;
}

double degree_deviation(const ComponentReport& r, std::span<const double> probs) {
  const std::size_t classes = std::max(r.degree_counts.size(), probs.size());
  const auto n = static_cast<double>(r.n);
  double worst = 0.0;
  for (std::size_t i = 0; i < classes; ++i) {
    const double observed =
        i < r.degree_counts.size() ? static_cast<double>(r.degree_counts[i]) / n : 0.0;
    const double expected = i < probs.size() ? probs[i] : 0.0;
    worst = std::max(worst, std::abs(observed - expected));
  }
  return worst;
}

}  // namespace gnmd
