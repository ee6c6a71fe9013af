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

#ifndef GNMD_GRAPH_HPP_
#define GNMD_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gnmd {

using Vertex = std::uint32_t;

// Unordered vertex pair. Simple-graph edges are stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge normalized() const { return u <= v ? *this : Edge{v, u}; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Configuration-model output: loops and repeated pairs allowed.
struct Multigraph {
  std::size_t n = 0;
  std::vector<Edge> edges;
};

// Labeled simple graph on vertices 0..n-1 with degrees at most max_degree.
// Edges are kept normalized and sorted lexicographically; adjacency is a CSR
// view over the same data.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Throws std::invalid_argument if an edge is a loop, repeats another edge,
  // references a vertex >= n, or pushes a degree above max_degree.
  SimpleGraph(std::size_t n, std::vector<Edge> edges, int max_degree);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  int max_degree() const { return max_degree_; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

 private:
  std::size_t n_ = 0;
  int max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

}  // namespace gnmd

#endif  // GNMD_GRAPH_HPP_
