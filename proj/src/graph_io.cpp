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

#include "gnmd/graph_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "gnmd/error.hpp"

namespace gnmd {

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.max_degree() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graphs(std::ostream& out, std::span<const SimpleGraph> graphs) {
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i > 0) out << '\n';
    write_graph(out, graphs[i]);
  }
}

SimpleGraph read_graph(std::istream& in) {
  long long n = -1;
  long long m = -1;
  long long d = -1;
  if (!(in >> n >> m >> d) || n < 0 || m < 0 || d < 0) {
    throw ParseError("expected header 'n m d' with non-negative integers");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v)) {
      throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge " + std::to_string(i) + " has endpoint outside [0, n)");
    }
    edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  try {
    return SimpleGraph(static_cast<std::size_t>(n), std::move(edges), static_cast<int>(d));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

std::vector<SimpleGraph> read_graphs(std::istream& in) {
  std::vector<SimpleGraph> graphs;
  for (;;) {
    in >> std::ws;
    if (in.peek() == std::char_traits<char>::eof()) break;
    graphs.push_back(read_graph(in));
  }
  return graphs;
}

}  // namespace gnmd
