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

#ifndef GNMD_GRAPH_IO_HPP_
#define GNMD_GRAPH_IO_HPP_

#include <iosfwd>
#include <span>
#include <vector>

#include "gnmd/graph.hpp"

namespace gnmd {

// Edge-list text format:
//
//   n m d
//   u v        (m lines, 0 <= u < v < n, sorted lexicographically)
//
// Several graphs in one file are separated by a blank line.
void write_graph(std::ostream& out, const SimpleGraph& g);
void write_graphs(std::ostream& out, std::span<const SimpleGraph> graphs);

// Reads one graph. Throws ParseError on malformed input, including edges
// that violate simplicity or the degree bound in the header.
SimpleGraph read_graph(std::istream& in);

// Reads every graph in a blank-line separated stream.
std::vector<SimpleGraph> read_graphs(std::istream& in);

}  // namespace gnmd

#endif  // GNMD_GRAPH_IO_HPP_
