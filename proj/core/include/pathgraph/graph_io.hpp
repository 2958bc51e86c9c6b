// Copyright 2026 The pathgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PATHGRAPH_GRAPH_IO_HPP_
#define PATHGRAPH_GRAPH_IO_HPP_

#include <string>
#include <string_view>

#include "pathgraph/graph.hpp"

namespace pathgraph {

// Edge-list text: first line "n m", then m lines "u v". Blank lines and lines
// starting with '#' are skipped, except "# names: a b c ..." which sets the
// vertex name table. Throws ParseError naming the offending line.
Graph parse_edge_list(std::string_view text);

// Inverse of parse_edge_list; edges in lexicographic order.
std::string to_edge_list(const Graph& g);

// graph6 (optionally prefixed by ">>graph6<<"); trailing newline allowed.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Reads either format: graph6 if the first non-blank line is a single token
// that is not a number, edge list otherwise.
Graph parse_graph_auto(std::string_view text);

}  // namespace pathgraph

#endif  // PATHGRAPH_GRAPH_IO_HPP_
