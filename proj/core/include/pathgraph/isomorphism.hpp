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

#ifndef PATHGRAPH_ISOMORPHISM_HPP_
#define PATHGRAPH_ISOMORPHISM_HPP_

#include <optional>
#include <vector>

#include "pathgraph/graph.hpp"

namespace pathgraph {

// Returns f with f[v] = image in h of vertex v of g, preserving edges and
// non-edges, or nullopt. Backtracking with degree and neighbor-degree
// pruning; meant for graphs of a few dozen vertices at most.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

// Checks that f is a bijection mapping E(g) exactly onto E(h).
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& f);

}  // namespace pathgraph

#endif  // PATHGRAPH_ISOMORPHISM_HPP_
