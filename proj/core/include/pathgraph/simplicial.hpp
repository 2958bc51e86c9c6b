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

#ifndef PATHGRAPH_SIMPLICIAL_HPP_
#define PATHGRAPH_SIMPLICIAL_HPP_

#include <array>
#include <optional>
#include <utility>

#include "pathgraph/chordal.hpp"
#include "pathgraph/clique_tree.hpp"
#include "pathgraph/graph.hpp"

namespace pathgraph {

struct SimplicialProfile {
  int vertex = -1;
  // Q_v = N[v].
  VertexSet closed_neighborhood;
  // S_v = Q_v intersected with N(V - Q_v).
  VertexSet boundary;
  bool is_simplicial = false;
  bool is_special = false;
  bool is_co_special = false;
};

bool is_simplicial(const Graph& g, int v);

// Throws NotChordalError for a graph with a hole.
SimplicialProfile simplicial_profile(const Graph& g, int v);
// Same, reusing precomputed separators of g.
SimplicialProfile simplicial_profile(const Graph& g, int v,
                                     const SeparatorSet& separators);

// Two non-adjacent special simplicial vertices, smaller first. Follows the
// two-case induction on the number of maximal cliques over subtrees of one
// fixed clique tree. Throws ContractError for a clique (no separator exists)
// and NotChordalError for a graph with a hole.
std::pair<int, int> find_special_pair(const Graph& g);

// False unless a, b, c are distinct and pairwise non-adjacent.
bool is_asteroidal_triple(const Graph& g, int a, int b, int c);

// Lexicographically first asteroidal triple, if any.
std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g);

struct NeighborhoodAt {
  int center = -1;
  std::array<int, 3> triple{};
};

// First vertex (by index) whose neighborhood holds an asteroidal triple of
// G[N(u)], or nullopt when there is none.
std::optional<NeighborhoodAt> neighborhood_at_free(const Graph& g);

// Clique-tree test: for all cliques Q_b containing b and Q_c containing c,
// some edge of T[Q_b, Q_c] has a label inside N(a). False on adjacent or
// repeated inputs.
bool is_middle(const Graph& g, const CliqueTree& tree, int a, int b, int c);

// Definition: every b-c path meets N(a). False on adjacent or repeated inputs.
bool is_middle_by_paths(const Graph& g, int a, int b, int c);

}  // namespace pathgraph

#endif  // PATHGRAPH_SIMPLICIAL_HPP_
