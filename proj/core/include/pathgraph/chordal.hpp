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

#ifndef PATHGRAPH_CHORDAL_HPP_
#define PATHGRAPH_CHORDAL_HPP_

#include <vector>

#include "pathgraph/clique_tree.hpp"
#include "pathgraph/graph.hpp"
#include "pathgraph/vertex_set.hpp"

namespace pathgraph {

// order[0] is eliminated first.
using EliminationOrder = std::vector<int>;

// Visit order of lexicographic BFS, ties broken by smallest index. Its
// reversal is a perfect elimination order iff g is chordal.
std::vector<int> lex_bfs(const Graph& g);

// reverse(lex_bfs(g)).
EliminationOrder lex_bfs_elimination_order(const Graph& g);

struct PeoCheck {
  bool valid = true;
  // Vertex whose later neighbors are not a clique (first in order), or -1.
  int violating_vertex = -1;
  // A hole in cyclic order, when one was found. Always present for a
  // non-chordal graph; a chordal graph with a bad order gets none.
  std::vector<int> hole;
};

PeoCheck check_peo(const Graph& g, const EliminationOrder& order);

bool is_chordal(const Graph& g);

// A hole, or empty when g is chordal.
std::vector<int> find_hole(const Graph& g);

// Maximal cliques in ascending order. Throws ContractError when `peo` is not a
// perfect elimination order.
std::vector<VertexSet> maximal_cliques(const Graph& g, const EliminationOrder& peo);
// Same using the LexBFS order; throws NotChordalError on a hole.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// Maximum-weight spanning forest of the clique intersection graph. Ties go to
// the lexicographically smallest clique index pair. Throws NotChordalError.
CliqueTree build_clique_tree(const Graph& g);

struct Separator {
  VertexSet set;
  // Witness pair separated minimally by `set`.
  int u = -1;
  int v = -1;
};

struct SeparatorSet {
  // Distinct sets, ascending.
  std::vector<Separator> members;

  bool contains(const VertexSet& s) const;
  std::vector<VertexSet> sets() const;
  // Members not strictly contained in another member.
  std::vector<VertexSet> maximal() const;
};

// The distinct labels of a clique tree, which for a chordal graph are exactly
// its minimal separators. Throws NotChordalError.
SeparatorSet minimal_separators(const Graph& g);

// Number of components of G - s holding a vertex complete to s, minus one.
// Throws ContractError when s is not a minimal separator.
int separator_multiplicity(const Graph& g, const VertexSet& s);

// True iff s separates u from v minimally.
bool is_minimal_separator_for(const Graph& g, const VertexSet& s, int u, int v);

}  // namespace pathgraph

#endif  // PATHGRAPH_CHORDAL_HPP_
