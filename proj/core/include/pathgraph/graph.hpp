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

#ifndef PATHGRAPH_GRAPH_HPP_
#define PATHGRAPH_GRAPH_HPP_

#include <string>
#include <utility>
#include <vector>

#include "pathgraph/vertex_set.hpp"

namespace pathgraph {

// Finite simple undirected graph on vertices 0..order()-1 with dense bitset
// adjacency rows and an optional name table used only for I/O.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, const std::vector<std::pair<int, int>>& edges);

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const { return edge_count_; }

  // Self-loops throw ContractError; repeated edges are ignored.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  VertexSet closed_neighborhood(int v) const;
  int degree(int v) const { return rows_[v].count(); }
  VertexSet vertices() const { return VertexSet::Range(order()); }

  // Union of N(v) over v in s, minus s itself.
  VertexSet neighborhood_of(const VertexSet& s) const;
  bool is_clique(const VertexSet& s) const;
  // True iff v is adjacent to every member of s other than itself.
  bool is_complete_to(int v, const VertexSet& s) const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  // Name of v, falling back to its decimal index.
  std::string name(int v) const;
  // Names must be distinct and cover every vertex.
  void set_names(std::vector<std::string> names);
  // Index of the vertex with this name, or -1.
  int find_name(const std::string& name) const;

  bool operator==(const Graph& other) const {
    return rows_ == other.rows_;
  }

 private:
  void CheckVertex(int v) const;

  std::vector<VertexSet> rows_;
  std::vector<std::string> names_;
  int edge_count_ = 0;
};

struct InducedSubgraph {
  Graph graph;
  // to_host[i] is the host vertex of subgraph vertex i.
  std::vector<int> to_host;
  // from_host[v] is the subgraph vertex of host vertex v, or -1.
  std::vector<int> from_host;

  VertexSet lift(const VertexSet& s) const;
  VertexSet lower(const VertexSet& s) const;
};

// Vertices of the subgraph keep the relative order of their host indices.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Connected components of G minus `removed`, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g,
                                  const VertexSet& removed = VertexSet());

// Components of G[allowed].
std::vector<VertexSet> components_within(const Graph& g,
                                         const VertexSet& allowed);

// Vertices reachable from `from` inside G[allowed] (from must be allowed).
VertexSet reachable(const Graph& g, const VertexSet& allowed, int from);

// A shortest from-to path inside G[allowed], as a vertex list including both
// ends. Among shortest paths the one found by BFS with ascending neighbor
// order is returned. Empty when no path exists.
std::vector<int> shortest_path(const Graph& g, const VertexSet& allowed,
                               int from, int to);

bool is_connected(const Graph& g);

}  // namespace pathgraph

#endif  // PATHGRAPH_GRAPH_HPP_
