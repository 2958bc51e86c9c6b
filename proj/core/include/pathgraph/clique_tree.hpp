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

#ifndef PATHGRAPH_CLIQUE_TREE_HPP_
#define PATHGRAPH_CLIQUE_TREE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "pathgraph/graph.hpp"
#include "pathgraph/vertex_set.hpp"

namespace pathgraph {

// Tree (or forest, one tree per graph component) over maximal cliques.
// The label of an edge is the intersection of its endpoint cliques.
struct CliqueTree {
  std::vector<VertexSet> cliques;
  std::vector<std::pair<int, int>> edges;

  int node_count() const { return static_cast<int>(cliques.size()); }
  VertexSet label(std::size_t edge) const {
    return cliques[edges[edge].first] & cliques[edges[edge].second];
  }
  std::vector<VertexSet> labels() const;
  std::vector<std::vector<int>> adjacency() const;

  // Nodes on the tree path from a to b inclusive; empty if disconnected.
  std::vector<int> path(int a, int b) const;
  // Nodes whose clique contains v.
  std::vector<int> nodes_containing(int v) const;

  // Relabels nodes so cliques are in ascending order and edges are normalized
  // (i < j, sorted). Useful for comparing trees.
  CliqueTree canonical() const;
};

// Structural problems with `tree` as a clique tree of g, or an empty string.
// Checks: cliques are exactly the maximal cliques of g (computed here by a
// plain subset scan), the edges form a forest with one tree per component,
// and every T^v is connected. With require_paths each T^v must be a path.
std::string clique_tree_defect(const Graph& g, const CliqueTree& tree,
                               bool require_paths);

std::string to_json(const CliqueTree& tree);
std::string to_dot(const CliqueTree& tree, const Graph* names = nullptr);

}  // namespace pathgraph

#endif  // PATHGRAPH_CLIQUE_TREE_HPP_
