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

#include "pathgraph/simplicial.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "pathgraph/errors.hpp"

namespace pathgraph {

bool is_simplicial(const Graph& g, int v) {
  return g.is_clique(g.neighbors(v));
}

SimplicialProfile simplicial_profile(const Graph& g, int v) {
  return simplicial_profile(g, v, minimal_separators(g));
}

SimplicialProfile simplicial_profile(const Graph& g, int v,
                                     const SeparatorSet& separators) {
  SimplicialProfile p;
  p.vertex = v;
  p.closed_neighborhood = g.closed_neighborhood(v);
  const VertexSet outside = g.vertices() - p.closed_neighborhood;
  for (int x : p.closed_neighborhood) {
    if (g.neighbors(x).intersects(outside)) p.boundary.insert(x);
  }
  p.is_simplicial = is_simplicial(g, v);
  if (!p.is_simplicial || !separators.contains(p.boundary)) return p;
  p.is_special = true;
  for (const auto& m : separators.members) {
    if (m.set != p.boundary && p.boundary.is_subset_of(m.set)) {
      p.is_special = false;
      break;
    }
  }
  p.is_co_special = components(g, p.boundary).size() == 2;
  return p;
}

namespace {

// Induction over the subtree of `tree` spanned by `nodes`.
class SpecialPairSearch {
 public:
  explicit SpecialPairSearch(const CliqueTree& tree)
      : tree_(tree), adj_(tree.adjacency()) {}

  std::pair<int, int> Run(const std::vector<int>& nodes) {
    std::vector<char> in(tree_.node_count(), 0);
    for (int x : nodes) in[x] = 1;
    // Edges inside the subtree, in ascending endpoint order.
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : tree_.edges) {
      if (in[a] && in[b]) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    if (edges.empty()) throw ContractError("no separator exists");

    std::vector<VertexSet> labels;
    for (auto [a, b] : edges) labels.push_back(tree_.cliques[a] & tree_.cliques[b]);
    std::vector<VertexSet> maximal;
    for (const auto& s : labels) {
      bool top = true;
      for (const auto& t : labels) {
        if (s != t && s.is_subset_of(t)) top = false;
      }
      if (top && std::find(maximal.begin(), maximal.end(), s) == maximal.end()) {
        maximal.push_back(s);
      }
    }
    std::sort(maximal.begin(), maximal.end());

    if (maximal.size() == 1) {
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (labels[e] != maximal[0]) continue;
        const auto& q = tree_.cliques[edges[e].first];
        const auto& q2 = tree_.cliques[edges[e].second];
        return {(q - q2).first(), (q2 - q).first()};
      }
    }

    const VertexSet& s = maximal[0];
    const VertexSet& s2 = maximal[1];
    std::size_t e1 = 0;
    while (labels[e1] != s) ++e1;
    std::size_t e2 = 0;
    while (labels[e2] != s2) ++e2;
    // Orient both edges so that q1 and q1p are the endpoints facing each
    // other along the tree path.
    auto [a, b] = edges[e1];
    auto [c, d] = edges[e2];
    const auto route = tree_.path(a, c);
    int q1 = a, q2 = b;
    if (std::find(route.begin(), route.end(), b) != route.end()) std::swap(q1, q2);
    const auto back = tree_.path(c, q1);
    int q1p = c, q2p = d;
    if (std::find(back.begin(), back.end(), d) != back.end()) std::swap(q1p, q2p);

    const int v = PickOutside(Side(q1, q2, in), q1);
    const int w = PickOutside(Side(q1p, q2p, in), q1p);
    return {v, w};
  }

 private:
  // Nodes of the side of edge (cut, keep) holding `keep`, plus `cut`.
  std::vector<int> Side(int cut, int keep, const std::vector<char>& in) const {
    std::vector<int> out{cut};
    std::vector<char> seen(tree_.node_count(), 0);
    seen[cut] = 1;
    std::vector<int> stack{keep};
    seen[keep] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      out.push_back(x);
      for (int y : adj_[x]) {
        if (in[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int PickOutside(const std::vector<int>& nodes, int cut) {
    const auto [v, w] = Run(nodes);
    return tree_.cliques[cut].contains(v) ? w : v;
  }

  const CliqueTree& tree_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

std::pair<int, int> find_special_pair(const Graph& g) {
  const CliqueTree tree = build_clique_tree(g);
  if (tree.node_count() < 2) throw ContractError("no separator exists");
  // The induction works on one connected tree. Components of the clique
  // forest that are single cliques carry no separator.
  const auto adj = tree.adjacency();
  std::vector<int> nodes;
  std::vector<char> seen(tree.node_count(), 0);
  for (int start = 0; start < tree.node_count() && nodes.size() < 2; ++start) {
    if (seen[start]) continue;
    nodes.clear();
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      nodes.push_back(x);
      for (int y : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  if (nodes.size() < 2) throw ContractError("no separator exists");
  std::sort(nodes.begin(), nodes.end());
  SpecialPairSearch search(tree);
  auto [v, w] = search.Run(nodes);
  if (v > w) std::swap(v, w);

  const auto separators = minimal_separators(g);
  for (int x : {v, w}) {
    const auto p = simplicial_profile(g, x, separators);
    if (!p.is_special) {
      throw InternalInconsistency("special-pair search returned vertex " +
                                  std::to_string(x) + " which is not special");
    }
  }
  if (g.adjacent(v, w) || v == w) {
    throw InternalInconsistency("special-pair search returned adjacent vertices");
  }
  return {v, w};
}

bool is_asteroidal_triple(const Graph& g, int a, int b, int c) {
  if (a == b || b == c || a == c) return false;
  if (g.adjacent(a, b) || g.adjacent(b, c) || g.adjacent(a, c)) return false;
  const VertexSet all = g.vertices();
  auto linked_avoiding = [&](int x, int y, int z) {
    return reachable(g, all - g.closed_neighborhood(z), x).contains(y);
  };
  return linked_avoiding(b, c, a) && linked_avoiding(a, c, b) &&
         linked_avoiding(a, b, c);
}

std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (is_asteroidal_triple(g, a, b, c)) return std::array<int, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<NeighborhoodAt> neighborhood_at_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    const auto sub = induced_subgraph(g, g.neighbors(u));
    if (auto t = find_asteroidal_triple(sub.graph)) {
      NeighborhoodAt out;
      out.center = u;
      for (int i = 0; i < 3; ++i) out.triple[i] = sub.to_host[(*t)[i]];
      return out;
    }
  }
  return std::nullopt;
}

namespace {

bool NonAdjacentTriple(const Graph& g, int a, int b, int c) {
  return a != b && b != c && a != c && !g.adjacent(a, b) && !g.adjacent(b, c) &&
         !g.adjacent(a, c);
}

}  // namespace

bool is_middle(const Graph& g, const CliqueTree& tree, int a, int b, int c) {
  if (!NonAdjacentTriple(g, a, b, c)) return false;
  const VertexSet& na = g.neighbors(a);
  for (int qb : tree.nodes_containing(b)) {
    for (int qc : tree.nodes_containing(c)) {
      const auto route = tree.path(qb, qc);
      // Different trees of a clique forest: no path joins b and c at all.
      if (route.empty()) continue;
      bool cut = false;
      for (std::size_t i = 0; i + 1 < route.size() && !cut; ++i) {
        cut = (tree.cliques[route[i]] & tree.cliques[route[i + 1]]).is_subset_of(na);
      }
      if (!cut) return false;
    }
  }
  return true;
}

bool is_middle_by_paths(const Graph& g, int a, int b, int c) {
  if (!NonAdjacentTriple(g, a, b, c)) return false;
  return !reachable(g, g.vertices() - g.neighbors(a), b).contains(c);
}

}  // namespace pathgraph
