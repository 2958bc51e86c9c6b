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

#include "pathgraph/chordal.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "pathgraph/errors.hpp"

namespace pathgraph {

std::vector<int> lex_bfs(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> label(n);
  std::vector<char> visited(n, 0);
  std::vector<int> out;
  out.reserve(n);
  for (int step = n; step > 0; --step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (pick < 0 || label[v] > label[pick]) pick = v;
    }
    visited[pick] = 1;
    out.push_back(pick);
    for (int w : g.neighbors(pick)) {
      if (!visited[w]) label[w].push_back(step);
    }
  }
  return out;
}

EliminationOrder lex_bfs_elimination_order(const Graph& g) {
  auto order = lex_bfs(g);
  std::reverse(order.begin(), order.end());
  return order;
}

namespace {

std::vector<int> Positions(const Graph& g, const EliminationOrder& order) {
  if (static_cast<int>(order.size()) != g.order()) {
    throw ContractError("elimination order is not a permutation of V(G)");
  }
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    const int v = order[i];
    if (v < 0 || v >= g.order() || pos[v] >= 0) {
      throw ContractError("elimination order is not a permutation of V(G)");
    }
    pos[v] = i;
  }
  return pos;
}

VertexSet LaterNeighbors(const Graph& g, const std::vector<int>& pos, int v) {
  VertexSet later;
  for (int w : g.neighbors(v)) {
    if (pos[w] > pos[v]) later.insert(w);
  }
  return later;
}

// Closes a violating pair x, y of v into a hole, if G - (N[v] - {x,y}) holds
// an x-y path.
std::vector<int> CloseHole(const Graph& g, int v, int x, int y) {
  VertexSet allowed = g.vertices() - g.closed_neighborhood(v);
  allowed.insert(x);
  allowed.insert(y);
  auto path = shortest_path(g, allowed, x, y);
  if (path.empty()) return {};
  path.insert(path.begin(), v);
  return path;
}

}  // namespace

PeoCheck check_peo(const Graph& g, const EliminationOrder& order) {
  const auto pos = Positions(g, order);
  PeoCheck result;
  for (int v : order) {
    const VertexSet later = LaterNeighbors(g, pos, v);
    for (int x : later) {
      const VertexSet missing = later - g.neighbors(x) - VertexSet{x};
      for (int y : missing) {
        if (y < x) continue;
        if (result.valid) {
          result.valid = false;
          result.violating_vertex = v;
        }
        auto hole = CloseHole(g, v, x, y);
        if (!hole.empty()) {
          result.hole = std::move(hole);
          return result;
        }
      }
    }
  }
  return result;
}

bool is_chordal(const Graph& g) {
  return check_peo(g, lex_bfs_elimination_order(g)).valid;
}

std::vector<int> find_hole(const Graph& g) {
  return check_peo(g, lex_bfs_elimination_order(g)).hole;
}

std::vector<VertexSet> maximal_cliques(const Graph& g, const EliminationOrder& peo) {
  const auto pos = Positions(g, peo);
  std::vector<VertexSet> candidates;
  candidates.reserve(peo.size());
  for (int v : peo) {
    VertexSet c = LaterNeighbors(g, pos, v);
    if (!g.is_clique(c)) {
      throw ContractError(
          "order is not a perfect elimination order; run check_peo first");
    }
    c.insert(v);
    candidates.push_back(std::move(c));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i != j && candidates[i].is_subset_of(candidates[j])) maximal = false;
    }
    if (maximal) out.push_back(candidates[i]);
  }
  return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  const auto order = lex_bfs_elimination_order(g);
  auto check = check_peo(g, order);
  if (!check.valid) throw NotChordalError("graph is not chordal", check.hole);
  return maximal_cliques(g, order);
}

CliqueTree build_clique_tree(const Graph& g) {
  CliqueTree tree;
  tree.cliques = maximal_cliques(g);
  const int k = tree.node_count();
  std::vector<std::tuple<int, int, int>> weighted;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const int w = (tree.cliques[i] & tree.cliques[j]).count();
      if (w > 0) weighted.emplace_back(-w, i, j);
    }
  }
  std::sort(weighted.begin(), weighted.end());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [w, i, j] : weighted) {
    const int ri = find(i);
    const int rj = find(j);
    if (ri == rj) continue;
    parent[ri] = rj;
    tree.edges.emplace_back(i, j);
  }
  return tree;
}

bool SeparatorSet::contains(const VertexSet& s) const {
  return std::any_of(members.begin(), members.end(),
                     [&](const Separator& m) { return m.set == s; });
}

std::vector<VertexSet> SeparatorSet::sets() const {
  std::vector<VertexSet> out;
  for (const auto& m : members) out.push_back(m.set);
  return out;
}

std::vector<VertexSet> SeparatorSet::maximal() const {
  std::vector<VertexSet> out;
  for (const auto& a : members) {
    bool top = true;
    for (const auto& b : members) {
      if (a.set != b.set && a.set.is_subset_of(b.set)) top = false;
    }
    if (top) out.push_back(a.set);
  }
  return out;
}

SeparatorSet minimal_separators(const Graph& g) {
  const CliqueTree tree = build_clique_tree(g);
  std::vector<std::pair<int, int>> edges = tree.edges;
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  SeparatorSet out;
  for (const auto& [a, b] : edges) {
    const VertexSet s = tree.cliques[a] & tree.cliques[b];
    if (out.contains(s)) continue;
    out.members.push_back({s, (tree.cliques[a] - tree.cliques[b]).first(),
                           (tree.cliques[b] - tree.cliques[a]).first()});
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const Separator& x, const Separator& y) { return x.set < y.set; });
  return out;
}

int separator_multiplicity(const Graph& g, const VertexSet& s) {
  if (!minimal_separators(g).contains(s)) {
    throw ContractError(s.to_string() + " is not a minimal separator");
  }
  int c = 0;
  for (const auto& block : components(g, s)) {
    for (int v : block) {
      if (s.is_subset_of(g.neighbors(v))) {
        ++c;
        break;
      }
    }
  }
  return c - 1;
}

bool is_minimal_separator_for(const Graph& g, const VertexSet& s, int u, int v) {
  if (s.contains(u) || s.contains(v) || u == v) return false;
  const VertexSet all = g.vertices();
  if (reachable(g, all - s, u).contains(v)) return false;
  for (int x : s) {
    VertexSet smaller = s;
    smaller.erase(x);
    if (!reachable(g, all - smaller, u).contains(v)) return false;
  }
  return true;
}

}  // namespace pathgraph
