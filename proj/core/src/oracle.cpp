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

#include "pathgraph/oracle.hpp"

#include <algorithm>
#include <bit>

#include "pathgraph/errors.hpp"

namespace pathgraph {

const char* to_string(CptStatus status) {
  switch (status) {
    case CptStatus::kTree:
      return "tree";
    case CptStatus::kNone:
      return "none";
    case CptStatus::kOverBudget:
      return "over-budget";
  }
  return "?";
}

namespace {

void BronKerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                  std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  while (!p.empty()) {
    const int v = p.first();
    VertexSet r2 = r;
    r2.insert(v);
    BronKerbosch(g, r2, p & g.neighbors(v), x & g.neighbors(v), out);
    p.erase(v);
    x.insert(v);
  }
}

// Result of scanning all labeled trees on one component's cliques.
struct ComponentScan {
  bool found_path_tree = false;
  bool found_clique_tree = false;
  std::vector<std::pair<int, int>> edges;
};

ComponentScan ScanComponent(const std::vector<VertexSet>& cliques,
                            const Graph& g, std::int64_t& examined) {
  ComponentScan scan;
  const int k = static_cast<int>(cliques.size());
  if (k == 1) {
    ++examined;
    scan.found_path_tree = scan.found_clique_tree = true;
    return scan;
  }
  // Distinct clique-membership masks, one per class of vertices.
  std::vector<std::uint32_t> masks;
  for (int v = 0; v < g.order(); ++v) {
    std::uint32_t m = 0;
    for (int i = 0; i < k; ++i) {
      if (cliques[i].contains(v)) m |= 1u << i;
    }
    if (m != 0) masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());

  std::vector<std::uint32_t> meets(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j && cliques[i].intersects(cliques[j])) meets[i] |= 1u << j;
    }
  }

  std::vector<int> seq(std::max(0, k - 2), 0);
  std::vector<int> degree(k);
  std::vector<std::pair<int, int>> edges(k - 1);
  std::vector<std::uint32_t> adj(k);
  while (true) {
    ++examined;
    // Decode.
    std::fill(degree.begin(), degree.end(), 1);
    for (int x : seq) ++degree[x];
    bool admissible = true;
    std::fill(adj.begin(), adj.end(), 0u);
    for (std::size_t t = 0; t < seq.size() && admissible; ++t) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      const int x = seq[t];
      edges[t] = {leaf, x};
      admissible = (meets[leaf] >> x) & 1u;
      adj[leaf] |= 1u << x;
      adj[x] |= 1u << leaf;
      --degree[leaf];
      --degree[x];
    }
    if (admissible) {
      int a = -1;
      int b = -1;
      for (int i = 0; i < k; ++i) {
        if (degree[i] == 1) (a < 0 ? a : b) = i;
      }
      edges[k - 2] = {a, b};
      admissible = (meets[a] >> b) & 1u;
      adj[a] |= 1u << b;
      adj[b] |= 1u << a;
    }
    if (admissible) {
      bool connected = true;
      bool paths = true;
      for (std::uint32_t m : masks) {
        int inner = 0;
        for (std::uint32_t rest = m; rest != 0; rest &= rest - 1) {
          const int d = std::popcount(adj[std::countr_zero(rest)] & m);
          inner += d;
          if (d > 2) paths = false;
        }
        if (inner != 2 * (std::popcount(m) - 1)) {
          connected = false;
          break;
        }
      }
      if (connected) {
        scan.found_clique_tree = true;
        if (paths) {
          scan.found_path_tree = true;
          scan.edges = edges;
          return scan;
        }
      }
    }
    // Next sequence in lexicographic order.
    int pos = static_cast<int>(seq.size()) - 1;
    while (pos >= 0 && seq[pos] == k - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return scan;
}

}  // namespace

std::vector<VertexSet> maximal_cliques_bruteforce(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  BronKerbosch(g, VertexSet(), g.vertices(), VertexSet(), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int k) {
  if (k < 2 || static_cast<int>(seq.size()) != k - 2) {
    throw ContractError("Prufer sequence length must be k-2 with k >= 2");
  }
  std::vector<int> degree(k, 1);
  for (int x : seq) {
    if (x < 0 || x >= k) throw ContractError("Prufer entry out of range");
    ++degree[x];
  }
  std::vector<std::pair<int, int>> edges;
  for (int x : seq) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int a = -1;
  int b = -1;
  for (int i = 0; i < k; ++i) {
    if (degree[i] == 1) (a < 0 ? a : b) = i;
  }
  edges.emplace_back(a, b);
  return edges;
}

CptVerdict cpt_exists_bruteforce(const Graph& g, const OracleBudget& budget) {
  CptVerdict verdict;
  if (g.order() <= budget.max_vertices) {
    if (auto hole = hole_search_bruteforce(g, budget)) {
      verdict.status = CptStatus::kNone;
      verdict.hole = *hole;
      return verdict;
    }
  }
  const auto cliques = maximal_cliques_bruteforce(g);
  std::vector<std::vector<int>> groups;
  for (const auto& block : components(g)) {
    std::vector<int> ids;
    for (int i = 0; i < static_cast<int>(cliques.size()); ++i) {
      if (cliques[i].intersects(block)) ids.push_back(i);
    }
    if (static_cast<int>(ids.size()) > budget.max_cliques) {
      verdict.status = CptStatus::kOverBudget;
      return verdict;
    }
    groups.push_back(std::move(ids));
  }
  verdict.tree.cliques = cliques;
  for (const auto& ids : groups) {
    std::vector<VertexSet> local;
    for (int i : ids) local.push_back(cliques[i]);
    const auto scan = ScanComponent(local, g, verdict.trees_examined);
    if (!scan.found_path_tree) {
      verdict.status = CptStatus::kNone;
      verdict.tree = CliqueTree();
      return verdict;
    }
    for (const auto& [a, b] : scan.edges) {
      verdict.tree.edges.emplace_back(ids[a], ids[b]);
    }
  }
  verdict.status = CptStatus::kTree;
  return verdict;
}

namespace {

// Extends a chordless path from path[0] using vertices above path[0]. Writes
// the first closing cycle of exactly `length` vertices into `path`.
bool ExtendHole(const Graph& g, std::vector<int>& path, VertexSet& on_path,
                int length) {
  const int s = path.front();
  const int last = path.back();
  const int depth = static_cast<int>(path.size());
  for (int w : g.neighbors(last)) {
    if (w <= s || on_path.contains(w)) continue;
    // w may touch only `last`, plus `s` when it closes the cycle.
    VertexSet touched = g.neighbors(w) & on_path;
    touched.erase(last);
    const bool closes = touched.contains(s);
    touched.erase(s);
    if (!touched.empty()) continue;
    if (depth + 1 == length) {
      if (!closes || w < path[1]) continue;
      path.push_back(w);
      return true;
    }
    if (closes) continue;
    path.push_back(w);
    on_path.insert(w);
    if (ExtendHole(g, path, on_path, length)) return true;
    on_path.erase(w);
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> hole_search_bruteforce(const Graph& g,
                                                       const OracleBudget& budget) {
  if (g.order() > budget.max_vertices) {
    throw ContractError("hole search over budget: " + std::to_string(g.order()) +
                        " vertices");
  }
  for (int length = 4; length <= g.order(); ++length) {
    for (int s = 0; s < g.order(); ++s) {
      std::vector<int> path{s};
      VertexSet on_path{s};
      if (ExtendHole(g, path, on_path, length)) return path;
    }
  }
  return std::nullopt;
}

SeparatorSet pairwise_minimal_separators_bruteforce(const Graph& g,
                                                    const OracleBudget& budget) {
  const int n = g.order();
  if (n > budget.max_vertices) {
    throw ContractError("separator search over budget: " + std::to_string(n) +
                        " vertices");
  }
  SeparatorSet out;
  const VertexSet all = g.vertices();
  for (int u = 0; u < n; ++u) {
    const VertexSet comp = reachable(g, all, u);
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) || !comp.contains(v)) continue;
      std::vector<int> others;
      for (int x = 0; x < n; ++x) {
        if (x != u && x != v) others.push_back(x);
      }
      const std::uint32_t limit = 1u << others.size();
      for (std::uint32_t bits = 1; bits < limit; ++bits) {
        VertexSet s;
        for (std::size_t i = 0; i < others.size(); ++i) {
          if ((bits >> i) & 1u) s.insert(others[i]);
        }
        if (!out.contains(s) && is_minimal_separator_for(g, s, u, v)) {
          out.members.push_back({s, u, v});
        }
      }
    }
  }
  std::sort(out.members.begin(), out.members.end(),
            [](const Separator& x, const Separator& y) { return x.set < y.set; });
  return out;
}

}  // namespace pathgraph
