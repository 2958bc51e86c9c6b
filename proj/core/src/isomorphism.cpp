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

#include "pathgraph/isomorphism.hpp"

#include <algorithm>

namespace pathgraph {
namespace {

// Sorted degrees of the neighbors: a cheap refinement of the degree.
std::vector<int> NeighborDegrees(const Graph& g, int v) {
  std::vector<int> out;
  for (int w : g.neighbors(v)) out.push_back(g.degree(w));
  std::sort(out.begin(), out.end());
  return out;
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h) : g_(g), h_(h) {
    const int n = g.order();
    g_sig_.resize(n);
    h_sig_.resize(n);
    for (int v = 0; v < n; ++v) {
      g_sig_[v] = NeighborDegrees(g, v);
      h_sig_[v] = NeighborDegrees(h, v);
    }
    // Match high-degree vertices first, then prefer vertices adjacent to the
    // already ordered ones so adjacency checks prune early.
    VertexSet placed;
    while (static_cast<int>(order_.size()) < n) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < n; ++v) {
        if (placed.contains(v)) continue;
        const int links = (g.neighbors(v) & placed).count();
        if (links > best_links ||
            (links == best_links && g.degree(v) > g.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      order_.push_back(best);
      placed.insert(best);
    }
    map_.assign(n, -1);
  }

  bool Run() { return Extend(0); }
  std::vector<int> mapping() const { return map_; }

 private:
  bool Extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int w = 0; w < h_.order(); ++w) {
      if (used_.contains(w) || g_sig_[v] != h_sig_[w]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int u = order_[d];
        ok = g_.adjacent(u, v) == h_.adjacent(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      used_.insert(w);
      if (Extend(depth + 1)) return true;
      used_.erase(w);
      map_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::vector<int>> g_sig_;
  std::vector<std::vector<int>> h_sig_;
  std::vector<int> order_;
  std::vector<int> map_;
  VertexSet used_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g,
                                                 const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  std::vector<int> dg(g.order());
  std::vector<int> dh(h.order());
  for (int v = 0; v < g.order(); ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  Matcher matcher(g, h);
  if (!matcher.Run()) return std::nullopt;
  return matcher.mapping();
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<int>& f) {
  const int n = g.order();
  if (h.order() != n || static_cast<int>(f.size()) != n) return false;
  VertexSet image;
  for (int x : f) {
    if (x < 0 || x >= n || image.contains(x)) return false;
    image.insert(x);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.adjacent(u, v) != h.adjacent(f[u], f[v])) return false;
    }
  }
  return true;
}

}  // namespace pathgraph
