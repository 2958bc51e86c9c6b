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

#include "pathgraph/graph.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "pathgraph/errors.hpp"

namespace pathgraph {

Graph::Graph(int order) {
  if (order < 0) throw ContractError("graph order must be non-negative");
  rows_.resize(order);
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges)
    : Graph(order) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::CheckVertex(int v) const {
  if (v < 0 || v >= order()) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for order " +
                            std::to_string(order()));
  }
}

void Graph::add_edge(int u, int v) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
  if (rows_[u].contains(v)) return;
  rows_[u].insert(v);
  rows_[v].insert(u);
  ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
  CheckVertex(u);
  CheckVertex(v);
  if (!rows_[u].contains(v)) return;
  rows_[u].erase(v);
  rows_[v].erase(u);
  --edge_count_;
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s = rows_[v];
  s.insert(v);
  return s;
}

VertexSet Graph::neighborhood_of(const VertexSet& s) const {
  VertexSet out;
  for (int v : s) out |= rows_[v];
  return out - s;
}

bool Graph::is_clique(const VertexSet& s) const {
  for (int v : s) {
    VertexSet rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(rows_[v])) return false;
  }
  return true;
}

bool Graph::is_complete_to(int v, const VertexSet& s) const {
  VertexSet rest = s;
  rest.erase(v);
  return rest.is_subset_of(rows_[v]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : rows_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::name(int v) const {
  CheckVertex(v);
  return names_.empty() ? std::to_string(v) : names_[v];
}

void Graph::set_names(std::vector<std::string> names) {
  if (names.empty()) {
    names_.clear();
    return;
  }
  if (static_cast<int>(names.size()) != order()) {
    throw ContractError("name table length differs from graph order");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw ContractError("duplicate vertex name " + n);
  }
  names_ = std::move(names);
}

int Graph::find_name(const std::string& name) const {
  for (int v = 0; v < static_cast<int>(names_.size()); ++v) {
    if (names_[v] == name) return v;
  }
  return -1;
}

VertexSet InducedSubgraph::lift(const VertexSet& s) const {
  VertexSet out;
  for (int v : s) out.insert(to_host[v]);
  return out;
}

VertexSet InducedSubgraph::lower(const VertexSet& s) const {
  VertexSet out;
  for (int v : s) {
    if (v < static_cast<int>(from_host.size()) && from_host[v] >= 0) {
      out.insert(from_host[v]);
    }
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.last() >= g.order()) {
    throw std::out_of_range("vertex set exceeds graph order");
  }
  InducedSubgraph out;
  out.to_host = s.to_vector();
  out.from_host.assign(g.order(), -1);
  for (int i = 0; i < static_cast<int>(out.to_host.size()); ++i) {
    out.from_host[out.to_host[i]] = i;
  }
  out.graph = Graph(static_cast<int>(out.to_host.size()));
  for (int i = 0; i < out.graph.order(); ++i) {
    for (int h : g.neighbors(out.to_host[i]) & s) {
      const int j = out.from_host[h];
      if (j > i) out.graph.add_edge(i, j);
    }
  }
  if (g.has_names()) {
    std::vector<std::string> names;
    names.reserve(out.to_host.size());
    for (int h : out.to_host) names.push_back(g.name(h));
    out.graph.set_names(std::move(names));
  }
  return out;
}

VertexSet reachable(const Graph& g, const VertexSet& allowed, int from) {
  VertexSet seen{from};
  VertexSet frontier{from};
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next &= allowed;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

std::vector<VertexSet> components_within(const Graph& g,
                                         const VertexSet& allowed) {
  std::vector<VertexSet> out;
  VertexSet left = allowed;
  while (!left.empty()) {
    VertexSet block = reachable(g, allowed, left.first());
    left -= block;
    out.push_back(std::move(block));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  return components_within(g, g.vertices() - removed);
}

std::vector<int> shortest_path(const Graph& g, const VertexSet& allowed,
                               int from, int to) {
  if (!allowed.contains(from) || !allowed.contains(to)) return {};
  std::vector<int> parent(g.order(), -1);
  std::deque<int> queue{from};
  VertexSet seen{from};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : (g.neighbors(v) & allowed) - seen) {
      seen.insert(w);
      parent[w] = v;
      queue.push_back(w);
    }
  }
  if (!seen.contains(to)) return {};
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  return {path.rbegin(), path.rend()};
}

bool is_connected(const Graph& g) {
  return g.order() == 0 || reachable(g, g.vertices(), 0).count() == g.order();
}

}  // namespace pathgraph
