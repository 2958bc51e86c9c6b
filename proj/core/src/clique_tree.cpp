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

#include "pathgraph/clique_tree.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "json_util.hpp"
#include "tree_check.hpp"
#include "pathgraph/errors.hpp"
#include "pathgraph/oracle.hpp"

namespace pathgraph {

std::vector<VertexSet> CliqueTree::labels() const {
  std::vector<VertexSet> out;
  out.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) out.push_back(label(e));
  return out;
}

std::vector<std::vector<int>> CliqueTree::adjacency() const {
  std::vector<std::vector<int>> adj(cliques.size());
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<int> CliqueTree::path(int a, int b) const {
  const auto adj = adjacency();
  std::vector<int> parent(cliques.size(), -1);
  std::vector<char> seen(cliques.size(), 0);
  std::deque<int> queue{a};
  seen[a] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == b) break;
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  if (!seen[b]) return {};
  std::vector<int> out{b};
  while (out.back() != a) out.push_back(parent[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> CliqueTree::nodes_containing(int v) const {
  std::vector<int> out;
  for (int i = 0; i < node_count(); ++i) {
    if (cliques[i].contains(v)) out.push_back(i);
  }
  return out;
}

CliqueTree CliqueTree::canonical() const {
  std::vector<int> order(cliques.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return cliques[a] < cliques[b]; });
  std::vector<int> rank(cliques.size());
  CliqueTree out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<int>(i);
    out.cliques.push_back(cliques[order[i]]);
  }
  for (const auto& [a, b] : edges) {
    out.edges.emplace_back(std::min(rank[a], rank[b]), std::max(rank[a], rank[b]));
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::string clique_tree_defect(const Graph& g, const CliqueTree& tree,
                               bool require_paths) {
  return detail::TreeDefect(g, tree, maximal_cliques_bruteforce(g), require_paths);
}

namespace detail {

std::string TreeDefect(const Graph& g, const CliqueTree& tree,
                       std::vector<VertexSet> expected, bool require_paths) {
  auto actual = tree.cliques;
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected != actual) return "node set differs from the maximal cliques";

  const int k = tree.node_count();
  const int comps = static_cast<int>(components(g).size());
  if (static_cast<int>(tree.edges.size()) != k - comps) {
    return "edge count " + std::to_string(tree.edges.size()) +
           " is not cliques minus components";
  }
  // Union-find confirms acyclicity, which with the edge count gives a forest
  // with the right number of trees.
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : tree.edges) {
    if (a < 0 || b < 0 || a >= k || b >= k || a == b) return "bad edge endpoint";
    const int ra = find(a);
    const int rb = find(b);
    if (ra == rb) return "edges contain a cycle";
    parent[ra] = rb;
  }

  const auto adj = tree.adjacency();
  for (int v = 0; v < g.order(); ++v) {
    const auto nodes = tree.nodes_containing(v);
    if (nodes.empty()) return "vertex " + std::to_string(v) + " in no clique";
    std::vector<char> in(k, 0);
    for (int x : nodes) in[x] = 1;
    std::vector<char> seen(k, 0);
    std::deque<int> queue{nodes.front()};
    seen[nodes.front()] = 1;
    int reached = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      ++reached;
      int inner_degree = 0;
      for (int y : adj[x]) {
        if (!in[y]) continue;
        ++inner_degree;
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
      if (require_paths && inner_degree > 2) {
        return "T^" + std::to_string(v) + " is not a path";
      }
    }
    if (reached != static_cast<int>(nodes.size())) {
      return "T^" + std::to_string(v) + " is disconnected";
    }
  }
  return {};
}

nlohmann::json TreeToJson(const CliqueTree& tree) {
  nlohmann::json cliques = nlohmann::json::array();
  for (const auto& c : tree.cliques) cliques.push_back(SetToJson(c));
  nlohmann::json edges = nlohmann::json::array();
  nlohmann::json labels = nlohmann::json::array();
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    edges.push_back({tree.edges[e].first, tree.edges[e].second});
    labels.push_back(SetToJson(tree.label(e)));
  }
  return {{"cliques", cliques}, {"edges", edges}, {"labels", labels}};
}

CliqueTree TreeFromJson(const nlohmann::json& j) {
  CliqueTree tree;
  try {
    for (const auto& c : j.at("cliques")) {
      tree.cliques.emplace_back(c.get<std::vector<int>>());
    }
    for (const auto& e : j.at("edges")) {
      tree.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed clique tree JSON: ") + e.what());
  }
  return tree;
}

}  // namespace detail

std::string to_json(const CliqueTree& tree) {
  return detail::TreeToJson(tree).dump();
}

std::string to_dot(const CliqueTree& tree, const Graph* names) {
  auto caption = [&](const VertexSet& s) {
    std::string out;
    for (int v : s) {
      if (!out.empty()) out += ' ';
      out += names != nullptr ? names->name(v) : std::to_string(v);
    }
    return out;
  };
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph clique_tree {\n";
  for (int i = 0; i < tree.node_count(); ++i) {
    out << "  n" << i << " [label=" << quote(caption(tree.cliques[i])) << "];\n";
  }
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    out << "  n" << tree.edges[e].first << " -- n" << tree.edges[e].second
        << " [label=" << quote(caption(tree.label(e))) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pathgraph
