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

// Simplicial vertices that are not co-special: rebuild from G - q, then hang
// the subtrees cut off at S_q back onto a tree of the remaining part.

#include <algorithm>
#include <deque>

#include "pathgraph/errors.hpp"
#include "pathgraph/recognizer.hpp"
#include "recognizer_internal.hpp"

namespace pathgraph {

namespace detail {

AttachmentSetup Solver::PrepareAttachment(const VertexSet& w, int q) {
  AttachmentProblem p;
  p.q = q;
  p.Q = (host_.neighbors(q) & w) | VertexSet{q};
  p.S_q = Boundary(host_, w, q);
  VertexSet rest = w;
  rest.erase(q);
  Outcome base = Solve(rest);
  if (base.certificate) {
    Count("attach: certificate from G - q");
    return RecognitionResult{std::nullopt, base.certificate};
  }
  p.T0 = base.tree->canonical();
  // S_q is itself a clique of G - q: q simply joins it.
  for (int i = 0; i < p.T0.node_count(); ++i) {
    if (p.T0.cliques[i].is_subset_of(p.Q)) {
      Count("attach: q joins its clique");
      CliqueTree t = p.T0;
      t.cliques[i] = p.Q;
      return RecognitionResult{t.canonical(), std::nullopt};
    }
  }
  int anchor = -1;
  for (int i = 0; i < p.T0.node_count() && anchor < 0; ++i) {
    if (p.S_q.is_subset_of(p.T0.cliques[i])) anchor = i;
  }
  if (anchor < 0) throw InternalInconsistency("no clique of G - q contains S_q");
  p.Qprime = p.T0.cliques[anchor];

  const auto cut = [&](const VertexSet& label) { return label.is_subset_of(p.S_q); };
  const auto inner = CutComponent(p.T0, anchor, cut);
  std::vector<char> in_inner(p.T0.node_count(), 0);
  for (int x : inner) in_inner[x] = 1;
  p.Tprime = InducedTree(p.T0, inner);

  for (const auto& [a, b] : p.T0.edges) {
    if (in_inner[a] == in_inner[b]) continue;
    const int root = in_inner[a] ? b : a;
    const int attach = in_inner[a] ? a : b;
    HangingSubtree h;
    h.subtree = InducedTree(p.T0, ComponentAvoiding(p.T0, root, in_inner));
    h.root = p.T0.cliques[root];
    h.anchor = p.T0.cliques[attach];
    h.separator = h.root & h.anchor;
    h.v = Pick(h.root - h.anchor, "Q_i - Q'_i");
    p.hanging.push_back(std::move(h));
  }
  std::sort(p.hanging.begin(), p.hanging.end(),
            [](const HangingSubtree& x, const HangingSubtree& y) { return x.root < y.root; });
  if (p.hanging.empty()) {
    throw InternalInconsistency("q is not co-special but no label of T0 lies in S_q");
  }

  const int count = static_cast<int>(p.hanging.size());
  p.H = Graph(count);
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if (p.hanging[i].separator.intersects(p.hanging[j].separator)) p.H.add_edge(i, j);
    }
  }
  const auto labels = p.Tprime.labels();
  for (int i = 0; i < count; ++i) {
    const VertexSet& s = p.hanging[i].separator;
    for (const auto& label : labels) {
      if (s.intersects(label) && !s.is_subset_of(label)) {
        p.X.insert(i);
        break;
      }
    }
  }

  Outcome reduced = Solve(UnionOf(p.T0, inner) | p.Q);
  if (reduced.certificate) {
    Count("attach: certificate from the reduced graph");
    return RecognitionResult{std::nullopt, reduced.certificate};
  }
  p.T = reduced.tree->canonical();
  const int qnode = FindNode(p.T, p.Q);
  if (qnode < 0 || p.T.adjacency()[qnode].size() != 1) {
    throw InternalInconsistency("Q is not a leaf of the reduced clique path tree");
  }
  return p;
}

Outcome Solver::NonCospecial(const VertexSet& w, int q) {
  auto setup = PrepareAttachment(w, q);
  if (auto* done = std::get_if<RecognitionResult>(&setup)) {
    return Outcome{done->tree, done->certificate};
  }
  const auto& problem = std::get<AttachmentProblem>(setup);
  if (auto cycle = shortest_odd_cycle(problem.H)) {
    Count("attach: odd cycle");
    return Outcome{std::nullopt, ExtractOddCycle(*this, problem, *cycle)};
  }
  if (auto path = shortest_odd_path_between(problem.H, problem.X)) {
    Count("attach: odd X-path");
    return Outcome{std::nullopt, ExtractOddXPath(*this, problem, *path)};
  }
  Count("attach: attach");
  return Outcome{attach_hanging_subtrees(problem), std::nullopt};
}

}  // namespace detail

namespace {

// BFS layers from `source`, with parents; ascending neighbor order.
void Bfs(const Graph& h, int source, std::vector<int>& dist, std::vector<int>& parent) {
  dist.assign(h.order(), -1);
  parent.assign(h.order(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : h.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
}

std::vector<int> RouteTo(const std::vector<int>& parent, int v) {
  std::vector<int> out{v};
  while (parent[out.back()] >= 0) out.push_back(parent[out.back()]);
  return out;  // v first, source last
}

}  // namespace

std::optional<std::vector<int>> shortest_odd_cycle(const Graph& h) {
  std::optional<std::vector<int>> best;
  std::vector<int> dist;
  std::vector<int> parent;
  for (int s = 0; s < h.order(); ++s) {
    Bfs(h, s, dist, parent);
    for (const auto& [a, b] : h.edges()) {
      if (dist[a] < 0 || dist[a] != dist[b]) continue;
      const int length = 2 * dist[a] + 1;
      if (best && static_cast<int>(best->size()) <= length) continue;
      auto left = RouteTo(parent, a);
      auto right = RouteTo(parent, b);
      VertexSet seen(std::vector<int>(left.begin(), left.end() - 1));
      bool disjoint = true;
      for (std::size_t i = 0; i + 1 < right.size(); ++i) {
        disjoint = disjoint && !seen.contains(right[i]);
      }
      if (!disjoint) continue;
      // s, ..., a, b, ..., back to s.
      std::vector<int> cycle(left.rbegin(), left.rend());
      for (std::size_t i = 0; i + 1 < right.size(); ++i) cycle.push_back(right[i]);
      best = std::move(cycle);
    }
  }
  return best;
}

std::optional<std::vector<int>> shortest_odd_path_between(const Graph& h,
                                                          const VertexSet& ends) {
  std::optional<std::vector<int>> best;
  std::vector<int> dist;
  std::vector<int> parent;
  for (int s : ends) {
    Bfs(h, s, dist, parent);
    for (int t : ends) {
      if (t <= s || dist[t] < 0 || dist[t] % 2 == 0) continue;
      if (best && static_cast<int>(best->size()) <= dist[t] + 1) continue;
      auto route = RouteTo(parent, t);
      std::reverse(route.begin(), route.end());
      best = std::move(route);
    }
  }
  return best;
}

CliqueTree attach_hanging_subtrees(const AttachmentProblem& problem) {
  const Graph& h = problem.H;
  // Two-color each component of H, starting from an X member when there is
  // one so that X ends up on side 0.
  std::vector<int> side(h.order(), -1);
  auto color_from = [&](int s) {
    std::deque<int> queue{s};
    side[s] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : h.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          throw ContractError("intersection graph of the hanging separators is not bipartite");
        }
      }
    }
  };
  for (int s : problem.X) {
    if (side[s] < 0) color_from(s);
  }
  for (int s = 0; s < h.order(); ++s) {
    if (side[s] < 0) color_from(s);
  }
  for (int s : problem.X) {
    if (side[s] != 0) throw ContractError("X is split across both sides of H");
  }

  detail::TreeAssembler out;
  out.AddTree(problem.T);
  const int qnode = detail::FindNode(problem.T, problem.Q);
  for (int i = 0; i < h.order(); ++i) {
    const auto& hang = problem.hanging[i];
    out.AddTree(hang.subtree);
    if (side[i] == 0) {
      out.Link(problem.Q, hang.root);
    } else {
      const int far = detail::FarthestMeeting(problem.T, qnode, hang.separator);
      if (far < 0) throw InternalInconsistency("no clique of T meets a hanging separator");
      out.Link(problem.T.cliques[far], hang.root);
    }
  }
  return out.Build();
}

namespace {

void CheckHangingIndex(const AttachmentProblem& problem, int i) {
  if (i < 0 || i >= static_cast<int>(problem.hanging.size())) {
    throw ContractError("index " + std::to_string(i) + " is not a vertex of H");
  }
}

}  // namespace

Certificate extract_from_odd_cycle(const Graph& g, const AttachmentProblem& problem,
                                   const std::vector<int>& cycle,
                                   RecognitionStats* stats) {
  const int p = static_cast<int>(cycle.size());
  if (p < 3 || p % 2 == 0) throw ContractError("an odd cycle of length >= 3 is required");
  for (int j = 0; j < p; ++j) {
    CheckHangingIndex(problem, cycle[j]);
    if (!problem.H.adjacent(cycle[j], cycle[(j + 1) % p])) {
      throw ContractError("consecutive cycle members are not adjacent in H");
    }
  }
  detail::Solver solver(g, {}, stats);
  return detail::ExtractOddCycle(solver, problem, cycle);
}

Certificate extract_from_odd_X_path(const Graph& g, const AttachmentProblem& problem,
                                    const std::vector<int>& path,
                                    RecognitionStats* stats) {
  const int p = static_cast<int>(path.size());
  if (p < 2 || p % 2 != 0) throw ContractError("an odd path (even vertex count) is required");
  for (int j = 0; j < p; ++j) {
    CheckHangingIndex(problem, path[j]);
    if (j + 1 < p && !problem.H.adjacent(path[j], path[j + 1])) {
      throw ContractError("consecutive path members are not adjacent in H");
    }
  }
  if (!problem.X.contains(path.front()) || !problem.X.contains(path.back())) {
    throw ContractError("both ends of the path must lie in X");
  }
  detail::Solver solver(g, {}, stats);
  return detail::ExtractOddXPath(solver, problem, path);
}

}  // namespace pathgraph
