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

#include "pathgraph/recognizer.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "json_util.hpp"
#include "pathgraph/chordal.hpp"
#include "pathgraph/errors.hpp"
#include "pathgraph/simplicial.hpp"
#include "recognizer_internal.hpp"
#include "tree_check.hpp"

namespace pathgraph {

void RecognitionStats::merge(const RecognitionStats& other) {
  for (const auto& [k, v] : other.branches) branches[k] += v;
  subproblems += other.subproblems;
  cache_hits += other.cache_hits;
  fallbacks += other.fallbacks;
  repairs += other.repairs;
}

namespace detail {

int FindNode(const CliqueTree& t, const VertexSet& clique) {
  for (int i = 0; i < t.node_count(); ++i) {
    if (t.cliques[i] == clique) return i;
  }
  return -1;
}

std::vector<int> CutComponent(const CliqueTree& t, int start,
                              const std::function<bool(const VertexSet&)>& cut) {
  std::vector<std::vector<std::pair<int, int>>> adj(t.node_count());
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    if (cut(t.label(e))) continue;
    adj[t.edges[e].first].emplace_back(t.edges[e].second, 0);
    adj[t.edges[e].second].emplace_back(t.edges[e].first, 0);
  }
  std::vector<char> seen(t.node_count(), 0);
  std::vector<int> out;
  std::deque<int> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    out.push_back(x);
    for (const auto& [y, unused] : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ComponentAvoiding(const CliqueTree& t, int start,
                                   const std::vector<char>& blocked) {
  const auto adj = t.adjacency();
  std::vector<char> seen(t.node_count(), 0);
  std::vector<int> out;
  std::deque<int> queue{start};
  seen[start] = 1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    out.push_back(x);
    for (int y : adj[x]) {
      if (!seen[y] && !blocked[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet UnionOf(const CliqueTree& t, const std::vector<int>& nodes) {
  VertexSet out;
  for (int x : nodes) out |= t.cliques[x];
  return out;
}

CliqueTree InducedTree(const CliqueTree& t, const std::vector<int>& nodes) {
  std::vector<int> rank(t.node_count(), -1);
  CliqueTree out;
  for (int x : nodes) {
    rank[x] = out.node_count();
    out.cliques.push_back(t.cliques[x]);
  }
  for (const auto& [a, b] : t.edges) {
    if (rank[a] >= 0 && rank[b] >= 0) out.edges.emplace_back(rank[a], rank[b]);
  }
  return out;
}

std::vector<int> Distances(const CliqueTree& t, int from) {
  const auto adj = t.adjacency();
  std::vector<int> dist(t.node_count(), -1);
  std::deque<int> queue{from};
  dist[from] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : adj[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

int FarthestMeeting(const CliqueTree& t, int from, const VertexSet& s) {
  const auto dist = Distances(t, from);
  int best = -1;
  for (int i = 0; i < t.node_count(); ++i) {
    if (dist[i] < 0 || !t.cliques[i].intersects(s)) continue;
    if (best < 0 || dist[i] > dist[best]) best = i;
  }
  return best;
}

VertexSet PathLabels(const CliqueTree& t, int a, int b) {
  const auto path = t.path(a, b);
  VertexSet out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    out |= t.cliques[path[i]] & t.cliques[path[i + 1]];
  }
  return out;
}

int Pick(const VertexSet& s, const char* what) {
  if (s.empty()) {
    throw InternalInconsistency(std::string("expected a vertex in ") + what +
                                " but the set is empty");
  }
  return s.first();
}

int TreeAssembler::Add(const VertexSet& clique) {
  auto [it, inserted] = index_.emplace(clique, static_cast<int>(cliques_.size()));
  if (inserted) cliques_.push_back(clique);
  return it->second;
}

void TreeAssembler::AddTree(const CliqueTree& t) {
  for (const auto& c : t.cliques) Add(c);
  for (const auto& [a, b] : t.edges) Link(t.cliques[a], t.cliques[b]);
}

void TreeAssembler::Link(const VertexSet& a, const VertexSet& b) {
  int x = Add(a);
  int y = Add(b);
  if (x > y) std::swap(x, y);
  if (x == y) throw InternalInconsistency("attempt to link a clique to itself");
  if (std::find(edges_.begin(), edges_.end(), std::make_pair(x, y)) == edges_.end()) {
    edges_.emplace_back(x, y);
  }
}

void TreeAssembler::Unlink(const VertexSet& a, const VertexSet& b) {
  int x = Add(a);
  int y = Add(b);
  if (x > y) std::swap(x, y);
  auto it = std::find(edges_.begin(), edges_.end(), std::make_pair(x, y));
  if (it == edges_.end()) throw InternalInconsistency("unlinking a missing tree edge");
  edges_.erase(it);
}

CliqueTree TreeAssembler::Build() const {
  CliqueTree t;
  t.cliques = cliques_;
  t.edges = edges_;
  return t.canonical();
}

std::vector<VertexSet> CliquesOf(const Graph& host, const VertexSet& w) {
  const auto sub = induced_subgraph(host, w);
  std::vector<VertexSet> out;
  for (const auto& c : maximal_cliques(sub.graph)) out.push_back(sub.lift(c));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet Boundary(const Graph& host, const VertexSet& w, int v) {
  const VertexSet closed = (host.neighbors(v) & w) | VertexSet{v};
  const VertexSet outside = w - closed;
  VertexSet out;
  for (int x : closed) {
    if (host.neighbors(x).intersects(outside)) out.insert(x);
  }
  return out;
}

Solver::Solver(const Graph& host, const RecognizerOptions& options,
               RecognitionStats* stats)
    : host_(host), options_(options), stats_(stats) {}

void Solver::Count(const std::string& branch) {
  if (stats_ != nullptr) ++stats_->branches[branch];
}

Outcome Solver::Solve(const VertexSet& w) {
  Outcome out;
  if (w.empty()) {
    out.tree = CliqueTree{};
    return out;
  }
  const auto sub = induced_subgraph(host_, w);
  const auto peo = check_peo(sub.graph, lex_bfs_elimination_order(sub.graph));
  if (!peo.valid) {
    std::vector<int> hole;
    for (int v : peo.hole) hole.push_back(sub.to_host[v]);
    Count("hole");
    out.certificate = Certify(hole, make_family(0, static_cast<int>(hole.size())),
                              VertexSet(hole), "hole");
    return out;
  }
  TreeAssembler forest;
  for (const auto& part : components(sub.graph)) {
    Outcome piece = SolveConnected(sub.lift(part));
    if (piece.certificate) return piece;
    forest.AddTree(*piece.tree);
  }
  out.tree = forest.Build();
  return out;
}

namespace {

// Nesting limit for vertex-deletion searches inside one another.
constexpr int kMaxReductionDepth = 4;

}  // namespace

Outcome Solver::SolveConnected(const VertexSet& w) {
  if (stats_ != nullptr) ++stats_->subproblems;
  if (auto it = memo_.find(w); it != memo_.end()) {
    if (stats_ != nullptr) ++stats_->cache_hits;
    return it->second;
  }
  Outcome out;
  try {
    out = Decide(w);
  } catch (const InternalInconsistency& e) {
    if (reducing_ > 0 || !fallback_enabled_) throw;
    out = Fallback(w, e.what());
  }
  memo_.emplace(w, out);
  return out;
}

Outcome Solver::Decide(const VertexSet& w) {
  const auto cliques = CliquesOf(host_, w);
  Outcome out;
  if (cliques.size() == 1) {
    Count("single clique");
    out.tree = CliqueTree{cliques, {}};
    return out;
  }
  const auto sub = induced_subgraph(host_, w);
  const auto pair = find_special_pair(sub.graph);
  std::string failures;
  for (int q_local : {pair.first, pair.second}) {
    const int q = sub.to_host[q_local];
    try {
      const auto profile = simplicial_profile(sub.graph, q_local);
      out = profile.is_co_special ? Cospecial(w, q) : NonCospecial(w, q);
      if (out.tree) Verify(w, *out.tree);
      if (q_local != pair.first) Count("second special vertex");
      return out;
    } catch (const InternalInconsistency& e) {
      failures += std::string(" [q=") + std::to_string(q) + ": " + e.what() + "]";
    }
  }
  // The case analysis argues on a minimal non path graph. Look for a proper
  // induced subgraph that is already not a path graph.
  if (reducing_ < kMaxReductionDepth) {
    ++reducing_;
    try {
      for (int v : w) {
        VertexSet rest = w;
        rest.erase(v);
        try {
          Outcome part = Solve(rest);
          if (part.certificate) {
            --reducing_;
            Count("vertex deletion");
            return part;
          }
        } catch (const InternalInconsistency&) {
        }
      }
    } catch (...) {
      --reducing_;
      throw;
    }
    --reducing_;
  }
  throw InternalInconsistency("no construction applies to " + w.to_string() + ":" + failures);
}

std::string Solver::Defect(const VertexSet& w, const CliqueTree& tree) const {
  const auto sub = induced_subgraph(host_, w);
  CliqueTree local = tree;
  for (auto& c : local.cliques) c = sub.lower(c);
  std::vector<VertexSet> expected;
  for (const auto& c : CliquesOf(host_, w)) expected.push_back(sub.lower(c));
  return TreeDefect(sub.graph, local, expected, true);
}

void Solver::Verify(const VertexSet& w, const CliqueTree& tree) {
  if (!options_.check_intermediate) return;
  const std::string defect = Defect(w, tree);
  if (!defect.empty()) {
    throw InternalInconsistency("constructed tree for " + w.to_string() +
                                " is not a clique path tree: " + defect);
  }
}

Outcome Solver::Fallback(const VertexSet& w, const std::string& reason) {
  if (stats_ != nullptr) {
    ++stats_->fallbacks;
    ++stats_->branches["fallback"];
  }
  const auto sub = induced_subgraph(host_, w);
  const auto verdict = cpt_exists_bruteforce(sub.graph, options_.fallback_budget);
  Outcome out;
  if (verdict.status == CptStatus::kOverBudget) {
    throw InternalInconsistency(reason + " (oracle fallback over budget)");
  }
  if (verdict.status == CptStatus::kTree) {
    Count("fallback: tree");
    CliqueTree t = verdict.tree;
    for (auto& c : t.cliques) c = sub.lift(c);
    out.tree = t.canonical();
    return out;
  }
  Count("fallback: certificate");
  // Shrink to a vertex-minimal non path graph, then name it.
  VertexSet keep = w;
  for (int v : w) {
    VertexSet trial = keep;
    trial.erase(v);
    const auto part = induced_subgraph(host_, trial);
    if (cpt_exists_bruteforce(part.graph, options_.fallback_budget).status ==
        CptStatus::kNone) {
      keep = trial;
    }
  }
  out.certificate = Certify(keep.to_vector(), std::nullopt, keep, "oracle fallback");
  return out;
}

Certificate Solver::Certify(const std::vector<int>& vertices,
                            const std::optional<FamilyId>& expected,
                            const VertexSet& hull, const std::string& claim) {
  auto tally = [&](const Certificate& cert) {
    Count("certificate F" + std::to_string(cert.family.index));
    return cert;
  };
  if (expected && expected->valid()) {
    if (auto cert = embed_family(host_, *expected, vertices)) return tally(*cert);
  }
  if (auto found = identify_forbidden(host_, vertices)) {
    if (expected && stats_ != nullptr) ++stats_->repairs;
    return tally(*found);
  }
  Certificate candidate;
  if (expected) candidate.family = *expected;
  candidate.witness = vertices;
  VertexSet full = hull;
  for (int v : vertices) full.insert(v);
  return tally(certify_or_fallback(host_, candidate, full, claim, stats_));
}

Certificate Solver::NeighborhoodAt(const VertexSet& w, int center,
                                   const std::string& claim) {
  const VertexSet around = host_.neighbors(center) & w;
  auto has_at = [&](const VertexSet& s) {
    return find_asteroidal_triple(induced_subgraph(host_, s).graph).has_value();
  };
  if (!has_at(around)) {
    throw InternalInconsistency(claim + ": no asteroidal triple in N(" +
                                std::to_string(center) + ")");
  }
  VertexSet keep = around;
  for (int v : around) {
    VertexSet trial = keep;
    trial.erase(v);
    if (has_at(trial)) keep = trial;
  }
  Count("neighborhood asteroidal triple");
  VertexSet coned = keep;
  coned.insert(center);
  if (auto cert = identify_forbidden(host_, coned.to_vector())) return *cert;
  if (auto cert = identify_forbidden(host_, keep.to_vector())) return *cert;
  Certificate candidate;
  candidate.family = {1, 0};
  candidate.witness = coned.to_vector();
  return certify_or_fallback(host_, candidate, coned, claim, stats_);
}

}  // namespace detail

Certificate certify_or_fallback(const Graph& g, const Certificate& candidate,
                                const VertexSet& hull, const std::string& claim,
                                RecognitionStats* stats) {
  bool in_range = true;
  for (int v : candidate.witness) in_range = in_range && v >= 0 && v < g.order();
  if (in_range && candidate.family.valid() && validate_certificate(g, candidate)) {
    return candidate;
  }
  if (stats != nullptr) ++stats->repairs;
  if (in_range && !candidate.witness.empty()) {
    std::vector<int> sorted = candidate.witness;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (auto cert = identify_forbidden(g, sorted)) return *cert;
  }
  OracleBudget budget;
  budget.max_vertices = std::max(budget.max_vertices, 18);
  const auto search = find_forbidden_bounded(g, hull, budget);
  if (search.certificate) return *search.certificate;
  throw InternalInconsistency(
      claim + ": candidate " + candidate.family.to_string() + " on " +
      VertexSet(in_range ? candidate.witness : std::vector<int>{}).to_string() +
      " does not validate and hull " + hull.to_string() +
      (search.budget_exhausted ? " is too large to search"
                               : " contains no forbidden subgraph"));
}

RecognitionResult recognize(const Graph& g, const RecognizerOptions& options,
                            RecognitionStats* stats) {
  detail::Solver solver(g, options, stats);
  detail::Outcome outcome;
  try {
    outcome = solver.Solve(g.vertices());
  } catch (const InternalInconsistency&) {
    if (!options.allow_fallback) throw;
    // Second pass: solved subproblems stay memoized, the oracle takes the rest.
    solver.EnableFallback();
    outcome = solver.Solve(g.vertices());
  }
  RecognitionResult result;
  if (outcome.certificate) {
    if (!validate_certificate(g, *outcome.certificate)) {
      throw InternalInconsistency("emitted certificate does not validate");
    }
    result.certificate = std::move(outcome.certificate);
    return result;
  }
  const std::string defect =
      detail::TreeDefect(g, *outcome.tree, maximal_cliques(g), true);
  if (!defect.empty()) {
    throw InternalInconsistency("emitted tree is not a clique path tree: " + defect);
  }
  result.tree = std::move(outcome.tree);
  return result;
}

namespace {

void RequireChordalConnected(const Graph& g) {
  if (!is_chordal(g)) throw ContractError("graph is not chordal");
  if (!is_connected(g)) throw ContractError("graph is not connected");
}

RecognitionResult ToResult(detail::Outcome outcome) {
  RecognitionResult r;
  r.tree = std::move(outcome.tree);
  r.certificate = std::move(outcome.certificate);
  return r;
}

}  // namespace

RecognitionResult handle_non_cospecial(const Graph& g, int q,
                                       const RecognizerOptions& options,
                                       RecognitionStats* stats) {
  RequireChordalConnected(g);
  const auto profile = simplicial_profile(g, q);
  if (!profile.is_simplicial || !profile.is_special || profile.is_co_special) {
    throw ContractError("q must be special simplicial and not co-special");
  }
  detail::Solver solver(g, options, stats);
  solver.EnableFallback();
  try {
    return ToResult(solver.NonCospecial(g.vertices(), q));
  } catch (const InternalInconsistency& e) {
    if (!options.allow_fallback) throw;
    return ToResult(solver.Fallback(g.vertices(), e.what()));
  }
}

RecognitionResult handle_cospecial(const Graph& g, int q,
                                   const RecognizerOptions& options,
                                   RecognitionStats* stats) {
  RequireChordalConnected(g);
  const auto profile = simplicial_profile(g, q);
  if (!profile.is_special || !profile.is_co_special) {
    throw ContractError("q must be special and co-special");
  }
  detail::Solver solver(g, options, stats);
  solver.EnableFallback();
  try {
    return ToResult(solver.Cospecial(g.vertices(), q));
  } catch (const InternalInconsistency& e) {
    // Also reached when q is co-special in one of F11..F15, which the
    // case analysis does not cover.
    if (!options.allow_fallback) throw;
    return ToResult(solver.Fallback(g.vertices(), e.what()));
  }
}

AttachmentSetup prepare_attachment(const Graph& g, int q,
                                   const RecognizerOptions& options,
                                   RecognitionStats* stats) {
  RequireChordalConnected(g);
  const auto profile = simplicial_profile(g, q);
  if (!profile.is_simplicial || profile.is_co_special) {
    throw ContractError("q must be simplicial and not co-special");
  }
  if (g.is_clique(g.vertices())) throw ContractError("graph is a clique");
  detail::Solver solver(g, options, stats);
  solver.EnableFallback();
  return solver.PrepareAttachment(g.vertices(), q);
}

std::string to_json(const RecognitionResult& result) {
  nlohmann::json j;
  j["verdict"] = result.is_path_graph() ? "path-graph" : "not-path-graph";
  if (result.tree) j["tree"] = detail::TreeToJson(*result.tree);
  if (result.certificate) j["certificate"] = nlohmann::json::parse(to_json(*result.certificate));
  return j.dump();
}

}  // namespace pathgraph
