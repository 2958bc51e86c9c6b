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

// Special co-special simplicial vertices: extend a clique path tree of
// G(Q - {Q}) by the clique Q, regrafting the subtrees around L when Q' sits
// inside some T0^a.

#include <algorithm>

#include "pathgraph/errors.hpp"
#include "recognizer_internal.hpp"

namespace pathgraph::detail {

namespace {

class CospecialStep {
 public:
  CospecialStep(Solver& solver, const VertexSet& w, int q)
      : solver_(solver), g_(solver.host()), w_(w), q_(q) {}

  Outcome Run();

 private:
  // Result of the layered U/V search around a clique of L*.
  struct Layers {
    std::optional<Outcome> done;
    int U = -1;
    int W = -1;
    int s_q = -1;
  };

  void Index();
  int CheckEndsOfT0(int a);
  [[noreturn]] void Contradiction(int a, const std::string& what);
  Outcome RepairOutsideSubtree(int L);
  Outcome Attempt(int L);
  Layers BuildLayers(int L);
  Outcome SplitLabels(int L, int U, int W, int s_q);
  Outcome Final(int U, int W, int X, int s_q);

  bool Star(int L) const {
    return static_cast<int>(tl_[L].size()) < t_.node_count() - 1;
  }
  VertexSet Clique(int i) const { return t_.cliques[i]; }
  bool MiddleOf(int a, int b, int c) const {
    const VertexSet allowed = w_ - g_.neighbors(a);
    return !reachable(g_, allowed - VertexSet{a}, b).contains(c);
  }
  Certificate Certify(const std::vector<int>& vs, const std::optional<FamilyId>& expected,
                      const std::string& claim) {
    return solver_.Certify(vs, expected, VertexSet(vs), claim);
  }

  Solver& solver_;
  const Graph& g_;
  VertexSet w_;
  int q_;
  VertexSet Q_;
  VertexSet SQ_;
  CliqueTree t_;  // T0 plus Q hung at Q'
  int nq_ = -1;
  int nqp_ = -1;
  std::vector<std::vector<int>> adj_;
  std::vector<int> toward_;     // L' (next node towards Q'), -1 at Q'
  std::vector<VertexSet> s_;    // S_L
  std::vector<int> bar_;        // L-bar
  std::vector<char> in_l_;      // membership in L
  std::vector<std::vector<int>> tl_;
  std::vector<int> a_;          // the set A
};

void CospecialStep::Index() {
  const int n = t_.node_count();
  adj_ = t_.adjacency();
  const auto dist = Distances(t_, nqp_);
  toward_.assign(n, -1);
  s_.assign(n, VertexSet());
  for (int i = 0; i < n; ++i) {
    if (i == nqp_) continue;
    for (int j : adj_[i]) {
      if (dist[j] == dist[i] - 1) toward_[i] = j;
    }
    s_[i] = Clique(i) & Clique(toward_[i]);
  }
  bar_.assign(n, -1);
  in_l_.assign(n, 0);
  tl_.assign(n, {});
  for (int L = 0; L < n; ++L) {
    if (L == nq_ || L == nqp_) continue;
    for (int x = L; x != nqp_; x = toward_[x]) {
      if (s_[x].is_subset_of(s_[L])) bar_[L] = x;
    }
    bool member = true;
    for (int m : adj_[L]) {
      if (m != toward_[L] && s_[bar_[L]].is_subset_of(Clique(L) & Clique(m))) member = false;
    }
    in_l_[L] = member;
    if (member) {
      const VertexSet sl = s_[L];
      tl_[L] = CutComponent(t_, nqp_,
                            [&](const VertexSet& label) { return label.is_subset_of(sl); });
    }
  }
}

Outcome CospecialStep::Run() {
  Q_ = (g_.neighbors(q_) & w_) | VertexSet{q_};
  SQ_ = Boundary(g_, w_, q_);
  Outcome base = solver_.Solve(w_ - (Q_ - SQ_));
  if (base.certificate) {
    solver_.Count("cospecial: certificate from G(Q - {Q})");
    return base;
  }
  const CliqueTree t0 = base.tree->canonical();
  int anchor = -1;
  for (int i = 0; i < t0.node_count() && anchor < 0; ++i) {
    if (SQ_.is_subset_of(t0.cliques[i])) anchor = i;
  }
  if (anchor < 0) throw InternalInconsistency("no clique of G(Q - {Q}) contains S_Q");
  {
    TreeAssembler with_q;
    with_q.AddTree(t0);
    with_q.Link(t0.cliques[anchor], Q_);
    t_ = with_q.Build();
  }
  nq_ = FindNode(t_, Q_);
  nqp_ = FindNode(t_, t0.cliques[anchor]);
  Index();

  for (int a : SQ_) {
    int inner = 0;
    for (int j : adj_[nqp_]) {
      if (j != nq_ && Clique(j).contains(a)) ++inner;
    }
    if (inner == 2) a_.push_back(a);
  }
  if (a_.empty()) {
    solver_.Count("cospecial: Q' is an end of every path");
    return Outcome{t_, std::nullopt};
  }

  // The case analysis is written for a minimal non-path graph. On other
  // inputs a choice of L can run into a case it does not cover, so every
  // candidate is tried before giving up.
  std::string failures;
  auto accept = [&](const Outcome& out) {
    if (out.certificate) return true;
    const std::string defect = solver_.Defect(w_, *out.tree);
    if (defect.empty()) return true;
    failures += " [" + defect + "]";
    return false;
  };
  try {
    for (int L = 0; L < t_.node_count(); ++L) {
      if (!in_l_[L] || std::binary_search(tl_[L].begin(), tl_[L].end(), toward_[L])) continue;
      try {
        Outcome out = RepairOutsideSubtree(L);
        if (accept(out)) {
          solver_.Count("cospecial: regraft around L-bar");
          return out;
        }
      } catch (const InternalInconsistency& e) {
        failures += std::string(" [") + e.what() + "]";
      }
    }
    std::vector<int> stars;
    for (int i = 0; i < t_.node_count(); ++i) {
      if (in_l_[i] && Star(i)) stars.push_back(i);
    }
    if (stars.empty()) {
      for (int a : a_) CheckEndsOfT0(a);
      throw InternalInconsistency("L* is empty although A is not");
    }
    std::stable_sort(stars.begin(), stars.end(),
                     [&](int x, int y) { return tl_[x].size() > tl_[y].size(); });
    for (int L : stars) {
      try {
        Outcome out = Attempt(L);
        if (accept(out)) return out;
      } catch (const InternalInconsistency& e) {
        failures += std::string(" [") + e.what() + "]";
      }
    }
  } catch (const Extracted& e) {
    return Outcome{std::nullopt, e.certificate};
  }
  throw InternalInconsistency("cospecial: no choice of L succeeds:" + failures);
}

Outcome CospecialStep::Attempt(int L) {
  Layers first = BuildLayers(L);
  if (first.done) return *first.done;
  const int U = first.U;
  const int W = first.W;
  if (s_[W] != s_[L]) return SplitLabels(L, U, W, first.s_q);
  if (!in_l_[W] || tl_[W] != tl_[L]) {
    throw InternalInconsistency("W is not in L* with T_W = T_L");
  }
  Layers second = BuildLayers(W);
  if (second.done) return *second.done;
  return Final(U, W, second.U, first.s_q);
}

int CospecialStep::CheckEndsOfT0(int a) {
  std::vector<int> path;
  for (int i = 0; i < t_.node_count(); ++i) {
    if (i != nq_ && Clique(i).contains(a)) path.push_back(i);
  }
  std::vector<int> leaves;
  for (int x : path) {
    int inner = 0;
    for (int y : adj_[x]) {
      if (y != nq_ && Clique(y).contains(a)) ++inner;
    }
    if (inner <= 1) leaves.push_back(x);
  }
  if (leaves.size() != 2 || !in_l_[leaves[0]] || !in_l_[leaves[1]]) {
    throw InternalInconsistency("ends of T0^a: the ends of T0^a are not both in L");
  }
  const int l1 = Pick(Clique(leaves[0]) - s_[leaves[0]], "L_1 - S_L1");
  const int l2 = Pick(Clique(leaves[1]) - s_[leaves[1]], "L_2 - S_L2");
  const bool mid1 = MiddleOf(l1, q_, l2);
  const bool mid2 = MiddleOf(l2, q_, l1);
  if (!mid1 && !mid2 && !MiddleOf(q_, l1, l2) && !g_.adjacent(l1, l2)) {
    solver_.Count("cospecial: asteroidal triple around a");
    throw Extracted{solver_.NeighborhoodAt(w_, a, "ends of T0^a")};
  }
  if (mid1 && Star(leaves[0])) return leaves[0];
  if (mid2 && Star(leaves[1])) return leaves[1];
  throw InternalInconsistency("ends of T0^a: no end of T0^a is in L*");
}

void CospecialStep::Contradiction(int a, const std::string& what) {
  CheckEndsOfT0(a);
  throw InternalInconsistency(what);
}

Outcome CospecialStep::RepairOutsideSubtree(int L) {
  const int lp = toward_[L];
  const int lb = bar_[L];
  const int lbp = toward_[lb];
  if (lb == L) throw InternalInconsistency("L outside T_L: L' outside T_L with L-bar = L");
  // Cut L L' and L-bar L-bar': T1 holds L, T2 holds L' and L-bar, T3 the rest.
  CliqueTree cut = t_;
  cut.edges.erase(std::remove_if(cut.edges.begin(), cut.edges.end(),
                                 [&](const std::pair<int, int>& e) {
                                   auto has = [&](int x, int y) {
                                     return (e.first == x && e.second == y) ||
                                            (e.first == y && e.second == x);
                                   };
                                   return has(L, lp) || has(lb, lbp);
                                 }),
                  cut.edges.end());
  const std::vector<char> none(cut.node_count(), 0);
  const auto t1 = ComponentAvoiding(cut, L, none);
  const auto t2 = ComponentAvoiding(cut, lp, none);
  const auto t3 = ComponentAvoiding(cut, lbp, none);
  std::vector<int> t13 = t1;
  t13.insert(t13.end(), t3.begin(), t3.end());
  Outcome five = solver_.Solve(UnionOf(t_, t13));
  if (five.certificate) return five;
  CliqueTree t5 = five.tree->canonical();
  const int l5 = FindNode(t5, Clique(L));
  int other = -1;
  for (const auto& [a, b] : t5.edges) {
    if (a != l5 && b != l5) continue;
    const int y = a == l5 ? b : a;
    if ((t5.cliques[l5] & t5.cliques[y]) == s_[lb] && other < 0) other = y;
  }
  if (other < 0) throw InternalInconsistency("L outside T_L: no edge at L labelled S_L-bar");
  TreeAssembler out;
  out.AddTree(t5);
  out.Unlink(Clique(L), t5.cliques[other]);
  out.AddTree(InducedTree(t_, t2));
  out.Link(Clique(L), Clique(lp));
  out.Link(Clique(lb), t5.cliques[other]);
  return Outcome{out.Build(), std::nullopt};
}

CospecialStep::Layers CospecialStep::BuildLayers(int L) {
  Layers result;
  const int n = t_.node_count();
  const auto& tl = tl_[L];
  std::vector<char> in_tl(n, 0);
  for (int x : tl) in_tl[x] = 1;
  std::vector<char> in_tlp = in_tl;
  in_tlp[L] = 1;
  const VertexSet qp = Clique(nqp_);

  const auto route = t_.path(L, nqp_);
  const VertexSet s_qp = Clique(route[route.size() - 2]) & qp;
  result.s_q = Pick(SQ_ - s_qp, "S_Q - S_Q'");

  std::vector<int> tlp_nodes = tl;
  tlp_nodes.push_back(L);
  Outcome sub = solver_.Solve(UnionOf(t_, tlp_nodes));
  if (sub.certificate) {
    result.done = sub;
    return result;
  }
  const CliqueTree T = sub.tree->canonical();
  const int lt = FindNode(T, Clique(L));
  if (lt < 0 || T.adjacency()[lt].size() != 1) {
    throw InternalInconsistency("L is not a leaf of the tree for T_L'");
  }

  std::vector<int> us;
  std::vector<int> vs;
  for (int m : adj_[L]) {
    if (!in_tlp[m]) us.push_back(m);
  }
  for (int m = 0; m < n; ++m) {
    if (!in_tlp[m] && m != nqp_ && toward_[m] >= 0 && in_tl[toward_[m]]) vs.push_back(m);
  }
  // Alternating layers V_0, U_1, V_1, ...; each member remembers the member
  // of the previous layer that it meets.
  std::vector<std::vector<int>> layer_u{{}};
  std::vector<std::vector<int>> layer_v(1);
  std::vector<int> parent(n, -1);
  std::vector<char> used(n, 0);
  for (int v : vs) {
    if (Clique(v).intersects(Q_)) {
      layer_v[0].push_back(v);
      used[v] = 1;
    }
  }
  while (true) {
    std::vector<int> next_u;
    for (int u : us) {
      if (used[u]) continue;
      for (int v : layer_v.back()) {
        if (Clique(u).intersects(Clique(v))) {
          parent[u] = v;
          break;
        }
      }
      if (parent[u] >= 0) next_u.push_back(u);
    }
    if (next_u.empty()) break;
    for (int u : next_u) used[u] = 1;
    std::vector<int> next_v;
    for (int v : vs) {
      if (used[v]) continue;
      for (int u : next_u) {
        if (Clique(v).intersects(Clique(u))) {
          parent[v] = u;
          break;
        }
      }
      if (parent[v] >= 0) next_v.push_back(v);
    }
    for (int v : next_v) used[v] = 1;
    layer_u.push_back(next_u);
    layer_v.push_back(next_v);
  }
  const int depth = static_cast<int>(layer_u.size()) - 1;
  int k = -1;
  int uk = -1;
  for (int p = 1; p <= depth && k < 0; ++p) {
    for (int u : layer_u[p]) {
      if (!s_[u].is_subset_of(qp)) {
        k = p;
        uk = u;
        break;
      }
    }
  }

  auto chain = [&](int top, int p, std::vector<int>& cu, std::vector<int>& cv) {
    cu.assign(p + 1, -1);
    cv.assign(p, -1);
    cu[p] = top;
    for (int i = p; i >= 1; --i) {
      cv[i - 1] = parent[cu[i]];
      if (i > 1) cu[i - 1] = parent[cv[i - 1]];
    }
  };
  // x_1 in V_0 & U_1, x_2 in U_1 & V_1, ..., x_{2p-1} in V_{p-1} & U_p.
  auto connectors = [&](const std::vector<int>& cu, const std::vector<int>& cv, int p) {
    std::vector<int> x;
    for (int i = 1; i <= p; ++i) {
      x.push_back(Pick(Clique(cv[i - 1]) & Clique(cu[i]), "V_i-1 & U_i"));
      if (i < p) x.push_back(Pick(Clique(cu[i]) & Clique(cv[i]), "U_i & V_i"));
    }
    return x;
  };
  auto first_x = [&](const std::vector<int>& cu, const std::vector<int>& cv) {
    const VertexSet shared = Clique(cv[0]) & Clique(cu[1]) & Q_;
    if (!shared.empty()) Contradiction(shared.first(), "layers: V_0 & U_1 meets Q");
    return Pick(Clique(cv[0]) & Q_, "V_0 & Q");
  };

  // Equation (1): S_U inside U'' for every U of the layers before k.
  const int checked = k < 0 ? depth : k - 1;
  for (int p = 1; p <= checked; ++p) {
    for (int up : layer_u[p]) {
      const int far = FarthestMeeting(T, lt, s_[up]);
      if (far >= 0 && s_[up].is_subset_of(T.cliques[far])) continue;
      solver_.Count("cospecial: label walk fails");
      std::vector<int> cu;
      std::vector<int> cv;
      chain(up, p, cu, cv);
      std::vector<int> x = connectors(cu, cv, p);
      const int x0 = first_x(cu, cv);
      const auto tpath = T.path(lt, far);
      int z_node = -1;
      int zp_node = -1;
      for (std::size_t i = 1; i < tpath.size(); ++i) {
        if (!s_[up].is_subset_of(T.cliques[tpath[i]])) {
          z_node = tpath[i];
          zp_node = tpath[i - 1];
          break;
        }
      }
      if (z_node < 0) throw InternalInconsistency("equation (1): no clique Z");
      const VertexSet Z = T.cliques[z_node];
      const int z = Pick(Z - T.cliques[zp_node], "Z - Z'");
      const int ell = Pick(Clique(L) - s_[L], "L - S_L");
      const int zn = FindNode(t_, Z);
      VertexSet allowed = PathLabels(t_, zn, nq_) - s_[L];
      allowed.insert(z);
      allowed.insert(q_);
      const auto ypath = shortest_path(g_, allowed, z, q_);
      if (ypath.size() < 3) throw InternalInconsistency("equation (1): no path from z to q");
      const std::vector<int> y(ypath.begin() + 1, ypath.end() - 1);
      if (Z.contains(x0)) {
        throw Extracted{solver_.NeighborhoodAt(w_, x0, "equation (1), Z holds x_0")};
      }
      const int xr1 = Pick(Z & Clique(up), "Z & U_p");
      if (Q_.contains(xr1)) {
        throw Extracted{solver_.NeighborhoodAt(w_, xr1, "equation (1), x_r+1 in Q")};
      }
      const int t = static_cast<int>(y.size());
      std::vector<int> out;
      if (t <= 2) {
        for (int i = 1; i <= p; ++i) out.push_back(Pick(Clique(cu[i]) - s_[cu[i]], "U_i - S_Ui"));
        for (int i = 0; i < p; ++i) out.push_back(Pick(Clique(cv[i]) - s_[cv[i]], "V_i - S_Vi"));
        out.push_back(x0);
        out.insert(out.end(), x.begin(), x.end());
        out.push_back(xr1);
        out.insert(out.end(), y.begin(), y.end());
        out.insert(out.end(), {q_, z, ell});
        const int size = static_cast<int>(out.size());
        throw Extracted{Certify(out, make_family(t == 1 ? 14 : 15, size), "equation (1)")};
      }
      out = {ell, x0, xr1, z};
      out.insert(out.end(), y.begin(), y.end());
      out.push_back(q_);
      throw Extracted{Certify(out, make_family(10, t + 5), "equation (1)")};
    }
  }

  if (k >= 2) {
    solver_.Count("cospecial: layered chain");
    std::vector<int> cu;
    std::vector<int> cv;
    chain(uk, k, cu, cv);
    std::vector<int> x = connectors(cu, cv, k);
    const int x0 = first_x(cu, cv);
    std::vector<int> out;
    for (int i = 1; i <= k; ++i) out.push_back(Pick(Clique(cu[i]) - s_[cu[i]], "U_i - S_Ui"));
    for (int i = 0; i < k; ++i) out.push_back(Pick(Clique(cv[i]) - s_[cv[i]], "V_i - S_Vi"));
    out.push_back(x0);
    out.insert(out.end(), x.begin(), x.end());
    out.push_back(Pick(s_[uk] - qp, "S_Uk - Q'"));
    out.push_back(result.s_q);
    out.push_back(q_);
    result.done = Outcome{std::nullopt,
                          Certify(out, make_family(16, 4 * k + 3), "layered chain")};
    return result;
  }
  if (k == 1) {
    result.U = uk;
    result.W = parent[uk];
    return result;
  }

  // No layer reaches outside Q': regraft every component around T.
  solver_.Count("cospecial: regraft around L");
  TreeAssembler out;
  out.AddTree(T);
  for (int m : us) {
    out.AddTree(InducedTree(t_, ComponentAvoiding(t_, m, in_tlp)));
    if (used[m]) {
      const int far = FarthestMeeting(T, lt, s_[m]);
      if (far < 0) throw InternalInconsistency("no clique of T meets S_U");
      out.Link(Clique(m), T.cliques[far]);
    } else {
      out.Link(Clique(m), Clique(L));
    }
  }
  for (int m : vs) {
    out.AddTree(InducedTree(t_, ComponentAvoiding(t_, m, in_tlp)));
    if (used[m]) {
      out.Link(Clique(m), Clique(L));
    } else {
      const int far = FarthestMeeting(T, lt, s_[m]);
      if (far < 0) throw InternalInconsistency("no clique of T meets S_V");
      out.Link(Clique(m), T.cliques[far]);
    }
  }
  result.done = Outcome{out.Build(), std::nullopt};
  return result;
}

Outcome CospecialStep::SplitLabels(int L, int U, int W, int s_q) {
  (void)L;
  solver_.Count("cospecial: S_W differs from S_L");
  const VertexSet uw = Clique(U) & Clique(W);
  if (uw.intersects(Q_)) Contradiction((uw & Q_).first(), "S_W != S_L: U & W meets Q");
  const int b = Pick(Clique(W) & Q_, "W & Q");
  const int c = Pick(uw, "U & W");
  const int s_u = Pick(s_[U] - Clique(nqp_), "S_U - Q'");
  const int u = Pick(Clique(U) - s_[U], "U - S_U");
  const int w = Pick(Clique(W) - s_[W], "W - S_W");
  VertexSet allowed = PathLabels(t_, U, nq_) - s_[W];
  allowed.insert(u);
  allowed.insert(q_);
  const auto route = shortest_path(g_, allowed, u, q_);
  if (route.size() < 3) throw InternalInconsistency("S_W != S_L: no path from u to q");
  const std::vector<int> x(route.begin() + 1, route.end() - 1);
  const int r = static_cast<int>(x.size());
  std::vector<int> out{w, b, c, u};
  if (r == 1) {
    out.insert(out.end(), {s_u, x[0], s_q, q_});
    return Outcome{std::nullopt, Certify(out, make_family(8), "S_W != S_L")};
  }
  if (r == 2) {
    if (g_.adjacent(x[0], s_q)) {
      out.insert(out.end(), {s_u, x[0], s_q, q_});
    } else {
      out.insert(out.end(), {x[0], x[1], s_q, q_});
    }
    return Outcome{std::nullopt, Certify(out, make_family(9), "S_W != S_L")};
  }
  out.insert(out.end(), x.begin(), x.end());
  out.push_back(q_);
  return Outcome{std::nullopt, Certify(out, make_family(10, r + 5), "S_W != S_L")};
}

Outcome CospecialStep::Final(int U, int W, int X, int s_q) {
  solver_.Count("cospecial: final case analysis");
  const VertexSet qp = Clique(nqp_);
  const VertexSet sw = s_[W];
  const int u = Pick(Clique(U) - s_[U], "U - S_U");
  const int x = Pick(Clique(X) - Clique(W), "X - W");
  const int s_u = Pick(s_[U] - qp, "S_U - Q'");
  const int s_x = Pick(s_[X] - qp, "S_X - Q'");
  const VertexSet ux = Clique(U) & Clique(X);
  if (ux.intersects(Q_)) Contradiction((ux & Q_).first(), "final: U & X meets Q");
  auto emit = [&](std::vector<int> vs, const std::optional<FamilyId>& expected) {
    return Outcome{std::nullopt, Certify(vs, expected, "final case analysis")};
  };
  if (!ux.empty()) {
    const int a = ux.first();
    const int b = Pick(sw & Q_, "S_W & Q");
    const bool in_x = Clique(X).contains(b);
    const bool in_u = Clique(U).contains(b);
    if (!in_x && !in_u) return emit({q_, u, x, s_q, s_u, s_x, a, b}, make_family(6));
    if (in_x) {
      const int c = Pick(sw - s_[X], "S_W - S_X");
      return emit({x, a, b, u, s_u, c, s_q, q_}, std::nullopt);
    }
    const int c = Pick(sw - s_[U], "S_W - S_U");
    return emit({u, a, b, x, s_x, c, s_q, q_}, std::nullopt);
  }
  const int a = Pick(Clique(U) & Clique(W), "U & W");
  if (!Q_.contains(a)) {
    const VertexSet xq = Clique(X) & Q_;
    if (!xq.empty()) return emit({q_, u, x, s_q, s_u, s_x, a, xq.first()}, make_family(6));
    const int c = Pick(Clique(W) & Q_, "W & Q");
    const int d = Pick(Clique(X) & sw, "X & S_W");
    if (g_.adjacent(c, u)) return emit({q_, u, x, s_q, s_u, s_x, c, d}, make_family(6));
    return emit({q_, u, x, s_q, s_u, s_x, a, c, d}, make_family(7));
  }
  const int e = Pick(Clique(X) & sw, "X & S_W");
  if (!Q_.contains(e)) return emit({q_, u, x, s_q, s_u, s_x, a, e}, make_family(6));
  const int f = Pick(sw - SQ_, "S_W - S_Q");
  return emit({q_, u, x, s_u, s_x, a, e, f}, std::nullopt);
}

}  // namespace

Outcome Solver::Cospecial(const VertexSet& w, int q) {
  CospecialStep step(*this, w, q);
  return step.Run();
}

}  // namespace pathgraph::detail
