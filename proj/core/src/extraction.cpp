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

// Certificates read off an odd cycle of H, or an odd path of H between two
// members of X.

#include <algorithm>

#include "pathgraph/errors.hpp"
#include "recognizer_internal.hpp"

namespace pathgraph::detail {

namespace {

void Append(std::vector<int>& out, std::initializer_list<int> vs) {
  out.insert(out.end(), vs.begin(), vs.end());
}

VertexSet HullOf(const std::vector<int>& vs) { return VertexSet(vs); }

}  // namespace

Certificate ExtractOddCycle(Solver& solver, const AttachmentProblem& problem,
                            const std::vector<int>& cycle) {
  const Graph& g = solver.host();
  const int p = static_cast<int>(cycle.size());
  auto sep = [&](int j) -> const VertexSet& {
    return problem.hanging[cycle[((j % p) + p) % p]].separator;
  };
  // s[j] lies in S_j & S_{j+1}; v[j] is adjacent to s[j-1] and s[j].
  std::vector<int> s(p);
  std::vector<int> v(p);
  for (int j = 0; j < p; ++j) {
    s[j] = Pick(sep(j) & sep(j + 1), "S_j & S_j+1");
    v[j] = problem.hanging[cycle[j]].v;
  }
  auto S = [&](int j) { return s[((j % p) + p) % p]; };
  auto V = [&](int j) { return v[((j % p) + p) % p]; };
  const int qp = Pick(problem.Qprime - problem.Q, "Q' - Q");
  std::vector<int> hits;
  for (int j = 0; j < p; ++j) {
    if (g.adjacent(qp, v[j])) hits.push_back(j);
  }
  std::vector<int> all{problem.q, qp};
  all.insert(all.end(), v.begin(), v.end());
  all.insert(all.end(), s.begin(), s.end());
  const VertexSet hull = HullOf(all);

  if (hits.size() <= 1) {
    const int index = hits.empty() ? 11 : 12;
    return solver.Certify(all, make_family(index, 2 * p + 2), hull, "odd cycle in H");
  }
  if (hits.size() == 2) {
    int j = hits[0];
    int k = hits[1];
    if (k == j + 1 || (j == 0 && k == p - 1)) {
      if (j == 0 && k == p - 1) std::swap(j, k);  // v_{p-1}, v_0 are consecutive
      std::vector<int> vs{problem.q, qp, V(j), V(j + 1), S(j - 1), S(j), S(j + 1)};
      return solver.Certify(vs, make_family(2), hull, "odd cycle in H, consecutive");
    }
    if ((k - j) % 2 == 0) {
      std::swap(j, k);
      k += p;
    }
    std::vector<int> vs{problem.q, qp};
    for (int i = j; i <= k; ++i) vs.push_back(V(i));
    for (int i = j; i < k; ++i) vs.push_back(S(i));
    const int n = static_cast<int>(vs.size());
    return solver.Certify(vs, make_family(14, n), hull, "odd cycle in H, apart");
  }
  return solver.Certify(all, std::nullopt, hull, "odd cycle in H, many neighbors of q'");
}

namespace {

struct Side {
  int L = -1;  // node of T0
  int K = -1;
  VertexSet R;
};

// Node of `path` closest to path[0] with an incident T' edge whose label
// splits `s`. Neighbors on the path are preferred as K.
Side FindSide(const CliqueTree& t0, const std::vector<char>& in_tprime,
              const std::vector<int>& path, const VertexSet& s) {
  const auto adj = t0.adjacency();
  std::vector<char> on_path(t0.node_count(), 0);
  for (int x : path) on_path[x] = 1;
  for (int x : path) {
    Side best;
    for (int y : adj[x]) {
      if (!in_tprime[y]) continue;
      const VertexSet label = t0.cliques[x] & t0.cliques[y];
      if (!s.intersects(label) || s.is_subset_of(label)) continue;
      const bool better = best.K < 0 || (on_path[y] && !on_path[best.K]);
      if (better) best = Side{x, y, label};
    }
    if (best.K >= 0) return best;
  }
  throw InternalInconsistency("no label of T' splits an end separator of the X-path");
}

}  // namespace

Certificate ExtractOddXPath(Solver& solver, const AttachmentProblem& problem,
                            const std::vector<int>& hpath) {
  const Graph& g = solver.host();
  const CliqueTree& t0 = problem.T0;
  const int p = static_cast<int>(hpath.size());
  const int q = problem.q;
  // 1-based as in the proof: S[1..p], v[1..p], s[1..p-1].
  std::vector<VertexSet> S(p + 2);
  std::vector<int> v(p + 2, -1);
  std::vector<int> s(p + 1, -1);
  for (int j = 1; j <= p; ++j) {
    S[j] = problem.hanging[hpath[j - 1]].separator;
    v[j] = problem.hanging[hpath[j - 1]].v;
  }
  for (int j = 1; j < p; ++j) s[j] = Pick(S[j] & S[j + 1], "S_j & S_j+1");

  std::vector<char> in_tprime(t0.node_count(), 0);
  for (const auto& c : problem.Tprime.cliques) in_tprime[FindNode(t0, c)] = 1;
  const int a1 = FindNode(t0, problem.hanging[hpath.front()].anchor);
  const int ap = FindNode(t0, problem.hanging[hpath.back()].anchor);
  std::vector<int> P = t0.path(a1, ap);
  const Side first = FindSide(t0, in_tprime, P, S[1]);
  std::vector<int> P_rev(P.rbegin(), P.rend());
  const Side last = FindSide(t0, in_tprime, P_rev, S[p]);

  v[0] = Pick(t0.cliques[first.K] - t0.cliques[first.L], "K_1 - L_1");
  v[p + 1] = Pick(t0.cliques[last.K] - t0.cliques[last.L], "K_p - L_p");
  s[0] = Pick(S[1] & first.R, "S_1 & R_1");
  s[p] = Pick(S[p] & last.R, "S_p & R_p");
  const VertexSet s0_alt = S[1] - first.R;
  const VertexSet sp_alt = S[p] - last.R;

  std::vector<int> hull_vs{q};
  hull_vs.insert(hull_vs.end(), v.begin(), v.end());
  hull_vs.insert(hull_vs.end(), s.begin(), s.end());
  if (!s0_alt.empty()) hull_vs.push_back(s0_alt.first());
  if (!sp_alt.empty()) hull_vs.push_back(sp_alt.first());

  if (first.K == last.K) {
    const int y = Pick(first.R - problem.S_q, "R_1 - S_q");
    std::vector<int> vs{q, y};
    for (int j = 0; j <= p; ++j) vs.push_back(v[j]);
    for (int j = 0; j <= p; ++j) vs.push_back(s[j]);
    hull_vs.push_back(y);
    return solver.Certify(vs, make_family(12, 2 * p + 4), HullOf(hull_vs),
                          "odd X-path, K_1 = K_p");
  }

  VertexSet allowed = PathLabels(t0, first.K, last.K) - problem.S_q;
  allowed.insert(v[0]);
  allowed.insert(v[p + 1]);
  const auto route = shortest_path(g, allowed, v[0], v[p + 1]);
  if (route.size() < 3) throw InternalInconsistency("no connector path between v_0 and v_p+1");
  const std::vector<int> x(route.begin() + 1, route.end() - 1);
  const int r = static_cast<int>(x.size());
  hull_vs.insert(hull_vs.end(), x.begin(), x.end());
  const VertexSet hull = HullOf(hull_vs);

  const bool far1 = first.L == ap;  // L_1 = Q'_p
  const bool farp = last.L == a1;   // L_p = Q'_1
  std::vector<int> vs{q};
  if (far1 && farp) {
    if (r <= 2) {
      for (int j = 0; j <= p + 1; ++j) vs.push_back(v[j]);
      for (int j = 0; j <= p; ++j) vs.push_back(s[j]);
      vs.insert(vs.end(), x.begin(), x.end());
      const int n = static_cast<int>(vs.size());
      return solver.Certify(vs, make_family(r == 1 ? 14 : 15, n), hull,
                            "odd X-path, both far");
    }
    Append(vs, {v[0], v[p + 1], s[0], s[p]});
    vs.insert(vs.end(), x.begin(), x.end());
    return solver.Certify(vs, make_family(10, r + 5), hull, "odd X-path, both far");
  }
  if (far1 != farp) {
    // One-sided. Orient so that the near end is the first one.
    const bool near_first = farp;
    const int s_near_alt = Pick(near_first ? s0_alt : sp_alt, "S - R at the near end");
    if (r == 1) {
      for (int j = 0; j <= p + 1; ++j) vs.push_back(v[j]);
      if (near_first) {
        vs.push_back(s_near_alt);
        for (int j = 1; j <= p; ++j) vs.push_back(s[j]);
      } else {
        for (int j = 0; j < p; ++j) vs.push_back(s[j]);
        vs.push_back(s_near_alt);
      }
      vs.push_back(x[0]);
      const int n = static_cast<int>(vs.size());
      return solver.Certify(vs, make_family(13, n), hull, "odd X-path, one-sided");
    }
    Append(vs, {v[0], v[p + 1], s_near_alt, near_first ? s[p] : s[0]});
    vs.insert(vs.end(), x.begin(), x.end());
    return solver.Certify(vs, make_family(5, r + 5), hull, "odd X-path, one-sided");
  }
  const int a0 = Pick(s0_alt, "S_1 - R_1");
  const int ap_alt = Pick(sp_alt, "S_p - R_p");
  if (r <= 2) {
    Append(vs, {v[0], v[p + 1], a0, s[1], ap_alt});
    vs.insert(vs.end(), x.begin(), x.end());
    return solver.Certify(vs, make_family(r == 1 ? 2 : 3), hull, "odd X-path, two-sided");
  }
  Append(vs, {v[0], v[p + 1], a0, ap_alt});
  vs.insert(vs.end(), x.begin(), x.end());
  return solver.Certify(vs, make_family(10, r + 5), hull, "odd X-path, two-sided");
}

}  // namespace pathgraph::detail
