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

#include "pathgraph/families.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

#include "json_util.hpp"
#include "pathgraph/errors.hpp"
#include "pathgraph/isomorphism.hpp"

namespace pathgraph {

bool family_is_parameterized(int index) {
  switch (index) {
    case 0:
    case 5:
    case 10:
    case 11:
    case 12:
    case 13:
    case 14:
    case 15:
    case 16:
      return true;
    default:
      return false;
  }
}

namespace {

void CheckIndex(int index) {
  if (index < 0 || index >= kFamilyCount) {
    throw ContractError("family index must be 0..16, got " + std::to_string(index));
  }
}

// Minimum and residue mod 4 (-1 for none) of each parameterized family.
struct Domain {
  int minimum;
  int residue;
};

Domain DomainOf(int index) {
  switch (index) {
    case 0:
      return {4, -1};
    case 5:
      return {7, -1};
    case 10:
      return {8, -1};
    case 11:
    case 12:
      return {8, 0};
    case 13:
    case 14:
      return {9, 1};
    case 15:
      return {10, 2};
    case 16:
      return {11, 3};
    default:
      return {0, -1};
  }
}

}  // namespace

bool FamilyId::parameterized() const { return family_is_parameterized(index); }

bool FamilyId::valid() const {
  if (index < 0 || index >= kFamilyCount) return false;
  if (!parameterized()) return parameter == 0;
  const Domain d = DomainOf(index);
  return parameter >= d.minimum && (d.residue < 0 || parameter % 4 == d.residue);
}

std::string FamilyId::to_string() const {
  std::string out = "F" + std::to_string(index);
  if (parameterized()) out += "(" + std::to_string(parameter) + ")";
  return out;
}

std::string family_domain(int index) {
  CheckIndex(index);
  if (!family_is_parameterized(index)) return "no parameter";
  const Domain d = DomainOf(index);
  std::string out = "n >= " + std::to_string(d.minimum);
  if (d.residue >= 0) out += " and n = " + std::to_string(d.residue) + " mod 4";
  return out;
}

int family_smallest_parameter(int index) {
  CheckIndex(index);
  return family_is_parameterized(index) ? DomainOf(index).minimum : 0;
}

int family_next_parameter(int index, int parameter) {
  CheckIndex(index);
  if (!family_is_parameterized(index)) {
    throw ContractError("F" + std::to_string(index) + " has no parameter");
  }
  return parameter + (DomainOf(index).residue < 0 ? 1 : 4);
}

int parse_family_index(const std::string& text) {
  std::string digits = text;
  if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'f')) digits.erase(0, 1);
  if (digits.empty() || digits.size() > 2 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw ParseError("unknown family \"" + text + "\" (expected F0..F16)");
  }
  const int index = std::stoi(digits);
  if (index >= kFamilyCount) {
    throw ParseError("unknown family \"" + text + "\" (expected F0..F16)");
  }
  return index;
}

FamilyId make_family(int index, int parameter) {
  CheckIndex(index);
  FamilyId id{index, parameter};
  if (!id.valid()) {
    throw ContractError("invalid parameter " + std::to_string(parameter) + " for F" +
                        std::to_string(index) + ": " + family_domain(index));
  }
  return id;
}

std::vector<FamilyId> families_of_order(int n) {
  static const std::map<int, int> kFixedOrder = {
      {1, 8}, {2, 7}, {3, 8}, {4, 8}, {6, 8}, {7, 9}, {8, 8}, {9, 8}};
  std::vector<FamilyId> out;
  for (int index = 0; index < kFamilyCount; ++index) {
    if (family_is_parameterized(index)) {
      FamilyId id{index, n};
      if (id.valid()) out.push_back(id);
    } else if (kFixedOrder.at(index) == n) {
      out.push_back({index, 0});
    }
  }
  return out;
}

namespace {

// Builds a graph from named vertices; vertices are numbered in order of
// first mention.
class Builder {
 public:
  int vertex(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    const int id = static_cast<int>(names_.size());
    ids_.emplace(name, id);
    names_.push_back(name);
    return id;
  }
  void edge(const std::string& a, const std::string& b) {
    edges_.emplace_back(vertex(a), vertex(b));
  }
  void clique(const std::vector<std::string>& members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) edge(members[i], members[j]);
    }
  }
  void join(const std::string& a, const std::vector<std::string>& members) {
    for (const auto& m : members) edge(a, m);
  }
  // Adds a vertex adjacent to every vertex so far.
  void cone(const std::string& apex) {
    const std::vector<std::string> base = names_;
    join(apex, base);
  }
  Graph build() const {
    Graph g(static_cast<int>(names_.size()), edges_);
    g.set_names(names_);
    return g;
  }

 private:
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> edges_;
};

std::string Name(const std::string& stem, int i) { return stem + std::to_string(i); }

std::vector<std::string> Names(const std::string& stem, int from, int to) {
  std::vector<std::string> out;
  for (int i = from; i <= to; ++i) out.push_back(Name(stem, i));
  return out;
}

// The tent-like chain: clique {s0, sp} with q, chain x1..xr complete to both,
// v0 at the x1 end and vp at the xr end. r = 1 is the tent; r = 2 the 4-tent.
void TentChain(Builder& b, int r) {
  for (const auto& v : {"q", "s0", "sp", "v0", "vp"}) b.vertex(v);
  for (const auto& x : Names("x", 1, r)) b.vertex(x);
  b.clique({"q", "s0", "sp"});
  for (int i = 1; i <= r; ++i) {
    b.join(Name("x", i), {"s0", "sp"});
    if (i < r) b.edge(Name("x", i), Name("x", i + 1));
  }
  b.edge("v0", "s0");
  b.edge("v0", "x1");
  b.edge("vp", "sp");
  b.edge("vp", Name("x", r));
}

// Path v0 - x1 - ... - xr - vp with t complete to the x's and a pendant q at
// t. r = 2 is the net's relative on 7 vertices once coned.
void NetChain(Builder& b, int r) {
  for (const auto& v : {"v0", "vp", "t", "q"}) b.vertex(v);
  for (const auto& x : Names("x", 1, r)) b.vertex(x);
  b.edge("v0", "x1");
  b.edge(Name("x", r), "vp");
  b.edge("q", "t");
  for (int i = 1; i <= r; ++i) {
    b.edge(Name("x", i), "t");
    if (i < r) b.edge(Name("x", i), Name("x", i + 1));
  }
}

Graph Hole(int n) {
  Builder b;
  for (int i = 0; i < n; ++i) b.vertex(Name("c", i));
  for (int i = 0; i < n; ++i) b.edge(Name("c", i), Name("c", (i + 1) % n));
  return b.build();
}

// Minimal non-interval bases below are the classical Lekkerkerker-Boland
// graphs (long claw, whipping top) and the tent/net chains above.
Graph ConeLongClaw() {
  Builder b;
  b.join("c", {"a1", "a2", "a3"});
  b.edge("a1", "b1");
  b.edge("a2", "b2");
  b.edge("a3", "b3");
  b.cone("w");
  return b.build();
}

Graph ConeWhippingTop() {
  Builder b;
  for (int i = 1; i < 5; ++i) b.edge(Name("a", i), Name("a", i + 1));
  b.join("h", Names("a", 1, 5));
  b.edge("p", "a3");
  b.cone("w");
  return b.build();
}

Graph ConeTent(int r) {
  Builder b;
  TentChain(b, r);
  b.cone("w");
  return b.build();
}

Graph ConeNet(int r) {
  Builder b;
  NetChain(b, r);
  b.cone("w");
  return b.build();
}

Graph F6() {
  Builder b;
  for (const auto& v : {"q", "u", "x", "sQ", "sU", "sX", "a", "b"}) b.vertex(v);
  b.edge("a", "b");
  for (const auto& s : {"sQ", "sU", "sX"}) b.join(s, {"a", "b"});
  b.join("q", {"sQ", "b"});
  b.join("u", {"sU", "a"});
  b.join("x", {"sX", "a"});
  return b.build();
}

Graph F7() {
  Builder b;
  for (const auto& v : {"q", "u", "x", "sQ", "sU", "sX", "a", "c", "d"}) b.vertex(v);
  b.clique({"a", "c", "d"});
  for (const auto& s : {"sQ", "sU", "sX"}) b.join(s, {"a", "c", "d"});
  b.join("q", {"sQ", "c"});
  b.join("u", {"sU", "a"});
  b.join("x", {"sX", "d"});
  return b.build();
}

Graph F8(bool drop_x1_q) {
  Builder b;
  for (const auto& v : {"w", "b", "c", "u", "sU", "x1", "sQ", "q"}) b.vertex(v);
  b.clique({"w", "b", "c"});
  b.join("b", {"q", "sQ", "x1", "sU"});
  b.join("c", {"u", "sU", "x1", "sQ"});
  b.join("u", {"sU", "x1"});
  b.edge("sU", "x1");
  b.join("sQ", {"x1", "q"});
  if (!drop_x1_q) b.edge("x1", "q");
  return b.build();
}

Graph F10(int n) {
  Builder b;
  TentChain(b, n - 5);
  return b.build();
}

// Hub clique v1..vm (m = 2k-1) with a and b complete to it; u_j attached to
// v_{j-1} and v_j, indices mod m. F12 adds the edge b-u1.
Graph F11(int n, bool extra) {
  const int m = n / 2 - 1;
  Builder b;
  b.vertex("a");
  b.vertex("b");
  const auto hub = Names("v", 1, m);
  for (const auto& v : hub) b.vertex(v);
  for (const auto& u : Names("u", 1, m)) b.vertex(u);
  b.clique(hub);
  b.join("a", hub);
  b.join("b", hub);
  for (int j = 1; j <= m; ++j) {
    const int prev = j == 1 ? m : j - 1;
    b.join(Name("u", j), {Name("v", prev), Name("v", j)});
  }
  if (extra) b.edge("b", "u1");
  return b.build();
}

// Clique s0..sp (p = (n-5)/2) with q and x1 complete to it; v_i between
// s_{i-1} and s_i, v0 on s0 and x1, v_{p+1} on sp and x1. F15 splits x1 into
// adjacent x1, x2 with v_{p+1} moved to x2.
Graph F14(int n, bool split) {
  const int p = split ? (n - 6) / 2 : (n - 5) / 2;
  Builder b;
  b.vertex("q");
  b.vertex("x1");
  if (split) b.vertex("x2");
  const auto s = Names("s", 0, p);
  for (const auto& v : s) b.vertex(v);
  for (const auto& v : Names("v", 0, p + 1)) b.vertex(v);
  b.clique(s);
  b.join("q", s);
  b.join("x1", s);
  if (split) {
    b.join("x2", s);
    b.edge("x1", "x2");
  }
  b.join("v0", {"s0", "x1"});
  for (int i = 1; i <= p; ++i) b.join(Name("v", i), {Name("s", i - 1), Name("s", i)});
  b.join(Name("v", p + 1), {Name("s", p), split ? "x2" : "x1"});
  return b.build();
}

// Clique {s0p, s1..sp} (s0p plays s'_0) with q and x1 complete to it; v0 is
// complete to s1..sp and x1, v1 sits on s0p and s1, v_i on s_{i-1} and s_i,
// v_{p+1} on sp and x1.
Graph F13(int n) {
  const int p = (n - 5) / 2;
  Builder b;
  b.vertex("q");
  b.vertex("x1");
  b.vertex("s0p");
  const auto tail = Names("s", 1, p);
  for (const auto& v : tail) b.vertex(v);
  for (const auto& v : Names("v", 0, p + 1)) b.vertex(v);
  std::vector<std::string> hub{"s0p"};
  hub.insert(hub.end(), tail.begin(), tail.end());
  b.clique(hub);
  b.join("q", hub);
  b.join("x1", hub);
  b.join("v0", tail);
  b.edge("v0", "x1");
  b.join("v1", {"s0p", "s1"});
  for (int i = 2; i <= p; ++i) b.join(Name("v", i), {Name("s", i - 1), Name("s", i)});
  b.join(Name("v", p + 1), {Name("s", p), "x1"});
  return b.build();
}

// Clique x0..xr (r = 2k-1) with sQ and sU complete to it, q on x0 and sQ,
// u_k on sU and xr. Between consecutive x's sit v_i (on x_{2i}, x_{2i+1})
// and u_i (on x_{2i-1}, x_{2i}).
Graph F16(int n) {
  const int k = (n - 3) / 4;
  const int r = 2 * k - 1;
  Builder b;
  for (const auto& v : {"q", "sQ", "sU"}) b.vertex(v);
  const auto xs = Names("x", 0, r);
  for (const auto& v : xs) b.vertex(v);
  for (const auto& v : Names("u", 1, k)) b.vertex(v);
  for (const auto& v : Names("v", 0, k - 1)) b.vertex(v);
  b.clique(xs);
  b.join("sQ", xs);
  b.join("sU", xs);
  b.join("q", {"x0", "sQ"});
  for (int i = 0; i < k; ++i) b.join(Name("v", i), {Name("x", 2 * i), Name("x", 2 * i + 1)});
  for (int i = 1; i < k; ++i) {
    b.join(Name("u", i), {Name("x", 2 * i - 1), Name("x", 2 * i)});
  }
  b.join(Name("u", k), {"sU", Name("x", r)});
  return b.build();
}

}  // namespace

Graph generate(const FamilyId& family) {
  if (!family.valid()) {
    CheckIndex(family.index);
    throw ContractError("invalid parameter " + std::to_string(family.parameter) +
                        " for F" + std::to_string(family.index) + ": " +
                        family_domain(family.index));
  }
  const int n = family.parameter;
  switch (family.index) {
    case 0:
      return Hole(n);
    case 1:
      return ConeLongClaw();
    case 2:
      return ConeTent(1);
    case 3:
      return ConeTent(2);
    case 4:
      return ConeWhippingTop();
    case 5:
      return ConeNet(n - 5);
    case 6:
      return F6();
    case 7:
      return F7();
    case 8:
      return F8(false);
    case 9:
      return F8(true);
    case 10:
      return F10(n);
    case 11:
      return F11(n, false);
    case 12:
      return F11(n, true);
    case 13:
      return F13(n);
    case 14:
      return F14(n, false);
    case 15:
      return F14(n, true);
    case 16:
      return F16(n);
  }
  throw ContractError("unreachable family index");
}

bool validate_certificate(const Graph& g, const Certificate& cert) {
  for (int v : cert.witness) {
    if (v < 0 || v >= g.order()) {
      throw std::out_of_range("witness vertex " + std::to_string(v) +
                              " outside host of order " + std::to_string(g.order()));
    }
  }
  if (!cert.family.valid()) return false;
  const Graph f = generate(cert.family);
  if (static_cast<int>(cert.witness.size()) != f.order()) return false;
  std::set<int> image(cert.witness.begin(), cert.witness.end());
  if (static_cast<int>(image.size()) != f.order()) return false;
  for (int a = 0; a < f.order(); ++a) {
    for (int b = a + 1; b < f.order(); ++b) {
      if (f.adjacent(a, b) != g.adjacent(cert.witness[a], cert.witness[b])) return false;
    }
  }
  return true;
}

std::optional<Certificate> embed_family(const Graph& g, const FamilyId& family,
                                        const std::vector<int>& vertices) {
  if (!family.valid()) return std::nullopt;
  const Graph f = generate(family);
  if (f.order() != static_cast<int>(vertices.size())) return std::nullopt;
  const auto sub = induced_subgraph(g, VertexSet(vertices));
  if (sub.graph.order() != f.order()) return std::nullopt;  // repeated vertices
  auto iso = find_isomorphism(f, sub.graph);
  if (!iso) return std::nullopt;
  Certificate cert{family, {}};
  for (int x : *iso) cert.witness.push_back(sub.to_host[x]);
  return cert;
}

std::optional<Certificate> identify_forbidden(const Graph& g,
                                              const std::vector<int>& vertices) {
  for (const auto& family : families_of_order(static_cast<int>(vertices.size()))) {
    if (auto cert = embed_family(g, family, vertices)) return cert;
  }
  return std::nullopt;
}

const char* to_string(MinimalityVerdict verdict) {
  switch (verdict) {
    case MinimalityVerdict::kMinimal:
      return "minimal";
    case MinimalityVerdict::kNotMinimal:
      return "not-minimal";
    case MinimalityVerdict::kUnverifiable:
      return "unverifiable at this parameter";
  }
  return "?";
}

MinimalityVerdict verify_minimal_non_path(const FamilyId& family,
                                          const OracleBudget& budget) {
  const Graph f = generate(family);
  const auto whole = cpt_exists_bruteforce(f, budget);
  if (whole.status == CptStatus::kOverBudget) return MinimalityVerdict::kUnverifiable;
  if (whole.status == CptStatus::kTree) return MinimalityVerdict::kNotMinimal;
  bool over = false;
  for (int x = 0; x < f.order(); ++x) {
    VertexSet rest = f.vertices();
    rest.erase(x);
    const auto part = cpt_exists_bruteforce(induced_subgraph(f, rest).graph, budget);
    if (part.status == CptStatus::kNone) return MinimalityVerdict::kNotMinimal;
    if (part.status == CptStatus::kOverBudget) over = true;
  }
  return over ? MinimalityVerdict::kUnverifiable : MinimalityVerdict::kMinimal;
}

namespace {

struct Pattern {
  FamilyId family;
  Graph graph;
  std::vector<int> degrees;  // ascending
};

std::vector<int> SortedDegrees(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

BoundedSearch find_forbidden_bounded(const Graph& g, const VertexSet& within,
                                     const OracleBudget& budget) {
  BoundedSearch result;
  const VertexSet pool = within.empty() ? g.vertices() : within;
  const std::vector<int> members = pool.to_vector();
  const int m = static_cast<int>(members.size());
  if (m > budget.max_vertices) {
    result.budget_exhausted = true;
    return result;
  }
  // Adjacency within the pool as bitmasks over pool positions.
  std::vector<std::uint64_t> adj(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (g.adjacent(members[i], members[j])) adj[i] |= std::uint64_t{1} << j;
    }
  }
  for (int size = 4; size <= m; ++size) {
    std::vector<Pattern> patterns;
    for (const auto& family : families_of_order(size)) {
      Graph f = generate(family);
      auto degrees = SortedDegrees(f);
      patterns.push_back({family, std::move(f), std::move(degrees)});
    }
    if (patterns.empty()) continue;
    // Walk all size-subsets of the pool in lexicographic order.
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::uint64_t mask = 0;
      for (int i : pick) mask |= std::uint64_t{1} << i;
      std::vector<int> degrees(size);
      int twice_edges = 0;
      for (int i = 0; i < size; ++i) {
        degrees[i] = std::popcount(adj[pick[i]] & mask);
        twice_edges += degrees[i];
      }
      std::sort(degrees.begin(), degrees.end());
      for (const auto& pattern : patterns) {
        if (pattern.graph.size() * 2 != twice_edges || pattern.degrees != degrees) {
          continue;
        }
        std::vector<int> vertices;
        for (int i : pick) vertices.push_back(members[i]);
        if (auto cert = embed_family(g, pattern.family, vertices)) {
          result.certificate = std::move(cert);
          return result;
        }
      }
      int pos = size - 1;
      while (pos >= 0 && pick[pos] == m - size + pos) --pos;
      if (pos < 0) break;
      ++pick[pos];
      for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return result;
}

std::string to_json(const Certificate& cert) {
  const Graph f = generate(cert.family);
  nlohmann::json witness = nlohmann::json::object();
  for (int i = 0; i < f.order() && i < static_cast<int>(cert.witness.size()); ++i) {
    witness[f.name(i)] = cert.witness[i];
  }
  nlohmann::json j = {{"family", "F" + std::to_string(cert.family.index)}};
  if (cert.family.parameterized()) {
    j["parameter"] = cert.family.parameter;
  } else {
    j["parameter"] = nullptr;
  }
  j["witness"] = witness;
  return j.dump();
}

Certificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    if (j.contains("certificate")) j = j.at("certificate");
    Certificate cert;
    cert.family.index = parse_family_index(j.at("family").get<std::string>());
    if (j.contains("parameter") && !j.at("parameter").is_null()) {
      cert.family.parameter = j.at("parameter").get<int>();
    }
    if (!cert.family.valid()) {
      throw ParseError("parameter outside the domain of " + cert.family.to_string() +
                       ": " + family_domain(cert.family.index));
    }
    const Graph f = generate(cert.family);
    cert.witness.assign(f.order(), -1);
    const auto& w = j.at("witness");
    if (static_cast<int>(w.size()) != f.order()) {
      throw ParseError("witness has " + std::to_string(w.size()) + " entries, " +
                       cert.family.to_string() + " has " + std::to_string(f.order()) +
                       " vertices");
    }
    for (auto it = w.begin(); it != w.end(); ++it) {
      const int v = f.find_name(it.key());
      if (v < 0) {
        throw ParseError("no vertex named \"" + it.key() + "\" in " +
                         cert.family.to_string());
      }
      cert.witness[v] = it.value().get<int>();
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate JSON: ") + e.what());
  }
}

}  // namespace pathgraph
