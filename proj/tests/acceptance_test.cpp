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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pathgraph/chordal.hpp"
#include "pathgraph/families.hpp"
#include "pathgraph/graph_io.hpp"
#include "pathgraph/oracle.hpp"
#include "pathgraph/recognizer.hpp"
#include "pathgraph/simplicial.hpp"
#include "sweep.hpp"

namespace pathgraph {
namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::vector<FamilyId> CensusMembers() {
  std::vector<FamilyId> out;
  for (int n = 4; n <= 8; ++n) out.push_back(make_family(0, n));
  for (int i = 1; i <= 4; ++i) out.push_back(make_family(i));
  for (int n = 7; n <= 9; ++n) out.push_back(make_family(5, n));
  for (int i = 6; i <= 9; ++i) out.push_back(make_family(i));
  for (int n = 8; n <= 10; ++n) out.push_back(make_family(10, n));
  for (int i : {11, 12, 13, 14, 15, 16}) {
    const int p = family_smallest_parameter(i);
    out.push_back(make_family(i, p));
    out.push_back(make_family(i, family_next_parameter(i, p)));
  }
  return out;
}

bool SoundCertificate(const Graph& g, const Certificate& cert) {
  if (!validate_certificate(g, cert)) return false;
  const Graph witness = induced_subgraph(g, VertexSet(cert.witness)).graph;
  return cpt_exists_bruteforce(witness, {10, 16}).status == CptStatus::kNone;
}

// Shared state: criteria 3, 5 and 6 reuse the instances of criteria 1 and 2.
struct Corpus {
  tools::SweepReport sweep;
  std::vector<tools::SweepSample> samples;
  int family_certificate_violations = 0;
  int family_certificates = 0;
};

Verdict Census(Corpus& corpus) {
  const auto start = Clock::now();
  int minimal = 0;
  std::string bad;
  const auto members = CensusMembers();
  for (const FamilyId& id : members) {
    const MinimalityVerdict v = verify_minimal_non_path(id, {10, 16});
    if (v == MinimalityVerdict::kMinimal) {
      ++minimal;
    } else {
      bad += " " + id.to_string() + "=" + to_string(v);
    }
    const Graph f = generate(id);
    const RecognitionResult r = recognize(f);
    ++corpus.family_certificates;
    if (!r.certificate || !SoundCertificate(f, *r.certificate)) {
      ++corpus.family_certificate_violations;
    }
  }
  const double secs = Seconds(start);
  std::ostringstream out;
  out << minimal << "/" << members.size() << " members minimal non path graphs in " << secs
      << " s" << bad;
  return {minimal == static_cast<int>(members.size()) && secs < 60.0, out.str()};
}

Verdict OracleEquivalence(Corpus& corpus) {
  const auto start = Clock::now();
  tools::SweepOptions options;
  options.max_exhaustive_order = 6;
  options.samples = 10000;
  options.seed = 0;
  options.include_families = false;
  corpus.sweep = tools::run_sweep(options);
  corpus.samples = tools::sweep_samples(options.seed, options.samples);
  const double secs = Seconds(start);
  const auto& groups = corpus.sweep.groups;
  std::ostringstream out;
  int exhaustive_n6 = 0;
  for (const auto& [name, counts] : groups) {
    out << name << ": " << counts.instances << " instances, " << counts.mismatches
        << " mismatches, " << counts.skipped << " skipped; ";
  }
  // All 2^15 labeled graphs on six vertices are part of the exhaustive group.
  int n6 = 0;
  tools::for_each_labeled_graph(6, [&](const Graph&) { ++n6; });
  exhaustive_n6 = n6;
  const auto chordal = groups.find("chordal fill-in");
  const int chordal_count = chordal == groups.end() ? 0 : chordal->second.instances;
  out << "n=6 labeled graphs " << exhaustive_n6 << ", " << secs << " s";
  const auto& t = corpus.sweep.total;
  const bool pass = t.mismatches == 0 && t.skipped == 0 && exhaustive_n6 == 32768 &&
                    chordal_count >= 10000 && secs < 600.0;
  return {pass, out.str()};
}

Verdict CertificateSoundness(const Corpus& corpus) {
  const auto& t = corpus.sweep.total;
  std::ostringstream out;
  out << t.non_path_graphs << " sweep certificates, " << t.certificate_violations
      << " violations; " << corpus.family_certificates << " census certificates, "
      << corpus.family_certificate_violations << " violations";
  return {t.non_path_graphs > 0 && t.certificate_violations == 0 &&
              corpus.family_certificate_violations == 0 && corpus.family_certificates > 0,
          out.str()};
}

Verdict WorkedExamples() {
  std::vector<std::string> problems;
  Graph h(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}});
  h.set_names({"a", "b", "c", "d", "e"});
  const int b = 1, c = 2, d = 3;
  const std::vector<VertexSet> expected{{b}, {d}};
  if (minimal_separators(h).sets() != expected) problems.push_back("S(H) from clique tree");
  if (pairwise_minimal_separators_bruteforce(h).sets() != expected) {
    problems.push_back("S(H) by brute force");
  }
  const SimplicialProfile pc = simplicial_profile(h, c);
  if (!pc.is_simplicial || pc.boundary != VertexSet{b, d}) problems.push_back("S_c");
  if (pc.is_special) problems.push_back("c special");

  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {4, 1}, {4, 2}, {5, 1}, {5, 2}});
  g.set_names({"a", "b", "c", "d", "e", "f"});
  const int first = lex_bfs_elimination_order(g).front();
  if (first != 0 && first != 3) problems.push_back("LexBFS ends on " + g.name(first));
  if (simplicial_profile(g, first).is_special) problems.push_back("first eliminated special");
  const auto [x, y] = find_special_pair(g);
  if (g.adjacent(x, y) || !simplicial_profile(g, x).is_special ||
      !simplicial_profile(g, y).is_special) {
    problems.push_back("special pair");
  }
  std::ostringstream out;
  out << "S(H)={{b},{d}}, S_c={b,d}, LexBFS first eliminated " << g.name(first)
      << ", special pair (" << g.name(x) << "," << g.name(y) << ")";
  for (const auto& p : problems) out << "; wrong: " << p;
  return {problems.empty(), out.str()};
}

Verdict SpecialPairs(const Corpus& corpus) {
  int checked = 0, violations = 0;
  for (const auto& sample : corpus.samples) {
    const Graph& g = sample.chordal;
    if (!is_connected(g) || g.is_clique(g.vertices())) continue;
    ++checked;
    const auto [x, y] = find_special_pair(g);
    const auto seps = pairwise_minimal_separators_bruteforce(g, {9, 12}).sets();
    bool ok = !g.adjacent(x, y);
    for (int v : {x, y}) {
      if (!is_simplicial(g, v)) {
        ok = false;
        continue;
      }
      const VertexSet s = g.neighbors(v) & g.neighborhood_of(g.vertices() - g.closed_neighborhood(v));
      if (std::find(seps.begin(), seps.end(), s) == seps.end()) ok = false;
      for (const VertexSet& other : seps) {
        if (s != other && s.is_subset_of(other)) ok = false;
      }
    }
    violations += !ok;
  }
  std::ostringstream out;
  out << checked << " connected chordal non-clique graphs, " << violations << " violations";
  return {checked > 0 && violations == 0, out.str()};
}

Verdict NeighborhoodProperties(const Corpus& corpus) {
  int path_graphs = 0, at_violations = 0;
  auto check_path = [&](const Graph& g) {
    if (!recognize(g).is_path_graph()) return;
    ++path_graphs;
    if (neighborhood_at_free(g)) ++at_violations;
  };
  for (int n = 1; n <= 6; ++n) tools::for_each_labeled_graph(n, check_path);
  for (const auto& sample : corpus.samples) {
    check_path(sample.random);
    check_path(sample.chordal);
  }
  long long triples = 0;
  int middle_violations = 0;
  for (int n = 3; n <= 6; ++n) {
    tools::for_each_labeled_graph(n, [&](const Graph& g) {
      if (!is_chordal(g)) return;
      const CliqueTree t = build_clique_tree(g);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int c = b + 1; c < n; ++c) {
            if (a == b || a == c || g.adjacent(a, b) || g.adjacent(a, c) || g.adjacent(b, c)) {
              continue;
            }
            ++triples;
            if (is_middle(g, t, a, b, c) != is_middle_by_paths(g, a, b, c)) ++middle_violations;
          }
        }
      }
    });
  }
  std::ostringstream out;
  out << path_graphs << " path graphs, " << at_violations << " neighborhood AT violations; "
      << triples << " triples, " << middle_violations << " middle mismatches";
  return {path_graphs > 0 && triples > 0 && at_violations == 0 && middle_violations == 0,
          out.str()};
}

std::vector<int> Simplicial(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (is_simplicial(g, v)) out.push_back(v);
  }
  return out;
}

bool HasUniversal(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return true;
  }
  return false;
}

Verdict Captions(std::string& info) {
  std::vector<std::string> problems;
  for (const FamilyId& id : CensusMembers()) {
    const Graph f = generate(id);
    if (id.index == 0 && !Simplicial(f).empty()) problems.push_back(id.to_string());
    if (id.index >= 1 && id.index <= 5 && !HasUniversal(f)) problems.push_back(id.to_string());
    if (id.index >= 6 && id.index <= 10 && (HasUniversal(f) || Simplicial(f).size() != 3)) {
      problems.push_back(id.to_string());
    }
  }
  // Co-speciality, reported only.
  std::ostringstream note;
  for (const FamilyId& id : CensusMembers()) {
    if (id.index == 0) continue;
    const Graph f = generate(id);
    int simplicial = 0, co_special = 0;
    for (int v : Simplicial(f)) {
      ++simplicial;
      co_special += simplicial_profile(f, v).is_co_special;
    }
    note << " " << id.to_string() << ":" << co_special << "/" << simplicial;
  }
  info = "co-special/simplicial vertices:" + note.str();
  std::string detail = "F0 no simplicial vertex, F1-F5 universal vertex, F6-F10 three "
                       "simplicial vertices and no universal vertex";
  for (const auto& p : problems) detail += "; wrong: " + p;
  return {problems.empty(), detail};
}

int Main() {
  Corpus corpus;
  std::string caption_info;
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"minimality census", [&] { return Census(corpus); }},
      {"oracle equivalence", [&] { return OracleEquivalence(corpus); }},
      {"certificate soundness", [&] { return CertificateSoundness(corpus); }},
      {"worked examples", [] { return WorkedExamples(); }},
      {"special pair property", [&] { return SpecialPairs(corpus); }},
      {"neighborhood AT-freeness and middle vertices", [&] { return NeighborhoodProperties(corpus); }},
      {"caption invariants", [&] { return Captions(caption_info); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " ("
              << criteria[i].first << "): " << v.detail << std::endl;
  }
  std::cout << "info: " << caption_info << std::endl;
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace pathgraph

int main() { return pathgraph::Main(); }
