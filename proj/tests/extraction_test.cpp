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

// Odd cycles and odd X-paths in the intersection graph of hanging subtrees.

#include <gtest/gtest.h>

#include <random>

#include "pathgraph/chordal.hpp"
#include "pathgraph/families.hpp"
#include "pathgraph/graph_io.hpp"
#include "pathgraph/oracle.hpp"
#include "pathgraph/recognizer.hpp"
#include "pathgraph/simplicial.hpp"
#include "test_graphs.hpp"

namespace pathgraph {
namespace {

AttachmentProblem ProblemFor(const Graph& g, int q) {
  AttachmentSetup setup = prepare_attachment(g, q);
  const auto* problem = std::get_if<AttachmentProblem>(&setup);
  if (problem == nullptr) throw std::runtime_error("G - q already decided");
  return *problem;
}

void ExpectProblemInvariants(const Graph& g, const AttachmentProblem& p) {
  EXPECT_EQ(p.Q, g.closed_neighborhood(p.q));
  EXPECT_TRUE(p.S_q.is_subset_of(p.Qprime));
  for (const VertexSet& label : p.Tprime.labels()) EXPECT_FALSE(label.is_subset_of(p.S_q));
  const int count = static_cast<int>(p.hanging.size());
  ASSERT_EQ(p.H.order(), count);
  for (int i = 0; i < count; ++i) {
    const HangingSubtree& h = p.hanging[i];
    EXPECT_EQ(h.separator, h.root & h.anchor);
    EXPECT_TRUE(h.root.contains(h.v));
    EXPECT_FALSE(h.anchor.contains(h.v));
    for (int j = i + 1; j < count; ++j) {
      EXPECT_NE(h.root, p.hanging[j].root);
      EXPECT_EQ(p.H.adjacent(i, j), h.separator.intersects(p.hanging[j].separator));
    }
  }
  const int qnode = [&] {
    for (int i = 0; i < p.T.node_count(); ++i) {
      if (p.T.cliques[i] == p.Q) return i;
    }
    return -1;
  }();
  ASSERT_GE(qnode, 0);
  EXPECT_EQ(p.T.adjacency()[qnode].size(), 1u);
}

TEST(OddCycleTest, F11YieldsItself) {
  for (int n : {8, 12}) {
    const FamilyId id = make_family(11, n);
    const Graph f = generate(id);
    for (const char* name : {"a", "b"}) {
      const AttachmentProblem p = ProblemFor(f, f.find_name(name));
      ExpectProblemInvariants(f, p);
      EXPECT_EQ(static_cast<int>(p.hanging.size()), n / 2 - 1);
      EXPECT_TRUE(p.X.empty());
      const auto cycle = shortest_odd_cycle(p.H);
      ASSERT_TRUE(cycle.has_value());
      EXPECT_EQ(static_cast<int>(cycle->size()), n / 2 - 1);
      RecognitionStats stats;
      const Certificate cert = extract_from_odd_cycle(f, p, *cycle, &stats);
      EXPECT_EQ(cert.family, id) << name;
      EXPECT_TRUE(validate_certificate(f, cert));
      EXPECT_EQ(stats.fallbacks, 0);
    }
  }
}

TEST(OddXPathTest, ParameterizedFamiliesYieldThemselves) {
  const std::vector<FamilyId> ids = {make_family(12, 8),  make_family(12, 12),
                                     make_family(13, 9),  make_family(13, 13),
                                     make_family(14, 9),  make_family(14, 13),
                                     make_family(15, 10), make_family(15, 14)};
  for (const FamilyId& id : ids) {
    const Graph f = generate(id);
    const int q = id.index == 12 ? f.find_name("a") : f.find_name("q");
    const SimplicialProfile profile = simplicial_profile(f, q);
    ASSERT_TRUE(profile.is_special && !profile.is_co_special) << id.to_string();
    const AttachmentProblem p = ProblemFor(f, q);
    ExpectProblemInvariants(f, p);
    ASSERT_FALSE(shortest_odd_cycle(p.H).has_value());
    const auto path = shortest_odd_path_between(p.H, p.X);
    ASSERT_TRUE(path.has_value()) << id.to_string();
    EXPECT_TRUE(p.X.contains(path->front()));
    EXPECT_TRUE(p.X.contains(path->back()));
    EXPECT_EQ(path->size() % 2, 0u);
    const Certificate cert = extract_from_odd_X_path(f, p, *path);
    EXPECT_EQ(cert.family, id);
    EXPECT_TRUE(validate_certificate(f, cert));
  }
}

TEST(OddXPathTest, F11WithTwoExtraEdgesGivesF14) {
  // F11(12) plus b-u1 and b-u4: the X-path argument finds a smaller F14(9).
  Graph g = generate(make_family(11, 12));
  g.add_edge(g.find_name("b"), g.find_name("u1"));
  g.add_edge(g.find_name("b"), g.find_name("u4"));
  const AttachmentProblem p = ProblemFor(g, g.find_name("a"));
  ExpectProblemInvariants(g, p);
  ASSERT_FALSE(shortest_odd_cycle(p.H).has_value());
  const auto path = shortest_odd_path_between(p.H, p.X);
  ASSERT_TRUE(path.has_value());
  const Certificate cert = extract_from_odd_X_path(g, p, *path);
  EXPECT_EQ(cert.family, make_family(14, 9));
  EXPECT_TRUE(validate_certificate(g, cert));
  EXPECT_EQ(handle_non_cospecial(g, g.find_name("a")).certificate->family, make_family(14, 9));
}

TEST(ExtractionFixtureTest, RandomChordalHosts) {
  // Smallest random chordal graphs found reaching each branch.
  struct Fixture {
    const char* graph6;
    int q;
    bool cycle;
    FamilyId family;
  };
  const Fixture fixtures[] = {{"G~ksd?", 1, true, make_family(11, 8)},
                              {"G~fUB_", 5, false, make_family(12, 8)},
                              {"H~VSKaS", 2, false, make_family(13, 9)},
                              {"I~uTC`OW?", 4, false, make_family(14, 9)}};
  for (const Fixture& fx : fixtures) {
    const Graph g = parse_graph6(fx.graph6);
    const AttachmentProblem p = ProblemFor(g, fx.q);
    ExpectProblemInvariants(g, p);
    const auto cycle = shortest_odd_cycle(p.H);
    ASSERT_EQ(cycle.has_value(), fx.cycle) << fx.graph6;
    const Certificate cert =
        fx.cycle ? extract_from_odd_cycle(g, p, *cycle)
                 : extract_from_odd_X_path(g, p, *shortest_odd_path_between(p.H, p.X));
    EXPECT_EQ(cert.family, fx.family) << fx.graph6;
    EXPECT_TRUE(validate_certificate(g, cert));
  }
}

// Every certificate from either extraction on random chordal graphs is valid
// and its witness is a minimal non path graph.
TEST(ExtractionStressTest, RandomChordalGraphs) {
  std::mt19937 rng(97);
  int cycles = 0, paths = 0;
  for (int round = 0; round < 3000; ++round) {
    const int order = 7 + static_cast<int>(rng() % 6);
    Graph g(1);
    while (g.order() < order) {
      const auto cliques = maximal_cliques(g);
      const VertexSet c = cliques[rng() % cliques.size()];
      Graph h(g.order() + 1, g.edges());
      const int v = g.order();
      for (int x : c) {
        if (rng() % 3 != 0) h.add_edge(v, x);
      }
      if (h.degree(v) == 0) h.add_edge(v, c.first());
      g = h;
    }
    if (g.is_clique(g.vertices())) continue;
    for (int q = 0; q < g.order(); ++q) {
      const SimplicialProfile profile = simplicial_profile(g, q);
      if (!profile.is_special || profile.is_co_special) continue;
      AttachmentSetup setup = prepare_attachment(g, q);
      const auto* p = std::get_if<AttachmentProblem>(&setup);
      if (p == nullptr) continue;
      std::optional<Certificate> cert;
      if (const auto cycle = shortest_odd_cycle(p->H)) {
        cert = extract_from_odd_cycle(g, *p, *cycle);
        ++cycles;
      } else if (const auto path = shortest_odd_path_between(p->H, p->X)) {
        cert = extract_from_odd_X_path(g, *p, *path);
        ++paths;
      } else {
        continue;
      }
      ASSERT_TRUE(validate_certificate(g, *cert));
      const Graph witness = induced_subgraph(g, VertexSet(cert->witness)).graph;
      EXPECT_EQ(cpt_exists_bruteforce(witness, {10, 16}).status, CptStatus::kNone);
    }
  }
  EXPECT_GT(cycles + paths, 10);
}

}  // namespace
}  // namespace pathgraph
