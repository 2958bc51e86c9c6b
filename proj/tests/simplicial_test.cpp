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

#include "pathgraph/simplicial.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "pathgraph/chordal.hpp"
#include "pathgraph/errors.hpp"
#include "pathgraph/families.hpp"
#include "pathgraph/oracle.hpp"
#include "test_graphs.hpp"

namespace pathgraph {
namespace {

using testing::H;
using testing::LexBfsExample;
using testing::V;

Graph RandomChordal(int n, std::mt19937& rng) {
  // Each new vertex joins a random subset of a random maximal clique.
  Graph g(1);
  while (g.order() < n) {
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
  return g;
}

TEST(SimplicialTest, ProfileOfCInH) {
  const Graph g = H();
  const SimplicialProfile p = simplicial_profile(g, V(g, "c"));
  EXPECT_TRUE(p.is_simplicial);
  EXPECT_EQ(p.boundary, (VertexSet{V(g, "b"), V(g, "d")}));
  EXPECT_EQ(p.closed_neighborhood, (VertexSet{V(g, "b"), V(g, "c"), V(g, "d")}));
  EXPECT_FALSE(p.is_special);
  EXPECT_FALSE(p.is_co_special);
}

TEST(SimplicialTest, LexBfsExampleProfiles) {
  const Graph g = LexBfsExample();
  for (const char* name : {"a", "d"}) {
    const SimplicialProfile p = simplicial_profile(g, V(g, name));
    EXPECT_TRUE(p.is_simplicial) << name;
    EXPECT_FALSE(p.is_special) << name;
  }
  const SimplicialProfile e = simplicial_profile(g, V(g, "e"));
  EXPECT_TRUE(e.is_simplicial);
  EXPECT_TRUE(e.is_special);
  EXPECT_EQ(e.boundary, (VertexSet{V(g, "b"), V(g, "c")}));
  EXPECT_FALSE(simplicial_profile(g, V(g, "b")).is_simplicial);
}

TEST(SimplicialTest, IsSimplicialOnAnyGraph) {
  EXPECT_FALSE(is_simplicial(testing::Cycle(5), 0));
  EXPECT_TRUE(is_simplicial(testing::PathGraph(3), 0));
  EXPECT_TRUE(is_simplicial(Graph(1), 0));
}

TEST(SimplicialTest, FlagsNeedChordalGraph) {
  EXPECT_THROW(simplicial_profile(testing::Cycle(4), 0), NotChordalError);
}

TEST(SimplicialTest, CoSpecialSeparatorsAppearOnce) {
  std::mt19937 rng(47);
  int seen = 0;
  for (int round = 0; round < 300; ++round) {
    const Graph g = RandomChordal(4 + static_cast<int>(rng() % 7), rng);
    for (int v = 0; v < g.order(); ++v) {
      const SimplicialProfile p = simplicial_profile(g, v);
      if (p.is_special || p.is_co_special) {
        EXPECT_TRUE(p.is_simplicial);
      }
      if (!p.is_co_special) continue;
      ++seen;
      EXPECT_EQ(separator_multiplicity(g, p.boundary), 1);
      EXPECT_EQ(components(g, p.boundary).size(), 2u);
    }
  }
  EXPECT_GT(seen, 20);
}

TEST(SpecialPairTest, Examples) {
  EXPECT_EQ(find_special_pair(testing::PathGraph(3)), std::make_pair(0, 2));
  const Graph lex = LexBfsExample();
  EXPECT_EQ(find_special_pair(lex), std::make_pair(V(lex, "e"), V(lex, "f")));
  const Graph g = H();
  EXPECT_EQ(find_special_pair(g), std::make_pair(V(g, "a"), V(g, "e")));
}

TEST(SpecialPairTest, Errors) {
  EXPECT_THROW(find_special_pair(testing::Complete(4)), ContractError);
  EXPECT_THROW(find_special_pair(testing::Cycle(4)), NotChordalError);
}

TEST(SpecialPairTest, PropertyAgainstBruteForceSeparators) {
  std::mt19937 rng(53);
  int checked = 0;
  for (int round = 0; round < 400; ++round) {
    const Graph g = RandomChordal(3 + static_cast<int>(rng() % 8), rng);
    if (g.is_clique(g.vertices())) continue;
    ++checked;
    const auto [x, y] = find_special_pair(g);
    EXPECT_FALSE(g.adjacent(x, y));
    const auto seps = pairwise_minimal_separators_bruteforce(g).sets();
    for (int v : {x, y}) {
      ASSERT_TRUE(is_simplicial(g, v));
      const VertexSet s = simplicial_profile(g, v).boundary;
      EXPECT_NE(std::find(seps.begin(), seps.end(), s), seps.end());
      for (const VertexSet& other : seps) {
        EXPECT_FALSE(s.is_subset_of(other) && s != other)
            << s.to_string() << " < " << other.to_string();
      }
    }
  }
  EXPECT_GT(checked, 200);
}

TEST(AsteroidalTripleTest, Examples) {
  EXPECT_TRUE(is_asteroidal_triple(testing::LongClaw(), 4, 5, 6));
  // P5 as 0..4: the middle of 0 and 4 is 2.
  EXPECT_FALSE(is_asteroidal_triple(testing::PathGraph(5), 0, 2, 4));
  EXPECT_TRUE(is_asteroidal_triple(testing::Cycle(6), 0, 2, 4));
  EXPECT_FALSE(is_asteroidal_triple(testing::PathGraph(3), 0, 1, 2));
}

TEST(AsteroidalTripleTest, Search) {
  const auto triple = find_asteroidal_triple(testing::LongClaw());
  ASSERT_TRUE(triple.has_value());
  EXPECT_TRUE(is_asteroidal_triple(testing::LongClaw(), (*triple)[0], (*triple)[1],
                                   (*triple)[2]));
  EXPECT_FALSE(find_asteroidal_triple(testing::PathGraph(6)).has_value());
}

TEST(NeighborhoodAtTest, Examples) {
  EXPECT_FALSE(neighborhood_at_free(testing::PathGraph(6)).has_value());
  EXPECT_FALSE(neighborhood_at_free(testing::Complete(6)).has_value());
  const Graph f1 = generate(make_family(1));
  const auto hit = neighborhood_at_free(f1);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(f1.degree(hit->center), f1.order() - 1);
  const auto [a, b, c] = hit->triple;
  const auto sub = induced_subgraph(f1, f1.neighbors(hit->center));
  EXPECT_TRUE(is_asteroidal_triple(sub.graph, sub.from_host[a], sub.from_host[b],
                                   sub.from_host[c]));
}

TEST(MiddleTest, PathExamples) {
  const Graph p5 = testing::PathGraph(5);
  const CliqueTree t = build_clique_tree(p5);
  EXPECT_TRUE(is_middle(p5, t, 2, 0, 4));
  EXPECT_FALSE(is_middle(p5, t, 0, 2, 4));
  EXPECT_TRUE(is_middle_by_paths(p5, 2, 0, 4));
  EXPECT_FALSE(is_middle_by_paths(p5, 0, 2, 4));
}

TEST(MiddleTest, AdjacentInputsAreRejected) {
  const Graph p3 = testing::PathGraph(3);
  EXPECT_FALSE(is_middle(p3, build_clique_tree(p3), 1, 0, 2));
}

TEST(MiddleTest, CliqueTreeFormMatchesPaths) {
  std::mt19937 rng(59);
  for (int round = 0; round < 200; ++round) {
    const Graph g = RandomChordal(3 + static_cast<int>(rng() % 5), rng);
    const CliqueTree t = build_clique_tree(g);
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
          if (a == b || a == c || g.adjacent(a, b) || g.adjacent(a, c) || g.adjacent(b, c)) {
            continue;
          }
          EXPECT_EQ(is_middle(g, t, a, b, c), is_middle_by_paths(g, a, b, c));
        }
      }
    }
  }
}

TEST(MiddleTest, NoTripleWithoutMiddleUnlessAsteroidal) {
  std::mt19937 rng(61);
  for (int round = 0; round < 150; ++round) {
    const Graph g = RandomChordal(4 + static_cast<int>(rng() % 5), rng);
    const int n = g.order();
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
          if (g.adjacent(a, b) || g.adjacent(a, c) || g.adjacent(b, c)) continue;
          if (is_asteroidal_triple(g, a, b, c)) continue;
          EXPECT_TRUE(is_middle_by_paths(g, a, b, c) || is_middle_by_paths(g, b, a, c) ||
                      is_middle_by_paths(g, c, a, b));
        }
      }
    }
  }
}

}  // namespace
}  // namespace pathgraph
