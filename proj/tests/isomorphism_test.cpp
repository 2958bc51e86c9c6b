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

#include "pathgraph/isomorphism.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pathgraph/families.hpp"
#include "test_graphs.hpp"

namespace pathgraph {
namespace {

Graph Permute(const Graph& g, const std::vector<int>& perm) {
  Graph h(g.order());
  for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

TEST(IsomorphismTest, PermutedC4) {
  const Graph c4 = testing::Cycle(4);
  const Graph h = Permute(c4, {2, 0, 3, 1});
  const auto f = find_isomorphism(c4, h);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(is_isomorphism(c4, h, *f));
}

TEST(IsomorphismTest, C4IsNotDiamond) {
  Graph diamond = testing::Complete(4);
  diamond.remove_edge(0, 2);
  EXPECT_FALSE(find_isomorphism(testing::Cycle(4), diamond).has_value());
}

TEST(IsomorphismTest, SameDegreesDifferentGraphs) {
  // C6 and two disjoint triangles are both 2-regular.
  Graph triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(find_isomorphism(testing::Cycle(6), triangles).has_value());
}

TEST(IsomorphismTest, RotatedF11) {
  const Graph f = generate(make_family(11, 8));
  const int u1 = f.find_name("u1"), u2 = f.find_name("u2"), u3 = f.find_name("u3");
  const int v1 = f.find_name("v1"), v2 = f.find_name("v2"), v3 = f.find_name("v3");
  std::vector<int> rotate(f.order());
  std::iota(rotate.begin(), rotate.end(), 0);
  rotate[u1] = u2, rotate[u2] = u3, rotate[u3] = u1;
  rotate[v1] = v2, rotate[v2] = v3, rotate[v3] = v1;
  const Graph g = Permute(f, rotate);
  EXPECT_EQ(g.size(), f.size());
  EXPECT_TRUE(is_isomorphism(f, g, rotate));
  const auto found = find_isomorphism(f, g);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(is_isomorphism(f, g, *found));
}

TEST(IsomorphismTest, RandomPermutations) {
  std::mt19937 rng(9);
  for (int round = 0; round < 50; ++round) {
    const int n = 4 + static_cast<int>(rng() % 9);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 2) g.add_edge(u, v);
      }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = Permute(g, perm);
    const auto f = find_isomorphism(g, h);
    ASSERT_TRUE(f.has_value());
    EXPECT_TRUE(is_isomorphism(g, h, *f));
  }
}

TEST(IsomorphismTest, RejectsBadMaps) {
  const Graph p3 = testing::PathGraph(3);
  EXPECT_FALSE(is_isomorphism(p3, p3, {0, 0, 1}));
  EXPECT_FALSE(is_isomorphism(p3, p3, {1, 0, 2}));
  EXPECT_FALSE(is_isomorphism(p3, p3, {0, 1}));
  EXPECT_TRUE(is_isomorphism(p3, p3, {2, 1, 0}));
}

}  // namespace
}  // namespace pathgraph
