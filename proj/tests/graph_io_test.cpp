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

#include "pathgraph/graph_io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "pathgraph/errors.hpp"
#include "pathgraph/families.hpp"
#include "test_graphs.hpp"

namespace pathgraph {
namespace {

TEST(EdgeListTest, ParsesH) {
  const Graph g = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n1 3");
  EXPECT_EQ(g, testing::H());
}

TEST(EdgeListTest, SingleVertex) {
  const Graph g = parse_edge_list("1 0");
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0);
}

TEST(EdgeListTest, C4) {
  EXPECT_EQ(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0"), testing::Cycle(4));
  EXPECT_EQ(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0"), generate(make_family(0, 4)));
}

TEST(EdgeListTest, DuplicatesAreDeduplicated) {
  const Graph g = parse_edge_list("3 3\n0 1\n1 0\n1 2\n");
  EXPECT_EQ(g.size(), 2);
}

TEST(EdgeListTest, CommentsAndBlankLines) {
  const Graph g = parse_edge_list("# a comment\n\n3 2\n0 1\n\n1 2\n");
  EXPECT_EQ(g, testing::PathGraph(3));
}

TEST(EdgeListTest, NameTable) {
  const Graph g = parse_edge_list("# names: a b c\n3 1\n0 2\n");
  EXPECT_EQ(g.name(2), "c");
  EXPECT_TRUE(g.adjacent(g.find_name("a"), g.find_name("c")));
  EXPECT_THROW(parse_edge_list("# names: a b\n3 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("# names: a a b\n3 0\n"), ParseError);
}

int ErrorLine(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(EdgeListTest, ErrorsNameTheLine) {
  EXPECT_EQ(ErrorLine("3 2\n0 1\n1 x\n"), 3);
  EXPECT_EQ(ErrorLine("3 2\n0 1\n1 3\n"), 3);
  EXPECT_EQ(ErrorLine("3 2\n0 0\n1 2\n"), 2);
  EXPECT_EQ(ErrorLine("3 2\n0 1 2\n1 2\n"), 2);
  EXPECT_EQ(ErrorLine("3 1\n0 1\n1 2\n"), 3);
  EXPECT_GT(ErrorLine("3 3\n0 1\n1 2\n"), 0);
  EXPECT_GT(ErrorLine(""), 0);
}

TEST(EdgeListTest, RoundTrip) {
  for (const Graph& g : {testing::H(), generate(make_family(11, 8)), Graph(0), Graph(4)}) {
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
    EXPECT_EQ(to_edge_list(parse_edge_list(to_edge_list(g))), to_edge_list(g));
  }
  const Graph named = generate(make_family(2));
  EXPECT_EQ(parse_edge_list(to_edge_list(named)).names(), named.names());
}

TEST(Graph6Test, KnownEncodings) {
  EXPECT_EQ(parse_graph6("Cl"), testing::Cycle(4));
  EXPECT_EQ(to_graph6(testing::Cycle(4)), "Cl");
  EXPECT_EQ(parse_graph6("C~"), testing::Complete(4));
  EXPECT_EQ(to_graph6(testing::Complete(4)), "C~");
  EXPECT_EQ(parse_graph6("@"), Graph(1));
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(parse_graph6("DjC"), testing::H());
  EXPECT_EQ(parse_graph6(">>graph6<<Cl\n"), testing::Cycle(4));
}

TEST(Graph6Test, Errors) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C"), ParseError);
  EXPECT_THROW(parse_graph6("Cl~"), ParseError);
  EXPECT_THROW(parse_graph6("C\x20"), ParseError);
  // Padding bit set: four vertices use 6 of the 6 bits, so try n = 3.
  EXPECT_THROW(parse_graph6("B\x7e"), ParseError);
}

TEST(Graph6Test, RandomRoundTripIncludingLongForm) {
  std::mt19937 rng(5);
  for (int n : {0, 1, 2, 7, 13, 62, 63, 64, 100}) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) g.add_edge(u, v);
      }
    }
    const std::string text = to_graph6(g);
    EXPECT_EQ(parse_graph6(text), g) << "n=" << n;
    EXPECT_EQ(text.front() == '~', n >= 63);
  }
}

TEST(AutoFormatTest, DetectsFormat) {
  EXPECT_EQ(parse_graph_auto("Cl\n"), testing::Cycle(4));
  EXPECT_EQ(parse_graph_auto("4 4\n0 1\n1 2\n2 3\n3 0\n"), testing::Cycle(4));
  EXPECT_EQ(parse_graph_auto("# names: a b\n2 1\n0 1\n").name(1), "b");
}

}  // namespace
}  // namespace pathgraph
