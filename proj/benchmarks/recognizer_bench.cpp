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

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "pathgraph/chordal.hpp"
#include "pathgraph/families.hpp"
#include "pathgraph/oracle.hpp"
#include "pathgraph/recognizer.hpp"
#include "pathgraph/simplicial.hpp"

namespace pathgraph {
namespace {

// Intersection graph of random subpaths of a random tree on n/2 nodes.
Graph RandomPathGraph(int n, std::mt19937& rng) {
  const int nodes = std::max(2, n / 2);
  std::vector<int> parent(nodes, -1);
  for (int i = 1; i < nodes; ++i) parent[i] = static_cast<int>(rng() % i);
  auto ancestors = [&](int x) {
    std::vector<int> out{x};
    while (parent[out.back()] >= 0) out.push_back(parent[out.back()]);
    return out;
  };
  std::vector<VertexSet> members(n);
  for (int v = 0; v < n; ++v) {
    const auto a = ancestors(static_cast<int>(rng() % nodes));
    const auto b = ancestors(static_cast<int>(rng() % nodes));
    VertexSet sa(a), sb(b);
    const VertexSet common = sa & sb;
    // Path a..lca..b: both ancestor chains minus everything above the lca.
    const int lca = common.empty() ? 0 : *std::find_if(a.begin(), a.end(),
                                                       [&](int x) { return common.contains(x); });
    VertexSet path = (sa ^ sb);
    path.insert(lca);
    members[v] = path;
  }
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (members[u].intersects(members[v])) g.add_edge(u, v);
    }
  }
  return g;
}

Graph RandomChordal(int n, std::mt19937& rng) {
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

std::vector<Graph> Batch(int n, Graph (*make)(int, std::mt19937&)) {
  std::mt19937 rng(n);
  std::vector<Graph> out;
  for (int i = 0; i < 32; ++i) out.push_back(make(n, rng));
  return out;
}

void BM_RecognizePathGraph(benchmark::State& state) {
  const auto graphs = Batch(static_cast<int>(state.range(0)), RandomPathGraph);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(recognize(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_RecognizePathGraph)->RangeMultiplier(2)->Range(8, 64);

void BM_RecognizeChordal(benchmark::State& state) {
  const auto graphs = Batch(static_cast<int>(state.range(0)), RandomChordal);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(recognize(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_RecognizeChordal)->RangeMultiplier(2)->Range(8, 32);

void BM_RecognizeFamily(benchmark::State& state) {
  const int index = static_cast<int>(state.range(0));
  const Graph f = generate(make_family(index, family_smallest_parameter(index)));
  for (auto _ : state) benchmark::DoNotOptimize(recognize(f));
  state.SetLabel(make_family(index, family_smallest_parameter(index)).to_string());
}
BENCHMARK(BM_RecognizeFamily)->DenseRange(0, 16);

void BM_OracleFamily(benchmark::State& state) {
  const int index = static_cast<int>(state.range(0));
  const Graph f = generate(make_family(index, family_smallest_parameter(index)));
  for (auto _ : state) benchmark::DoNotOptimize(cpt_exists_bruteforce(f, {10, 16}));
  state.SetLabel(make_family(index, family_smallest_parameter(index)).to_string());
}
BENCHMARK(BM_OracleFamily)->Arg(6)->Arg(11)->Arg(16);

void BM_CliqueTree(benchmark::State& state) {
  const auto graphs = Batch(static_cast<int>(state.range(0)), RandomChordal);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_clique_tree(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_CliqueTree)->RangeMultiplier(4)->Range(16, 256);

void BM_MinimalSeparators(benchmark::State& state) {
  const auto graphs = Batch(static_cast<int>(state.range(0)), RandomChordal);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_separators(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_MinimalSeparators)->RangeMultiplier(4)->Range(16, 256);

void BM_SpecialPair(benchmark::State& state) {
  auto graphs = Batch(static_cast<int>(state.range(0)), RandomChordal);
  std::erase_if(graphs, [](const Graph& g) { return g.is_clique(g.vertices()); });
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_special_pair(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_SpecialPair)->RangeMultiplier(4)->Range(16, 256);

}  // namespace
}  // namespace pathgraph

BENCHMARK_MAIN();
