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

#ifndef PATHGRAPH_TOOLS_SWEEP_HPP_
#define PATHGRAPH_TOOLS_SWEEP_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pathgraph/graph.hpp"
#include "pathgraph/oracle.hpp"

namespace pathgraph::tools {

// G(n, p) with independent edges.
Graph random_graph(int n, double p, std::mt19937_64& rng);

// Eliminates the vertices in a random order and turns the later neighbors of
// each eliminated vertex into a clique. The result is chordal and contains g.
Graph chordal_fill_in(const Graph& g, std::mt19937_64& rng);

// Calls `visit` on every labeled graph on n vertices (2^(n choose 2) of them).
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit);

// The random part of the sweep: for each sample an order in {7, 8, 9} (or
// `order` when it is positive), a G(n, 1/2) graph and its chordal fill-in.
struct SweepSample {
  Graph random;
  Graph chordal;
};
std::vector<SweepSample> sweep_samples(std::uint64_t seed, int count, int order = 0);

struct SweepOptions {
  int max_exhaustive_order = 6;
  int samples = 10000;
  // Fixed order of the random samples; 0 draws it from {7, 8, 9}.
  int sample_order = 0;
  std::uint64_t seed = 0;
  OracleBudget budget{9, 12};
  bool include_families = true;
};

struct GroupCounts {
  int instances = 0;
  int path_graphs = 0;
  int non_path_graphs = 0;
  // Oracle over budget: verdict not compared.
  int skipped = 0;
  int mismatches = 0;
  // Certificate does not validate, or its witness is a path graph.
  int certificate_violations = 0;
  // Returned tree fails the independent clique path tree check.
  int tree_violations = 0;
};

struct SweepReport {
  std::uint64_t seed = 0;
  std::map<std::string, GroupCounts> groups;
  GroupCounts total;
  int fallbacks = 0;
  // Families flagged as path graphs or certified by another family.
  int family_failures = 0;
  // graph6 and reason of the first failures.
  std::vector<std::string> failures;
  // Recognition time per instance in microseconds.
  std::vector<double> micros;

  bool ok() const;
};

SweepReport run_sweep(const SweepOptions& options,
                      const std::function<void(const std::string&)>& progress = {});

// Percentile of the timing sample, p in [0, 100].
double percentile(std::vector<double> values, double p);

std::string format_report(const SweepReport& report);

}  // namespace pathgraph::tools

#endif  // PATHGRAPH_TOOLS_SWEEP_HPP_
