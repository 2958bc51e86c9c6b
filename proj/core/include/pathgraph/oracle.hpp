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

#ifndef PATHGRAPH_ORACLE_HPP_
#define PATHGRAPH_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathgraph/chordal.hpp"
#include "pathgraph/clique_tree.hpp"
#include "pathgraph/graph.hpp"

namespace pathgraph {

// Brute-force ground truth. Nothing here calls the chordal module's fast
// paths, so it can be used to check them.

struct OracleBudget {
  // Largest number of maximal cliques in one component for tree enumeration.
  int max_cliques = 8;
  // Largest vertex count for exhaustive subset and hole searches.
  int max_vertices = 12;
};

enum class CptStatus { kTree, kNone, kOverBudget };

struct CptVerdict {
  CptStatus status = CptStatus::kOverBudget;
  // Set when status == kTree.
  CliqueTree tree;
  // Set when status == kNone and the graph has a hole inside the budget.
  std::vector<int> hole;
  // Labeled trees decoded from Prufer sequences.
  std::int64_t trees_examined = 0;
};

const char* to_string(CptStatus status);

// Enumerates every labeled tree on the maximal cliques of each component (in
// Prufer-sequence order) and returns the first whose clique subtrees are all
// paths.
CptVerdict cpt_exists_bruteforce(const Graph& g, const OracleBudget& budget = {});

// Smallest hole by length, then lexicographically smallest when written from
// its least vertex towards its smaller neighbor. Throws ContractError when
// order exceeds budget.max_vertices.
std::optional<std::vector<int>> hole_search_bruteforce(
    const Graph& g, const OracleBudget& budget = {});

// All minimal u-v separators over non-adjacent pairs in a common component,
// by subset enumeration. Throws ContractError over budget.
SeparatorSet pairwise_minimal_separators_bruteforce(const Graph& g,
                                                    const OracleBudget& budget = {});

// Bron-Kerbosch without pivoting; ascending order.
std::vector<VertexSet> maximal_cliques_bruteforce(const Graph& g);

// Labeled tree on k nodes decoded from a Prufer sequence of length k-2.
std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int k);

}  // namespace pathgraph

#endif  // PATHGRAPH_ORACLE_HPP_
