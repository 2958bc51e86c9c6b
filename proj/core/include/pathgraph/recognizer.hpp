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

#ifndef PATHGRAPH_RECOGNIZER_HPP_
#define PATHGRAPH_RECOGNIZER_HPP_

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pathgraph/clique_tree.hpp"
#include "pathgraph/families.hpp"
#include "pathgraph/graph.hpp"
#include "pathgraph/oracle.hpp"

namespace pathgraph {

// Exactly one of `tree` and `certificate` is present. A tree is a clique path
// tree (a forest for disconnected inputs) in host vertex ids.
struct RecognitionResult {
  std::optional<CliqueTree> tree;
  std::optional<Certificate> certificate;

  bool is_path_graph() const { return tree.has_value(); }
};

struct RecognizerOptions {
  // When a construction step fails in a way the case analysis does not
  // cover, decide the subproblem with the brute-force oracle instead of
  // throwing InternalInconsistency. Every use is counted in the stats.
  bool allow_fallback = true;
  OracleBudget fallback_budget{10, 16};
  // Recheck every intermediate tree, not just the final one.
  bool check_intermediate = true;
};

struct RecognitionStats {
  // How often each construction branch or certificate kind was taken.
  std::map<std::string, int> branches;
  int subproblems = 0;
  int cache_hits = 0;
  // Subproblems decided by the oracle fallback.
  int fallbacks = 0;
  // Certificates whose expected family did not match and were repaired by
  // identification or bounded search.
  int repairs = 0;

  void merge(const RecognitionStats& other);
};

RecognitionResult recognize(const Graph& g, const RecognizerOptions& options = {},
                            RecognitionStats* stats = nullptr);

// One subtree of T0 hanging off T'.
struct HangingSubtree {
  CliqueTree subtree;  // T_i
  VertexSet root;      // Q_i, the node of T_i next to T'
  VertexSet anchor;    // Q'_i, its neighbor in T'
  VertexSet separator; // S_i = Q_i & Q'_i
  int v = -1;          // smallest vertex of Q_i - Q'_i
};

// State of the non-co-special attachment step for a simplicial vertex q.
struct AttachmentProblem {
  int q = -1;
  VertexSet Q;    // N[q]
  VertexSet S_q;
  CliqueTree T0;  // clique path tree of G - q
  VertexSet Qprime;
  CliqueTree Tprime;
  std::vector<HangingSubtree> hanging;
  // Intersection graph of the hanging separators; vertex i is hanging[i].
  Graph H;
  // Members i of H whose separator is split by some label of T'.
  VertexSet X;
  // Clique path tree of G restricted to the cliques of T' plus Q, with Q a
  // leaf.
  CliqueTree T;
};

// Either the problem, or a result reached before it could be formed (a
// certificate from a recursive call, or the direct "add q to Q'" tree).
using AttachmentSetup = std::variant<AttachmentProblem, RecognitionResult>;

// q must be simplicial and not co-special in the connected chordal graph g.
AttachmentSetup prepare_attachment(const Graph& g, int q,
                                   const RecognizerOptions& options = {},
                                   RecognitionStats* stats = nullptr);

// A shortest odd cycle of h as a vertex sequence, if h is not bipartite.
std::optional<std::vector<int>> shortest_odd_cycle(const Graph& h);
// A shortest odd-length path whose two ends lie in `ends`, if one exists.
std::optional<std::vector<int>> shortest_odd_path_between(const Graph& h,
                                                          const VertexSet& ends);

Certificate extract_from_odd_cycle(const Graph& g, const AttachmentProblem& problem,
                                   const std::vector<int>& cycle,
                                   RecognitionStats* stats = nullptr);
Certificate extract_from_odd_X_path(const Graph& g, const AttachmentProblem& problem,
                                    const std::vector<int>& path,
                                    RecognitionStats* stats = nullptr);
// Links the hanging subtrees to T. Requires H bipartite with X on one side.
CliqueTree attach_hanging_subtrees(const AttachmentProblem& problem);

// q special simplicial and not co-special in the connected chordal graph g.
RecognitionResult handle_non_cospecial(const Graph& g, int q,
                                       const RecognizerOptions& options = {},
                                       RecognitionStats* stats = nullptr);
// q special and co-special in the connected chordal graph g.
RecognitionResult handle_cospecial(const Graph& g, int q,
                                   const RecognizerOptions& options = {},
                                   RecognitionStats* stats = nullptr);

// Returns the candidate if it validates; otherwise looks for a forbidden
// subgraph on the candidate's vertices and then inside `hull`. Throws
// InternalInconsistency (naming `claim`) when nothing is found.
Certificate certify_or_fallback(const Graph& g, const Certificate& candidate,
                                const VertexSet& hull,
                                const std::string& claim = "certificate",
                                RecognitionStats* stats = nullptr);

// {verdict, tree?, certificate?}
std::string to_json(const RecognitionResult& result);

}  // namespace pathgraph

#endif  // PATHGRAPH_RECOGNIZER_HPP_
