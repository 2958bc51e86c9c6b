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

#ifndef PATHGRAPH_SRC_RECOGNIZER_INTERNAL_HPP_
#define PATHGRAPH_SRC_RECOGNIZER_INTERNAL_HPP_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathgraph/clique_tree.hpp"
#include "pathgraph/families.hpp"
#include "pathgraph/graph.hpp"
#include "pathgraph/recognizer.hpp"

namespace pathgraph::detail {

// Unwinds a construction step once a certificate has been found.
struct Extracted {
  Certificate certificate;
};

// Tree or certificate for a vertex subset, in host ids.
struct Outcome {
  std::optional<CliqueTree> tree;
  std::optional<Certificate> certificate;
};

// Node holding exactly this clique, or -1.
int FindNode(const CliqueTree& t, const VertexSet& clique);
// Nodes reachable from `start` without crossing an edge whose label `cut`
// accepts. Ascending.
std::vector<int> CutComponent(const CliqueTree& t, int start,
                              const std::function<bool(const VertexSet&)>& cut);
// Nodes reachable from `start` through nodes not in `blocked`. Ascending.
std::vector<int> ComponentAvoiding(const CliqueTree& t, int start,
                                   const std::vector<char>& blocked);
VertexSet UnionOf(const CliqueTree& t, const std::vector<int>& nodes);
// The nodes together with the tree edges between them.
CliqueTree InducedTree(const CliqueTree& t, const std::vector<int>& nodes);
// Edge distance from `from`; -1 when unreachable.
std::vector<int> Distances(const CliqueTree& t, int from);
// Node meeting `s` at maximum distance from `from`, ties to the smaller
// index; -1 if none meets s.
int FarthestMeeting(const CliqueTree& t, int from, const VertexSet& s);
// Union of the labels along the tree path between two nodes.
VertexSet PathLabels(const CliqueTree& t, int a, int b);
// Smallest member; throws InternalInconsistency naming `what` when empty.
int Pick(const VertexSet& s, const char* what);

// Collects cliques and edges keyed by clique contents.
class TreeAssembler {
 public:
  int Add(const VertexSet& clique);
  void AddTree(const CliqueTree& t);
  void Link(const VertexSet& a, const VertexSet& b);
  void Unlink(const VertexSet& a, const VertexSet& b);
  CliqueTree Build() const;

 private:
  std::map<VertexSet, int> index_;
  std::vector<VertexSet> cliques_;
  std::vector<std::pair<int, int>> edges_;
};

// Maximal cliques of G[w], ascending.
std::vector<VertexSet> CliquesOf(const Graph& host, const VertexSet& w);

// Recursive construction over vertex subsets of one host graph. Results are
// memoized per subset.
class Solver {
 public:
  Solver(const Graph& host, const RecognizerOptions& options, RecognitionStats* stats);

  const Graph& host() const { return host_; }
  const RecognizerOptions& options() const { return options_; }

  // Any subset; holes give F0 certificates, components are solved apart.
  Outcome Solve(const VertexSet& w);
  // w connected and chordal.
  Outcome SolveConnected(const VertexSet& w);

  Outcome NonCospecial(const VertexSet& w, int q);
  Outcome Cospecial(const VertexSet& w, int q);
  AttachmentSetup PrepareAttachment(const VertexSet& w, int q);

  // Certificate on exactly these vertices, expected to be `expected` when
  // given; otherwise repaired through certify_or_fallback over `hull`.
  Certificate Certify(const std::vector<int>& vertices,
                      const std::optional<FamilyId>& expected, const VertexSet& hull,
                      const std::string& claim);
  // Certificate from an asteroidal triple inside G[N(center) & w].
  Certificate NeighborhoodAt(const VertexSet& w, int center, const std::string& claim);

  void Count(const std::string& branch);
  RecognitionStats* stats() { return stats_; }
  // Off at first, so that every alternative construction is tried before a
  // subproblem is handed to the oracle.
  void EnableFallback() { fallback_enabled_ = options_.allow_fallback; }

  // Decides G[w] with the brute-force oracle; counted in the stats.
  Outcome Fallback(const VertexSet& w, const std::string& reason);

  // Empty when `tree` is a clique path tree of G[w].
  std::string Defect(const VertexSet& w, const CliqueTree& tree) const;

 private:
  Outcome Decide(const VertexSet& w);
  void Verify(const VertexSet& w, const CliqueTree& tree);

  const Graph& host_;
  RecognizerOptions options_;
  RecognitionStats* stats_;
  std::map<VertexSet, Outcome> memo_;
  // Depth of nested vertex-deletion searches; no fallback inside one.
  int reducing_ = 0;
  bool fallback_enabled_ = false;
};

Certificate ExtractOddCycle(Solver& solver, const AttachmentProblem& problem,
                            const std::vector<int>& cycle);
Certificate ExtractOddXPath(Solver& solver, const AttachmentProblem& problem,
                            const std::vector<int>& path);

// Boundary S_v of a simplicial vertex inside G[w].
VertexSet Boundary(const Graph& host, const VertexSet& w, int v);

}  // namespace pathgraph::detail

#endif  // PATHGRAPH_SRC_RECOGNIZER_INTERNAL_HPP_
