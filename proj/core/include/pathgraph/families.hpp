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

#ifndef PATHGRAPH_FAMILIES_HPP_
#define PATHGRAPH_FAMILIES_HPP_

#include <optional>
#include <string>
#include <vector>

#include "pathgraph/graph.hpp"
#include "pathgraph/oracle.hpp"

namespace pathgraph {

// One of the seventeen forbidden families. `parameter` is the vertex count
// for the parameterized families and 0 for F1-F4 and F6-F9.
struct FamilyId {
  int index = 0;
  int parameter = 0;

  bool parameterized() const;
  // True when parameter lies in the family's domain.
  bool valid() const;
  // "F11(8)" or "F6".
  std::string to_string() const;
  bool operator==(const FamilyId&) const = default;
};

inline constexpr int kFamilyCount = 17;

bool family_is_parameterized(int index);
// Human-readable domain such as "n >= 8 and n = 0 mod 4".
std::string family_domain(int index);
// Smallest valid parameter (0 for unparameterized families).
int family_smallest_parameter(int index);
// Next valid parameter after `parameter`.
int family_next_parameter(int index, int parameter);
// Parses "F11" or "11" into an index; throws ParseError.
int parse_family_index(const std::string& text);
// Builds a FamilyId, throwing ContractError outside the domain.
FamilyId make_family(int index, int parameter = 0);

// Every family member with exactly n vertices.
std::vector<FamilyId> families_of_order(int n);

// The family member, with vertex names following the proof labels.
Graph generate(const FamilyId& family);

// A family member embedded in a host graph: witness[i] is the host vertex of
// generated vertex i.
struct Certificate {
  FamilyId family;
  std::vector<int> witness;
};

// Throws std::out_of_range when a witness vertex is outside the host.
bool validate_certificate(const Graph& g, const Certificate& cert);

// Certificate for G[vertices] when it is isomorphic to `family`.
std::optional<Certificate> embed_family(const Graph& g, const FamilyId& family,
                                        const std::vector<int>& vertices);

// Certificate for G[vertices] against every family member of that order.
std::optional<Certificate> identify_forbidden(const Graph& g,
                                              const std::vector<int>& vertices);

enum class MinimalityVerdict { kMinimal, kNotMinimal, kUnverifiable };
const char* to_string(MinimalityVerdict verdict);

// No clique path tree for F, and one for F - x for every vertex x, both by
// the brute-force oracle. kUnverifiable when the oracle runs over budget.
MinimalityVerdict verify_minimal_non_path(const FamilyId& family,
                                          const OracleBudget& budget = {});

struct BoundedSearch {
  std::optional<Certificate> certificate;
  bool budget_exhausted = false;
};

// Searches induced subgraphs of G[within] (all of G when `within` is empty)
// in order of increasing size against every family member of that size.
// The first hit is returned; sets over budget.max_vertices are not searched.
BoundedSearch find_forbidden_bounded(const Graph& g, const VertexSet& within = {},
                                     const OracleBudget& budget = {});

std::string to_json(const Certificate& cert);
// Parses the certificate JSON form; throws ParseError.
Certificate certificate_from_json(const std::string& text);

}  // namespace pathgraph

#endif  // PATHGRAPH_FAMILIES_HPP_
