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

#ifndef PATHGRAPH_SRC_JSON_UTIL_HPP_
#define PATHGRAPH_SRC_JSON_UTIL_HPP_

#include <json.hpp>

#include "pathgraph/clique_tree.hpp"
#include "pathgraph/vertex_set.hpp"

namespace pathgraph::detail {

inline nlohmann::json SetToJson(const VertexSet& s) {
  return nlohmann::json(s.to_vector());
}

nlohmann::json TreeToJson(const CliqueTree& tree);
CliqueTree TreeFromJson(const nlohmann::json& j);

}  // namespace pathgraph::detail

#endif  // PATHGRAPH_SRC_JSON_UTIL_HPP_
