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

#ifndef PATHGRAPH_ERRORS_HPP_
#define PATHGRAPH_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace pathgraph {

// Malformed textual input. line() is 1-based, or 0 when not line oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A documented precondition of an operation was violated by the caller.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An operation that needs a chordal graph received one with a hole.
class NotChordalError : public std::invalid_argument {
 public:
  NotChordalError(const std::string& what, std::vector<int> hole)
      : std::invalid_argument(what), hole_(std::move(hole)) {}
  const std::vector<int>& hole() const { return hole_; }

 private:
  std::vector<int> hole_;
};

// Raised when the recognizer reaches a state its case analysis rules out.
// Seeing one of these means a bug, not bad input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pathgraph

#endif  // PATHGRAPH_ERRORS_HPP_
