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

#include <charconv>
#include <sstream>
#include <vector>

#include "pathgraph/errors.hpp"

namespace pathgraph {
namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ParseInt(std::string_view token, long long& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> names;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  long long seen_edges = 0;
  std::vector<std::pair<int, int>> edges;
  int names_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = Trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      constexpr std::string_view kNames = "# names:";
      if (line.substr(0, kNames.size()) == kNames) {
        names.clear();
        for (auto t : Tokens(line.substr(kNames.size()))) names.emplace_back(t);
        names_line = line_no;
      }
      continue;
    }
    auto tokens = Tokens(line);
    if (tokens.size() != 2) {
      throw ParseError("expected two integers, got \"" + std::string(line) + "\"",
                       line_no);
    }
    long long a = 0;
    long long b = 0;
    if (!ParseInt(tokens[0], a) || !ParseInt(tokens[1], b)) {
      throw ParseError("non-integer token in \"" + std::string(line) + "\"",
                       line_no);
    }
    if (n < 0) {
      if (a < 0 || b < 0 || a > 1'000'000) {
        throw ParseError("bad header \"" + std::string(line) + "\"", line_no);
      }
      n = a;
      m = b;
      continue;
    }
    if (seen_edges == m) {
      throw ParseError("more edge lines than the header announced", line_no);
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      throw ParseError("vertex index out of range 0.." + std::to_string(n - 1),
                       line_no);
    }
    if (a == b) {
      throw ParseError("self-loop at vertex " + std::to_string(a), line_no);
    }
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    ++seen_edges;
  }
  if (n < 0) throw ParseError("missing \"n m\" header", 1);
  if (seen_edges != m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " +
                         std::to_string(seen_edges),
                     line_no);
  }
  Graph g(static_cast<int>(n), edges);
  if (!names.empty()) {
    if (static_cast<long long>(names.size()) != n) {
      throw ParseError("name table has " + std::to_string(names.size()) +
                           " entries for " + std::to_string(n) + " vertices",
                       names_line);
    }
    try {
      g.set_names(std::move(names));
    } catch (const ContractError& e) {
      throw ParseError(e.what(), names_line);
    }
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  if (g.has_names()) {
    out << "# names:";
    for (const auto& name : g.names()) out << ' ' << name;
    out << '\n';
  }
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  text = Trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw ParseError("invalid graph6 byte " +
                       std::to_string(static_cast<unsigned char>(c)));
    }
  }
  if (text.empty()) throw ParseError("empty graph6 string");

  std::size_t pos = 0;
  long long n = 0;
  auto byte = [&](std::size_t i) -> long long {
    if (i >= text.size()) throw ParseError("truncated graph6 size field");
    return text[i] - 63;
  };
  if (text[0] != 126) {
    n = byte(0);
    pos = 1;
  } else if (text.size() > 1 && text[1] != 126) {
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  if (n > 1'000'000) throw ParseError("graph6 order too large");

  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  const long long have = static_cast<long long>(text.size() - pos);
  if (have < need) throw ParseError("truncated graph6 adjacency bits");
  if (have > need) throw ParseError("trailing bytes after graph6 adjacency");

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int chunk = text[pos + need - 1] - 63;
    if ((chunk & ((1 << (6 - bits % 6)) - 1)) != 0) {
      throw ParseError("non-zero graph6 padding bits");
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) {
      out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) {
      out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + 63));
  return out;
}

Graph parse_graph_auto(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = Trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty() || line.front() == '#') continue;
    auto tokens = Tokens(line);
    long long dummy = 0;
    if (tokens.size() == 1 && !ParseInt(tokens[0], dummy)) {
      return parse_graph6(line);
    }
    break;
  }
  return parse_edge_list(text);
}

}  // namespace pathgraph
