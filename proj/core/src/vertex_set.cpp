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

#include "pathgraph/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathgraph {

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(const std::vector<int>& members) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::Range(int n) {
  VertexSet s;
  if (n <= 0) return s;
  s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64 != 0) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0) throw std::out_of_range("negative vertex index");
  const std::size_t w = static_cast<std::size_t>(v) >> 6;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0) return;
  const std::size_t w = static_cast<std::size_t>(v) >> 6;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (v & 63));
  Trim();
}

bool VertexSet::contains(int v) const {
  if (v < 0) return false;
  const std::size_t w = static_cast<std::size_t>(v) >> 6;
  return w < words_.size() && ((words_[w] >> (v & 63)) & 1) != 0;
}

int VertexSet::count() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

int VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    }
  }
  return -1;
}

int VertexSet::last() const {
  if (words_.empty()) return -1;
  const std::size_t i = words_.size() - 1;
  return static_cast<int>(i * 64) + 63 - std::countl_zero(words_[i]);
}

int VertexSet::next(int v) const {
  Iterator it(&words_, v + 1);
  return it == end() ? -1 : *it;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  Trim();
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    words_[i] |= other.words_[i];
  }
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  Trim();
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& other) {
  if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  Trim();
  return *this;
}

bool VertexSet::operator<(const VertexSet& other) const {
  // Find the lowest index where the two sets differ. Below it both member
  // lists agree, so the comparison is decided by who owns that index and
  // whether the other list continues past it.
  const std::size_t n = std::max(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t a = i < words_.size() ? words_[i] : 0;
    const std::uint64_t b = i < other.words_.size() ? other.words_[i] : 0;
    if (a == b) continue;
    const int bit = static_cast<int>(i * 64) + std::countr_zero(a ^ b);
    if (contains(bit)) return other.last() > bit;
    return last() < bit;
  }
  return false;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(count());
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool sep = false;
  for (int v : *this) {
    if (sep) out += ',';
    out += std::to_string(v);
    sep = true;
  }
  out += '}';
  return out;
}

std::size_t VertexSet::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

void VertexSet::Trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace pathgraph
