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

#ifndef PATHGRAPH_VERTEX_SET_HPP_
#define PATHGRAPH_VERTEX_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace pathgraph {

// Dense bitset over vertex indices. Trailing zero words are trimmed so that
// equality and ordering do not depend on how large a set once was.
class VertexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    Iterator(const std::vector<std::uint64_t>* words, int pos)
        : words_(words), pos_(pos) {
      Advance();
    }
    int operator*() const { return pos_; }
    Iterator& operator++() {
      ++pos_;
      Advance();
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator& other) const { return pos_ == other.pos_; }

   private:
    void Advance();

    const std::vector<std::uint64_t>* words_ = nullptr;
    int pos_ = 0;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<int> members);
  explicit VertexSet(const std::vector<int>& members);

  // The set {0, ..., n-1}.
  static VertexSet Range(int n);

  void insert(int v);
  void erase(int v);
  bool contains(int v) const;
  int count() const;
  bool empty() const { return words_.empty(); }
  void clear() { words_.clear(); }

  // Smallest member, or -1 when empty.
  int first() const;
  // Largest member, or -1 when empty.
  int last() const;
  // Smallest member strictly greater than v, or -1.
  int next(int v) const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  VertexSet& operator^=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  bool operator==(const VertexSet& other) const = default;
  // Lexicographic order on the ascending member lists.
  bool operator<(const VertexSet& other) const;

  Iterator begin() const { return Iterator(&words_, 0); }
  Iterator end() const {
    return Iterator(&words_, static_cast<int>(words_.size() * 64));
  }

  std::vector<int> to_vector() const;
  std::string to_string() const;
  std::size_t hash() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void Trim();

  std::vector<std::uint64_t> words_;
};

inline void VertexSet::Iterator::Advance() {
  const int limit = static_cast<int>(words_->size() * 64);
  while (pos_ < limit) {
    const std::uint64_t word = (*words_)[pos_ >> 6] >> (pos_ & 63);
    if (word != 0) {
      pos_ += std::countr_zero(word);
      return;
    }
    pos_ = (pos_ | 63) + 1;
  }
  pos_ = limit;
}

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace pathgraph

#endif  // PATHGRAPH_VERTEX_SET_HPP_
