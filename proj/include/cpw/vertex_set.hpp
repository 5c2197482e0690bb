// Copyright 2026 The cpw Authors
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

#ifndef CPW_VERTEX_SET_HPP
#define CPW_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace cpw {

using Vertex = std::size_t;

/// Fixed-capacity bitset over vertex ids 0..Words*64-1.
///
/// All graph algorithms in this library are written against this type; the
/// single-word instantiation covers graphs up to 64 vertices and is what the
/// solver uses in the common case.
template <std::size_t Words>
class BasicVertexSet {
  static_assert(Words >= 1);

 public:
  static constexpr std::size_t kCapacity = Words * 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const BasicVertexSet* set, std::size_t word, std::uint64_t rest)
        : set_(set), word_(word), rest_(rest) {
      settle();
    }

    Vertex operator*() const { return word_ * 64 + static_cast<Vertex>(std::countr_zero(rest_)); }
    const_iterator& operator++() {
      rest_ &= rest_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const { return word_ == o.word_ && rest_ == o.rest_; }

   private:
    void settle() {
      while (rest_ == 0 && word_ + 1 < Words) {
        ++word_;
        rest_ = set_->words_[word_];
      }
      if (rest_ == 0) word_ = Words;
    }

    const BasicVertexSet* set_ = nullptr;
    std::size_t word_ = Words;
    std::uint64_t rest_ = 0;
  };

  constexpr BasicVertexSet() = default;
  BasicVertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  /// The set {0, ..., n-1}.
  static BasicVertexSet range(std::size_t n) {
    assert(n <= kCapacity);
    BasicVertexSet s;
    for (std::size_t w = 0; w < Words && n > 0; ++w) {
      const std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  template <typename Range>
  static BasicVertexSet from(const Range& members) {
    BasicVertexSet s;
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  bool contains(Vertex v) const {
    assert(v < kCapacity);
    return (words_[v / 64] >> (v % 64)) & 1u;
  }
  void insert(Vertex v) {
    assert(v < kCapacity);
    words_[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  void erase(Vertex v) {
    assert(v < kCapacity);
    words_[v / 64] &= ~(std::uint64_t{1} << (v % 64));
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Smallest member; the set must be non-empty.
  Vertex front() const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] != 0) return w * 64 + static_cast<Vertex>(std::countr_zero(words_[w]));
    assert(false && "front() of empty set");
    return kCapacity;
  }
  /// Largest member; the set must be non-empty.
  Vertex back() const {
    for (std::size_t w = Words; w-- > 0;)
      if (words_[w] != 0) return w * 64 + 63 - static_cast<Vertex>(std::countl_zero(words_[w]));
    assert(false && "back() of empty set");
    return kCapacity;
  }

  bool is_subset_of(const BasicVertexSet& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  bool intersects(const BasicVertexSet& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }

  BasicVertexSet& operator|=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  BasicVertexSet& operator&=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  BasicVertexSet& operator-=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  BasicVertexSet& operator^=(const BasicVertexSet& o) {
    for (std::size_t w = 0; w < Words; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  friend BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
  friend BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
  friend BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }
  friend BasicVertexSet operator^(BasicVertexSet a, const BasicVertexSet& b) { return a ^= b; }

  friend bool operator==(const BasicVertexSet&, const BasicVertexSet&) = default;
  /// Word-wise order, for use as an ordered-container key only.
  friend bool operator<(const BasicVertexSet& a, const BasicVertexSet& b) {
    for (std::size_t w = Words; w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    return false;
  }

  const_iterator begin() const { return const_iterator(this, 0, words_[0]); }
  const_iterator end() const { return const_iterator(this, Words, 0); }

  std::vector<Vertex> members() const { return std::vector<Vertex>(begin(), end()); }

  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h = (h ^ static_cast<std::size_t>(w)) * 0x100000001b3ull + (h >> 29);
    return h;
  }

  const std::array<std::uint64_t, Words>& words() const { return words_; }

 private:
  std::array<std::uint64_t, Words> words_{};
};

using VertexSet = BasicVertexSet<1>;

/// Lexicographic order on the sorted member lists ({0,2} < {1}, {0} < {0,1}).
template <std::size_t Words>
bool lex_less(const BasicVertexSet<Words>& a, const BasicVertexSet<Words>& b) {
  const auto diff = a ^ b;
  if (diff.empty()) return false;
  const Vertex v = diff.front();
  if (a.contains(v)) {
    // b has nothing at v; b is smaller only if it ended already.
    return !b.empty() && b.back() > v;
  }
  return a.empty() || a.back() < v;
}

/// Orders sets by size, then lexicographically.
template <std::size_t Words>
bool size_lex_less(const BasicVertexSet<Words>& a, const BasicVertexSet<Words>& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

/// Calls fn on every non-empty subset of `base`, grouped by increasing size
/// and lexicographic within a size.
template <std::size_t Words, typename Fn>
void for_each_subset_by_size(const BasicVertexSet<Words>& base, Fn&& fn) {
  const auto members = base.members();
  const std::size_t m = members.size();
  std::vector<std::size_t> idx;
  for (std::size_t r = 1; r <= m; ++r) {
    idx.resize(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    while (true) {
      BasicVertexSet<Words> s;
      for (auto i : idx) s.insert(members[i]);
      fn(s);
      std::size_t pos = r;
      while (pos > 0 && idx[pos - 1] == m - r + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < r; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

template <std::size_t Words>
struct VertexSetHash {
  std::size_t operator()(const BasicVertexSet<Words>& s) const { return s.hash(); }
};

}  // namespace cpw

template <std::size_t Words>
struct std::hash<cpw::BasicVertexSet<Words>> {
  std::size_t operator()(const cpw::BasicVertexSet<Words>& s) const { return s.hash(); }
};

#endif  // CPW_VERTEX_SET_HPP
