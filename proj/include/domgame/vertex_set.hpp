// Copyright 2026 The domgame Authors.
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

#ifndef DOMGAME_VERTEX_SET_HPP_
#define DOMGAME_VERTEX_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace domgame {

using Vertex = int;

// Dense bitset over the vertex ids 0..n-1. Bits at positions >= n are
// always zero, so equality and hashing work on the raw words.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), words_(WordCount(n), 0) {}
  VertexSet(int n, std::initializer_list<Vertex> members) : VertexSet(n) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet Full(int n) {
    VertexSet s(n);
    for (auto& w : s.words_) w = ~Word{0};
    s.TrimTail();
    return s;
  }

  int universe() const { return n_; }

  bool contains(Vertex v) const {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1u;
  }
  void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  int size() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet r(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.TrimTail();
    return r;
  }

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  // |this \ o| without materialising the difference.
  int count_minus(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & ~o.words_[i]);
    return c;
  }
  int count_and(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  // Visits members in ascending id order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        f(static_cast<Vertex>(i * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  // Smallest member, or -1 when empty.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
    return -1;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  std::span<const Word> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
    for (Word w : words_) {
      h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  static std::size_t WordCount(int n) {
    return static_cast<std::size_t>((n + kWordBits - 1) / kWordBits);
  }
  void TrimTail() {
    const int rem = n_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
  }

  int n_ = 0;
  std::vector<Word> words_;
};

}  // namespace domgame

template <>
struct std::hash<domgame::VertexSet> {
  std::size_t operator()(const domgame::VertexSet& s) const noexcept { return s.hash(); }
};

#endif  // DOMGAME_VERTEX_SET_HPP_
