// Copyright 2026 The cardcut Authors.
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

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cardcut/errors.hpp"

namespace cardcut {

/// A subset of {0, ..., universe-1} stored as a bit vector.
///
/// The first 64 elements live in an inline word, so ground sets up to 64
/// never allocate. Larger universes spill into a heap array. All binary
/// operations require both operands to share one universe.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(std::size_t universe)
      : universe_(universe), tail_(universe > 64 ? (universe - 1) / 64 : 0, 0) {}
  IndexSet(std::size_t universe, std::initializer_list<int> elements) : IndexSet(universe) {
    for (int e : elements) insert(e);
  }
  IndexSet(std::size_t universe, const std::vector<int>& elements) : IndexSet(universe) {
    for (int e : elements) insert(e);
  }

  /// Subset whose k-th element is present iff bit k of `mask` is set.
  static IndexSet from_mask(std::size_t universe, std::uint64_t mask) {
    IndexSet s(universe);
    s.head_ = universe >= 64 ? mask : (mask & ((std::uint64_t{1} << universe) - 1));
    return s;
  }

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (std::size_t k = 0; k < s.word_count(); ++k) s.word(k) = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(int e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= universe_) return false;
    return (word(static_cast<std::size_t>(e) / 64) >> (e % 64)) & 1U;
  }

  void insert(int e) {
    check(e);
    word(static_cast<std::size_t>(e) / 64) |= std::uint64_t{1} << (e % 64);
  }

  void erase(int e) {
    check(e);
    word(static_cast<std::size_t>(e) / 64) &= ~(std::uint64_t{1} << (e % 64));
  }

  int size() const {
    int total = 0;
    for (std::size_t k = 0; k < word_count(); ++k) total += std::popcount(word(k));
    return total;
  }

  bool empty() const {
    for (std::size_t k = 0; k < word_count(); ++k) {
      if (word(k) != 0) return false;
    }
    return true;
  }

  /// Low 64 bits; exact whenever universe() <= 64.
  std::uint64_t mask() const { return head_; }

  IndexSet& operator|=(const IndexSet& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
  IndexSet& operator&=(const IndexSet& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
  IndexSet& operator-=(const IndexSet& o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }

  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const { return full(universe_) - *this; }

  bool is_subset_of(const IndexSet& o) const { return (*this - o).empty(); }
  bool is_proper_subset_of(const IndexSet& o) const { return is_subset_of(o) && *this != o; }
  bool intersects(const IndexSet& o) const { return !(*this & o).empty(); }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.head_ == b.head_ && a.tail_ == b.tail_;
  }

  /// Elements in ascending order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < word_count(); ++k) {
      std::uint64_t w = word(k);
      while (w != 0) {
        const int bit = std::countr_zero(w);
        f(static_cast<int>(k * 64) + bit);
        w &= w - 1;
      }
    }
  }

  /// Lexicographic comparison of the ascending element lists.
  friend bool lex_less(const IndexSet& a, const IndexSet& b) {
    const auto ea = a.elements();
    const auto eb = b.elements();
    return ea < eb;
  }

  /// Order of the sets read as binary numbers (element k has weight 2^k).
  friend bool bit_less(const IndexSet& a, const IndexSet& b) {
    for (std::size_t k = std::max(a.word_count(), b.word_count()); k-- > 0;) {
      const std::uint64_t wa = k < a.word_count() ? a.word(k) : 0;
      const std::uint64_t wb = k < b.word_count() ? b.word(k) : 0;
      if (wa != wb) return wa < wb;
    }
    return false;
  }

  /// "{1,2,4}" with 1-based labels.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int e) {
      if (!first) out += ",";
      out += std::to_string(e + 1);
      first = false;
    });
    return out + "}";
  }

 private:
  std::size_t word_count() const { return universe_ == 0 ? 1 : (universe_ + 63) / 64; }
  std::uint64_t& word(std::size_t k) { return k == 0 ? head_ : tail_[k - 1]; }
  std::uint64_t word(std::size_t k) const { return k == 0 ? head_ : tail_[k - 1]; }

  void check(int e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= universe_) {
      throw DomainError("index " + std::to_string(e + 1) + " outside 1.." + std::to_string(universe_));
    }
  }

  void trim() {
    const std::size_t rem = universe_ % 64;
    if (rem != 0) word(word_count() - 1) &= (std::uint64_t{1} << rem) - 1;
    if (universe_ == 0) head_ = 0;
  }

  template <typename Op>
  IndexSet& combine(const IndexSet& o, Op op) {
    if (o.universe_ != universe_) throw InternalError("IndexSet universe mismatch");
    for (std::size_t k = 0; k < word_count(); ++k) word(k) = op(word(k), o.word(k));
    return *this;
  }

  std::size_t universe_ = 0;
  std::uint64_t head_ = 0;
  std::vector<std::uint64_t> tail_;
};

}  // namespace cardcut
