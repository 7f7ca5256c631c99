// Copyright 2026 The kassoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KASSOC_NODE_SET_HPP_
#define KASSOC_NODE_SET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace kassoc {

using NodeIndex = int;

inline constexpr int kMaxNodes = 32;

/// Set of node indices in [0, 32) stored as a bitmask. Iteration yields
/// indices in ascending order.
class NodeSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = NodeIndex;
    using difference_type = std::ptrdiff_t;
    using pointer = const NodeIndex*;
    using reference = NodeIndex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}

    constexpr NodeIndex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr NodeSet() = default;
  constexpr NodeSet(std::initializer_list<NodeIndex> nodes) {
    for (NodeIndex n : nodes) insert(n);
  }

  static constexpr NodeSet from_bits(std::uint32_t bits) {
    NodeSet s;
    s.bits_ = bits;
    return s;
  }
  /// {0, 1, ..., n-1}
  static constexpr NodeSet range(int n) {
    return from_bits(n >= kMaxNodes ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }
  static NodeSet of(const std::vector<NodeIndex>& nodes) {
    NodeSet s;
    for (NodeIndex n : nodes) s.insert(n);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(NodeIndex n) const { return (bits_ >> n) & 1U; }
  constexpr bool contains_all(NodeSet other) const { return (other.bits_ & ~bits_) == 0; }
  constexpr bool intersects(NodeSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr NodeSet& insert(NodeIndex n) {
    bits_ |= std::uint32_t{1} << n;
    return *this;
  }
  constexpr NodeSet& erase(NodeIndex n) {
    bits_ &= ~(std::uint32_t{1} << n);
    return *this;
  }
  constexpr NodeSet with(NodeIndex n) const { return NodeSet(*this).insert(n); }
  constexpr NodeSet without(NodeIndex n) const { return NodeSet(*this).erase(n); }

  /// Smallest element; undefined on the empty set.
  constexpr NodeIndex front() const { return std::countr_zero(bits_); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<NodeIndex> to_vector() const { return {begin(), end()}; }

  friend constexpr NodeSet operator|(NodeSet a, NodeSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr NodeSet operator&(NodeSet a, NodeSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr NodeSet operator-(NodeSet a, NodeSet b) { return from_bits(a.bits_ & ~b.bits_); }
  constexpr NodeSet& operator|=(NodeSet o) { bits_ |= o.bits_; return *this; }
  constexpr NodeSet& operator&=(NodeSet o) { bits_ &= o.bits_; return *this; }
  constexpr NodeSet& operator-=(NodeSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(NodeSet, NodeSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Orders by size first, then lexicographically by ascending member list.
bool size_lex_less(NodeSet a, NodeSet b);

/// Calls fn(subset) for every subset of `pool` with at most `max_size`
/// elements, smallest first and lexicographic (by ascending index) within a
/// size. Stops early and returns false as soon as fn returns false.
template <typename Fn>
bool for_each_subset(NodeSet pool, int max_size, Fn&& fn) {
  const std::vector<NodeIndex> items = pool.to_vector();
  const int n = static_cast<int>(items.size());
  const int top = max_size < n ? max_size : n;
  std::vector<int> pick;
  for (int k = 0; k <= top; ++k) {
    pick.resize(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      NodeSet s;
      for (int i : pick) s.insert(items[i]);
      if (!fn(s)) return false;
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return true;
}

}  // namespace kassoc

#endif  // KASSOC_NODE_SET_HPP_
