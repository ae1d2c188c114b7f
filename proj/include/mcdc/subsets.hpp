/*
 * Copyright 2026 The mcdc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace mcdc {

/// Set of edge nodes drawn from {1..K}, K <= 31. Ordered lexicographically by
/// the sorted member list.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  static constexpr NodeSet from_mask(std::uint32_t mask) { return NodeSet(mask); }
  static NodeSet of(const std::vector<int>& nodes);
  /// {1..K}
  static constexpr NodeSet all(int K) {
    return NodeSet(K >= 32 ? ~0u : ((1u << K) - 1u));
  }

  std::uint32_t mask() const { return mask_; }
  bool contains(int k) const { return k >= 1 && k <= 32 && ((mask_ >> (k - 1)) & 1u); }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  NodeSet with(int k) const { return NodeSet(mask_ | (1u << (k - 1))); }
  NodeSet without(int k) const { return NodeSet(mask_ & ~(1u << (k - 1))); }
  bool subset_of(NodeSet o) const { return (mask_ & ~o.mask_) == 0; }
  std::vector<int> members() const;
  /// 0-based position of k among the sorted members; -1 when absent.
  int rank_of(int k) const;

  friend NodeSet operator|(NodeSet a, NodeSet b) { return NodeSet(a.mask_ | b.mask_); }
  friend NodeSet operator&(NodeSet a, NodeSet b) { return NodeSet(a.mask_ & b.mask_); }
  friend NodeSet operator-(NodeSet a, NodeSet b) { return NodeSet(a.mask_ & ~b.mask_); }
  friend bool operator==(NodeSet a, NodeSet b) { return a.mask_ == b.mask_; }
  friend std::strong_ordering operator<=>(NodeSet a, NodeSet b);

  /// "{1,2,3}"
  std::string str() const;

 private:
  constexpr explicit NodeSet(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// All size-k subsets of `from` in lexicographic order.
std::vector<NodeSet> subsets_of(NodeSet from, int k);
inline std::vector<NodeSet> subsets_of_size(int K, int k) { return subsets_of(NodeSet::all(K), k); }

}  // namespace mcdc
