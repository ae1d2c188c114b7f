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

#include "mcdc/subsets.hpp"

#include <functional>
#include <stdexcept>

namespace mcdc {

NodeSet NodeSet::of(const std::vector<int>& nodes) {
  std::uint32_t m = 0;
  for (int k : nodes) {
    if (k < 1 || k > 32) throw std::invalid_argument("node id out of range: " + std::to_string(k));
    m |= 1u << (k - 1);
  }
  return NodeSet(m);
}

std::vector<int> NodeSet::members() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

int NodeSet::rank_of(int k) const {
  if (!contains(k)) return -1;
  const std::uint32_t below = k == 1 ? 0u : (mask_ & ((1u << (k - 1)) - 1u));
  return std::popcount(below);
}

std::strong_ordering operator<=>(NodeSet a, NodeSet b) {
  // Lexicographic on sorted members: the first differing element decides,
  // a proper prefix sorts first.
  std::uint32_t x = a.mask_;
  std::uint32_t y = b.mask_;
  while (x != 0 && y != 0) {
    const int lx = std::countr_zero(x);
    const int ly = std::countr_zero(y);
    if (lx != ly) return lx < ly ? std::strong_ordering::less : std::strong_ordering::greater;
    x &= x - 1;
    y &= y - 1;
  }
  if (x == y) return std::strong_ordering::equal;
  return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string NodeSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int k : members()) {
    if (!first) s += ',';
    s += std::to_string(k);
    first = false;
  }
  return s + "}";
}

std::vector<NodeSet> subsets_of(NodeSet from, int k) {
  std::vector<NodeSet> out;
  const std::vector<int> pool = from.members();
  if (k < 0 || k > static_cast<int>(pool.size())) return out;
  std::function<void(std::size_t, NodeSet, int)> rec = [&](std::size_t start, NodeSet acc,
                                                          int left) {
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = start; i + static_cast<std::size_t>(left) <= pool.size(); ++i) {
      rec(i + 1, acc.with(pool[i]), left - 1);
    }
  };
  rec(0, NodeSet(), k);
  return out;
}

}  // namespace mcdc
