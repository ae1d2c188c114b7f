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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcdc/bits.hpp"
#include "mcdc/codec.hpp"
#include "mcdc/instance.hpp"
#include "mcdc/subsets.hpp"

namespace mcdc {

/// v_{q,n}: output of map function q on file n (both 1-based).
struct IvIndex {
  long long q = 0;
  long long n = 0;
  friend auto operator<=>(const IvIndex&, const IvIndex&) = default;
};

/// Contiguous run of files (or functions) owned exclusively by a node set.
struct Group {
  NodeSet nodes;
  long long first = 0;
  long long count = 0;
  long long last() const { return first + count - 1; }
};

/// Concrete map and reduce placement. Files 1..N1 form subsystem 1, grouped
/// by lexicographic r1-subsets; files N1+1..N form subsystem 2, grouped by
/// lexicographic r2-subsets and all cached at the master. Functions are
/// grouped by lexicographic s-subsets.
class MapAssignment {
 public:
  int K = 0;
  int s = 1;
  long long N = 0;
  long long Q = 0;
  long long T = 0;
  Rat alpha;
  int r1 = 0;
  int r2 = 0;
  long long N1 = 0;
  long long N2 = 0;
  std::vector<Group> sub1_groups;
  std::vector<Group> sub2_groups;
  std::vector<Group> reduce_groups;

  /// Edge nodes that map file n.
  NodeSet mappers(long long n) const { return file_mappers_.at(static_cast<std::size_t>(n)); }
  bool master_maps(long long n) const { return n > N1 && n <= N; }
  int subsystem_of(long long n) const { return n <= N1 ? 1 : 2; }
  /// Edge nodes that reduce function q.
  NodeSet reducers(long long q) const { return reducers_.at(static_cast<std::size_t>(q)); }

  std::vector<long long> master_files() const;
  /// Files mapped at edge node k; subsystem 0 means both.
  std::vector<long long> files_mapped_by(int k, int subsystem = 0) const;
  /// W_k
  std::vector<long long> reduce_set(int k) const;
  const Group* file_group(int subsystem, NodeSet nodes) const;
  const Group* reduce_group(NodeSet nodes) const;

 private:
  friend MapAssignment build_assignment(const ProblemInstance&, const Allocation&);
  std::vector<NodeSet> file_mappers_;
  std::vector<NodeSet> reducers_;
  std::map<std::uint32_t, std::size_t> sub1_index_;
  std::map<std::uint32_t, std::size_t> sub2_index_;
  std::map<std::uint32_t, std::size_t> reduce_index_;
};

/// Validates, then builds the deterministic placement.
MapAssignment build_assignment(const ProblemInstance& inst, const Allocation& alloc);

/// V_{S1}^{S\S1}: values of the subsystem's files mapped exclusively by S1,
/// for functions reduced by every node of S \ S1 and by no node outside S.
/// Sorted by (q, n). Empty when |S1| differs from the subsystem's load.
std::vector<IvIndex> iv_set_V(NodeSet S, NodeSet S1, const MapAssignment& assign, int subsystem);

/// Intermediate values held by one node.
class IvStore {
 public:
  void put(IvIndex iv, BitString value) { values_[key(iv)] = std::move(value); }
  const BitString* find(IvIndex iv) const {
    auto it = values_.find(key(iv));
    return it == values_.end() ? nullptr : &it->second;
  }
  bool contains(IvIndex iv) const { return values_.contains(key(iv)); }
  std::size_t size() const { return values_.size(); }

 private:
  static std::uint64_t key(IvIndex iv) {
    return static_cast<std::uint64_t>(iv.q) << 32 | static_cast<std::uint64_t>(iv.n);
  }
  std::unordered_map<std::uint64_t, BitString> values_;
};

/// Concatenation of the listed values in order. Throws DecodeFailure when the
/// store lacks one of them.
BitString concat_values(const IvStore& store, std::span<const IvIndex> ivs);

inline constexpr int kMasterNode = 0;
inline constexpr int kUncodedSubsystem = 0;

struct MessageTag {
  int subsystem = 0;          // 1 edge multicast, 2 master multicast, 0 uncoded
  NodeSet group;              // multicast group S (the single receiver when uncoded)
  int row = 0;                // Vandermonde row index
  std::optional<IvIndex> iv;  // uncoded unicasts only
};

struct MulticastMessage {
  int sender = 0;  // 0 = master, 1..K edge nodes
  NodeSet recipients;
  MessageTag tag;
  Symbol payload;
  std::uint64_t bit_length = 0;  // payload bits net of padding

  std::uint64_t padding_bits() const { return 16 * payload.size_words() - bit_length; }
};

/// Master multicast: for every S with max{r2+1,s} <= |S| <= min{r2+s,K},
/// C(|S|-1, r2) Vandermonde rows over the C(|S|, r2) symbols U_{S1}.
std::vector<MulticastMessage> shuffle_sub2(const MapAssignment& assign, const IvStore& master);

/// Edge multicast: U_{S1} is split into r1 segments, one per member of S1;
/// each k in S sends C(|S|-2, r1-1) Vandermonde rows over the C(|S|-1, r1-1)
/// segments it owns. node_stores[k-1] belongs to edge node k.
std::vector<MulticastMessage> shuffle_sub1(const MapAssignment& assign,
                                           std::span<const IvStore> node_stores);

/// Baseline: every missing value is unicast by its lowest-numbered mapper.
std::vector<MulticastMessage> shuffle_uncoded(const MapAssignment& assign,
                                              std::span<const IvStore> node_stores);

struct DecodedValue {
  BitString value;
  std::string provenance;  // "subsystem 2 S={1,2,3} S1={2,3}" and similar
};

/// Every value recovered at node k from the messages addressed to it.
/// Throws DecodeFailure naming (node, S, tag) when a system cannot be solved.
std::map<IvIndex, DecodedValue> decode_at_node(int k, const MapAssignment& assign,
                                               const IvStore& local,
                                               std::span<const MulticastMessage* const> inbox);

}  // namespace mcdc
