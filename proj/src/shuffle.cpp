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

#include <algorithm>

#include "mcdc/error.hpp"
#include "mcdc/loadmodel.hpp"
#include "mcdc/scheme.hpp"

namespace mcdc {

namespace {

// Multicast groups S of the subsystem with load r, lexicographic by size then members.
std::vector<NodeSet> multicast_groups(const MapAssignment& assign, int r) {
  std::vector<NodeSet> out;
  const int lo = std::max(r + 1, assign.s);
  const int hi = std::min(r + assign.s, assign.K);
  for (int l = lo; l <= hi; ++l) {
    for (NodeSet S : subsets_of_size(assign.K, l)) out.push_back(S);
  }
  return out;
}

Symbol symbol_of(const IvStore& store, const std::vector<IvIndex>& ivs) {
  return Symbol::from_bits(concat_values(store, ivs));
}

}  // namespace

std::vector<MulticastMessage> shuffle_sub2(const MapAssignment& assign, const IvStore& master) {
  std::vector<MulticastMessage> out;
  if (assign.N2 == 0 || assign.r2 >= assign.K) return out;
  const int r2 = assign.r2;
  for (NodeSet S : multicast_groups(assign, r2)) {
    const std::vector<NodeSet> cols = subsets_of(S, r2);
    std::vector<Symbol> symbols;
    std::uint64_t bits = 0;
    for (NodeSet S1 : cols) {
      const auto ivs = iv_set_V(S, S1, assign, 2);
      bits = ivs.size() * static_cast<std::uint64_t>(assign.T);
      symbols.push_back(symbol_of(master, ivs));
    }
    if (bits == 0) continue;
    const int rows = static_cast<int>(binom(S.size() - 1, r2));
    const auto alphas = default_alphas(symbols.size());
    for (CodedRow& row : vandermonde_encode(symbols, rows, alphas)) {
      MulticastMessage m;
      m.sender = kMasterNode;
      m.recipients = S;
      m.tag = {2, S, row.row_index, std::nullopt};
      m.payload = std::move(row.payload);
      m.bit_length = bits;
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<MulticastMessage> shuffle_sub1(const MapAssignment& assign,
                                           std::span<const IvStore> node_stores) {
  std::vector<MulticastMessage> out;
  if (assign.N1 == 0 || assign.r1 >= assign.K) return out;
  const int r1 = assign.r1;
  for (NodeSet S : multicast_groups(assign, r1)) {
    for (int k : S.members()) {
      const IvStore& store = node_stores[static_cast<std::size_t>(k - 1)];
      std::vector<Symbol> segments;
      std::uint64_t seg_bits = 0;
      for (NodeSet S1 : subsets_of(S, r1)) {
        if (!S1.contains(k)) continue;
        const auto ivs = iv_set_V(S, S1, assign, 1);
        const BitString u = concat_values(store, ivs);
        seg_bits = u.size() / static_cast<std::size_t>(r1);
        const std::size_t pos = static_cast<std::size_t>(S1.rank_of(k));
        segments.push_back(Symbol::from_bits(u.slice(pos * seg_bits, seg_bits)));
      }
      if (seg_bits == 0) continue;
      const int rows = static_cast<int>(binom(S.size() - 2, r1 - 1));
      const auto alphas = default_alphas(segments.size());
      for (CodedRow& row : vandermonde_encode(segments, rows, alphas)) {
        MulticastMessage m;
        m.sender = k;
        m.recipients = S.without(k);
        m.tag = {1, S, row.row_index, std::nullopt};
        m.payload = std::move(row.payload);
        m.bit_length = seg_bits;
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

std::vector<MulticastMessage> shuffle_uncoded(const MapAssignment& assign,
                                              std::span<const IvStore> node_stores) {
  std::vector<MulticastMessage> out;
  for (int k = 1; k <= assign.K; ++k) {
    for (long long q : assign.reduce_set(k)) {
      for (long long n = 1; n <= assign.N; ++n) {
        const NodeSet mappers = assign.mappers(n);
        if (mappers.contains(k)) continue;
        const IvIndex iv{q, n};
        MulticastMessage m;
        m.recipients = NodeSet().with(k);
        m.tag = {kUncodedSubsystem, m.recipients, 0, iv};
        if (mappers.empty()) {
          throw DecodeFailure("uncoded shuffle: file " + std::to_string(n) + " has no edge mapper");
        }
        m.sender = mappers.members().front();
        const BitString* v = node_stores[static_cast<std::size_t>(m.sender - 1)].find(iv);
        if (v == nullptr) {
          throw DecodeFailure("missing intermediate value v(" + std::to_string(q) + "," +
                              std::to_string(n) + ") in store");
        }
        m.payload = Symbol::from_bits(*v);
        m.bit_length = v->size();
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

}  // namespace mcdc
