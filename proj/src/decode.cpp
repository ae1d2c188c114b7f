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

#include <map>
#include <tuple>

#include "mcdc/error.hpp"
#include "mcdc/scheme.hpp"

namespace mcdc {

namespace {

std::string where(int k, NodeSet S, int subsystem, int sender) {
  return "node " + std::to_string(k) + ", S=" + S.str() + ", tag subsystem " +
         std::to_string(subsystem) + " sender " + std::to_string(sender);
}

void split_values(const BitString& bits, const std::vector<IvIndex>& ivs, long long T,
                  const std::string& provenance, std::map<IvIndex, DecodedValue>& out) {
  const std::size_t t = static_cast<std::size_t>(T);
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    out[ivs[i]] = {bits.slice(i * t, t), provenance};
  }
}

std::map<int, Symbol> solve(const std::map<int, Symbol>& known,
                            const std::vector<const MulticastMessage*>& msgs,
                            std::size_t columns, const std::string& ctx) {
  std::vector<CodedRow> rows;
  for (const MulticastMessage* m : msgs) rows.push_back({m->tag.row, m->payload});
  try {
    return vandermonde_decode(known, rows, default_alphas(columns));
  } catch (const std::exception& e) {
    throw DecodeFailure(ctx + ": " + e.what());
  }
}

}  // namespace

std::map<IvIndex, DecodedValue> decode_at_node(int k, const MapAssignment& assign,
                                               const IvStore& local,
                                               std::span<const MulticastMessage* const> inbox) {
  std::map<IvIndex, DecodedValue> out;
  // (subsystem, S, sender) -> rows, in emission order.
  std::map<std::tuple<int, NodeSet, int>, std::vector<const MulticastMessage*>> batches;
  for (const MulticastMessage* m : inbox) {
    if (!m->recipients.contains(k)) continue;
    if (m->tag.subsystem == kUncodedSubsystem) {
      if (!m->tag.iv) throw DecodeFailure(where(k, m->tag.group, 0, m->sender) + ": no iv tag");
      out[*m->tag.iv] = {m->payload.to_bits(m->bit_length),
                         "uncoded from node " + std::to_string(m->sender)};
      continue;
    }
    batches[{m->tag.subsystem, m->tag.group, m->sender}].push_back(m);
  }

  // Subsystem-1 segments recovered so far: (S, S1) -> segment by owner rank.
  std::map<std::pair<NodeSet, NodeSet>, std::map<int, BitString>> segments;
  std::map<std::tuple<int, NodeSet, NodeSet>, BitString> local_u;
  auto own_u = [&](NodeSet S, NodeSet S1, int subsystem) -> const BitString& {
    auto key = std::make_tuple(subsystem, S, S1);
    auto it = local_u.find(key);
    if (it == local_u.end()) {
      it = local_u.emplace(key, concat_values(local, iv_set_V(S, S1, assign, subsystem))).first;
    }
    return it->second;
  };

  for (const auto& [key, msgs] : batches) {
    const auto& [subsystem, S, sender] = key;
    const std::string ctx = where(k, S, subsystem, sender);
    const std::uint64_t bits = msgs.front()->bit_length;
    if (subsystem == 2) {
      const std::vector<NodeSet> cols = subsets_of(S, assign.r2);
      std::map<int, Symbol> known;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].contains(k)) known[static_cast<int>(c)] = Symbol::from_bits(own_u(S, cols[c], 2));
      }
      for (const auto& [c, sym] : solve(known, msgs, cols.size(), ctx)) {
        const NodeSet S1 = cols[static_cast<std::size_t>(c)];
        split_values(sym.to_bits(bits), iv_set_V(S, S1, assign, 2), assign.T,
                     "subsystem 2 S=" + S.str() + " S1=" + S1.str(), out);
      }
    } else if (subsystem == 1) {
      std::vector<NodeSet> cols;
      for (NodeSet S1 : subsets_of(S, assign.r1)) {
        if (S1.contains(sender)) cols.push_back(S1);
      }
      std::map<int, Symbol> known;
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (!cols[c].contains(k)) continue;
        const BitString& u = own_u(S, cols[c], 1);
        const std::size_t pos = static_cast<std::size_t>(cols[c].rank_of(sender));
        known[static_cast<int>(c)] = Symbol::from_bits(u.slice(pos * bits, bits));
      }
      for (const auto& [c, sym] : solve(known, msgs, cols.size(), ctx)) {
        const NodeSet S1 = cols[static_cast<std::size_t>(c)];
        segments[{S, S1}][S1.rank_of(sender)] = sym.to_bits(bits);
      }
    } else {
      throw DecodeFailure(ctx + ": unknown subsystem");
    }
  }

  for (const auto& [key, parts] : segments) {
    const auto& [S, S1] = key;
    if (static_cast<int>(parts.size()) != assign.r1) {
      throw DecodeFailure("node " + std::to_string(k) + ", S=" + S.str() + ", S1=" + S1.str() +
                          ": " + std::to_string(parts.size()) + " of " +
                          std::to_string(assign.r1) + " segments received");
    }
    BitString u;
    for (const auto& [rank, seg] : parts) u.append(seg);
    split_values(u, iv_set_V(S, S1, assign, 1), assign.T,
                 "subsystem 1 S=" + S.str() + " S1=" + S1.str(), out);
  }
  return out;
}

}  // namespace mcdc
