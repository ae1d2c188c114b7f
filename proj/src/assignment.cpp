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

MapAssignment build_assignment(const ProblemInstance& inst, const Allocation& alloc) {
  const Allocation a = validate_and_divisibility(inst, alloc);
  const DerivedSizes d = derived_sizes(inst, a);
  MapAssignment m;
  m.K = inst.K;
  m.s = inst.s;
  m.N = inst.N;
  m.Q = inst.Q;
  m.T = inst.T;
  m.alpha = a.alpha;
  m.r1 = a.r1;
  m.r2 = a.r2;
  m.N1 = d.N1;
  m.N2 = d.N2;
  m.file_mappers_.assign(static_cast<std::size_t>(inst.N) + 1, NodeSet());
  m.reducers_.assign(static_cast<std::size_t>(inst.Q) + 1, NodeSet());

  long long next = 1;
  auto lay_out = [&](int load, long long eta, std::vector<Group>& groups,
                     std::map<std::uint32_t, std::size_t>& index) {
    for (NodeSet t : subsets_of_size(inst.K, load)) {
      index[t.mask()] = groups.size();
      groups.push_back({t, next, eta});
      for (long long n = next; n < next + eta; ++n) {
        m.file_mappers_[static_cast<std::size_t>(n)] = t;
      }
      next += eta;
    }
  };
  if (d.N1 > 0) lay_out(a.r1, d.eta1_sub1, m.sub1_groups, m.sub1_index_);
  if (d.N2 > 0) lay_out(a.r2, d.eta1_sub2, m.sub2_groups, m.sub2_index_);

  long long q = 1;
  for (NodeSet p : subsets_of_size(inst.K, inst.s)) {
    m.reduce_index_[p.mask()] = m.reduce_groups.size();
    m.reduce_groups.push_back({p, q, d.eta2});
    for (long long i = q; i < q + d.eta2; ++i) m.reducers_[static_cast<std::size_t>(i)] = p;
    q += d.eta2;
  }
  return m;
}

std::vector<long long> MapAssignment::master_files() const {
  std::vector<long long> out;
  for (long long n = N1 + 1; n <= N; ++n) out.push_back(n);
  return out;
}

std::vector<long long> MapAssignment::files_mapped_by(int k, int subsystem) const {
  std::vector<long long> out;
  for (long long n = 1; n <= N; ++n) {
    if (subsystem != 0 && subsystem_of(n) != subsystem) continue;
    if (mappers(n).contains(k)) out.push_back(n);
  }
  return out;
}

std::vector<long long> MapAssignment::reduce_set(int k) const {
  std::vector<long long> out;
  for (long long q = 1; q <= Q; ++q) {
    if (reducers(q).contains(k)) out.push_back(q);
  }
  return out;
}

const Group* MapAssignment::file_group(int subsystem, NodeSet nodes) const {
  const auto& index = subsystem == 1 ? sub1_index_ : sub2_index_;
  const auto& groups = subsystem == 1 ? sub1_groups : sub2_groups;
  auto it = index.find(nodes.mask());
  return it == index.end() ? nullptr : &groups[it->second];
}

const Group* MapAssignment::reduce_group(NodeSet nodes) const {
  auto it = reduce_index_.find(nodes.mask());
  return it == reduce_index_.end() ? nullptr : &reduce_groups[it->second];
}

std::vector<IvIndex> iv_set_V(NodeSet S, NodeSet S1, const MapAssignment& assign,
                              int subsystem) {
  std::vector<IvIndex> out;
  const int load = subsystem == 1 ? assign.r1 : assign.r2;
  if (!S1.subset_of(S) || S1.size() != load) return out;
  const Group* files = assign.file_group(subsystem, S1);
  if (files == nullptr) return out;
  // Reducer sets P with S \ S1 inside P inside S.
  const NodeSet needers = S - S1;
  const int extra = assign.s - needers.size();
  if (extra < 0) return out;
  std::vector<const Group*> fgroups;
  for (NodeSet x : subsets_of(S1, extra)) {
    if (const Group* g = assign.reduce_group(needers | x)) fgroups.push_back(g);
  }
  std::sort(fgroups.begin(), fgroups.end(),
            [](const Group* a, const Group* b) { return a->first < b->first; });
  for (const Group* g : fgroups) {
    for (long long q = g->first; q <= g->last(); ++q) {
      for (long long n = files->first; n <= files->last(); ++n) out.push_back({q, n});
    }
  }
  return out;
}

BitString concat_values(const IvStore& store, std::span<const IvIndex> ivs) {
  BitString out;
  for (const IvIndex& iv : ivs) {
    const BitString* v = store.find(iv);
    if (v == nullptr) {
      throw DecodeFailure("missing intermediate value v(" + std::to_string(iv.q) + "," +
                          std::to_string(iv.n) + ") in store");
    }
    out.append(*v);
  }
  return out;
}

}  // namespace mcdc
