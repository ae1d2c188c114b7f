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

#include "mcdc/simulator.hpp"

#include <numeric>
#include <stdexcept>

#include "mcdc/error.hpp"
#include "mcdc/workload.hpp"

namespace mcdc {

void MulticastChannel::send(MulticastMessage m) {
  if (m.recipients.empty() || !m.recipients.subset_of(NodeSet::all(K_))) {
    throw InvalidInput("message recipients " + m.recipients.str() + " outside 1.." +
                       std::to_string(K_));
  }
  if (m.sender != kMasterNode && m.recipients.contains(m.sender)) {
    throw InvalidInput("node " + std::to_string(m.sender) + " addressed a message to itself");
  }
  if (m.padding_bits() >= 16) {
    throw std::logic_error("message carries " + std::to_string(m.padding_bits()) +
                           " padding bits");
  }
  messages_.push_back(std::move(m));
}

std::vector<const MulticastMessage*> MulticastChannel::inbox(int k) {
  std::vector<const MulticastMessage*> out;
  for (std::size_t i = 0; i < messages_.size(); ++i) {
    if (messages_[i].recipients.contains(k)) {
      log_.push_back({k, i});
      out.push_back(&messages_[i]);
    }
  }
  return out;
}

const MulticastMessage& MulticastChannel::read(int k, std::size_t index) {
  const MulticastMessage& m = messages_.at(index);
  if (!m.recipients.contains(k)) {
    throw InvalidInput("node " + std::to_string(k) + " is not a recipient of message " +
                       std::to_string(index));
  }
  log_.push_back({k, index});
  return m;
}

namespace {

struct MappedJob {
  std::vector<std::vector<BitString>> truth;  // [q-1][n-1]
  std::vector<std::uint64_t> outputs;         // [q-1]
  std::vector<IvStore> nodes;                 // [k-1]
  IvStore master;
};

MappedJob map_phase(const ProblemInstance& inst, const MapAssignment& assign) {
  MappedJob job;
  const auto Q = static_cast<std::size_t>(inst.Q);
  const auto N = static_cast<std::size_t>(inst.N);
  std::vector<BitString> files(N);
  for (std::size_t n = 0; n < N; ++n) files[n] = workload::file_contents(inst.seed, n + 1, inst.F);
  job.truth.assign(Q, std::vector<BitString>(N));
  for (std::size_t q = 0; q < Q; ++q) {
    for (std::size_t n = 0; n < N; ++n) {
      job.truth[q][n] = workload::map_value(q + 1, n + 1, files[n], inst.T);
    }
    job.outputs.push_back(workload::reduce_value(q + 1, job.truth[q]));
  }
  job.nodes.resize(static_cast<std::size_t>(inst.K));
  for (int k = 1; k <= inst.K; ++k) {
    IvStore& store = job.nodes[static_cast<std::size_t>(k - 1)];
    for (long long n : assign.files_mapped_by(k)) {
      const BitString& w = files[static_cast<std::size_t>(n - 1)];
      for (long long q = 1; q <= inst.Q; ++q) store.put({q, n}, workload::map_value(q, n, w, inst.T));
    }
  }
  for (long long n : assign.master_files()) {
    const BitString& w = files[static_cast<std::size_t>(n - 1)];
    for (long long q = 1; q <= inst.Q; ++q) job.master.put({q, n}, workload::map_value(q, n, w, inst.T));
  }
  return job;
}

void apply_fault(std::vector<MulticastMessage>& msgs, const RunOptions& options) {
  if (!options.fault_message || msgs.empty()) return;
  for (std::size_t tries = 0; tries < msgs.size(); ++tries) {
    MulticastMessage& m = msgs[(*options.fault_message + tries) % msgs.size()];
    if (m.bit_length == 0) continue;
    const std::size_t bit = options.fault_bit % m.bit_length;
    auto words = m.payload.words();
    words[bit / 16] ^= static_cast<std::uint16_t>(0x8000u >> (bit % 16));
    return;
  }
}

// Delivers, decodes and reduces at every node; throws DecodeFailure on mismatch.
void deliver_and_reduce(const ProblemInstance& inst, const MapAssignment& assign,
                        const MappedJob& job, MulticastChannel& channel) {
  for (int k = 1; k <= inst.K; ++k) {
    const IvStore& local = job.nodes[static_cast<std::size_t>(k - 1)];
    const auto inbox = channel.inbox(k);
    const auto decoded = decode_at_node(k, assign, local, inbox);
    for (long long q : assign.reduce_set(k)) {
      std::vector<BitString> values;
      std::vector<const DecodedValue*> sources;
      for (long long n = 1; n <= inst.N; ++n) {
        if (const BitString* v = local.find({q, n})) {
          values.push_back(*v);
          sources.push_back(nullptr);
          continue;
        }
        auto it = decoded.find({q, n});
        if (it == decoded.end()) {
          throw DecodeFailure("node " + std::to_string(k) + " never obtained v(" +
                              std::to_string(q) + "," + std::to_string(n) + ")");
        }
        values.push_back(it->second.value);
        sources.push_back(&it->second);
      }
      if (workload::reduce_value(q, values) == job.outputs[static_cast<std::size_t>(q - 1)]) {
        continue;
      }
      std::string detail = "reduce mismatch at node " + std::to_string(k) + " for function " +
                           std::to_string(q);
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == job.truth[static_cast<std::size_t>(q - 1)][i]) continue;
        detail += ": v(" + std::to_string(q) + "," + std::to_string(i + 1) + ") wrong, from " +
                  (sources[i] ? sources[i]->provenance : std::string("local map"));
        break;
      }
      throw DecodeFailure(detail);
    }
  }
}

void account(LoadReport& r, const std::vector<MulticastMessage>& msgs, int K) {
  r.lk.assign(static_cast<std::size_t>(K), 0);
  for (const MulticastMessage& m : msgs) {
    if (m.sender == kMasterNode) {
      r.l0 += m.bit_length;
    } else {
      r.lk[static_cast<std::size_t>(m.sender - 1)] += m.bit_length;
    }
    r.padding_bits += m.padding_bits();
  }
  r.messages = msgs.size();
}

}  // namespace

AcdTable count_acd(const MapAssignment& assign) {
  AcdTable t;
  t.K = assign.K;
  for (long long n = 1; n <= assign.N; ++n) {
    const NodeSet mappers = assign.mappers(n);
    const int c = mappers.size() + (assign.master_maps(n) ? 1 : 0);
    for (long long q = 1; q <= assign.Q; ++q) {
      const int d = (assign.reducers(q) - mappers).size();
      if (d == 0) {
        ++t.zero_demand;
      } else {
        ++t.counts[{c, d}];
      }
    }
  }
  return t;
}

RunResult run(const ProblemInstance& inst, const Allocation& alloc, const RunOptions& options) {
  const MapAssignment assign = build_assignment(inst, alloc);
  const MappedJob job = map_phase(inst, assign);

  std::vector<MulticastMessage> msgs = shuffle_sub1(assign, job.nodes);
  std::uint64_t sub1_bits = 0;
  for (const MulticastMessage& m : msgs) sub1_bits += m.bit_length;
  for (MulticastMessage& m : shuffle_sub2(assign, job.master)) msgs.push_back(std::move(m));
  apply_fault(msgs, options);

  MulticastChannel channel(inst.K);
  for (MulticastMessage& m : msgs) channel.send(std::move(m));

  RunResult result;
  LoadReport& r = result.report;
  r.alpha = assign.alpha;
  r.r1 = assign.r1;
  r.r2 = assign.r2;
  account(r, channel.transcript(), inst.K);

  const BigInt qt = BigInt(inst.Q) * inst.T;
  const BigInt qnt = qt * inst.N;
  std::uint64_t edge = 0;
  for (std::uint64_t b : r.lk) edge += b;
  r.L = Rat(BigInt(edge + r.l0), qnt);
  r.L_seq = r.L;
  r.L_par = Rat(BigInt(std::max(edge, r.l0)), qnt);
  if (assign.N1 > 0) r.L1 = Rat(BigInt(sub1_bits), qt * assign.N1);
  if (assign.N2 > 0) r.L2 = Rat(BigInt(r.l0), qt * assign.N2);
  r.lemma1 = lemma1_bound(count_acd(assign), inst.Q, inst.N, inst.K);

  // Closed-form comparison. An empty subsystem contributes nothing.
  const Rat one(1);
  Rat f1;
  Rat f2;
  if (assign.N1 > 0) {
    f1 = l1_load(assign.r1, inst.s, inst.K);
    if (r.L1 != f1) r.formula_mismatches.push_back("L1 " + r.L1.str() + " != " + f1.str());
  }
  if (assign.N2 > 0) {
    f2 = l2_load(assign.r2, inst.s, inst.K);
    if (r.L2 != f2) r.formula_mismatches.push_back("L2 " + r.L2.str() + " != " + f2.str());
  }
  const Rat seq = assign.alpha * f1 + (one - assign.alpha) * f2;
  const Rat par = rmax(assign.alpha * f1, (one - assign.alpha) * f2);
  if (r.L_seq != seq) r.formula_mismatches.push_back("L_seq " + r.L_seq.str() + " != " + seq.str());
  if (r.L_par != par) r.formula_mismatches.push_back("L_par " + r.L_par.str() + " != " + par.str());
  r.formula_match = r.formula_mismatches.empty();

  deliver_and_reduce(inst, assign, job, channel);
  r.reduce_verified = true;
  result.transcript = channel.transcript();
  return result;
}

RunResult baseline_uncoded_run(const ProblemInstance& inst, int r) {
  if (inst.s != 1) throw InvalidInput("baseline_uncoded_run requires s = 1");
  if (r < 1 || r > inst.K) throw InvalidInput("baseline load r must lie in 1..K");
  ProblemInstance edge = inst;
  edge.M0 = 0;
  edge.T = std::lcm(inst.T, static_cast<long long>(r));
  const long long per_node = r * inst.N / inst.K;
  edge.M1 = std::max(inst.M1, per_node);
  Allocation a;
  a.alpha = Rat(1);
  a.r1 = r;
  const MapAssignment assign = build_assignment(edge, a);
  const MappedJob job = map_phase(edge, assign);

  MulticastChannel channel(edge.K);
  for (MulticastMessage& m : shuffle_uncoded(assign, job.nodes)) channel.send(std::move(m));

  RunResult result;
  LoadReport& rep = result.report;
  rep.alpha = Rat(1);
  rep.r1 = r;
  account(rep, channel.transcript(), edge.K);
  std::uint64_t bits = 0;
  for (std::uint64_t b : rep.lk) bits += b;
  const BigInt qnt = BigInt(edge.Q) * edge.N * edge.T;
  rep.L = Rat(BigInt(bits), qnt);
  rep.L_seq = rep.L;
  rep.L_par = rep.L;
  rep.L1 = rep.L;
  rep.lemma1 = lemma1_bound(count_acd(assign), edge.Q, edge.N, edge.K);
  const Rat expected = uncoded_load(Rat(r), edge.K);
  if (rep.L != expected) {
    rep.formula_mismatches.push_back("L " + rep.L.str() + " != " + expected.str());
  }
  rep.formula_match = rep.formula_mismatches.empty();

  deliver_and_reduce(edge, assign, job, channel);
  rep.reduce_verified = true;
  result.transcript = channel.transcript();
  return result;
}

}  // namespace mcdc
