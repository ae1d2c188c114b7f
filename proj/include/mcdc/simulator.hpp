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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcdc/allocator.hpp"
#include "mcdc/instance.hpp"
#include "mcdc/loadmodel.hpp"
#include "mcdc/scheme.hpp"

namespace mcdc {

/// Lossless in-process broadcast medium. Messages are delivered in emission
/// order; a node can only read messages whose recipient set contains it.
class MulticastChannel {
 public:
  struct Access {
    int node = 0;
    std::size_t message = 0;
  };

  explicit MulticastChannel(int K) : K_(K) {}

  /// Rejects empty or out-of-range recipient sets and self-addressed sends.
  void send(MulticastMessage m);
  /// Every message addressed to node k. Each read is logged.
  std::vector<const MulticastMessage*> inbox(int k);
  /// Single read; throws std::out_of_range / InvalidInput for foreign messages.
  const MulticastMessage& read(int k, std::size_t index);

  const std::vector<MulticastMessage>& transcript() const { return messages_; }
  const std::vector<Access>& access_log() const { return log_; }

 private:
  int K_;
  std::vector<MulticastMessage> messages_;
  std::vector<Access> log_;
};

struct LoadReport {
  std::uint64_t l0 = 0;           // master bits
  std::vector<std::uint64_t> lk;  // bits sent by edge node k, index k-1
  Rat L;
  Rat L_seq;
  Rat L_par;
  Rat L1;  // measured subsystem-1 load; 0 when that subsystem is empty
  Rat L2;  // measured subsystem-2 load; 0 when that subsystem is empty
  Rat lemma1;
  bool reduce_verified = false;
  bool formula_match = false;

  Rat alpha;
  int r1 = 0;
  int r2 = 0;
  std::size_t messages = 0;
  std::uint64_t padding_bits = 0;
  std::vector<std::string> formula_mismatches;
};

struct RunOptions {
  /// Test hook: flip one payload bit of message (index mod count) before delivery.
  std::optional<std::size_t> fault_message;
  std::size_t fault_bit = 0;
};

struct RunResult {
  LoadReport report;
  std::vector<MulticastMessage> transcript;
};

/// Map, shuffle, decode and reduce one instance. Throws InvalidInput for
/// invalid parameters and DecodeFailure naming (node, S, tag) on any decode
/// or reduce mismatch.
RunResult run(const ProblemInstance& inst, const Allocation& alloc, const RunOptions& options = {});

/// (c, d) census of all QN values: c mapping nodes among K+1, d nodes that
/// reduce but do not map the value.
AcdTable count_acd(const MapAssignment& assign);

/// Edge-only placement at load r, every missing value unicast. Requires s = 1.
/// T is raised to a multiple of r if needed; the load is normalized by T.
RunResult baseline_uncoded_run(const ProblemInstance& inst, int r);

}  // namespace mcdc
