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
#include <set>

#include "doctest.h"
#include "mcdc/error.hpp"
#include "mcdc/instance.hpp"
#include "mcdc/loadmodel.hpp"
#include "mcdc/scheme.hpp"
#include "mcdc/verify.hpp"
#include "mcdc/workload.hpp"

using namespace mcdc;

namespace {

ProblemInstance master_all() {
  return {3, 6, 3, 1, 6, 4, 16, 64, 1};
}
Allocation alloc(Rat alpha, int r1, int r2) {
  Allocation a;
  a.alpha = alpha;
  a.r1 = r1;
  a.r2 = r2;
  return a;
}
ProblemInstance master_half() {
  return {3, 12, 3, 1, 6, 8, 16, 64, 2};
}

// Direct reading of the set definition over W_k and the per-subsystem M_k.
std::vector<IvIndex> oracle_V(NodeSet S, NodeSet S1, const MapAssignment& m, int subsystem) {
  std::vector<IvIndex> out;
  for (long long q = 1; q <= m.Q; ++q) {
    bool ok = true;
    for (int k = 1; k <= m.K && ok; ++k) {
      const auto w = m.reduce_set(k);
      const bool reduces = std::find(w.begin(), w.end(), q) != w.end();
      if (S.contains(k) && !S1.contains(k) && !reduces) ok = false;
      if (!S.contains(k) && reduces) ok = false;
    }
    if (!ok) continue;
    for (long long n = 1; n <= m.N; ++n) {
      if (m.subsystem_of(n) != subsystem) continue;
      bool in = true;
      for (int k = 1; k <= m.K && in; ++k) {
        const auto f = m.files_mapped_by(k, subsystem);
        const bool maps = std::find(f.begin(), f.end(), n) != f.end();
        if (S1.contains(k) != maps) in = false;
      }
      if (in) out.push_back({q, n});
    }
  }
  return out;
}

struct Stores {
  std::vector<IvStore> nodes;
  IvStore master;
  std::vector<std::vector<BitString>> truth;
};

Stores map_all(const ProblemInstance& inst, const MapAssignment& m) {
  Stores st;
  st.nodes.resize(static_cast<std::size_t>(inst.K));
  st.truth.assign(static_cast<std::size_t>(inst.Q), {});
  for (long long n = 1; n <= inst.N; ++n) {
    const BitString w = workload::file_contents(inst.seed, n, inst.F);
    for (long long q = 1; q <= inst.Q; ++q) {
      const BitString v = workload::map_value(q, n, w, inst.T);
      st.truth[static_cast<std::size_t>(q - 1)].push_back(v);
      for (int k : m.mappers(n).members()) st.nodes[static_cast<std::size_t>(k - 1)].put({q, n}, v);
      if (m.master_maps(n)) st.master.put({q, n}, v);
    }
  }
  return st;
}

}  // namespace

TEST_CASE("validation accepts the three-node instances") {
  const Allocation a = validate_and_divisibility(master_half(), alloc(Rat(1, 2), 2, 2));
  CHECK(a.m1_prime == Rat(4));
  const DerivedSizes d = derived_sizes(master_half(), a);
  CHECK(d.eta1_sub1 == 2);
  CHECK(d.eta1_sub2 == 2);
  CHECK(d.eta2 == 1);
  CHECK(d.reduce_per_node == 1);
  const DerivedSizes d1 = derived_sizes(master_all(), validate_and_divisibility(master_all(), alloc(Rat(0), 0, 2)));
  CHECK(d1.eta1_sub2 == 2);
  CHECK(d1.N1 == 0);
}

TEST_CASE("validation lists every violation with a fix") {
  ProblemInstance bad{4, 12, 5, 2, 12, 6, 16, 64, 0};
  const auto issues = diagnose(bad, alloc(Rat(0), 0, 2));
  REQUIRE_FALSE(issues.empty());
  const bool names_eta2 = std::any_of(issues.begin(), issues.end(), [](const std::string& s) {
    return s.find("eta2") != std::string::npos && s.find("use Q = 6") != std::string::npos;
  });
  CHECK(names_eta2);
  CHECK_THROWS_AS(validate_and_divisibility(bad, alloc(Rat(0), 0, 2)), InvalidInput);

  ProblemInstance odd = master_half();
  odd.N = 10;
  odd.M0 = 5;
  odd.M1 = 7;
  const auto n_issues = diagnose(odd, alloc(Rat(1, 2), 2, 2));
  CHECK(std::any_of(n_issues.begin(), n_issues.end(),
                    [](const std::string& s) { return s.find("use N = 12") != std::string::npos; }));

  ProblemInstance t = master_half();
  t.T = 15;
  const auto t_issues = diagnose(t, alloc(Rat(1, 2), 2, 2));
  CHECK(std::any_of(t_issues.begin(), t_issues.end(),
                    [](const std::string& s) { return s.find("use T = 16") != std::string::npos; }));

  ProblemInstance small = master_all();
  small.M0 = 5;
  CHECK_THROWS_AS(validate_and_divisibility(small, alloc(Rat(0), 0, 2)), InvalidInput);
  ProblemInstance storage = master_all();
  storage.M0 = 0;
  storage.M1 = 1;
  CHECK_THROWS_AS(validate_and_divisibility(storage, alloc(Rat(1), 2, 0)), InvalidInput);
}

TEST_CASE("synthesized sizes are the smallest valid ones") {
  const MinimalSizes ex2 = synthesize_instance(3, 1, 2, 2, Rat(1, 2));
  CHECK(ex2.N == 6);
  CHECK(ex2.Q == 3);
  CHECK(ex2.T == 16);
  CHECK(synthesize_instance(3, 1, 0, 2, Rat(0)).N == 3);
  const MinimalSizes k4 = synthesize_instance(4, 2, 2, 2, Rat(1, 2));
  CHECK(k4.N % 12 == 0);
  CHECK(k4.Q % 6 == 0);
  CHECK(synthesize_instance(4, 1, 3, 1, Rat(1, 3)).T == 48);

  // Smallest N with alpha N, alpha N / C(K,r1) and (1 - alpha) N / C(K,r2) integral.
  for (int K = 2; K <= 6; ++K) {
    for (const SchemeConfig& c : enumerate_configs(K)) {
      long long N = 1;
      for (;; ++N) {
        const Rat n1 = c.alpha * Rat(N);
        const Rat n2 = Rat(N) - n1;
        if (!n1.is_integer()) continue;
        if (c.alpha.sign() > 0 && !(n1 / Rat::from_int(binom(K, c.r1))).is_integer()) continue;
        if (c.alpha < Rat(1) && !(n2 / Rat::from_int(binom(K, c.r2))).is_integer()) continue;
        break;
      }
      CHECK_MESSAGE(synthesize_instance(K, c.s, c.r1, c.r2, c.alpha).N == N, c.str());
    }
  }
}

TEST_CASE("placement with every file at the master") {
  const MapAssignment m = build_assignment(master_all(), alloc(Rat(0), 0, 2));
  CHECK(m.master_files().size() == 6);
  for (int k = 1; k <= 3; ++k) CHECK(m.files_mapped_by(k).size() == 4);
  for (long long n = 1; n <= 6; ++n) CHECK(m.mappers(n).size() == 2);
  CHECK(m.sub2_groups.size() == 3);
  CHECK(m.sub2_groups[0].nodes == NodeSet::of({1, 2}));
  CHECK(m.sub2_groups[2].nodes == NodeSet::of({2, 3}));
  CHECK(m.reduce_set(2) == std::vector<long long>{2});
}

TEST_CASE("split placement puts the master files last") {
  const MapAssignment m = build_assignment(master_half(), alloc(Rat(1, 2), 2, 2));
  const auto mf = m.master_files();
  CHECK(mf.front() == 7);
  CHECK(mf.back() == 12);
  CHECK(m.files_mapped_by(1, 1).size() == 4);
  CHECK(m.files_mapped_by(1, 2).size() == 4);
  ProblemInstance pure = master_half();
  pure.M0 = 0;
  pure.M1 = 8;
  const MapAssignment e = build_assignment(pure, alloc(Rat(1), 2, 0));
  CHECK(e.sub2_groups.empty());
  CHECK(e.master_files().empty());
}

TEST_CASE("placement symmetry and V-set oracle over all small configs") {
  for (int K = 2; K <= 4; ++K) {
    for (const SchemeConfig& c : enumerate_configs(K)) {
      CAPTURE(c.str());
      const ProblemInstance inst = minimal_instance(K, c.s, c.r1, c.r2, c.alpha, 8, 0);
      const MapAssignment m = build_assignment(inst, alloc(c.alpha, c.r1, c.r2));
      // Every file in exactly one group; each node maps r x (subsystem files) / K.
      std::multiset<long long> seen;
      for (const auto* groups : {&m.sub1_groups, &m.sub2_groups}) {
        for (const Group& g : *groups) {
          for (long long n = g.first; n <= g.last(); ++n) seen.insert(n);
        }
      }
      CHECK(static_cast<long long>(seen.size()) == inst.N);
      CHECK(static_cast<long long>(std::set<long long>(seen.begin(), seen.end()).size()) == inst.N);
      for (int k = 1; k <= K; ++k) {
        CHECK(static_cast<long long>(m.files_mapped_by(k, 1).size()) * K == m.r1 * m.N1);
        CHECK(static_cast<long long>(m.files_mapped_by(k, 2).size()) * K == m.r2 * m.N2);
        CHECK(static_cast<long long>(m.reduce_set(k).size()) * K == inst.s * inst.Q);
      }
      for (int sub : {1, 2}) {
        if ((sub == 1 ? m.N1 : m.N2) == 0) continue;
        const int r = sub == 1 ? m.r1 : m.r2;
        const long long eta = sub == 1 ? m.sub1_groups.front().count : m.sub2_groups.front().count;
        const long long eta2 = m.reduce_groups.front().count;
        for (int l = 1; l <= K; ++l) {
          for (NodeSet S : subsets_of_size(K, l)) {
            for (NodeSet S1 : subsets_of(S, r)) {
              const auto v = iv_set_V(S, S1, m, sub);
              CHECK(v == oracle_V(S, S1, m, sub));
              const int need = l - c.s;
              const BigInt expect = need < 0 ? BigInt(0) : binom(r, need) * eta2 * eta;
              CHECK(BigInt(v.size()) == expect);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("s = 1 V-set is what the single receiver needs from the group") {
  const MapAssignment m = build_assignment(master_all(), alloc(Rat(0), 0, 2));
  const auto v = iv_set_V(NodeSet::of({1, 2, 3}), NodeSet::of({2, 3}), m, 2);
  REQUIRE(v.size() == 2);
  CHECK(v[0].q == 1);
  CHECK(v[0].n == 5);
  CHECK(v[1].n == 6);
  // S = S1: every function some member of S reduces, on the group's own files.
  CHECK(iv_set_V(NodeSet::of({1, 2}), NodeSet::of({1, 2}), m, 2).size() == 4);
  CHECK(iv_set_V(NodeSet::of({1, 2}), NodeSet::of({1}), m, 2).empty());
}

TEST_CASE("shuffle originators, recipients and counts") {
  const ProblemInstance inst = master_half();
  const MapAssignment m = build_assignment(inst, alloc(Rat(1, 2), 2, 2));
  const Stores st = map_all(inst, m);
  const auto s1 = shuffle_sub1(m, st.nodes);
  const auto s2 = shuffle_sub2(m, st.master);
  REQUIRE(s1.size() == 3);
  REQUIRE(s2.size() == 1);
  for (const auto& msg : s1) {
    CHECK(msg.sender >= 1);
    CHECK_FALSE(msg.recipients.contains(msg.sender));
    CHECK(msg.bit_length == 16);
    CHECK(msg.tag.subsystem == 1);
  }
  CHECK(s2[0].sender == kMasterNode);
  CHECK(s2[0].bit_length == 32);
  CHECK(s2[0].recipients == NodeSet::all(3));
}

TEST_CASE("full-load subsystems send nothing") {
  ProblemInstance inst = minimal_instance(3, 1, 3, 3, Rat(1, 2), 8, 0);
  const MapAssignment m = build_assignment(inst, alloc(Rat(1, 2), 3, 3));
  const Stores st = map_all(inst, m);
  CHECK(shuffle_sub1(m, st.nodes).empty());
  CHECK(shuffle_sub2(m, st.master).empty());
  for (int k = 1; k <= 3; ++k) CHECK(decode_at_node(k, m, st.nodes[static_cast<std::size_t>(k - 1)], {}).empty());
}

TEST_CASE("r2 = 0 sends each value once to its reducers") {
  const ProblemInstance inst = minimal_instance(4, 2, 0, 0, Rat(0), 8, 0);
  const MapAssignment m = build_assignment(inst, alloc(Rat(0), 0, 0));
  const Stores st = map_all(inst, m);
  const auto msgs = shuffle_sub2(m, st.master);
  CHECK(msgs.size() == m.reduce_groups.size());
  for (const auto& msg : msgs) CHECK(msg.recipients.size() == 2);
}

TEST_CASE("node 1 decode recovers the missing values of files 5 and 6") {
  const ProblemInstance inst = master_all();
  const MapAssignment m = build_assignment(inst, alloc(Rat(0), 0, 2));
  const Stores st = map_all(inst, m);
  const auto msgs = shuffle_sub2(m, st.master);
  REQUIRE(msgs.size() == 1);
  std::vector<const MulticastMessage*> inbox = {&msgs[0]};
  const auto got = decode_at_node(1, m, st.nodes[0], inbox);
  REQUIRE(got.size() == 2);
  CHECK(got.at({1, 5}).value == st.truth[0][4]);
  CHECK(got.at({1, 6}).value == st.truth[0][5]);
  CHECK(got.at({1, 5}).provenance.find("S1={2,3}") != std::string::npos);
}

TEST_CASE("corrupted side information is detected downstream, missing values immediately") {
  const ProblemInstance inst = master_all();
  const MapAssignment m = build_assignment(inst, alloc(Rat(0), 0, 2));
  const Stores st = map_all(inst, m);
  IvStore empty;
  CHECK_THROWS_AS(shuffle_sub2(m, empty), DecodeFailure);
  std::vector<IvIndex> ivs = {{1, 1}};
  CHECK_THROWS_AS(concat_values(empty, ivs), DecodeFailure);
}
