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

#include <vector>

#include "doctest.h"
#include "mcdc/error.hpp"
#include "mcdc/loadmodel.hpp"
#include "mcdc/subsets.hpp"

using namespace mcdc;

namespace {

// Independent count: for every group S the coded traffic equals the number of
// missing values per receiver times the code redundancy. Only set membership
// is enumerated; no binomial identities are used.
Rat counted_load(int r, int s, int K, bool edge) {
  Rat total;
  for (int l = 1; l <= K; ++l) {
    for (NodeSet S : subsets_of_size(K, l)) {
      if (l < r + 1 || l < s || l > r + s) continue;
      // Each r-subset of S contributes one value per s-set P with S \ S1 in P in S.
      long long symbols = 0;
      long long per_symbol = 0;
      for (NodeSet S1 : subsets_of(S, r)) {
        long long v = 0;
        for (NodeSet P : subsets_of(S, s)) {
          if ((S - S1).subset_of(P)) ++v;
        }
        per_symbol = v;
        ++symbols;
      }
      if (per_symbol == 0) continue;
      // Each receiver k lacks the symbols with k not in S1.
      long long unknown = 0;
      for (NodeSet S1 : subsets_of(S, r)) {
        if (!S1.contains(S.members().front())) ++unknown;
      }
      Rat bits = Rat(unknown * per_symbol);
      if (edge) bits = bits * Rat(l, l - 1);
      total += bits;
    }
  }
  // Normalize by (#files groups) x (#function groups).
  return total / Rat(binom(K, r) * binom(K, s), 1);
}

}  // namespace

TEST_CASE("binomials") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(5, 6) == 0);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(30, 15) == 155117520);
}

TEST_CASE("load values") {
  CHECK(l1_load(2, 1, 3) == Rat(1, 6));
  CHECK(l2_load(2, 1, 3) == Rat(1, 9));
  CHECK(l1_load(2, 2, 4) == Rat(4, 9));
  CHECK(l2_load(2, 2, 4) == Rat(11, 36));
  CHECK(l2_load(0, 2, 4) == Rat(1));
  CHECK(l2_load(4, 2, 4) == Rat(0));
  CHECK(l1_load(4, 3, 4) == Rat(0));
  CHECK_THROWS_AS(l1_load(0, 1, 3), InvalidInput);
  CHECK_THROWS_AS(l2_load(5, 1, 4), InvalidInput);
}

TEST_CASE("s = 1 closed forms agree with the general sums") {
  for (int K = 1; K <= 12; ++K) {
    for (int r = 1; r <= K; ++r) {
      CHECK(l1_load(r, 1, K) == l1_s1(r, K));
      CHECK(l1_s1(r, K) == Rat(1, r) * (Rat(1) - Rat(r, K)));
    }
    for (int r = 0; r <= K; ++r) {
      CHECK(l2_load(r, 1, K) == l2_s1(r, K));
      CHECK(l2_s1(r, K) == Rat(1, r + 1) * (Rat(1) - Rat(r, K)));
    }
  }
}

TEST_CASE("loads match the set-enumeration count for K <= 7") {
  for (int K = 1; K <= 7; ++K) {
    for (int s = 1; s <= K; ++s) {
      for (int r = 1; r <= K; ++r) {
        CAPTURE(K);
        CAPTURE(s);
        CAPTURE(r);
        CHECK(l1_load(r, s, K) == counted_load(r, s, K, true));
        CHECK(l2_load(r, s, K) == counted_load(r, s, K, false));
      }
    }
  }
}

TEST_CASE("loads are nonincreasing in r") {
  for (int K = 2; K <= 10; ++K) {
    for (int s = 1; s <= K; ++s) {
      for (int r = 1; r < K; ++r) {
        CHECK(l1_load(r + 1, s, K) <= l1_load(r, s, K));
        CHECK(l2_load(r + 1, s, K) <= l2_load(r, s, K));
      }
      CHECK(l2_load(1, s, K) <= l2_load(0, s, K));
    }
  }
}

TEST_CASE("curves are convex so the envelope touches every integer point") {
  for (int K = 2; K <= 16; ++K) {
    for (int s = 1; s <= K; ++s) {
      for (const LoadCurve& c : {LoadCurve::subsystem1(s, K), LoadCurve::subsystem2(s, K)}) {
        const auto& p = c.points();
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
          CHECK(p[i - 1].value + p[i + 1].value - Rat(2) * p[i].value >= Rat(0));
        }
        const EnvelopeFunction env = envelope(c);
        for (const CurvePoint& pt : p) CHECK(env(Rat(pt.j)) == pt.value);
      }
    }
  }
}

TEST_CASE("envelope interpolates linearly and rejects points outside its range") {
  const EnvelopeFunction env = envelope(LoadCurve::subsystem1(1, 3));
  CHECK(env.min_x() == Rat(1));
  CHECK(env.max_x() == Rat(3));
  // Halfway between L1(1) = 2/3 and L1(2) = 1/6.
  CHECK(env(Rat(3, 2)) == Rat(5, 12));
  CHECK_THROWS_AS(env(Rat(1, 2)), InvalidInput);
  CHECK_THROWS_AS(env(Rat(4)), InvalidInput);
}

TEST_CASE("envelope of a non-convex curve drops the interior point") {
  const LoadCurve c({{0, Rat(1)}, {1, Rat(1)}, {2, Rat(0)}});
  const EnvelopeFunction env = envelope(c);
  CHECK(env.breakpoints().size() == 2);
  CHECK(env(Rat(1)) == Rat(1, 2));
}

TEST_CASE("lemma1 bound on hand tables") {
  AcdTable all_master;
  all_master.K = 3;
  all_master.counts[{3, 1}] = 6;
  all_master.zero_demand = 12;
  CHECK(all_master.total() == 18);
  CHECK(lemma1_bound(all_master, 3, 6, 3) == Rat(1, 9));

  AcdTable half_master;
  half_master.K = 3;
  half_master.counts[{2, 1}] = 6;
  half_master.counts[{3, 1}] = 6;
  CHECK(lemma1_bound(half_master, 3, 12, 3) == Rat(5, 36));

  AcdTable empty;
  empty.K = 4;
  CHECK(lemma1_bound(empty, 6, 6, 4) == Rat(0));

  AcdTable bad = all_master;
  bad.counts[{1, 4}] = 1;
  CHECK_THROWS_AS(lemma1_bound(bad, 3, 6, 3), InvalidInput);
  bad = all_master;
  bad.counts[{2, 1}] = -1;
  CHECK_THROWS_AS(lemma1_bound(bad, 3, 6, 3), InvalidInput);
}
