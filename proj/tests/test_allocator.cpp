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

#include <cmath>

#include "doctest.h"
#include "mcdc/allocator.hpp"
#include "mcdc/error.hpp"
#include "mcdc/loadmodel.hpp"

using namespace mcdc;

namespace {

Rat objective_at(const SystemParams& p, const Rat& alpha, int r1, int r2, Mode mode) {
  const Rat one(1);
  const Rat a = alpha.sign() > 0 ? alpha * l1_load(r1, p.s, p.K) : Rat(0);
  const Rat b = alpha < one ? (one - alpha) * l2_load(r2, p.s, p.K) : Rat(0);
  return mode == Mode::kSequential ? a + b : rmax(a, b);
}

// Exhaustive search over alpha with denominator <= 24 and integer loads.
Rat brute_force(const SystemParams& p, const Rat& r, Mode mode) {
  const Rat lo = Rat(1) - Rat(p.M0, p.N);
  std::optional<Rat> best;
  for (long long d = 1; d <= 24; ++d) {
    for (long long n = 0; n <= d; ++n) {
      const Rat alpha(n, d);
      if (alpha < lo) continue;
      for (int r1 = alpha.sign() > 0 ? 1 : 0; r1 <= (alpha.sign() > 0 ? p.K : 0); ++r1) {
        for (int r2 = 0; r2 <= p.K; ++r2) {
          if (alpha * Rat(r1) + (Rat(1) - alpha) * Rat(r2) != r) continue;
          const Rat v = objective_at(p, alpha, r1, r2, mode);
          if (!best || v < *best) best = v;
        }
      }
    }
  }
  REQUIRE(best.has_value());
  return *best;
}

}  // namespace

TEST_CASE("K = 3, M0 = N: all files at the master") {
  const SystemParams p{3, 1, 6, 3, 6};
  const Allocation a = optimize_sequential(p, Rat(2));
  CHECK(a.alpha == Rat(0));
  CHECK(a.r2 == 2);
  CHECK(a.r1 == 0);
  CHECK(a.objective == Rat(1, 9));
  CHECK_FALSE(check_allocation(p, Rat(2), a).has_value());
}

TEST_CASE("K = 3, M0 = N/2: half the files at the master") {
  const SystemParams p{3, 1, 12, 3, 6};
  const Allocation seq = optimize_sequential(p, Rat(2));
  CHECK(seq.objective == Rat(5, 36));
  CHECK(seq.alpha == Rat(1, 2));
  CHECK(seq.r1 == 2);
  CHECK(seq.r2 == 2);
  CHECK(seq.m1_prime == Rat(4));
  CHECK(optimize_parallel(p, Rat(2)).objective == Rat(1, 12));
}

TEST_CASE("without a master the optimum is edge-only CDC") {
  for (int K : {3, 5, 10}) {
    for (int r = 1; r <= K; ++r) {
      const SystemParams p{K, 1, 2520, K, 0};
      const Allocation a = optimize(p, Rat(r), Mode::kSequential);
      CHECK(a.alpha == Rat(1));
      CHECK(a.r2 == 0);
      CHECK(a.objective == l1_load(r, 1, K));
    }
  }
}

TEST_CASE("K = 10, M0 = N, r = 2") {
  const SystemParams p{10, 1, 2520, 10, 2520};
  CHECK(optimize_sequential(p, Rat(2)).objective == Rat(4, 15));
  CHECK(optimize_parallel(p, Rat(2)).objective <= Rat(1, 5));
}

TEST_CASE("optimizer matches an exhaustive rational search") {
  for (int K : {2, 3, 4, 5}) {
    for (int s = 1; s <= K; ++s) {
      for (long long M0 : {0LL, 30LL, 60LL, 120LL}) {
        const SystemParams p{K, s, 120, 120, M0};
        for (const Rat& r : {Rat(1), Rat(3, 2), Rat(2), Rat(K)}) {
          if (r > Rat(K)) continue;
          for (Mode mode : {Mode::kSequential, Mode::kParallel}) {
            CAPTURE(K);
            CAPTURE(s);
            CAPTURE(M0);
            CAPTURE(r.str());
            if (M0 == 0 && !r.is_integer()) {
              CHECK_THROWS_AS(optimize(p, r, mode), Infeasible);
              continue;
            }
            const Allocation a = optimize(p, r, mode);
            CHECK_FALSE(check_allocation(p, r, a).has_value());
            CHECK(a.objective == objective_at(p, a.alpha, a.r1, a.r2, mode));
            CHECK(a.objective <= brute_force(p, r, mode));
          }
        }
      }
    }
  }
}

TEST_CASE("parallel never exceeds sequential; more master storage never hurts") {
  for (int K : {4, 6}) {
    for (int r = 1; r < K; ++r) {
      Rat previous(1000);
      for (long long M0 : {0LL, 60LL, 120LL}) {
        const SystemParams p{K, 1, 120, 120, M0};
        const Rat seq = optimize_sequential(p, Rat(r)).objective;
        CHECK(optimize_parallel(p, Rat(r)).objective <= seq);
        CHECK(seq <= previous);
        previous = seq;
      }
    }
  }
}

TEST_CASE("ties prefer larger alpha") {
  // r = K: everything is local, every feasible split costs 0.
  const SystemParams p{3, 1, 6, 3, 6};
  const Allocation a = optimize_sequential(p, Rat(3));
  CHECK(a.objective == Rat(0));
  CHECK(a.alpha == Rat(1));
  CHECK(a.r1 == 3);
}

TEST_CASE("infeasible and invalid parameters") {
  const SystemParams p{3, 1, 6, 3, 0};
  CHECK_THROWS_AS(optimize_sequential(p, Rat(0)), InvalidInput);
  CHECK_THROWS_AS(optimize_sequential(p, Rat(4)), InvalidInput);
  // Fractional r without any master storage has no integer split with alpha = 1.
  CHECK_THROWS_AS(optimize_sequential(p, Rat(3, 2)), Infeasible);
  CHECK_THROWS_AS(optimize_sequential({3, 4, 6, 3, 0}, Rat(1)), InvalidInput);
  CHECK_THROWS_AS(optimize_sequential({3, 1, 6, 3, 7}, Rat(1)), InvalidInput);
}

TEST_CASE("check_allocation names the broken constraint") {
  const SystemParams p{3, 1, 12, 3, 6};
  Allocation a;
  a.alpha = Rat(1, 4);
  a.r1 = 2;
  a.r2 = 2;
  a.m1_prime = Rat(2);
  CHECK(check_allocation(p, Rat(2), a).value().find("alpha") != std::string::npos);
  a.alpha = Rat(1, 2);
  a.r2 = 1;
  CHECK(check_allocation(p, Rat(2), a).value().find("!= r") != std::string::npos);
}

TEST_CASE("parallel upper bounds") {
  const ParallelBounds b = parallel_upper_bounds(10, Rat(2), 2520, 2520);
  CHECK(b.generic == Rat(1, 2) * Rat(2, 5));
  REQUIRE(b.large_m0.has_value());
  CHECK(*b.large_m0 == Rat(4, 25));
  CHECK_FALSE(parallel_upper_bounds(10, Rat(2), 0, 2520).large_m0.has_value());
  CHECK_THROWS_AS(parallel_upper_bounds(10, Rat(10), 0, 2520), InvalidInput);
}

TEST_CASE("closed-form relaxed allocation") {
  const ApproxAllocation ap = approx_allocation_seq_s1(3, 12, 6, 8);
  CHECK(ap.alpha_star == Rat(1, 2));
  const double c = std::sqrt(4.0 / 3.0);
  const double d = c - (c - 1) * 0.5;
  CHECK(ap.r1_star == doctest::Approx((2 + 0.5) / d));
  CHECK(ap.r2_star == doctest::Approx((c * 2 - 0.5) / d));
  // Stationary point of the relaxed objective.
  const double f0 = relaxed_seq_objective_s1(3, 12, 8, 0.5, ap.m1_prime_star);
  CHECK(f0 <= relaxed_seq_objective_s1(3, 12, 8, 0.5, ap.m1_prime_star * 1.01));
  CHECK(f0 <= relaxed_seq_objective_s1(3, 12, 8, 0.5, ap.m1_prime_star * 0.99));
  CHECK(relaxed_grid_minimum_s1(3, 12, 6, 8, 200) >= f0 - 1e-12);
  CHECK(relaxed_zoom_minimum_s1(3, 12, 6, 8, 100, 3) == doctest::Approx(f0).epsilon(1e-9));
  CHECK_THROWS_AS(approx_allocation_seq_s1(3, 12, 0, 3), Infeasible);
}

TEST_CASE("sweep keeps grid order and notes infeasible points") {
  const SystemParams p{4, 1, 120, 120, 0};
  const auto rows = sweep(p, {Rat(3), Rat(1), Rat(3, 2), Rat(5)});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].r == Rat(3));
  CHECK(rows[1].r == Rat(1));
  REQUIRE(rows[0].point.has_value());
  CHECK(rows[0].point->l_cdc == l1_load(3, 1, 4));
  CHECK(rows[0].point->l_seq == *rows[0].point->l_cdc);
  CHECK(rows[0].point->l_uncoded == Rat(1, 4));
  CHECK_FALSE(rows[2].point.has_value());
  CHECK_FALSE(rows[2].note.empty());
  CHECK_FALSE(rows[3].point.has_value());
}
