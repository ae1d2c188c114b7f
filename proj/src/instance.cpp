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

#include "mcdc/instance.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mcdc/error.hpp"
#include "mcdc/loadmodel.hpp"

namespace mcdc {
namespace {

long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

long long round_up(long long value, long long unit) {
  return value <= 0 ? unit : (value + unit - 1) / unit * unit;
}

// Smallest positive N for which alpha N, alpha N / C(K,r1) and
// (1 - alpha) N / C(K,r2) are all integers.
long long n_unit(int K, int r1, int r2, const Rat& alpha) {
  const long long b = to_ll(alpha.den());
  const long long a = to_ll(alpha.num());
  long long m = 1;
  if (a > 0) {
    const long long c1 = to_ll(binom(K, r1));
    m = std::lcm(m, c1 / std::gcd(a, c1));
  }
  if (b - a > 0) {
    const long long c2 = to_ll(binom(K, r2));
    m = std::lcm(m, c2 / std::gcd(b - a, c2));
  }
  return b * m;
}

Allocation normalized(const Allocation& alloc) {
  Allocation a = alloc;
  if (a.alpha == Rat(1)) a.r2 = 0;
  if (a.alpha.is_zero()) a.r1 = 0;
  return a;
}

bool needs_segments(const Allocation& a, int K) {
  return a.alpha.sign() > 0 && a.r1 >= 1 && a.r1 < K;
}

}  // namespace

long long max_coded_columns(int K, int r1, int r2, const Rat& alpha) {
  long long worst = 0;
  if (alpha < Rat(1)) {
    for (int l = r2 + 1; l <= K; ++l) worst = std::max(worst, to_ll(binom(l, r2)));
  }
  if (alpha.sign() > 0 && r1 >= 1) {
    for (int l = r1 + 1; l <= K; ++l) worst = std::max(worst, to_ll(binom(l - 1, r1 - 1)));
  }
  return worst;
}

std::vector<std::string> diagnose(const ProblemInstance& inst, const Allocation& raw) {
  std::vector<std::string> issues;
  auto fail = [&](const std::string& msg) { issues.push_back(msg); };
  const int K = inst.K;
  if (K < 1 || K > 31) fail("K must lie in 1..31, got " + std::to_string(K));
  if (inst.N < K) fail("need N >= K, got N=" + std::to_string(inst.N));
  if (inst.s < 1 || inst.s > K) fail("s must lie in 1..K, got " + std::to_string(inst.s));
  if (inst.Q < 1) fail("Q must be positive");
  if (inst.T < 1) fail("T must be positive");
  if (inst.F < 1) fail("F must be positive");
  if (inst.M0 < 0 || inst.M0 > inst.N) fail("M0 must lie in 0..N");
  if (inst.M1 < 0 || inst.M1 > inst.N) fail("M1 must lie in 0..N");
  if (!issues.empty()) return issues;
  if (static_cast<long long>(K) * inst.M1 + inst.M0 < inst.N) {
    fail("K M1 + M0 = " + std::to_string(K * inst.M1 + inst.M0) + " < N = " +
         std::to_string(inst.N) + ": not every file can be mapped");
  }

  const Allocation a = normalized(raw);
  const Rat one(1);
  if (a.alpha.sign() < 0 || a.alpha > one) {
    fail("alpha = " + a.alpha.str() + " outside [0, 1]");
    return issues;
  }
  if (a.r1 < 0 || a.r1 > K || a.r2 < 0 || a.r2 > K) {
    fail("r1 and r2 must lie in 0..K");
    return issues;
  }
  if (a.alpha.sign() > 0 && a.r1 < 1) fail("alpha > 0 requires r1 >= 1");

  const BigInt cks = binom(K, inst.s);
  if (BigInt(inst.Q) % cks != 0) {
    const long long unit = to_ll(cks);
    fail("eta2 = Q / C(K,s) = " + Rat(inst.Q, cks).str() +
         " is not an integer; use Q = " + std::to_string(round_up(inst.Q, unit)));
  }

  const long long unit = n_unit(K, std::max(a.r1, 0), a.r2, a.alpha);
  const std::string n_fix = "; use N = " + std::to_string(round_up(inst.N, unit));
  const Rat n1 = a.alpha * Rat(inst.N);
  if (!n1.is_integer()) {
    fail("alpha N = " + n1.str() + " is not an integer" + n_fix);
  } else {
    const Rat n2 = Rat(inst.N) - n1;
    if (a.alpha.sign() > 0) {
      const Rat eta = n1 / Rat::from_int(binom(K, a.r1));
      if (!eta.is_integer()) {
        fail("eta1' = alpha N / C(K,r1) = " + eta.str() + " is not an integer" + n_fix);
      }
    }
    if (a.alpha < one) {
      const Rat eta = n2 / Rat::from_int(binom(K, a.r2));
      if (!eta.is_integer()) {
        fail("eta1 = (1 - alpha) N / C(K,r2) = " + eta.str() + " is not an integer" + n_fix);
      }
    }
    if (n2 > Rat(inst.M0)) {
      fail("master must cache (1 - alpha) N = " + n2.str() + " files but M0 = " +
           std::to_string(inst.M0));
    }
    const Rat per_node = (Rat(a.r1) * n1 + Rat(a.r2) * n2) / Rat(K);
    if (per_node > Rat(inst.M1)) {
      fail("each node maps M1' + r2 (1 - alpha) N / K = " + per_node.str() +
           " files, exceeding M1 = " + std::to_string(inst.M1));
    }
  }
  if (needs_segments(a, K) && inst.T % a.r1 != 0) {
    fail("T = " + std::to_string(inst.T) + " is not divisible by r1 = " +
         std::to_string(a.r1) + "; use T = " + std::to_string(round_up(inst.T, a.r1)));
  }
  const long long cols = max_coded_columns(K, a.r1, a.r2, a.alpha);
  if (cols > 65535) {
    fail("a multicast group needs " + std::to_string(cols) +
         " distinct coefficients, more than GF(2^16) provides");
  }
  return issues;
}

Allocation validate_and_divisibility(const ProblemInstance& inst, const Allocation& alloc) {
  const std::vector<std::string> issues = diagnose(inst, alloc);
  if (!issues.empty()) {
    std::ostringstream msg;
    msg << "invalid instance/allocation:";
    for (const auto& i : issues) msg << "\n  - " << i;
    throw InvalidInput(msg.str());
  }
  Allocation a = normalized(alloc);
  a.m1_prime = Rat(a.r1) * a.alpha * Rat(inst.N) / Rat(inst.K);
  return a;
}

DerivedSizes derived_sizes(const ProblemInstance& inst, const Allocation& alloc) {
  const Allocation a = normalized(alloc);
  DerivedSizes d;
  d.N1 = to_ll((a.alpha * Rat(inst.N)).num());
  d.N2 = inst.N - d.N1;
  d.eta1_sub1 = d.N1 > 0 ? d.N1 / to_ll(binom(inst.K, a.r1)) : 0;
  d.eta1_sub2 = d.N2 > 0 ? d.N2 / to_ll(binom(inst.K, a.r2)) : 0;
  d.eta2 = inst.Q / to_ll(binom(inst.K, inst.s));
  d.m1_prime = d.N1 > 0 ? a.r1 * d.N1 / inst.K : 0;
  d.m2 = d.N2 > 0 ? a.r2 * d.N2 / inst.K : 0;
  d.reduce_per_node = inst.s * inst.Q / inst.K;
  return d;
}

MinimalSizes synthesize_instance(int K, int s, int r1, int r2, const Rat& alpha) {
  if (K < 1 || s < 1 || s > K) throw InvalidInput("synthesize: need 1 <= s <= K");
  if (alpha.sign() < 0 || alpha > Rat(1)) throw InvalidInput("synthesize: alpha outside [0,1]");
  Allocation a{alpha, r1, r2, {}, {}};
  a = normalized(a);
  if (a.alpha.sign() > 0 && (a.r1 < 1 || a.r1 > K)) {
    throw InvalidInput("synthesize: alpha > 0 needs r1 in 1..K");
  }
  if (a.r2 < 0 || a.r2 > K) throw InvalidInput("synthesize: r2 outside 0..K");
  MinimalSizes m;
  m.N = n_unit(K, a.r1, a.r2, a.alpha);
  m.Q = to_ll(binom(K, s));
  m.T = std::lcm<long long>(a.alpha.sign() > 0 ? a.r1 : 1, 16);
  return m;
}

ProblemInstance minimal_instance(int K, int s, int r1, int r2, const Rat& alpha, long long F,
                                 std::uint64_t seed) {
  const MinimalSizes m = synthesize_instance(K, s, r1, r2, alpha);
  ProblemInstance inst;
  inst.K = K;
  inst.s = s;
  inst.N = m.N;
  inst.Q = m.Q;
  inst.T = m.T;
  inst.F = F;
  inst.seed = seed;
  Allocation a{alpha, r1, r2, {}, {}};
  a = normalized(a);
  const Rat n1 = a.alpha * Rat(m.N);
  const Rat n2 = Rat(m.N) - n1;
  inst.M0 = to_ll(n2.num());
  inst.M1 = to_ll(((Rat(a.r1) * n1 + Rat(a.r2) * n2) / Rat(K)).num());
  // N >= K is part of the instance contract; scale up when the unit is small.
  if (inst.N < K) {
    const long long f = (K + inst.N - 1) / inst.N;
    inst.N *= f;
    inst.M0 *= f;
    inst.M1 *= f;
  }
  return inst;
}

}  // namespace mcdc
