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

#include "mcdc/allocator.hpp"

#include <cmath>
#include <limits>

#include "mcdc/error.hpp"
#include "mcdc/loadmodel.hpp"
#include "mcdc/parallel.hpp"

namespace mcdc {

const char* to_string(Mode m) {
  return m == Mode::kSequential ? "seq" : "par";
}

namespace {

struct Envelopes {
  EnvelopeFunction sub1;
  EnvelopeFunction sub2;
};

Envelopes make_envelopes(int s, int K) {
  return {envelope(LoadCurve::subsystem1(s, K)), envelope(LoadCurve::subsystem2(s, K))};
}

void check_params(const SystemParams& p, const Rat& r) {
  if (p.K < 1) throw InvalidInput("K must be at least 1");
  if (p.s < 1 || p.s > p.K) throw InvalidInput("s must lie in 1..K");
  if (p.N < 1) throw InvalidInput("N must be positive");
  if (p.M0 < 0 || p.M0 > p.N) throw InvalidInput("M0 must lie in 0..N");
  if (r.sign() <= 0 || r > Rat(p.K)) {
    throw InvalidInput("computation load r=" + r.str() + " outside (0, K]");
  }
}

Rat min_alpha(const SystemParams& p) { return Rat(1) - Rat(p.M0, p.N); }

// Objective terms; a term with zero weight is never evaluated, so r1 = 0 is
// only ever seen together with alpha = 0.
struct Terms {
  Rat sub1;
  Rat sub2;
};

Terms terms(const Envelopes& env, const Rat& alpha, int r1, int r2) {
  Terms t;
  if (alpha.sign() > 0) t.sub1 = alpha * env.sub1(Rat(r1));
  if (alpha < Rat(1)) t.sub2 = (Rat(1) - alpha) * env.sub2(Rat(r2));
  return t;
}

Rat combine(const Terms& t, Mode mode) {
  return mode == Mode::kSequential ? t.sub1 + t.sub2 : rmax(t.sub1, t.sub2);
}

// Lower objective wins; ties prefer larger alpha, then smaller r1, then
// smaller r2.
bool better(const Allocation& a, const Allocation& b) {
  if (a.objective != b.objective) return a.objective < b.objective;
  if (a.alpha != b.alpha) return a.alpha > b.alpha;
  if (a.r1 != b.r1) return a.r1 < b.r1;
  return a.r2 < b.r2;
}

Allocation run_optimizer(const SystemParams& p, const Rat& r, Mode mode,
                         const Envelopes& env) {
  check_params(p, r);
  const Rat lo = min_alpha(p);
  const Rat one(1);
  std::optional<Allocation> best;

  auto consider = [&](Rat alpha, int r1, int r2) {
    if (alpha < lo || alpha > one) return;
    if (alpha == one) r2 = 0;
    if (alpha.is_zero()) r1 = 0;
    if (alpha.sign() > 0 && r1 < 1) return;
    Allocation a;
    a.alpha = alpha;
    a.r1 = r1;
    a.r2 = r2;
    a.m1_prime = Rat(r1) * alpha * Rat(p.N) / Rat(p.K);
    a.objective = combine(terms(env, alpha, r1, r2), mode);
    if (!best || better(a, *best)) best = std::move(a);
  };

  for (int r1 = 0; r1 <= p.K; ++r1) {
    for (int r2 = 0; r2 <= p.K; ++r2) {
      if (r1 != r2) {
        consider((r - Rat(r2)) / Rat(r1 - r2), r1, r2);
        continue;
      }
      if (Rat(r1) != r) continue;
      // r1 = r2 = r: alpha is free. Both objectives are piecewise linear in
      // alpha, so the optimum sits at an endpoint or, in parallel mode, where
      // the two terms balance.
      consider(lo, r1, r2);
      consider(one, r1, r2);
      if (mode == Mode::kParallel && r1 >= 1) {
        const Rat e1 = env.sub1(Rat(r1));
        const Rat e2 = env.sub2(Rat(r2));
        if ((e1 + e2).sign() > 0) {
          consider(rmin(rmax(e2 / (e1 + e2), lo), one), r1, r2);
        }
      }
    }
  }
  if (!best) {
    throw Infeasible("no feasible (alpha, r1, r2) for r=" + r.str() +
                     " with alpha >= 1 - M0/N = " + lo.str());
  }
  return *best;
}

}  // namespace

std::optional<std::string> check_allocation(const SystemParams& p, const Rat& r,
                                            const Allocation& a) {
  const Rat one(1);
  if (a.alpha < min_alpha(p) || a.alpha > one) return "alpha outside [1 - M0/N, 1]";
  if (a.r1 < 0 || a.r1 > p.K || a.r2 < 0 || a.r2 > p.K) return "r1 or r2 outside 0..K";
  if (a.alpha * Rat(a.r1) + (one - a.alpha) * Rat(a.r2) != r) {
    return "alpha r1 + (1 - alpha) r2 != r";
  }
  if (a.alpha.sign() > 0 && a.r1 < 1) return "alpha > 0 with r1 = 0";
  if (a.alpha == one && a.r2 != 0) return "alpha = 1 must report r2 = 0";
  if (a.alpha.is_zero() && a.r1 != 0) return "alpha = 0 must report r1 = 0";
  if (a.m1_prime != Rat(a.r1) * a.alpha * Rat(p.N) / Rat(p.K)) {
    return "m1_prime != r1 alpha N / K";
  }
  return std::nullopt;
}

Allocation optimize_sequential(const SystemParams& p, const Rat& r) {
  check_params(p, r);
  return run_optimizer(p, r, Mode::kSequential, make_envelopes(p.s, p.K));
}

Allocation optimize_parallel(const SystemParams& p, const Rat& r) {
  check_params(p, r);
  return run_optimizer(p, r, Mode::kParallel, make_envelopes(p.s, p.K));
}

Allocation optimize(const SystemParams& p, const Rat& r, Mode mode) {
  return mode == Mode::kSequential ? optimize_sequential(p, r) : optimize_parallel(p, r);
}

ApproxAllocation approx_allocation_seq_s1(int K, long long N, long long M0, long long M1) {
  if (K < 1 || N < 1 || M0 < 0 || M0 > N || M1 < 0 || M1 > N) {
    throw InvalidInput("approx allocation: parameters out of range");
  }
  if (static_cast<long long>(K) * M1 + M0 < N) {
    throw Infeasible("K M1 + M0 < N: the system cannot map all files");
  }
  ApproxAllocation out;
  out.alpha_star = Rat(1) - Rat(M0, N);
  const double a = out.alpha_star.to_double();
  const double k = K;
  const double n = static_cast<double>(N);
  const double c = std::sqrt(1.0 + 1.0 / k);
  const double r = k * static_cast<double>(M1) / n;
  const double denom = c - (c - 1.0) * a;
  out.m1_prime_star = (k * static_cast<double>(M1) + (1.0 - a) * n) * a /
                      (std::sqrt(k) * (std::sqrt(k) * a + std::sqrt(k + 1.0) * (1.0 - a)));
  out.r1_star = a > 0 ? (r + 1.0 - a) / denom : 0.0;
  out.r2_star = a < 1 ? (c * r - a) / denom : 0.0;
  return out;
}

double relaxed_seq_objective_s1(int K, double N, double M1, double alpha, double m1_prime) {
  const double k = K;
  double value = -1.0 / k;
  if (alpha > 0) {
    if (m1_prime <= 0) return std::numeric_limits<double>::infinity();
    value += N * alpha * alpha / (k * m1_prime);
  }
  if (alpha < 1) {
    const double rest = k * (M1 - m1_prime) + (1.0 - alpha) * N;
    if (rest <= 0) return std::numeric_limits<double>::infinity();
    value += (1.0 + 1.0 / k) * N * (1.0 - alpha) * (1.0 - alpha) / rest;
  }
  return value;
}

double relaxed_grid_minimum_s1(int K, long long N, long long M0, long long M1, int grid) {
  const double lo = 1.0 - static_cast<double>(M0) / static_cast<double>(N);
  const double n = static_cast<double>(N);
  const double m1 = static_cast<double>(M1);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double a = grid == 1 ? lo : lo + (1.0 - lo) * i / (grid - 1);
    for (int j = 1; j <= grid; ++j) {
      best = std::min(best, relaxed_seq_objective_s1(K, n, m1, a, m1 * j / grid));
    }
  }
  return best;
}

double relaxed_zoom_minimum_s1(int K, long long N, long long M0, long long M1, int grid,
                               int levels) {
  const double n = static_cast<double>(N);
  const double m1 = static_cast<double>(M1);
  const double lo = 1.0 - static_cast<double>(M0) / n;
  double a_lo = lo;
  double a_hi = 1.0;
  double m_lo = m1 / grid;
  double m_hi = m1;
  double best = std::numeric_limits<double>::infinity();
  double best_a = lo;
  double best_m = m1;
  for (int level = 0; level < levels; ++level) {
    const double da = grid > 1 ? (a_hi - a_lo) / (grid - 1) : 0.0;
    const double dm = grid > 1 ? (m_hi - m_lo) / (grid - 1) : 0.0;
    for (int i = 0; i < grid; ++i) {
      const double a = a_lo + da * i;
      for (int j = 0; j < grid; ++j) {
        const double m = m_lo + dm * j;
        const double v = relaxed_seq_objective_s1(K, n, m1, a, m);
        if (v < best) {
          best = v;
          best_a = a;
          best_m = m;
        }
      }
    }
    // Next window: two cells either side of the incumbent, clipped to the domain.
    a_lo = std::max(lo, best_a - 2 * da);
    a_hi = std::min(1.0, best_a + 2 * da);
    m_lo = std::max(std::numeric_limits<double>::min(), best_m - 2 * dm);
    m_hi = std::min(m1, best_m + 2 * dm);
  }
  return best;
}

ParallelBounds parallel_upper_bounds(int K, const Rat& r, long long M0, long long N) {
  if (r.sign() <= 0 || r >= Rat(K)) {
    throw InvalidInput("parallel bounds need 0 < r < K");
  }
  if (N < 1 || M0 < 0 || M0 > N) {
    throw InvalidInput("parallel bounds need 0 <= M0 <= N");
  }
  ParallelBounds b;
  const Rat l1 = l1_s1(r, K);
  b.generic = rmax(Rat(1, 2), Rat(1) - Rat(M0, N)) * l1;
  if (Rat(M0) >= (r + 1) / (Rat(2) * r + 1) * Rat(N)) {
    const Rat l2 = (Rat(1) / (r + 1)) * (Rat(1) - r / Rat(K));
    b.large_m0 = l1 * l2 / (l1 + l2);
  }
  return b;
}

std::vector<SweepEntry> sweep(const SystemParams& p, const std::vector<Rat>& r_grid) {
  const Envelopes env = make_envelopes(p.s, p.K);
  std::vector<SweepEntry> out(r_grid.size());
  parallel_for(r_grid.size(), [&](std::size_t i) {
    SweepEntry& e = out[i];
    e.r = r_grid[i];
    try {
      check_params(p, e.r);
      TradeoffPoint pt;
      pt.r = e.r;
      pt.l_uncoded = uncoded_load(e.r, p.K);
      if (env.sub1.covers(e.r)) pt.l_cdc = env.sub1(e.r);
      pt.alloc_seq = run_optimizer(p, e.r, Mode::kSequential, env);
      pt.alloc_par = run_optimizer(p, e.r, Mode::kParallel, env);
      pt.l_seq = pt.alloc_seq.objective;
      pt.l_par = pt.alloc_par.objective;
      e.point = std::move(pt);
    } catch (const InvalidInput& ex) {
      e.note = ex.what();
    }
  });
  return out;
}

}  // namespace mcdc
