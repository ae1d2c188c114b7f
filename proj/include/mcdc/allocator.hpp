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

#include <optional>
#include <string>
#include <vector>

#include "mcdc/rational.hpp"

namespace mcdc {

/// Split of the job into subsystem 1 (fraction alpha of the files, shuffled
/// by edge nodes) and subsystem 2 (the rest, cached and multicast by the
/// master), with the per-subsystem computation loads.
struct Allocation {
  Rat alpha;
  int r1 = 0;
  int r2 = 0;
  Rat m1_prime;   // files per node assigned to subsystem 1: r1 alpha N / K
  Rat objective;  // optimized communication time, when produced by an optimizer
};

enum class Mode { kSequential, kParallel };

const char* to_string(Mode m);

/// System parameters shared by both optimizers. Q does not enter the
/// objective; it is carried for reporting.
struct SystemParams {
  int K = 0;
  int s = 1;
  long long N = 0;
  long long Q = 0;
  long long M0 = 0;
};

/// Checks every structural Allocation invariant for load r; returns the
/// first violation, if any.
std::optional<std::string> check_allocation(const SystemParams& p, const Rat& r,
                                            const Allocation& a);

/// Minimizes alpha L1*(r1) + (1 - alpha) L2*(r2) over integer r1, r2 in 0..K
/// and alpha in [1 - M0/N, 1] with alpha r1 + (1 - alpha) r2 = r. Throws
/// Infeasible when no combination satisfies the constraints.
Allocation optimize_sequential(const SystemParams& p, const Rat& r);

/// Same constraint set, objective max{alpha L1*(r1), (1 - alpha) L2*(r2)}.
Allocation optimize_parallel(const SystemParams& p, const Rat& r);

Allocation optimize(const SystemParams& p, const Rat& r, Mode mode);

/// Continuous-relaxation optimum for s = 1 in the sequential mode.
struct ApproxAllocation {
  Rat alpha_star;
  double m1_prime_star = 0;
  double r1_star = 0;
  double r2_star = 0;
};

ApproxAllocation approx_allocation_seq_s1(int K, long long N, long long M0, long long M1);

/// Relaxed s = 1 sequential time as a function of (alpha, M1'):
///   N a^2 / (K M1') + (1 + 1/K) N (1 - a)^2 / (K (M1 - M1') + (1 - a) N) - 1/K.
/// A term whose weight vanishes (a = 0 or a = 1) contributes zero.
double relaxed_seq_objective_s1(int K, double N, double M1, double alpha, double m1_prime);

/// Minimum of relaxed_seq_objective_s1 over a grid x grid lattice spanning
/// alpha in [1 - M0/N, 1] and M1' in (0, M1].
double relaxed_grid_minimum_s1(int K, long long N, long long M0, long long M1, int grid);

/// Grid search repeated `levels` times, each level a grid x grid mesh over a
/// window of four cells around the previous incumbent.
double relaxed_zoom_minimum_s1(int K, long long N, long long M0, long long M1, int grid,
                               int levels);

struct ParallelBounds {
  Rat generic;                  // max{1/2, 1 - M0/N} L1(r)
  std::optional<Rat> large_m0;  // L1 L2 / (L1 + L2), when M0 >= (r+1)/(2r+1) N
};

ParallelBounds parallel_upper_bounds(int K, const Rat& r, long long M0, long long N);

struct TradeoffPoint {
  Rat r;
  Rat l_uncoded;
  std::optional<Rat> l_cdc;  // absent for r < 1, where edge-only CDC is undefined
  Rat l_seq;
  Rat l_par;
  Allocation alloc_seq;
  Allocation alloc_par;
};

struct SweepEntry {
  Rat r;
  std::optional<TradeoffPoint> point;
  std::string note;  // set when the point is infeasible
};

/// One entry per grid value, in grid order. Points are evaluated concurrently.
std::vector<SweepEntry> sweep(const SystemParams& p, const std::vector<Rat>& r_grid);

}  // namespace mcdc
