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
#include <map>
#include <utility>
#include <vector>

#include "mcdc/rational.hpp"

namespace mcdc {

/// C(n, k); zero when k < 0 or k > n.
BigInt binom(long long n, long long k);

// Normalized shuffle loads of the two subsystems for computation load r and
// reduce replication s over K edge nodes. l1_load is the edge-node coded
// multicast; l2_load is the master's coded multicast and includes the
// endpoints r2 = 0 (master unicasts everything, load 1) and r2 = K (load 0).
Rat l1_load(int r1, int s, int K);
Rat l2_load(int r2, int s, int K);

// s = 1 closed forms.
Rat l1_s1(int r1, int K);
Rat l2_s1(int r2, int K);
/// 1/r (1 - r/K) for rational r > 0.
Rat l1_s1(const Rat& r, int K);

/// Uncoded shuffle with s = 1: every missing value is unicast, 1 - r/K.
Rat uncoded_load(const Rat& r, int K);

struct CurvePoint {
  int j = 0;
  Rat value;
};

/// Load values at integer computation loads, sorted by j, one value per j.
class LoadCurve {
 public:
  explicit LoadCurve(std::vector<CurvePoint> points);

  /// {(r1, l1_load(r1, s, K)) : r1 = 1..K}
  static LoadCurve subsystem1(int s, int K);
  /// {(r2, l2_load(r2, s, K)) : r2 = 0..K}
  static LoadCurve subsystem2(int s, int K);

  const std::vector<CurvePoint>& points() const { return points_; }
  const Rat& value_at(int j) const;
  int min_j() const { return points_.front().j; }
  int max_j() const { return points_.back().j; }

 private:
  std::vector<CurvePoint> points_;
};

struct Breakpoint {
  Rat x;
  Rat y;
};

/// Piecewise-linear convex function given by its breakpoints.
class EnvelopeFunction {
 public:
  explicit EnvelopeFunction(std::vector<Breakpoint> breakpoints);

  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  const Rat& min_x() const { return breakpoints_.front().x; }
  const Rat& max_x() const { return breakpoints_.back().x; }
  bool covers(const Rat& x) const { return min_x() <= x && x <= max_x(); }

  /// Linear interpolation between neighbouring breakpoints. Throws
  /// InvalidInput outside [min_x, max_x].
  Rat operator()(const Rat& x) const;

 private:
  std::vector<Breakpoint> breakpoints_;
};

/// Lower convex envelope (monotone chain over the sorted points). Points on a
/// chord between two hull vertices are dropped from the breakpoints.
EnvelopeFunction envelope(const LoadCurve& curve);

/// a_{c,d}: number of intermediate values mapped at c of the K+1 nodes (the
/// master counts as a node) and required by d nodes that do not map them.
struct AcdTable {
  int K = 0;
  std::map<std::pair<int, int>, std::int64_t> counts;
  /// Values nobody is missing (d = 0); kept so the table sums to QN.
  std::int64_t zero_demand = 0;

  std::int64_t at(int c, int d) const;
  std::int64_t total() const;
};

/// (1/QN) sum_{c,d} a_{c,d} d / (c + d - 1): a lower bound on the
/// normalized shuffle load of any scheme using the tabulated map design.
Rat lemma1_bound(const AcdTable& acd, long long Q, long long N, int K);

}  // namespace mcdc
