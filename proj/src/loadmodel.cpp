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

#include "mcdc/loadmodel.hpp"

#include <algorithm>
#include <string>

#include "mcdc/error.hpp"

namespace mcdc {

BigInt binom(long long n, long long k) {
  if (n < 0) {
    throw InvalidInput("binom: negative n");
  }
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (long long i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

namespace {

void check_s(int s, int K) {
  if (K < 1 || s < 1 || s > K) {
    throw InvalidInput("need 1 <= s <= K, got s=" + std::to_string(s) +
                       " K=" + std::to_string(K));
  }
}

// Sum over the multicast group sizes l of
//   C(K,l) C(l-1,r) C(r,l-s) / (C(K,r) C(K,s)) * weight(l).
template <typename Weight>
Rat group_sum(int r, int s, int K, Weight weight) {
  const BigInt denom = binom(K, r) * binom(K, s);
  Rat total;
  const int lo = std::max(r + 1, s);
  const int hi = std::min(r + s, K);
  for (int l = lo; l <= hi; ++l) {
    BigInt term = binom(K, l) * binom(l - 1, r) * binom(r, l - s);
    total += Rat(term, denom) * weight(l);
  }
  return total;
}

}  // namespace

Rat l1_load(int r1, int s, int K) {
  check_s(s, K);
  if (r1 == 0) {
    throw InvalidInput("l1_load: undefined for r1 = 0 (edge nodes map none of subsystem 1)");
  }
  if (r1 < 1 || r1 > K) {
    throw InvalidInput("l1_load: r1 out of range 1..K");
  }
  return group_sum(r1, s, K, [](int l) { return Rat(l, l - 1); });
}

Rat l2_load(int r2, int s, int K) {
  check_s(s, K);
  if (r2 < 0 || r2 > K) {
    throw InvalidInput("l2_load: r2 out of range 0..K");
  }
  if (r2 == 0) return Rat(1);
  if (r2 == K) return Rat(0);
  return group_sum(r2, s, K, [](int) { return Rat(1); });
}

Rat l1_s1(int r1, int K) {
  if (r1 < 1 || r1 > K) {
    throw InvalidInput("l1_s1: r1 out of range 1..K");
  }
  return Rat(1, r1) * (Rat(1) - Rat(r1, K));
}

Rat l1_s1(const Rat& r, int K) {
  if (r.sign() <= 0 || r > Rat(K)) {
    throw InvalidInput("l1_s1: r out of range (0, K]");
  }
  return (Rat(1) / r) * (Rat(1) - r / Rat(K));
}

Rat l2_s1(int r2, int K) {
  if (r2 < 0 || r2 > K) {
    throw InvalidInput("l2_s1: r2 out of range 0..K");
  }
  return Rat(1, r2 + 1) * (Rat(1) - Rat(r2, K));
}

Rat uncoded_load(const Rat& r, int K) {
  if (r.sign() < 0 || r > Rat(K)) {
    throw InvalidInput("uncoded_load: r out of range [0, K]");
  }
  return Rat(1) - r / Rat(K);
}

LoadCurve::LoadCurve(std::vector<CurvePoint> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw InvalidInput("load curve needs at least one point");
  }
  std::sort(points_.begin(), points_.end(),
            [](const CurvePoint& a, const CurvePoint& b) { return a.j < b.j; });
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0 && points_[i].j == points_[i - 1].j) {
      throw InvalidInput("load curve has two values at j=" + std::to_string(points_[i].j));
    }
    if (points_[i].value.sign() < 0) {
      throw InvalidInput("load curve has a negative value");
    }
  }
}

LoadCurve LoadCurve::subsystem1(int s, int K) {
  std::vector<CurvePoint> pts;
  for (int j = 1; j <= K; ++j) pts.push_back({j, l1_load(j, s, K)});
  return LoadCurve(std::move(pts));
}

LoadCurve LoadCurve::subsystem2(int s, int K) {
  std::vector<CurvePoint> pts;
  for (int j = 0; j <= K; ++j) pts.push_back({j, l2_load(j, s, K)});
  return LoadCurve(std::move(pts));
}

const Rat& LoadCurve::value_at(int j) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), j,
                             [](const CurvePoint& p, int v) { return p.j < v; });
  if (it == points_.end() || it->j != j) {
    throw InvalidInput("load curve has no point at j=" + std::to_string(j));
  }
  return it->value;
}

EnvelopeFunction::EnvelopeFunction(std::vector<Breakpoint> breakpoints)
    : breakpoints_(std::move(breakpoints)) {
  if (breakpoints_.empty()) {
    throw InvalidInput("envelope needs at least one breakpoint");
  }
}

Rat EnvelopeFunction::operator()(const Rat& x) const {
  if (!covers(x)) {
    throw InvalidInput("envelope evaluated outside [" + min_x().str() + ", " +
                       max_x().str() + "] at " + x.str());
  }
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x,
                             [](const Breakpoint& b, const Rat& v) { return b.x < v; });
  if (it->x == x) return it->y;
  const Breakpoint& right = *it;
  const Breakpoint& left = *(it - 1);
  return left.y + (right.y - left.y) * (x - left.x) / (right.x - left.x);
}

EnvelopeFunction envelope(const LoadCurve& curve) {
  std::vector<Breakpoint> hull;
  for (const CurvePoint& p : curve.points()) {
    Breakpoint b{Rat(p.j), p.value};
    // Pop the last vertex while it lies on or above the chord from its
    // predecessor to the new point.
    while (hull.size() >= 2) {
      const Breakpoint& o = hull[hull.size() - 2];
      const Breakpoint& a = hull.back();
      Rat cross = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
      if (cross.sign() <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(std::move(b));
  }
  return EnvelopeFunction(std::move(hull));
}

std::int64_t AcdTable::at(int c, int d) const {
  auto it = counts.find({c, d});
  return it == counts.end() ? 0 : it->second;
}

std::int64_t AcdTable::total() const {
  std::int64_t t = zero_demand;
  for (const auto& [key, n] : counts) t += n;
  return t;
}

Rat lemma1_bound(const AcdTable& acd, long long Q, long long N, int K) {
  if (Q < 1 || N < 1) {
    throw InvalidInput("lemma1_bound: Q and N must be positive");
  }
  Rat sum;
  for (const auto& [key, n] : acd.counts) {
    const auto [c, d] = key;
    if (n < 0) {
      throw InvalidInput("lemma1_bound: negative count at (c=" + std::to_string(c) +
                         ", d=" + std::to_string(d) + ")");
    }
    if (c < 1 || c > K + 1 || d < 1 || d > K - c + 1) {
      throw InvalidInput("lemma1_bound: cell (c=" + std::to_string(c) + ", d=" +
                         std::to_string(d) + ") outside the table for K=" +
                         std::to_string(K));
    }
    sum += Rat(n) * Rat(d, c + d - 1);
  }
  return sum / Rat(BigInt(Q) * N, 1);
}

}  // namespace mcdc
