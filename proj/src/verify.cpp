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

#include "mcdc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "mcdc/allocator.hpp"
#include "mcdc/codec.hpp"
#include "mcdc/error.hpp"
#include "mcdc/parallel.hpp"

namespace mcdc {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void record(SuiteResult& r, bool ok, const std::string& what) {
  if (ok) {
    ++r.passed;
  } else {
    ++r.failed;
    if (!r.counterexample) r.counterexample = what;
  }
}

Allocation allocation_of(const SchemeConfig& c) {
  Allocation a;
  a.alpha = c.alpha;
  a.r1 = c.r1;
  a.r2 = c.r2;
  return a;
}

std::string instance_str(const ProblemInstance& i) {
  std::ostringstream os;
  os << "K=" << i.K << " N=" << i.N << " Q=" << i.Q << " s=" << i.s << " M0=" << i.M0
     << " M1=" << i.M1 << " T=" << i.T << " F=" << i.F << " seed=" << i.seed;
  return os.str();
}

Symbol random_symbol(std::mt19937_64& rng, std::size_t words) {
  std::vector<std::uint16_t> w(words);
  for (auto& x : w) x = static_cast<std::uint16_t>(rng());
  return Symbol(std::move(w));
}

std::vector<FieldElem> random_alphas(std::mt19937_64& rng, std::size_t n) {
  std::vector<FieldElem> out;
  while (out.size() < n) {
    const FieldElem a{static_cast<std::uint16_t>(1 + rng() % gf16::kOrder)};
    if (std::none_of(out.begin(), out.end(), [&](FieldElem b) { return b.value == a.value; })) {
      out.push_back(a);
    }
  }
  return out;
}

std::vector<int> random_subset(std::mt19937_64& rng, int n, int k) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(static_cast<std::size_t>(k));
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace

std::string SchemeConfig::str() const {
  return "K=" + std::to_string(K) + " s=" + std::to_string(s) + " alpha=" + alpha.str() +
         " r1=" + std::to_string(r1) + " r2=" + std::to_string(r2);
}

std::vector<SchemeConfig> enumerate_configs(int K) {
  std::vector<SchemeConfig> out;
  const Rat alphas[] = {Rat(0), Rat(1, 3), Rat(1, 2), Rat(1)};
  for (int s = 1; s <= K; ++s) {
    for (const Rat& alpha : alphas) {
      const bool edge = alpha.sign() > 0;
      const bool master = alpha < Rat(1);
      for (int r1 = edge ? 1 : 0; r1 <= (edge ? K : 0); ++r1) {
        for (int r2 = 0; r2 <= (master ? K : 0); ++r2) out.push_back({K, s, r1, r2, alpha});
      }
    }
  }
  return out;
}

std::vector<ConfigOutcome> exhaustive_runs(int k_min, int k_max, std::uint64_t seed) {
  std::vector<ConfigOutcome> out;
  for (int K = k_min; K <= k_max; ++K) {
    for (const SchemeConfig& c : enumerate_configs(K)) out.push_back({c, {}, std::nullopt, {}});
  }
  parallel_for(out.size(), [&](std::size_t i) {
    ConfigOutcome& o = out[i];
    const SchemeConfig& c = o.config;
    try {
      o.inst = minimal_instance(c.K, c.s, c.r1, c.r2, c.alpha, 64, seed + i);
      o.report = run(o.inst, allocation_of(c)).report;
    } catch (const std::exception& e) {
      o.error = e.what();
    }
  });
  return out;
}

SuiteResult suite_formula_match(const std::vector<ConfigOutcome>& runs) {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "formula-match";
  for (const ConfigOutcome& o : runs) {
    std::string what = o.config.str() + " [" + instance_str(o.inst) + "]: ";
    if (!o.report) {
      record(r, false, what + o.error);
      continue;
    }
    const LoadReport& rep = *o.report;
    std::string why;
    for (const std::string& m : rep.formula_mismatches) why += m + "; ";
    if (!rep.reduce_verified) why += "reduce not verified";
    record(r, rep.formula_match && rep.reduce_verified, what + why);
  }
  r.seconds = since(t0);
  return r;
}

SuiteResult suite_lemma1(const std::vector<ConfigOutcome>& runs) {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "lemma1-dominance";
  Rat max_gap;
  std::string max_at;
  std::size_t tight = 0;
  for (const ConfigOutcome& o : runs) {
    if (!o.report) {
      record(r, false, o.config.str() + ": " + o.error);
      continue;
    }
    const LoadReport& rep = *o.report;
    const Rat gap = rep.L - rep.lemma1;
    record(r, gap.sign() >= 0,
           o.config.str() + ": bound " + rep.lemma1.str() + " > measured " + rep.L.str());
    if (gap.is_zero()) ++tight;
    if (gap > max_gap) {
      max_gap = gap;
      max_at = o.config.str();
    }
  }
  r.detail = std::to_string(tight) + " tight; max gap " + max_gap.str() +
             (max_at.empty() ? "" : " at " + max_at);
  r.seconds = since(t0);
  return r;
}

SuiteResult suite_decodability(int max_K, int seeds, bool fault) {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "decodability";
  struct Trial {
    SchemeConfig config;
    ProblemInstance inst;
    std::string failure;
    bool ok = false;
  };
  std::vector<Trial> trials;
  for (int K = 2; K <= max_K; ++K) {
    const auto configs = enumerate_configs(K);
    for (int s = 1; s <= K; ++s) {
      std::vector<SchemeConfig> cls;
      for (const SchemeConfig& c : configs) {
        if (c.s == s) cls.push_back(c);
      }
      std::mt19937_64 rng(static_cast<std::uint64_t>(1000 * K + s));
      for (int i = 0; i < seeds; ++i) {
        Trial t;
        t.config = cls[rng() % cls.size()];
        const SchemeConfig& c = t.config;
        t.inst = minimal_instance(c.K, c.s, c.r1, c.r2, c.alpha, 1 + static_cast<long long>(rng() % 300), rng());
        const long long scale = 1 + static_cast<long long>(rng() % 2);
        t.inst.N *= scale;
        t.inst.M0 *= scale;
        t.inst.M1 *= scale;
        t.inst.Q *= 1 + static_cast<long long>(rng() % 2);
        // T need not be a multiple of 16; only segment splitting constrains it.
        t.inst.T = std::max(1, c.alpha.sign() > 0 ? c.r1 : 1) * (1 + static_cast<long long>(rng() % 24));
        trials.push_back(std::move(t));
      }
    }
  }
  parallel_for(trials.size(), [&](std::size_t i) {
    Trial& t = trials[i];
    RunOptions opt;
    if (fault) {
      opt.fault_message = i;
      opt.fault_bit = i * 7919;
    }
    try {
      const RunResult res = run(t.inst, allocation_of(t.config), opt);
      t.ok = res.report.reduce_verified;
      if (!t.ok) t.failure = "reduce not verified";
      // A corrupted payload that goes unnoticed is itself a failure.
      if (fault && !res.transcript.empty()) {
        t.ok = false;
        t.failure = "injected fault went undetected";
      }
    } catch (const std::exception& e) {
      t.failure = e.what();
    }
  });
  for (const Trial& t : trials) {
    record(r, t.ok, t.config.str() + " [" + instance_str(t.inst) + "]: " + t.failure);
  }
  r.seconds = since(t0);
  return r;
}

SuiteResult suite_mds(int trials, std::uint64_t seed) {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "mds";
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n1 = 1 + static_cast<int>(rng() % 12);
    const int n2 = 1 + static_cast<int>(rng() % static_cast<unsigned>(n1));
    const auto alphas = random_alphas(rng, static_cast<std::size_t>(n1));
    const std::vector<int> cols = random_subset(rng, n1, n2);
    std::vector<int> rows(static_cast<std::size_t>(n2));
    for (int i = 0; i < n2; ++i) rows[static_cast<std::size_t>(i)] = i;
    const std::size_t rank = vandermonde_rank(alphas, rows, cols);
    record(r, rank == static_cast<std::size_t>(n2),
           "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) + " rank " +
               std::to_string(rank));
  }
  r.seconds = since(t0);
  return r;
}

SuiteResult suite_codec_roundtrip(int trials, std::uint64_t seed) {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "codec-roundtrip";
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int n1 = 1 + static_cast<int>(rng() % 10);
    const int n2 = 1 + static_cast<int>(rng() % static_cast<unsigned>(n1));
    const std::size_t words = 1 + rng() % 8;
    std::vector<Symbol> symbols;
    for (int j = 0; j < n1; ++j) symbols.push_back(random_symbol(rng, words));
    const auto alphas = (rng() & 1) ? default_alphas(static_cast<std::size_t>(n1))
                                    : random_alphas(rng, static_cast<std::size_t>(n1));
    const std::vector<int> unknown = random_subset(rng, n1, n2);
    std::map<int, Symbol> known;
    for (int j = 0; j < n1; ++j) {
      if (!std::binary_search(unknown.begin(), unknown.end(), j)) {
        known[j] = symbols[static_cast<std::size_t>(j)];
      }
    }
    bool ok = true;
    std::string why;
    try {
      const auto rows = vandermonde_encode(symbols, n2, alphas);
      const auto got = vandermonde_decode(known, rows, alphas);
      ok = got.size() == unknown.size();
      for (int j : unknown) {
        auto it = got.find(j);
        if (it == got.end() || !(it->second == symbols[static_cast<std::size_t>(j)])) ok = false;
      }
      if (!ok) why = "decoded symbols differ";
    } catch (const std::exception& e) {
      ok = false;
      why = e.what();
    }
    record(r, ok, "n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) + ": " + why);
  }
  r.seconds = since(t0);
  return r;
}

SuiteResult suite_closed_form(const std::vector<int>& Ks, int samples, int grid,
                             std::uint64_t seed) {
  const auto t0 = Clock::now();
  SuiteResult r;
  r.name = "closed-form";
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (int K : Ks) {
    const long long N = 2520;
    for (int i = 0; i < samples; ++i) {
      // The closed forms assume r = K M1 / N in [1, K-1].
      const long long M1 = N / K + static_cast<long long>(rng() % static_cast<unsigned long long>(N * (K - 1) / K - N / K + 1));
      const long long M0 = static_cast<long long>(rng() % static_cast<unsigned long long>(N + 1));
      std::ostringstream what;
      what << "K=" << K << " N=" << N << " M0=" << M0 << " M1=" << M1 << ": ";
      const ApproxAllocation ap = approx_allocation_seq_s1(K, N, M0, M1);
      const double lo = 1.0 - static_cast<double>(M0) / N;
      const double closed = relaxed_seq_objective_s1(K, N, M1, ap.alpha_star.to_double(), ap.m1_prime_star);
      const double best = relaxed_grid_minimum_s1(K, N, M0, M1, grid);
      // The row alpha = 1 - M0/N must hold the grid minimum.
      double row = std::numeric_limits<double>::infinity();
      for (int j = 1; j <= grid; ++j) {
        row = std::min(row, relaxed_seq_objective_s1(K, N, M1, lo, static_cast<double>(M1) * j / grid));
      }
      const bool alpha_ok = ap.alpha_star == Rat(1) - Rat(M0, N) && row <= best * (1 + 1e-12);
      // A plain mesh is only accurate to its cell size, so the two-sided
      // tolerance is checked against the zoomed search.
      const double zoom = relaxed_zoom_minimum_s1(K, N, M0, M1, grid, 3);
      const double rel = std::abs(closed - zoom) / zoom;
      const bool value_ok = std::isfinite(closed) && closed <= best * (1 + 1e-6) && rel <= 1e-6;
      worst = std::max(worst, rel);
      if (!alpha_ok) what << "grid minimum not on alpha = 1 - M0/N; ";
      if (!value_ok) what << "closed form " << closed << " vs grid " << best << " zoomed " << zoom;
      record(r, alpha_ok && value_ok, what.str());
    }
  }
  std::ostringstream d;
  d << "max relative distance to zoomed grid " << worst;
  r.detail = d.str();
  r.seconds = since(t0);
  return r;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
  if (options.max_K < 2 || options.max_K > 8) throw InvalidInput("--max-K must lie in 2..8");
  if (options.seeds < 1) throw InvalidInput("--seeds must be positive");
  std::vector<SuiteResult> out;
  const auto t0 = Clock::now();
  const auto runs = exhaustive_runs(2, options.max_K);
  const double run_time = since(t0);
  out.push_back(suite_formula_match(runs));
  out.back().seconds += run_time;
  out.push_back(suite_decodability(options.max_K, options.seeds, options.inject_fault));
  out.push_back(suite_mds(500));
  out.push_back(suite_codec_roundtrip(1000));
  out.push_back(suite_lemma1(runs));
  out.push_back(suite_closed_form({5, 10, 20}, 20, 400));
  return out;
}

}  // namespace mcdc
