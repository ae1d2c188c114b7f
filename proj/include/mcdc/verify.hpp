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
#include "mcdc/simulator.hpp"

namespace mcdc {

/// One scheme parameter point (instance sizes are synthesized from it).
struct SchemeConfig {
  int K = 0;
  int s = 1;
  int r1 = 0;
  int r2 = 0;
  Rat alpha;
  std::string str() const;
};

/// Every s in 1..K with alpha in {0, 1/3, 1/2, 1}: alpha = 0 pairs with
/// r2 in 0..K, alpha = 1 with r1 in 1..K, and the mixed alphas with every
/// (r1, r2) in 1..K x 0..K.
std::vector<SchemeConfig> enumerate_configs(int K);

struct ConfigOutcome {
  SchemeConfig config;
  ProblemInstance inst;
  std::optional<LoadReport> report;
  std::string error;  // set when the run threw
};

/// Runs every config of enumerate_configs(K) for K in k_min..k_max at its
/// minimal instance. Runs execute concurrently; output is in config order.
std::vector<ConfigOutcome> exhaustive_runs(int k_min, int k_max, std::uint64_t seed = 1);

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::string> counterexample;  // first failure
  std::string detail;
  double seconds = 0;
  bool ok() const { return failed == 0 && passed > 0; }
};

SuiteResult suite_formula_match(const std::vector<ConfigOutcome>& runs);
/// Also records the largest observed gap L - bound in detail.
SuiteResult suite_lemma1(const std::vector<ConfigOutcome>& runs);
/// `seeds` randomized runs per (K, s) class; fault flips one payload bit per run.
SuiteResult suite_decodability(int max_K, int seeds, bool fault = false);
SuiteResult suite_mds(int trials, std::uint64_t seed = 11);
SuiteResult suite_codec_roundtrip(int trials, std::uint64_t seed = 12);
/// Closed-form relaxed optimum against a grid x grid search, for each K.
SuiteResult suite_closed_form(const std::vector<int>& Ks, int samples, int grid,
                             std::uint64_t seed = 13);

struct VerifyOptions {
  int max_K = 5;
  int seeds = 200;
  bool inject_fault = false;
};

std::vector<SuiteResult> run_verify(const VerifyOptions& options);

}  // namespace mcdc
