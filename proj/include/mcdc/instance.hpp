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
#include <string>
#include <vector>

#include "mcdc/allocator.hpp"
#include "mcdc/rational.hpp"

namespace mcdc {

/// One computing job: K edge nodes, N files of F bits, Q reduce functions
/// each computed at s nodes, master storage M0 files, average map cost M1
/// files per node, T bits per intermediate value.
struct ProblemInstance {
  int K = 0;
  long long N = 0;
  long long Q = 0;
  int s = 1;
  long long M0 = 0;
  long long M1 = 0;
  long long T = 0;
  long long F = 0;
  std::uint64_t seed = 0;
};

/// Integral sizes implied by a valid (instance, allocation) pair.
struct DerivedSizes {
  long long N1 = 0;           // subsystem-1 files, alpha N
  long long N2 = 0;           // subsystem-2 files, (1 - alpha) N
  long long eta1_sub1 = 0;    // files per r1-subset group
  long long eta1_sub2 = 0;    // files per r2-subset group
  long long eta2 = 0;         // functions per s-subset group, Q / C(K,s)
  long long m1_prime = 0;     // subsystem-1 files mapped per node
  long long m2 = 0;           // subsystem-2 files mapped per node
  long long reduce_per_node = 0;  // sQ/K
};

/// Every failed check, each with a concrete fix where one exists
/// (e.g. "eta2 = Q / C(K,s) = 5/6 is not an integer; use Q = 6").
std::vector<std::string> diagnose(const ProblemInstance& inst, const Allocation& alloc);

/// Validates the pair and returns the allocation with m1_prime filled in.
/// Throws InvalidInput listing every violated condition.
Allocation validate_and_divisibility(const ProblemInstance& inst, const Allocation& alloc);

/// Sizes for an instance that already passed validation.
DerivedSizes derived_sizes(const ProblemInstance& inst, const Allocation& alloc);

struct MinimalSizes {
  long long N = 0;
  long long Q = 0;
  long long T = 0;
};

/// Smallest N, Q, T making every group size integral for the allocation.
MinimalSizes synthesize_instance(int K, int s, int r1, int r2, const Rat& alpha);

/// Instance at the minimal sizes with M0 = (1 - alpha) N and M1 equal to
/// the per-node map count, so the storage constraints hold with equality.
ProblemInstance minimal_instance(int K, int s, int r1, int r2, const Rat& alpha,
                                 long long F, std::uint64_t seed);

/// Largest supported number of coded columns per multicast group.
long long max_coded_columns(int K, int r1, int r2, const Rat& alpha);

}  // namespace mcdc
