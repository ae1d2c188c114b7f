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
#include <span>

#include "mcdc/bits.hpp"

namespace mcdc::workload {

// Synthetic MapReduce job whose outputs can be recomputed centrally:
//   w_n        pseudo-random F-bit file derived from (seed, n)
//   v_{q,n}    first T bits of a keyed hash stream over (q, n, w_n)
//   u_q        64-bit hash over v_{q,1} .. v_{q,N} in file order

BitString file_contents(std::uint64_t seed, long long n, long long F);

BitString map_value(long long q, long long n, const BitString& file, long long T);

std::uint64_t reduce_value(long long q, std::span<const BitString> values);

}  // namespace mcdc::workload
