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

#include <iosfwd>
#include <string>
#include <vector>

#include "mcdc/rational.hpp"

namespace mcdc {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInvalidInput = 2,
  kExitDecodeFailure = 3,
};

/// Entry point behind the `mcdc` binary. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a:b:step" with rational endpoints; both ends inclusive.
std::vector<Rat> parse_r_grid(const std::string& spec);

inline constexpr const char* kSweepHeader =
    "r,r_exact,l_uncoded,l_uncoded_exact,l_cdc,l_cdc_exact,l_seq,l_seq_exact,l_par,l_par_exact,"
    "alpha,alpha_exact,r1,r2,alpha_par,alpha_par_exact,r1_par,r2_par,note";

}  // namespace mcdc
