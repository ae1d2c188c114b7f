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

#include <string>

#include "json.hpp"
#include "mcdc/allocator.hpp"
#include "mcdc/instance.hpp"
#include "mcdc/simulator.hpp"

namespace mcdc {

// Job document:
//   {"K":3,"N":6,"Q":3,"s":1,"M0":6,"M1":4,"T":16,"F":64,"seed":7,
//    "allocation":{"alpha":"0","r1":0,"r2":2}}
// s, T, F and seed default to 1, 16, 64 and 0. alpha is a "num/den" string.
// The allocation fields may also sit at the top level.
struct Job {
  ProblemInstance inst;
  Allocation alloc;
};

Job parse_job(const std::string& text);
Job load_job(const std::string& path);

nlohmann::ordered_json allocation_json(const Allocation& a);
nlohmann::ordered_json report_json(const LoadReport& r);
nlohmann::ordered_json instance_json(const ProblemInstance& inst);

}  // namespace mcdc
