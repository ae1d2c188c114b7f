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

#include <stdexcept>
#include <string>

namespace mcdc {

// Exit-code contract of the command line front end:
//   0 success, 1 verification failure, 2 invalid input, 3 decode failure.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Infeasible : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DecodeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mcdc
