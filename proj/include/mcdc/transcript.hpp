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

#include "mcdc/scheme.hpp"

namespace mcdc {

inline constexpr int kTranscriptVersion = 1;

// One JSON object per line:
//   {"v":1,"sender":0,"recipients":[1,2,3],
//    "tag":{"subsystem":2,"set":[1,2,3],"row":0,"iv":null},
//    "bit_length":32,"payload":"a1b2..."}
// "iv" is [q,n] on uncoded messages. "payload" is the padded symbol in hex.
std::string transcript_line(const MulticastMessage& m);
void write_transcript(std::ostream& out, const std::vector<MulticastMessage>& messages);

/// Throws InvalidInput on malformed lines or an unknown schema version.
MulticastMessage parse_transcript_line(const std::string& line);
std::vector<MulticastMessage> read_transcript(std::istream& in);

}  // namespace mcdc
