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

#include "mcdc/transcript.hpp"

#include <istream>
#include <ostream>

#include "json.hpp"
#include "mcdc/error.hpp"

namespace mcdc {

using nlohmann::json;

namespace {

json set_json(NodeSet s) { return json(s.members()); }

NodeSet set_from(const json& j) { return NodeSet::of(j.get<std::vector<int>>()); }

}  // namespace

std::string transcript_line(const MulticastMessage& m) {
  // ordered_json keeps field order stable across library versions.
  nlohmann::ordered_json tag;
  tag["subsystem"] = m.tag.subsystem;
  tag["set"] = set_json(m.tag.group);
  tag["row"] = m.tag.row;
  tag["iv"] = m.tag.iv ? nlohmann::ordered_json::array({m.tag.iv->q, m.tag.iv->n})
                       : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json j;
  j["v"] = kTranscriptVersion;
  j["sender"] = m.sender;
  j["recipients"] = set_json(m.recipients);
  j["tag"] = std::move(tag);
  j["bit_length"] = m.bit_length;
  j["payload"] = BitString(m.payload.bytes(), m.payload.size_bytes() * 8).hex();
  return j.dump();
}

void write_transcript(std::ostream& out, const std::vector<MulticastMessage>& messages) {
  for (const MulticastMessage& m : messages) out << transcript_line(m) << '\n';
}

MulticastMessage parse_transcript_line(const std::string& line) {
  try {
    const json j = json::parse(line);
    if (j.at("v").get<int>() != kTranscriptVersion) {
      throw InvalidInput("unsupported transcript version " + j.at("v").dump());
    }
    MulticastMessage m;
    m.sender = j.at("sender").get<int>();
    m.recipients = set_from(j.at("recipients"));
    const json& tag = j.at("tag");
    m.tag.subsystem = tag.at("subsystem").get<int>();
    m.tag.group = set_from(tag.at("set"));
    m.tag.row = tag.at("row").get<int>();
    if (!tag.at("iv").is_null()) {
      m.tag.iv = IvIndex{tag.at("iv").at(0).get<long long>(), tag.at("iv").at(1).get<long long>()};
    }
    m.bit_length = j.at("bit_length").get<std::uint64_t>();
    const std::string hex = j.at("payload").get<std::string>();
    const BitString raw = BitString::from_hex(hex, hex.size() * 4);
    m.payload = Symbol::from_bytes(raw.bytes());
    if (m.bit_length > 16 * m.payload.size_words()) {
      throw InvalidInput("bit_length exceeds payload");
    }
    return m;
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed transcript line: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(std::string("malformed transcript line: ") + e.what());
  }
}

std::vector<MulticastMessage> read_transcript(std::istream& in) {
  std::vector<MulticastMessage> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(parse_transcript_line(line));
  }
  return out;
}

}  // namespace mcdc
