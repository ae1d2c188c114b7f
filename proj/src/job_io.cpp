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

#include "mcdc/job_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "mcdc/error.hpp"

namespace mcdc {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

long long int_field(const json& j, const char* key, std::optional<long long> fallback) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    throw InvalidInput(std::string("job: missing field \"") + key + "\"");
  }
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("job: \"") + key + "\" must be an integer");
  return v.get<long long>();
}

Rat rat_field(const json& v, const char* key) {
  if (v.is_string()) return Rat::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long long>());
  throw InvalidInput(std::string("job: \"") + key + "\" must be a \"num/den\" string");
}

std::uint64_t seed_field(const json& j) {
  if (!j.contains("seed")) return 0;
  const json& v = j.at("seed");
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) return static_cast<std::uint64_t>(v.get<long long>());
  if (v.is_string()) {
    try {
      std::size_t pos = 0;
      const std::string s = v.get<std::string>();
      const std::uint64_t out = std::stoull(s, &pos);
      if (pos == s.size()) return out;
    } catch (const std::exception&) {
    }
  }
  throw InvalidInput("job: \"seed\" must be a nonnegative 64-bit integer");
}

}  // namespace

Job parse_job(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("job: not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("job: top level must be an object");
  static const std::set<std::string> known = {"K",  "N", "Q", "s",    "M0",         "M1",
                                              "T",  "F", "seed", "allocation", "alpha", "r1",
                                              "r2", "mode", "objective", "r", "approx"};
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw InvalidInput("job: unknown field \"" + key + "\"");
  }
  Job job;
  ProblemInstance& inst = job.inst;
  const long long K = int_field(j, "K", std::nullopt);
  const long long s = int_field(j, "s", 1);
  if (K < 1 || K > 31) throw InvalidInput("job: K must lie in 1..31");
  if (s < 1 || s > K) throw InvalidInput("job: s must lie in 1..K");
  inst.K = static_cast<int>(K);
  inst.s = static_cast<int>(s);
  inst.N = int_field(j, "N", std::nullopt);
  inst.Q = int_field(j, "Q", std::nullopt);
  inst.M0 = int_field(j, "M0", std::nullopt);
  inst.M1 = int_field(j, "M1", std::nullopt);
  inst.T = int_field(j, "T", 16);
  inst.F = int_field(j, "F", 64);
  inst.seed = seed_field(j);

  const json& a = j.contains("allocation") ? j.at("allocation") : j;
  if (!a.is_object() || !a.contains("alpha")) throw InvalidInput("job: missing allocation alpha");
  job.alloc.alpha = rat_field(a.at("alpha"), "alpha");
  const long long r1 = int_field(a, "r1", 0);
  const long long r2 = int_field(a, "r2", 0);
  if (r1 < 0 || r1 > K || r2 < 0 || r2 > K) throw InvalidInput("job: r1 and r2 must lie in 0..K");
  job.alloc.r1 = static_cast<int>(r1);
  job.alloc.r2 = static_cast<int>(r2);
  return job;
}

Job load_job(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_job(buf.str());
}

ordered_json allocation_json(const Allocation& a) {
  ordered_json j;
  j["alpha"] = a.alpha.str();
  j["r1"] = a.r1;
  j["r2"] = a.r2;
  j["M1_prime"] = a.m1_prime.str();
  return j;
}

ordered_json instance_json(const ProblemInstance& inst) {
  ordered_json j;
  j["K"] = inst.K;
  j["N"] = inst.N;
  j["Q"] = inst.Q;
  j["s"] = inst.s;
  j["M0"] = inst.M0;
  j["M1"] = inst.M1;
  j["T"] = inst.T;
  j["F"] = inst.F;
  j["seed"] = inst.seed;
  return j;
}

ordered_json report_json(const LoadReport& r) {
  ordered_json j;
  j["l0"] = r.l0;
  j["lk"] = r.lk;
  j["L"] = r.L.str();
  j["L_seq"] = r.L_seq.str();
  j["L_par"] = r.L_par.str();
  j["L1"] = r.L1.str();
  j["L2"] = r.L2.str();
  j["lemma1"] = r.lemma1.str();
  j["reduce_verified"] = r.reduce_verified;
  j["formula_match"] = r.formula_match;
  j["alpha"] = r.alpha.str();
  j["r1"] = r.r1;
  j["r2"] = r.r2;
  j["messages"] = r.messages;
  j["padding_bits"] = r.padding_bits;
  if (!r.formula_mismatches.empty()) j["formula_mismatches"] = r.formula_mismatches;
  return j;
}

}  // namespace mcdc
