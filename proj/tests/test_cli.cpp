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

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mcdc/cli.hpp"
#include "mcdc/error.hpp"

using namespace mcdc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("mcdc_test_" + std::to_string(::getpid()) + "_" + name);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("optimize prints the exact objective") {
  const Outcome o = cli({"optimize", "--K", "3", "--s", "1", "--N", "12", "--Q", "3", "--M0", "6",
                         "--r", "2", "--mode", "seq"});
  REQUIRE(o.code == kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["objective"] == "5/36");
  CHECK(j["allocation"]["alpha"] == "1/2");

  const Outcome m1 = cli({"optimize", "--K", "3", "--N", "12", "--Q", "3", "--M0", "6", "--M1",
                          "8", "--mode", "par", "--approx"});
  REQUIRE(m1.code == kExitOk);
  const auto jp = nlohmann::json::parse(m1.out);
  CHECK(jp["objective"] == "1/12");
  CHECK(jp["approx"]["alpha_star"] == "1/2");

  const Outcome none = cli({"optimize", "--K", "10", "--N", "2520", "--Q", "10", "--M0", "0", "--r", "3"});
  CHECK(nlohmann::json::parse(none.out)["allocation"]["alpha"] == "1");
}

TEST_CASE("optimize rejects infeasible storage with exit 2") {
  const Outcome o = cli({"optimize", "--K", "3", "--N", "12", "--Q", "3", "--M0", "0", "--M1", "3"});
  CHECK(o.code == kExitInvalidInput);
  CHECK(o.err.find("K M1 + M0 < N") != std::string::npos);
  CHECK(cli({"optimize", "--K", "3", "--N", "12", "--Q", "3", "--M0", "0"}).code == kExitInvalidInput);
  CHECK(cli({"optimize", "--K", "3", "--N", "12", "--Q", "3", "--M0", "0", "--M1", "4", "--r", "1"}).code ==
        kExitInvalidInput);
  CHECK(cli({"optimize", "--K", "3", "--N", "12", "--Q", "3", "--M0", "0", "--r", "1", "--mode", "fast"}).code ==
        kExitInvalidInput);
  CHECK(cli({"bogus"}).code == kExitInvalidInput);
  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("optimize output fed back as a job reproduces its objective") {
  for (const char* mode : {"seq", "par"}) {
    const Outcome o = cli({"optimize", "--K", "3", "--N", "12", "--Q", "3", "--M0", "6", "--M1", "8",
                           "--mode", mode});
    REQUIRE(o.code == kExitOk);
    auto job = nlohmann::json::parse(o.out);
    job["T"] = 16;
    job["seed"] = 4;
    const fs::path spec = temp_file(std::string("roundtrip_") + mode + ".json");
    std::ofstream(spec) << job.dump();
    const Outcome s = cli({"simulate", "--spec", spec.string()});
    CHECK(s.code == kExitOk);
    const auto rep = nlohmann::json::parse(s.out);
    CHECK(rep["formula_match"] == true);
    CHECK(rep[std::string(mode) == "seq" ? "L_seq" : "L_par"] == job["objective"]);
    fs::remove(spec);
  }
}

TEST_CASE("simulate reports, writes a transcript and maps errors to exit codes") {
  const fs::path spec = temp_file("job.json");
  const fs::path tr = temp_file("job.ndjson");
  std::ofstream(spec) << R"({"K":3,"N":6,"Q":3,"s":1,"M0":6,"M1":4,"T":16,"F":64,"seed":1,
                            "allocation":{"alpha":"0","r1":0,"r2":2}})";
  const Outcome o = cli({"simulate", "--spec", spec.string(), "--transcript", tr.string()});
  CHECK(o.code == kExitOk);
  CHECK(o.out.find("\"L_seq\": \"1/9\"") != std::string::npos);
  std::ifstream in(tr);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 1);

  std::ofstream(spec) << R"({"K":4,"N":12,"Q":5,"s":2,"M0":12,"M1":6,
                            "allocation":{"alpha":"0","r1":0,"r2":2}})";
  const Outcome bad = cli({"simulate", "--spec", spec.string()});
  CHECK(bad.code == kExitInvalidInput);
  CHECK(bad.err.find("eta2") != std::string::npos);

  CHECK(cli({"simulate", "--spec", temp_file("missing.json").string()}).code == kExitInvalidInput);
  fs::remove(spec);
  fs::remove(tr);
}

TEST_CASE("sweep CSV: header, ordering and lossless exact columns") {
  const fs::path csv = temp_file("sweep.csv");
  const Outcome o = cli({"sweep", "--K", "10", "--N", "2520", "--Q", "10", "--M0", "2520",
                         "--r-grid", "1:9:1", "--out", csv.string()});
  REQUIRE(o.code == kExitOk);
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == kSweepHeader);
  const auto header = split_csv(line);
  auto col = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
  };
  int rows = 0;
  while (std::getline(in, line)) {
    const auto f = split_csv(line);
    REQUIRE(f.size() == header.size());
    ++rows;
    const Rat r = Rat::parse(f[col("r_exact")]);
    CHECK(r == Rat(rows));
    const Rat seq = Rat::parse(f[col("l_seq_exact")]);
    const Rat par = Rat::parse(f[col("l_par_exact")]);
    const Rat cdc = Rat::parse(f[col("l_cdc_exact")]);
    CHECK(par <= seq);
    CHECK(seq <= cdc);
    CHECK(Rat::parse(seq.str()) == seq);
    CHECK(std::abs(Rat::parse(f[col("l_seq")]).to_double() - seq.to_double()) < 1e-8);
    if (rows == 2) CHECK(seq == Rat(4, 15));
  }
  CHECK(rows == 9);
  fs::remove(csv);
}

TEST_CASE("sweep without master storage equals edge-only CDC; infeasible points get a note") {
  const Outcome o = cli({"sweep", "--K", "4", "--N", "120", "--Q", "4", "--M0", "0", "--r-grid", "1:4:1/2"});
  REQUIRE(o.code == kExitOk);
  std::istringstream in(o.out);
  std::string line;
  std::getline(in, line);
  const auto header = split_csv(line);
  int rows = 0;
  int notes = 0;
  while (std::getline(in, line)) {
    const auto f = split_csv(line);
    ++rows;
    if (!f.back().empty()) {
      ++notes;
      CHECK(f[4].empty());
      continue;
    }
    CHECK(f[7] == f[5]);
  }
  CHECK(rows == 7);
  CHECK(notes == 3);
  CHECK(cli({"sweep", "--K", "4", "--N", "120", "--Q", "4", "--M0", "0", "--r-grid", "3:1:1"}).code ==
        kExitInvalidInput);
  CHECK(cli({"sweep", "--K", "4", "--N", "120", "--Q", "4", "--M0", "0", "--r-grid", "1:3"}).code ==
        kExitInvalidInput);
}

TEST_CASE("r-grid parsing") {
  const auto g = parse_r_grid("1/2:2:1/2");
  REQUIRE(g.size() == 4);
  CHECK(g.front() == Rat(1, 2));
  CHECK(g.back() == Rat(2));
  CHECK(parse_r_grid("1:1:1").size() == 1);
  CHECK_THROWS_AS(parse_r_grid("1:2:0"), InvalidInput);
  CHECK_THROWS_AS(parse_r_grid("0:1000000:1/1000"), InvalidInput);
}

TEST_CASE("verify: small run passes; injected fault fails with a counterexample") {
  const Outcome ok = cli({"verify", "--max-K", "3", "--seeds", "5"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("formula-match") != std::string::npos);
  const Outcome bad = cli({"verify", "--max-K", "2", "--seeds", "3", "--inject-fault"});
  CHECK(bad.code == kExitVerifyFailed);
  CHECK(bad.out.find("first counterexample [decodability]") != std::string::npos);
  CHECK(cli({"verify", "--max-K", "1"}).code == kExitInvalidInput);
}
