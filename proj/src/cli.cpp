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

#include "mcdc/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "mcdc/allocator.hpp"
#include "mcdc/error.hpp"
#include "mcdc/job_io.hpp"
#include "mcdc/simulator.hpp"
#include "mcdc/transcript.hpp"
#include "mcdc/verify.hpp"

namespace mcdc {

using nlohmann::ordered_json;

namespace {

constexpr int kDecimals = 9;
constexpr std::size_t kMaxGridPoints = 100000;

struct OptimizeArgs {
  int K = 0;
  int s = 1;
  long long N = 0;
  long long Q = 0;
  long long M0 = 0;
  std::optional<long long> M1;
  std::optional<std::string> r;
  std::string mode = "seq";
  bool approx = false;
};

struct SweepArgs {
  int K = 0;
  int s = 1;
  long long N = 0;
  long long Q = 0;
  long long M0 = 0;
  std::string grid;
  std::string out;
};

int cmd_optimize(const OptimizeArgs& a, std::ostream& out) {
  const SystemParams p{a.K, a.s, a.N, a.Q, a.M0};
  if (a.N < 1) throw InvalidInput("N must be positive");
  Rat r;
  if (a.M1) {
    if (static_cast<long long>(a.K) * *a.M1 + a.M0 < a.N) {
      throw Infeasible("K M1 + M0 < N: the system cannot map all files");
    }
    r = Rat(BigInt(a.K) * *a.M1, a.N);
  } else {
    r = Rat::parse(*a.r);
  }
  const Mode mode = a.mode == "par" ? Mode::kParallel : Mode::kSequential;
  const Allocation alloc = optimize(p, r, mode);

  ordered_json j;
  j["K"] = a.K;
  j["s"] = a.s;
  j["N"] = a.N;
  j["Q"] = a.Q;
  j["M0"] = a.M0;
  if (a.M1) j["M1"] = *a.M1;
  j["r"] = r.str();
  j["mode"] = to_string(mode);
  j["objective"] = alloc.objective.str();
  j["allocation"] = allocation_json(alloc);

  if (a.approx) {
    if (a.s != 1) throw InvalidInput("--approx needs s = 1");
    const Rat m1 = r * Rat(a.N) / Rat(a.K);
    if (!m1.is_integer()) throw InvalidInput("--approx needs an integer M1 = rN/K, got " + m1.str());
    const long long M1 = static_cast<long long>(m1.num());
    const ApproxAllocation ap = approx_allocation_seq_s1(a.K, a.N, a.M0, M1);
    const double closed = relaxed_seq_objective_s1(a.K, static_cast<double>(a.N),
                                                   static_cast<double>(M1),
                                                   ap.alpha_star.to_double(), ap.m1_prime_star);
    const double exact = alloc.objective.to_double();
    ordered_json x;
    x["alpha_star"] = ap.alpha_star.str();
    x["M1_prime_star"] = ap.m1_prime_star;
    x["r1_star"] = ap.r1_star;
    x["r2_star"] = ap.r2_star;
    x["relaxed_objective"] = closed;
    x["relative_gap"] = exact > 0 ? (exact - closed) / exact : 0.0;
    j["approx"] = std::move(x);
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_simulate(const std::string& spec, const std::string& transcript, std::ostream& out) {
  const Job job = load_job(spec);
  const RunResult res = run(job.inst, job.alloc);
  if (!transcript.empty()) {
    std::ofstream t(transcript);
    if (!t) throw InvalidInput("cannot write " + transcript);
    write_transcript(t, res.transcript);
  }
  out << report_json(res.report).dump(2) << '\n';
  return res.report.reduce_verified && res.report.formula_match ? kExitOk : kExitVerifyFailed;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_sweep(std::ostream& os, const std::vector<SweepEntry>& rows) {
  os << kSweepHeader << '\n';
  auto pair = [&](const std::optional<Rat>& v) {
    if (!v) return std::string(",");
    return v->decimal(kDecimals) + "," + v->str();
  };
  for (const SweepEntry& e : rows) {
    os << pair(e.r) << ',';
    if (e.point) {
      const TradeoffPoint& p = *e.point;
      os << pair(p.l_uncoded) << ',' << pair(p.l_cdc) << ',' << pair(p.l_seq) << ','
         << pair(p.l_par) << ',' << pair(p.alloc_seq.alpha) << ',' << p.alloc_seq.r1 << ','
         << p.alloc_seq.r2 << ',' << pair(p.alloc_par.alpha) << ',' << p.alloc_par.r1 << ','
         << p.alloc_par.r2 << ',';
    } else {
      os << ",,,,,,,,,,,,,,,,";
    }
    os << csv_field(e.note) << '\n';
  }
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const std::vector<Rat> grid = parse_r_grid(a.grid);
  const auto rows = sweep({a.K, a.s, a.N, a.Q, a.M0}, grid);
  if (a.out.empty() || a.out == "-") {
    write_sweep(out, rows);
  } else {
    std::ofstream f(a.out);
    if (!f) throw InvalidInput("cannot write " + a.out);
    write_sweep(f, rows);
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
  const auto results = run_verify(options);
  out << std::left << std::setw(18) << "suite" << std::right << std::setw(8) << "passed"
      << std::setw(8) << "failed" << std::setw(10) << "seconds" << "  detail\n";
  const SuiteResult* first = nullptr;
  for (const SuiteResult& r : results) {
    out << std::left << std::setw(18) << r.name << std::right << std::setw(8) << r.passed
        << std::setw(8) << r.failed << std::setw(10) << std::fixed << std::setprecision(2)
        << r.seconds << "  " << (r.ok() ? "PASS" : "FAIL")
        << (r.detail.empty() ? "" : " (" + r.detail + ")") << '\n';
    if (!r.ok() && first == nullptr) first = &r;
  }
  if (first == nullptr) return kExitOk;
  out << "first counterexample [" << first->name
      << "]: " << first->counterexample.value_or("suite ran no cases") << '\n';
  return kExitVerifyFailed;
}

}  // namespace

std::vector<Rat> parse_r_grid(const std::string& spec) {
  const auto c1 = spec.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : spec.find(':', c1 + 1);
  if (c2 == std::string::npos) throw InvalidInput("--r-grid must look like a:b:step");
  const Rat a = Rat::parse(spec.substr(0, c1));
  const Rat b = Rat::parse(spec.substr(c1 + 1, c2 - c1 - 1));
  const Rat step = Rat::parse(spec.substr(c2 + 1));
  if (step.sign() <= 0) throw InvalidInput("--r-grid step must be positive");
  if (b < a) throw InvalidInput("--r-grid is empty: " + spec);
  if ((b - a) / step > Rat(static_cast<long long>(kMaxGridPoints))) {
    throw InvalidInput("--r-grid has more than " + std::to_string(kMaxGridPoints) + " points");
  }
  std::vector<Rat> out;
  for (Rat x = a; x <= b; x = x + step) out.push_back(x);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Master-aided coded distributed computing: optimizer and exact simulator", "mcdc"};
  app.require_subcommand(1);

  OptimizeArgs oa;
  auto* opt = app.add_subcommand("optimize", "optimal allocation (alpha, r1, r2) for a storage point");
  opt->add_option("--K", oa.K, "edge nodes")->required();
  opt->add_option("--s", oa.s, "reduce replication")->capture_default_str();
  opt->add_option("--N", oa.N, "files")->required();
  opt->add_option("--Q", oa.Q, "reduce functions")->required();
  opt->add_option("--M0", oa.M0, "master storage in files")->required();
  auto* m1 = opt->add_option("--M1", oa.M1, "edge storage per node in files");
  auto* ro = opt->add_option("--r", oa.r, "computation load K M1 / N, rational");
  m1->excludes(ro);
  opt->add_option("--mode", oa.mode)->check(CLI::IsMember({"seq", "par"}))->capture_default_str();
  opt->add_flag("--approx", oa.approx, "also print the closed-form relaxed optimum (s = 1)");

  std::string spec;
  std::string transcript;
  auto* sim = app.add_subcommand("simulate", "run map, shuffle and reduce on a job file");
  sim->add_option("--spec", spec, "job JSON")->required();
  sim->add_option("--transcript", transcript, "write the NDJSON message transcript here");

  SweepArgs sa;
  auto* sw = app.add_subcommand("sweep", "tradeoff curves to CSV");
  sw->add_option("--K", sa.K)->required();
  sw->add_option("--s", sa.s)->capture_default_str();
  sw->add_option("--N", sa.N)->required();
  sw->add_option("--Q", sa.Q)->required();
  sw->add_option("--M0", sa.M0)->required();
  sw->add_option("--r-grid", sa.grid, "a:b:step, inclusive")->required();
  sw->add_option("--out", sa.out, "CSV path, stdout when omitted");

  VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "run the verification suites");
  ver->add_option("--max-K", vo.max_K)->capture_default_str();
  ver->add_option("--seeds", vo.seeds)->capture_default_str();
  ver->add_flag("--inject-fault", vo.inject_fault)->group("");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*opt) {
      if (!oa.M1 && !oa.r) throw InvalidInput("optimize needs --M1 or --r");
      return cmd_optimize(oa, out);
    }
    if (*sim) return cmd_simulate(spec, transcript, out);
    if (*sw) return cmd_sweep(sa, out);
    return cmd_verify(vo, out);
  } catch (const DecodeFailure& e) {
    err << "decode failure: " << e.what() << '\n';
    return kExitDecodeFailure;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace mcdc
