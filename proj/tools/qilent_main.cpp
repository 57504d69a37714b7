// Copyright 2026 The qilent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// qilent command-line front end: analyze, simulate and check QIL programs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qilent/abstract_interp.hpp"
#include "qilent/concrete_sim.hpp"
#include "qilent/io.hpp"
#include "qilent/qil.hpp"
#include "qilent/soundness.hpp"

namespace {

using nlohmann::json;
using namespace qilent;

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitTooLarge = 3;
constexpr std::size_t kDensityLimit = 10;
constexpr std::size_t kEnsembleLimit = 16;
constexpr std::size_t kDensityDumpLimit = 6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::optional<std::size_t> env_max_iters() {
  const char* v = std::getenv("QILENT_MAX_ITERS");
  if (!v || !*v) return std::nullopt;
  try {
    const unsigned long long n = std::stoull(v);
    if (n == 0) throw std::invalid_argument("zero");
    return static_cast<std::size_t>(n);
  } catch (const std::exception&) {
    throw UsageError(std::string("QILENT_MAX_ITERS must be a positive integer, got '") + v + "'");
  }
}

Program load_program(const std::string& path) {
  const std::string src = slurp(path);
  try {
    return parse(src);
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    std::exit(kExitParse);
  }
}

struct AnalyzeOpts {
  std::string file;
  std::string domain = "e";
  std::string init = "top";
  std::string format = "text";
  bool trace = false;
  bool strict = false;
};

int run_analyze(const AnalyzeOpts& o) {
  const Program p = load_program(o.file);
  AnalysisConfig cfg;
  cfg.domain = o.domain == "c" ? Domain::C : Domain::E;
  cfg.trace = o.trace;
  cfg.strict_paper = o.strict;
  if (auto n = env_max_iters()) cfg.max_while_iters = *n;

  Assignment start = Assignment::top(p.num_qubits);
  if (o.init == "zeros") {
    start = Assignment::zeros(p.num_qubits);
  } else if (o.init != "top") {
    start = assignment_from_json(read_json(o.init));
  }

  AnalysisResult res;
  try {
    res = analyze(p, start, cfg);
  } catch (const AnalysisError& e) {
    std::cerr << "analysis error: " << e.what() << "\n";
    return kExitFailure;
  }

  if (o.format == "json") {
    if (!o.trace) {
      std::cout << to_json(res.result).dump(2) << "\n";
      return 0;
    }
    // JSON lines: one record per program point, then the final assignment.
    for (const auto& entry : res.trace) std::cout << to_json(entry).dump() << "\n";
    std::cout << json{{"result", to_json(res.result)}}.dump() << "\n";
    return 0;
  }
  for (const auto& entry : res.trace) {
    std::cout << "-- " << entry.point << "\n" << render_text(entry.assignment) << "\n";
  }
  if (o.trace) std::cout << "-- result\n";
  std::cout << render_text(res.result);
  return 0;
}

struct SimulateOpts {
  std::string file;
  std::string state = "zeros";
  std::string mode = "density";
  std::optional<std::size_t> max_iter;
};

int run_simulate(const SimulateOpts& o) {
  const Program p = load_program(o.file);
  const std::size_t n = p.num_qubits;
  const bool density = o.mode == "density";
  const std::size_t limit = density ? kDensityLimit : kEnsembleLimit;
  if (n > limit) {
    std::cerr << o.mode << " simulation supports at most " << limit << " qubits, program has "
              << n << "\n";
    return kExitTooLarge;
  }
  SimConfig cfg;
  if (auto env = env_max_iters()) cfg.max_while_iters = *env;
  if (o.max_iter) {
    if (*o.max_iter == 0) throw UsageError("--max-iter must be positive");
    cfg.max_while_iters = *o.max_iter;
  }

  Vector psi = ket(std::string(n, '0'));
  if (o.state != "zeros") {
    psi = state_from_json(read_json(o.state));
    if (psi.size() != (Eigen::Index{1} << n)) {
      throw UsageError("state has the wrong number of qubits for this program");
    }
  }

  const Program core = desugar(p);
  SimStats stats;
  json out;
  if (density) {
    const Matrix rho = sem_density(*core.body, pure_density(psi), n, cfg, &stats);
    json probs = json::array();
    for (Eigen::Index k = 0; k < rho.rows(); ++k) probs.push_back(rho(k, k).real());
    out = {{"qubits", n}, {"mode", "density"}, {"probabilities", probs}};
    if (n <= kDensityDumpLimit) out["density"] = density_to_json(rho, n)["density"];
  } else {
    const Ensemble e = sem_ensemble(*core.body, single_branch(psi), cfg, &stats);
    out = to_json(e);
    out["mode"] = "ensemble";
  }
  out["residual_trace"] = stats.residual_trace;
  out["truncated"] = stats.truncated;
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct CheckOpts {
  std::string file;
  std::string domain = "both";
  std::size_t cases = 100;
  std::uint64_t seed = 1;
  std::size_t qubits = 3;
  std::string dump = "qilent-counterexamples.json";
};

int run_check(const CheckOpts& o) {
  CaseOptions opt;
  opt.check_c = o.domain != "e";
  opt.check_e = o.domain != "c";
  if (auto n = env_max_iters()) {
    opt.analysis.max_while_iters = *n;
    opt.sim.max_while_iters = *n;
  }

  SuiteReport report;
  if (o.file == "-") {
    GenConfig g;
    g.seed = o.seed;
    g.n_qubits = o.qubits;
    report = soundness_suite(g, o.cases, opt);
  } else {
    const Program p = load_program(o.file);
    if (p.num_qubits > kDensityLimit) {
      std::cerr << "check supports at most " << kDensityLimit << " qubits\n";
      return kExitTooLarge;
    }
    report = soundness_for_program(p, o.cases, o.seed, opt);
  }

  const json out = to_json(report);
  std::cout << out.dump(2) << "\n";
  if (report.hard_failures == 0) return 0;
  std::ofstream dump(o.dump);
  dump << out["counterexamples"].dump(2) << "\n";
  std::cerr << report.hard_failures << " hard failure(s); counterexamples written to " << o.dump
            << "\n";
  return kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qilent: entanglement analysis for QIL programs"};
  app.require_subcommand(1);

  AnalyzeOpts ao;
  auto* analyze_cmd = app.add_subcommand("analyze", "over-approximate the entanglement structure");
  analyze_cmd->add_option("file", ao.file, "QIL source")->required();
  analyze_cmd->add_option("--domain", ao.domain, "abstract domain")
      ->check(CLI::IsMember({"c", "e"}));
  analyze_cmd->add_option("--init", ao.init, "initial assignment: top, zeros or a JSON file");
  analyze_cmd->add_option("--format", ao.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_flag("--trace", ao.trace, "print the assignment after every statement");
  analyze_cmd->add_flag("--strict-paper", ao.strict,
                        "keep merged CX blocks unsplit in the extended domain");

  SimulateOpts so;
  auto* simulate_cmd = app.add_subcommand("simulate", "run the concrete semantics");
  simulate_cmd->add_option("file", so.file, "QIL source")->required();
  simulate_cmd->add_option("--state", so.state, "initial state: zeros or a JSON amplitude file");
  simulate_cmd->add_option("--mode", so.mode, "simulator")
      ->check(CLI::IsMember({"density", "ensemble"}));
  simulate_cmd->add_option("--max-iter", so.max_iter, "while loop unrolling bound");

  CheckOpts co;
  auto* check_cmd = app.add_subcommand("check", "test the analysis against the simulator");
  check_cmd->add_option("file", co.file, "QIL source, or - for random programs")->required();
  check_cmd->add_option("--domain", co.domain, "domains to check")
      ->check(CLI::IsMember({"c", "e", "both"}));
  check_cmd->add_option("--cases", co.cases, "number of cases");
  check_cmd->add_option("--seed", co.seed, "random seed");
  check_cmd->add_option("--qubits", co.qubits, "qubits per generated program")
      ->check(CLI::Range(1, 6));
  check_cmd->add_option("--dump", co.dump, "counterexample dump path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze_cmd->parsed()) return run_analyze(ao);
    if (simulate_cmd->parsed()) return run_simulate(so);
    return run_check(co);
  } catch (const UsageError& e) {
    std::cerr << "qilent: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "qilent: " << e.what() << "\n";
  } catch (const AnalysisError& e) {
    std::cerr << "analysis error: " << e.what() << "\n";
  }
  return kExitFailure;
}
