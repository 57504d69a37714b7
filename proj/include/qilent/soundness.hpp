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

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qilent/abstract_interp.hpp"
#include "qilent/concrete_sim.hpp"
#include "qilent/domain.hpp"
#include "qilent/qil.hpp"

namespace qilent {

inline constexpr double kCheckTol = 1e-9;

enum class Status { Verified, Inconclusive };

struct Diagnostic {
  std::string block;      // e.g. "{0,2}"
  std::string condition;  // which check failed
  double residual = 0.0;
  /// The failed condition is necessary for the abstract claim, so the claim
  /// is refuted rather than merely unconfirmed.
  bool hard = false;
};

struct Verdict {
  Status status = Status::Verified;
  std::vector<Diagnostic> diagnostics;

  bool hard_failure() const;
  std::string summary() const;
};

/// Stabilizer-domain satisfaction via a branch-level witness: each branch
/// factors across the partition (soft), each branch is a +-1 eigenvector of
/// every generator (hard when the mixed state also violates the projector
/// condition), identity qubits are maximally mixed and uncorrelated (hard),
/// and no claimed cut has a negative partial transpose (hard).
Verdict models_c(const Assignment& a, const Ensemble& e);

/// Extended-domain satisfaction: P+ rho P- = 0 for every L-row (hard), the
/// identity condition (hard), the partial-transpose test (hard) and branch
/// factorization (soft). Heart rows impose nothing.
Verdict models_e(const Assignment& g, const Matrix& rho, const Ensemble& e);

struct GenConfig {
  std::uint64_t seed = 1;
  std::size_t n_qubits = 3;
  std::size_t max_depth = 8;
  bool while_allowed = true;
  // Relative weights of the statement kinds.
  unsigned w_clifford = 6;
  unsigned w_t = 2;
  unsigned w_cx = 5;
  unsigned w_if = 2;
  unsigned w_while = 1;
};

/// Random core program, right-nested like parser output. While bodies are
/// single gates so concrete loops are cut off by the unrolling bound.
Program gen_program(const GenConfig& cfg);
Program gen_program(const GenConfig& cfg, std::mt19937_64& rng);

/// An abstract start and a concrete ensemble satisfying it by construction.
struct StartPair {
  Assignment assignment;
  Ensemble ensemble;
};

/// Random partition; multi-qubit blocks hold random stabilizer states
/// prepared by Clifford words (or arbitrary states under an opaque claim),
/// singletons hold eigenstates, maximally mixed qubits or arbitrary states.
/// Pauli sign changes give some blocks two branches.
StartPair gen_start(std::size_t n, std::mt19937_64& rng);

struct Counterexample {
  std::string domain;
  std::string program;
  std::string start;
  std::string result;
  std::vector<std::string> start_state;
  std::vector<std::string> diagnostics;
};

struct SuiteReport {
  std::size_t cases = 0;
  std::size_t verified = 0;
  std::size_t inconclusive = 0;
  std::size_t hard_failures = 0;
  std::vector<Counterexample> counterexamples;
};

struct CaseOptions {
  SimConfig sim;
  AnalysisConfig analysis;
  bool check_c = true;
  bool check_e = true;
};

/// Runs both interpreters and both simulators on one start pair and checks
/// the results; the report counts the case once.
SuiteReport check_case(const Program& p, const StartPair& start, const CaseOptions& opt = {});

/// gen_program/gen_start driven suite.
SuiteReport soundness_suite(const GenConfig& cfg, std::size_t cases, const CaseOptions& opt = {});

/// Random starts against one fixed program.
SuiteReport soundness_for_program(const Program& p, std::size_t cases, std::uint64_t seed,
                                  const CaseOptions& opt = {});

void merge_report(SuiteReport& into, const SuiteReport& from);

}  // namespace qilent
