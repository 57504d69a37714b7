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
#include <stdexcept>
#include <string>
#include <vector>

#include "qilent/domain.hpp"
#include "qilent/qil.hpp"

namespace qilent {

struct AnalysisConfig {
  Domain domain = Domain::E;
  /// Loop iterations before giving up. The domain is finite, so hitting the
  /// bound points at a canonicalization bug rather than slow convergence.
  std::size_t max_while_iters = 1024;
  bool trace = false;
  /// Store the merged block of a cross-block CX in the E domain without
  /// splitting off single-qubit factors.
  bool strict_paper = false;
};

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TraceEntry {
  std::string point;  // path of the step and the statement, e.g. "3.then.1 H(q0)"
  Assignment assignment;
};

struct AnalysisResult {
  Assignment result;
  std::vector<TraceEntry> trace;
};

/// Abstract Z measurement of qubit i; the measured qubit always ends up in
/// its own <Z> block.
Assignment meas_c(std::size_t i, const Assignment& a);
Assignment meas_e(std::size_t i, const Assignment& g);

/// Abstract semantics over the domain chosen in cfg. Derived forms must have
/// been removed (see desugar). Throws AnalysisError.
Assignment interp(const Stmt& s, const Assignment& start, const AnalysisConfig& cfg);

Assignment interp_c(const Stmt& s, const Assignment& a, const AnalysisConfig& cfg = {});
Assignment interp_e(const Stmt& s, const Assignment& g, const AnalysisConfig& cfg = {});

/// Desugars the program, checks that start belongs to the domain and runs
/// interp, collecting a trace when cfg.trace is set.
AnalysisResult analyze(const Program& p, const Assignment& start, const AnalysisConfig& cfg);

}  // namespace qilent
