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
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "qilent/pauli.hpp"

namespace qilent {

// GF(2) helpers over the interleaved column order x0, z0, x1, z1, ...

/// Reduced row-echelon form; zero rows are dropped. Rows must share a length.
std::vector<PauliRow> row_echelon(std::vector<PauliRow> rows);

/// Column (in the interleaved order) of the leading one of a non-identity row.
std::size_t pivot_column(const PauliRow& row);

/// Membership test against rows already in reduced row-echelon form.
bool in_echelon_span(const std::vector<PauliRow>& echelon, PauliRow p);

std::size_t gf2_rank(std::vector<PauliRow> rows);

/// Generators of a signless stabilizer group on n qubits.
///
/// Rows pairwise commute, are GF(2)-independent and none is the identity.
/// Construction checks all three and throws std::invalid_argument otherwise.
class StabArray {
 public:
  StabArray() = default;
  explicit StabArray(std::size_t n);
  StabArray(std::size_t n, std::vector<PauliRow> rows);

  static StabArray from_strings(std::size_t n, const std::vector<std::string>& rows);
  static StabArray from_strings(std::initializer_list<const char*> rows);

  std::size_t num_qubits() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  bool full_rank() const { return rows_.size() == n_; }
  const std::vector<PauliRow>& rows() const { return rows_; }

  std::vector<std::string> row_strings() const;

  friend bool operator==(const StabArray&, const StabArray&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<PauliRow> rows_;
};

/// Unique representative of the generated group (RREF of the rows).
StabArray canonical(const StabArray& s);

/// Whether p lies in the group generated by s.
bool member(const StabArray& s, const PauliRow& p);

/// Same group, independent of the generators chosen.
bool same_group(const StabArray& a, const StabArray& b);

/// Direct sum: s's rows padded on the right, t's rows padded on the left.
StabArray tensor(const StabArray& s, const StabArray& t);

StabArray conj_1q(Gate g, std::size_t q, const StabArray& s);
StabArray conj_cx(std::size_t control, std::size_t target, const StabArray& s);

/// Z measurement of local qubit i. Deterministic when column i holds only I
/// and Z; otherwise one anticommuting row absorbs the others and is replaced
/// by Z_i. Requires a full-rank array.
StabArray meas_st(std::size_t i, const StabArray& s);

struct SingleSplit {
  Pauli sigma;
  StabArray rest;  // on the remaining qubits, in their original order
};

/// Factors s = <sigma_i> (x) rest when some single-qubit Pauli at i is in the
/// group. Candidates are tried in the order Z, X, Y.
std::optional<SingleSplit> extract_single(std::size_t i, const StabArray& s);

}  // namespace qilent
