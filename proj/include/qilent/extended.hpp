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
#include <variant>
#include <vector>

#include "qilent/pauli.hpp"
#include "qilent/stabilizer.hpp"

namespace qilent {

/// Stabilizer-like array whose cells may be hearts. Heart rows record that
/// an unknown unitary touched a generator; only L-rows carry information
/// about the state.
///
/// The constructor only checks row lengths. Use valid() for the full set of
/// structural rules, since intermediate arrays inside a gate step may
/// temporarily break them.
class ExtArray {
 public:
  ExtArray() = default;
  explicit ExtArray(std::size_t n);
  ExtArray(std::size_t n, std::vector<ExtRow> rows);

  static ExtArray from_strings(std::size_t n, const std::vector<std::string>& rows);
  static ExtArray from_strings(std::initializer_list<const char*> rows);
  static ExtArray from_stab(const StabArray& s);

  std::size_t num_qubits() const { return n_; }
  const std::vector<ExtRow>& rows() const { return rows_; }
  std::size_t num_rows() const { return rows_.size(); }

  std::vector<PauliRow> l_rows() const;
  std::vector<ExtRow> heart_rows() const;
  bool has_heart_rows() const;

  std::vector<std::string> row_strings() const;

  friend bool operator==(const ExtArray&, const ExtArray&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ExtRow> rows_;
};

/// L-rows commute and are independent, every pair involving a heart row can
/// commute under some substitution, at most n rows, and for n >= 2 no row is
/// the identity or supported on a single qubit.
bool valid(const ExtArray& e);

/// Whether p is a product of L-rows.
bool l_span_contains(const ExtArray& e, const PauliRow& p);

/// Drops the heart rows. An empty result means no information (nullopt).
std::optional<StabArray> normalize(const ExtArray& e);

/// Representative of the class reachable by permuting rows, multiplying
/// L-rows together and multiplying heart rows by L-rows: L-rows in reduced
/// echelon form, each heart row reduced modulo the L-span restricted to its
/// non-heart columns, heart rows sorted and deduplicated.
ExtArray canonicalize(const ExtArray& e);

/// Replaces the X/Y cells of column i by hearts after clearing the column
/// with an L-row pivot, so at most one L-row turns into a heart row.
ExtArray add_heart(std::size_t i, const ExtArray& e);

struct MeasSplit {
  ExtArray rest;  // on the block without qubit i
};
struct MeasUnknown {};
using MeasBlockResult = std::variant<MeasSplit, MeasUnknown>;

/// Block-local part of the extended measurement. After clearing column i
/// with an L-row pivot: if no row holds a heart there and at most one row
/// holds X or Y, that row and the column are removed (MeasSplit);
/// otherwise nothing is known about the remaining qubits (MeasUnknown).
MeasBlockResult meas_e_block(std::size_t i, const ExtArray& e);

ExtArray tensor_e(const ExtArray& e, const ExtArray& f);

ExtArray conj_1q(Gate g, std::size_t q, const ExtArray& e);
ExtArray conj_cx(std::size_t control, std::size_t target, const ExtArray& e);

}  // namespace qilent
