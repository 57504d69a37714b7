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

#include "qilent/stabilizer.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace qilent {

namespace {

bool column_bit(const PauliRow& row, std::size_t col) {
  const std::size_t q = col / 2;
  const std::uint64_t word = (col % 2 == 0) ? row.x_bits() : row.z_bits();
  return ((word >> q) & 1) != 0;
}

}  // namespace

std::vector<PauliRow> row_echelon(std::vector<PauliRow> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 2 * n && rank < rows.size(); ++col) {
    std::size_t found = rank;
    while (found < rows.size() && !column_bit(rows[found], col)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[rank], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && column_bit(rows[r], col)) rows[r] *= rows[rank];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

std::size_t pivot_column(const PauliRow& row) {
  const std::uint64_t support = row.x_bits() | row.z_bits();
  if (support == 0) throw std::invalid_argument("identity row has no pivot");
  const auto q = static_cast<std::size_t>(std::countr_zero(support));
  return 2 * q + (((row.x_bits() >> q) & 1) ? 0 : 1);
}

bool in_echelon_span(const std::vector<PauliRow>& echelon, PauliRow p) {
  for (const auto& row : echelon) {
    if (column_bit(p, pivot_column(row))) p *= row;
  }
  return p.is_identity();
}

std::size_t gf2_rank(std::vector<PauliRow> rows) { return row_echelon(std::move(rows)).size(); }

// ---------------------------------------------------------------------------

StabArray::StabArray(std::size_t n) : n_(n) {
  if (n > kMaxQubits) throw std::invalid_argument("stabilizer array too wide");
}

StabArray::StabArray(std::size_t n, std::vector<PauliRow> rows) : n_(n), rows_(std::move(rows)) {
  if (n > kMaxQubits) throw std::invalid_argument("stabilizer array too wide");
  for (const auto& row : rows_) {
    if (row.size() != n) {
      throw std::invalid_argument("row " + row.str() + " does not have " + std::to_string(n) +
                                  " cells");
    }
    if (row.is_identity()) throw std::invalid_argument("identity row in stabilizer array");
  }
  for (std::size_t a = 0; a < rows_.size(); ++a) {
    for (std::size_t b = a + 1; b < rows_.size(); ++b) {
      if (!row_commutes(rows_[a], rows_[b])) {
        throw std::invalid_argument("rows " + rows_[a].str() + " and " + rows_[b].str() +
                                    " anticommute");
      }
    }
  }
  if (gf2_rank(rows_) != rows_.size()) {
    throw std::invalid_argument("stabilizer rows are not independent");
  }
}

StabArray StabArray::from_strings(std::size_t n, const std::vector<std::string>& rows) {
  std::vector<PauliRow> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(PauliRow::from_string(r));
  return StabArray(n, std::move(parsed));
}

StabArray StabArray::from_strings(std::initializer_list<const char*> rows) {
  std::vector<std::string> text(rows.begin(), rows.end());
  if (text.empty()) throw std::invalid_argument("cannot infer width of an empty array");
  return from_strings(text.front().size(), text);
}

std::vector<std::string> StabArray::row_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.str());
  return out;
}

StabArray canonical(const StabArray& s) { return StabArray(s.num_qubits(), row_echelon(s.rows())); }

bool member(const StabArray& s, const PauliRow& p) {
  if (p.size() != s.num_qubits()) {
    throw std::invalid_argument("membership query of length " + std::to_string(p.size()) +
                                " against a " + std::to_string(s.num_qubits()) + "-qubit group");
  }
  return in_echelon_span(row_echelon(s.rows()), p);
}

bool same_group(const StabArray& a, const StabArray& b) {
  return a.num_qubits() == b.num_qubits() && canonical(a) == canonical(b);
}

StabArray tensor(const StabArray& s, const StabArray& t) {
  const std::size_t n = s.num_qubits() + t.num_qubits();
  if (n > kMaxQubits) throw std::invalid_argument("tensor product too wide");
  std::vector<PauliRow> rows;
  rows.reserve(s.rank() + t.rank());
  for (const auto& r : s.rows()) rows.emplace_back(n, r.x_bits(), r.z_bits());
  const std::size_t shift = s.num_qubits();
  for (const auto& r : t.rows()) rows.emplace_back(n, r.x_bits() << shift, r.z_bits() << shift);
  return StabArray(n, std::move(rows));
}

StabArray conj_1q(Gate g, std::size_t q, const StabArray& s) {
  if (q >= s.num_qubits()) throw std::out_of_range("gate index outside block");
  std::vector<PauliRow> rows;
  rows.reserve(s.rank());
  for (const auto& r : s.rows()) rows.push_back(conj_1q(g, q, r));
  return StabArray(s.num_qubits(), std::move(rows));
}

StabArray conj_cx(std::size_t control, std::size_t target, const StabArray& s) {
  if (control >= s.num_qubits() || target >= s.num_qubits()) {
    throw std::out_of_range("CX index outside block");
  }
  std::vector<PauliRow> rows;
  rows.reserve(s.rank());
  for (const auto& r : s.rows()) rows.push_back(conj_cx(control, target, r));
  return StabArray(s.num_qubits(), std::move(rows));
}

StabArray meas_st(std::size_t i, const StabArray& s) {
  if (!s.full_rank()) throw std::invalid_argument("meas_st requires a full-rank stabilizer array");
  if (i >= s.num_qubits()) throw std::out_of_range("measured qubit outside block");
  std::vector<PauliRow> rows = s.rows();
  std::optional<std::size_t> pivot;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (((rows[r].x_bits() >> i) & 1) == 0) continue;
    if (!pivot) {
      pivot = r;
    } else {
      rows[r] *= rows[*pivot];
    }
  }
  if (!pivot) return s;
  rows[*pivot] = PauliRow::single(s.num_qubits(), i, Pauli::Z);
  return StabArray(s.num_qubits(), std::move(rows));
}

std::optional<SingleSplit> extract_single(std::size_t i, const StabArray& s) {
  const std::size_t n = s.num_qubits();
  if (i >= n) throw std::out_of_range("split qubit outside block");
  const auto echelon = row_echelon(s.rows());
  for (Pauli sigma : {Pauli::Z, Pauli::X, Pauli::Y}) {
    const PauliRow target = PauliRow::single(n, i, sigma);
    if (!in_echelon_span(echelon, target)) continue;

    // Every generator commutes with sigma_i, so column i holds I or sigma.
    // Keep one carrier of sigma, clear the column elsewhere, then swap the
    // carrier for sigma_i itself; the group is unchanged.
    std::vector<PauliRow> rows = s.rows();
    std::optional<std::size_t> carrier;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][i] == Pauli::I) continue;
      if (!carrier) {
        carrier = r;
      } else {
        rows[r] *= rows[*carrier];
      }
    }
    std::vector<PauliRow> rest;
    rest.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (carrier && r == *carrier) continue;
      rest.push_back(rows[r].erase_column(i));
    }
    return SingleSplit{sigma, StabArray(n - 1, std::move(rest))};
  }
  return std::nullopt;
}

}  // namespace qilent
