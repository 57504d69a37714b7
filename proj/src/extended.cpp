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

#include "qilent/extended.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qilent {

namespace {

bool has_xy(const ExtRow& row, std::size_t i) { return ((row.x_bits() >> i) & 1) != 0; }

bool excluded(const ExtRow& row, std::size_t n) { return n >= 2 && row.weight() <= 1; }

// Heart-row product that keeps the array consistent, or nullopt.
std::optional<ExtRow> guarded_product(const std::vector<ExtRow>& rows, std::size_t self,
                                      const ExtRow& pivot) {
  ExtRow cand = row_mul(rows[self], pivot);
  if (excluded(cand, cand.size())) return std::nullopt;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r != self && !potential_commute(cand, rows[r])) return std::nullopt;
  }
  return cand;
}

// Clears column i of X/Y using the first L-row holding X/Y there. Heart rows
// are only multiplied when the product stays consistent. Returns the pivot.
std::optional<std::size_t> clear_column(std::vector<ExtRow>& rows, std::size_t i) {
  std::optional<std::size_t> pivot;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!rows[r].is_heart_row() && has_xy(rows[r], i)) {
      pivot = r;
      break;
    }
  }
  if (!pivot) return std::nullopt;
  const ExtRow p = rows[*pivot];
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r == *pivot || !has_xy(rows[r], i)) continue;
    if (!rows[r].is_heart_row()) {
      rows[r] *= p;
    } else if (auto cand = guarded_product(rows, r, p)) {
      rows[r] = *cand;
    }
  }
  return pivot;
}

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

ExtArray::ExtArray(std::size_t n) : n_(n) {
  if (n > kMaxQubits) throw std::invalid_argument("extended array too wide");
}

ExtArray::ExtArray(std::size_t n, std::vector<ExtRow> rows) : n_(n), rows_(std::move(rows)) {
  if (n > kMaxQubits) throw std::invalid_argument("extended array too wide");
  for (const auto& row : rows_) {
    if (row.size() != n) {
      throw std::invalid_argument("row " + row.str() + " does not have " + std::to_string(n) +
                                  " cells");
    }
  }
}

ExtArray ExtArray::from_strings(std::size_t n, const std::vector<std::string>& rows) {
  std::vector<ExtRow> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(ExtRow::from_string(r));
  return ExtArray(n, std::move(parsed));
}

ExtArray ExtArray::from_strings(std::initializer_list<const char*> rows) {
  std::vector<std::string> text(rows.begin(), rows.end());
  if (text.empty()) throw std::invalid_argument("cannot infer width of an empty array");
  return from_strings(text.front().size(), text);
}

ExtArray ExtArray::from_stab(const StabArray& s) {
  std::vector<ExtRow> rows;
  rows.reserve(s.rank());
  for (const auto& r : s.rows()) rows.emplace_back(r);
  return ExtArray(s.num_qubits(), std::move(rows));
}

std::vector<PauliRow> ExtArray::l_rows() const {
  std::vector<PauliRow> out;
  for (const auto& r : rows_) {
    if (!r.is_heart_row()) out.push_back(r.to_pauli());
  }
  return out;
}

std::vector<ExtRow> ExtArray::heart_rows() const {
  std::vector<ExtRow> out;
  for (const auto& r : rows_) {
    if (r.is_heart_row()) out.push_back(r);
  }
  return out;
}

bool ExtArray::has_heart_rows() const {
  return std::any_of(rows_.begin(), rows_.end(), [](const ExtRow& r) { return r.is_heart_row(); });
}

std::vector<std::string> ExtArray::row_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.str());
  return out;
}

bool valid(const ExtArray& e) {
  const std::size_t n = e.num_qubits();
  const auto& rows = e.rows();
  if (rows.size() > n) return false;
  for (const auto& r : rows) {
    if (r.is_identity() || excluded(r, n)) return false;
  }
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (!rows[a].is_heart_row() && !rows[b].is_heart_row()) {
        if (!row_commutes(rows[a].to_pauli(), rows[b].to_pauli())) return false;
      } else if (!potential_commute(rows[a], rows[b])) {
        return false;
      }
    }
  }
  const auto l = e.l_rows();
  return gf2_rank(l) == l.size();
}

bool l_span_contains(const ExtArray& e, const PauliRow& p) {
  if (p.size() != e.num_qubits()) throw std::invalid_argument("membership query width mismatch");
  return in_echelon_span(row_echelon(e.l_rows()), p);
}

std::optional<StabArray> normalize(const ExtArray& e) {
  auto l = row_echelon(e.l_rows());
  if (l.empty()) return std::nullopt;
  return StabArray(e.num_qubits(), std::move(l));
}

ExtArray canonicalize(const ExtArray& e) {
  const std::size_t n = e.num_qubits();
  const auto l = row_echelon(e.l_rows());

  std::vector<ExtRow> hearts;
  for (const auto& h : e.heart_rows()) {
    // Hearts absorb whatever an L-row holds there, so reduce against the
    // L-span with those columns blanked out.
    const std::uint64_t keep = ~h.heart_bits() & low_mask(n);
    std::vector<PauliRow> projected;
    projected.reserve(l.size());
    for (const auto& r : l) projected.emplace_back(n, r.x_bits() & keep, r.z_bits() & keep);
    PauliRow rest(n, h.x_bits(), h.z_bits());
    for (const auto& r : row_echelon(std::move(projected))) {
      const std::size_t col = pivot_column(r);
      const std::uint64_t word = (col % 2 == 0) ? rest.x_bits() : rest.z_bits();
      if ((word >> (col / 2)) & 1) rest *= r;
    }
    hearts.emplace_back(n, rest.x_bits(), rest.z_bits(), h.heart_bits());
  }
  std::sort(hearts.begin(), hearts.end(),
            [](const ExtRow& a, const ExtRow& b) { return a.str() < b.str(); });
  hearts.erase(std::unique(hearts.begin(), hearts.end()), hearts.end());

  std::vector<ExtRow> rows;
  rows.reserve(l.size() + hearts.size());
  for (const auto& r : l) rows.emplace_back(r);
  rows.insert(rows.end(), hearts.begin(), hearts.end());
  return ExtArray(n, std::move(rows));
}

ExtArray add_heart(std::size_t i, const ExtArray& e) {
  if (i >= e.num_qubits()) throw std::out_of_range("heart column outside block");
  std::vector<ExtRow> rows = e.rows();
  clear_column(rows, i);
  for (auto& r : rows) {
    if (has_xy(r, i)) r.set(i, Cell::Heart);
  }
  return ExtArray(e.num_qubits(), std::move(rows));
}

MeasBlockResult meas_e_block(std::size_t i, const ExtArray& e) {
  const std::size_t n = e.num_qubits();
  if (i >= n) throw std::out_of_range("measured qubit outside block");
  if (n < 2) throw std::invalid_argument("meas_e_block needs at least two qubits");
  std::vector<ExtRow> rows = e.rows();
  clear_column(rows, i);

  std::optional<std::size_t> carrier;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if ((rows[r].heart_bits() >> i) & 1) return MeasUnknown{};
    if (!has_xy(rows[r], i)) continue;
    if (carrier) return MeasUnknown{};
    carrier = r;
  }

  std::vector<ExtRow> rest;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (carrier && r == *carrier) continue;
    ExtRow cut = rows[r].erase_column(i);
    if (cut.is_identity()) continue;
    if (cut.is_heart_row() && excluded(cut, n - 1)) continue;
    rest.push_back(std::move(cut));
  }
  ExtArray out = canonicalize(ExtArray(n - 1, std::move(rest)));
  if (out.num_rows() > n - 1) {
    std::vector<ExtRow> trimmed = out.rows();
    while (trimmed.size() > n - 1 && trimmed.back().is_heart_row()) trimmed.pop_back();
    out = ExtArray(n - 1, std::move(trimmed));
  }
  return MeasSplit{std::move(out)};
}

ExtArray tensor_e(const ExtArray& e, const ExtArray& f) {
  const std::size_t n = e.num_qubits() + f.num_qubits();
  if (n > kMaxQubits) throw std::invalid_argument("tensor product too wide");
  std::vector<ExtRow> rows;
  rows.reserve(e.num_rows() + f.num_rows());
  for (const auto& r : e.rows()) rows.emplace_back(n, r.x_bits(), r.z_bits(), r.heart_bits());
  const std::size_t shift = e.num_qubits();
  for (const auto& r : f.rows()) {
    rows.emplace_back(n, r.x_bits() << shift, r.z_bits() << shift, r.heart_bits() << shift);
  }
  return ExtArray(n, std::move(rows));
}

ExtArray conj_1q(Gate g, std::size_t q, const ExtArray& e) {
  if (q >= e.num_qubits()) throw std::out_of_range("gate index outside block");
  std::vector<ExtRow> rows;
  rows.reserve(e.num_rows());
  for (const auto& r : e.rows()) rows.push_back(conj_1q(g, q, r));
  return ExtArray(e.num_qubits(), std::move(rows));
}

ExtArray conj_cx(std::size_t control, std::size_t target, const ExtArray& e) {
  if (control >= e.num_qubits() || target >= e.num_qubits()) {
    throw std::out_of_range("CX index outside block");
  }
  std::vector<ExtRow> rows;
  rows.reserve(e.num_rows());
  for (const auto& r : e.rows()) rows.push_back(conj_cx(control, target, r));
  return ExtArray(e.num_qubits(), std::move(rows));
}

}  // namespace qilent
