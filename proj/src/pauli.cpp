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

#include "qilent/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qilent {

namespace {

std::uint64_t bit(std::size_t q) { return std::uint64_t{1} << q; }

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Removes bit q and shifts the higher bits down.
std::uint64_t erase_bit(std::uint64_t v, std::size_t q) {
  const std::uint64_t low = v & low_mask(q);
  const std::uint64_t high = q + 1 >= 64 ? 0 : (v >> (q + 1)) << q;
  return low | high;
}

void check_size(std::size_t n) {
  if (n > kMaxQubits) {
    throw std::invalid_argument("row length " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxQubits) + " qubits");
  }
}

void check_index(std::size_t q, std::size_t n) {
  if (q >= n) {
    throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for row of length " +
                            std::to_string(n));
  }
}

void check_lengths(std::size_t a, std::size_t b) {
  if (a != b) {
    throw std::invalid_argument("row length mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

char to_char(Cell c) {
  if (c == Cell::Heart) return '?';
  return to_char(static_cast<Pauli>(c));
}

Pauli pauli_from_char(char ch) {
  switch (ch) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: break;
  }
  throw std::invalid_argument(std::string("not a Pauli character: '") + ch + "'");
}

Cell cell_from_char(char ch) {
  if (ch == '?') return Cell::Heart;
  return to_cell(pauli_from_char(ch));
}

char to_char(Gate g) {
  switch (g) {
    case Gate::X: return 'X';
    case Gate::Y: return 'Y';
    case Gate::Z: return 'Z';
    case Gate::H: return 'H';
    case Gate::S: return 'S';
    case Gate::T: return 'T';
  }
  return '?';
}

std::string_view gate_name(Gate g) {
  switch (g) {
    case Gate::X: return "X";
    case Gate::Y: return "Y";
    case Gate::Z: return "Z";
    case Gate::H: return "H";
    case Gate::S: return "S";
    case Gate::T: return "T";
  }
  return "?";
}

bool is_clifford(Gate g) { return g != Gate::T; }

Pauli conj_1q(Gate g, Pauli c) {
  switch (g) {
    // Paulis only flip signs, and signs are not tracked.
    case Gate::X:
    case Gate::Y:
    case Gate::Z:
      return c;
    case Gate::H:
      if (c == Pauli::X) return Pauli::Z;
      if (c == Pauli::Z) return Pauli::X;
      return c;
    case Gate::S:
      if (c == Pauli::X) return Pauli::Y;
      if (c == Pauli::Y) return Pauli::X;
      return c;
    case Gate::T:
      break;
  }
  throw std::invalid_argument("T is not a Clifford gate; it has no Pauli conjugation table");
}

Cell conj_1q(Gate g, Cell c) {
  if (c == Cell::Heart) {
    if (g == Gate::T) throw std::invalid_argument("T is not a Clifford gate");
    return c;
  }
  return to_cell(conj_1q(g, static_cast<Pauli>(c)));
}

std::pair<Pauli, Pauli> conj_cx(Pauli control, Pauli target) {
  const auto c = static_cast<std::uint8_t>(control);
  const auto t = static_cast<std::uint8_t>(target);
  // x_t ^= x_c, z_c ^= z_t
  const std::uint8_t new_t = t ^ (c & 1);
  const std::uint8_t new_c = c ^ (t & 2);
  return {static_cast<Pauli>(new_c), static_cast<Pauli>(new_t)};
}

std::pair<Cell, Cell> conj_cx(Cell control, Cell target) {
  if (control == Cell::Heart || target == Cell::Heart) return {Cell::Heart, Cell::Heart};
  auto [c, t] = conj_cx(static_cast<Pauli>(control), static_cast<Pauli>(target));
  return {to_cell(c), to_cell(t)};
}

// ---------------------------------------------------------------------------
// PauliRow

PauliRow::PauliRow(std::size_t n) : n_(static_cast<std::uint32_t>(n)) { check_size(n); }

PauliRow::PauliRow(std::size_t n, std::uint64_t x, std::uint64_t z)
    : x_(x), z_(z), n_(static_cast<std::uint32_t>(n)) {
  check_size(n);
  if (((x | z) & ~low_mask(n)) != 0) throw std::invalid_argument("row bits exceed row length");
}

PauliRow PauliRow::from_string(std::string_view text) {
  PauliRow row(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) row.set(q, pauli_from_char(text[q]));
  return row;
}

PauliRow PauliRow::single(std::size_t n, std::size_t q, Pauli p) {
  PauliRow row(n);
  row.set(q, p);
  return row;
}

Pauli PauliRow::operator[](std::size_t q) const {
  check_index(q, n_);
  return static_cast<Pauli>(((x_ >> q) & 1) | (((z_ >> q) & 1) << 1));
}

void PauliRow::set(std::size_t q, Pauli p) {
  check_index(q, n_);
  const auto v = static_cast<std::uint8_t>(p);
  x_ = (x_ & ~bit(q)) | ((v & 1) ? bit(q) : 0);
  z_ = (z_ & ~bit(q)) | ((v & 2) ? bit(q) : 0);
}

std::size_t PauliRow::weight() const { return static_cast<std::size_t>(std::popcount(x_ | z_)); }

std::string PauliRow::str() const {
  std::string s(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) s[q] = to_char((*this)[q]);
  return s;
}

PauliRow& PauliRow::operator*=(const PauliRow& other) {
  check_lengths(n_, other.n_);
  x_ ^= other.x_;
  z_ ^= other.z_;
  return *this;
}

PauliRow PauliRow::erase_column(std::size_t q) const {
  check_index(q, n_);
  return PauliRow(n_ - 1, erase_bit(x_, q), erase_bit(z_, q));
}

PauliRow row_mul(const PauliRow& a, const PauliRow& b) {
  PauliRow out = a;
  out *= b;
  return out;
}

bool row_commutes(const PauliRow& a, const PauliRow& b) {
  check_lengths(a.size(), b.size());
  const std::uint64_t form = (a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits());
  return (std::popcount(form) & 1) == 0;
}

PauliRow conj_1q(Gate g, std::size_t q, PauliRow row) {
  row.set(q, conj_1q(g, row[q]));
  return row;
}

PauliRow conj_cx(std::size_t control, std::size_t target, PauliRow row) {
  if (control == target) throw std::invalid_argument("CX needs distinct control and target");
  auto [c, t] = conj_cx(row[control], row[target]);
  row.set(control, c);
  row.set(target, t);
  return row;
}

// ---------------------------------------------------------------------------
// ExtRow

ExtRow::ExtRow(std::size_t n) : n_(static_cast<std::uint32_t>(n)) { check_size(n); }

ExtRow::ExtRow(const PauliRow& row)
    : x_(row.x_bits()), z_(row.z_bits()), n_(static_cast<std::uint32_t>(row.size())) {}

ExtRow::ExtRow(std::size_t n, std::uint64_t x, std::uint64_t z, std::uint64_t heart)
    : x_(x & ~heart), z_(z & ~heart), heart_(heart), n_(static_cast<std::uint32_t>(n)) {
  check_size(n);
  if (((x | z | heart) & ~low_mask(n)) != 0) {
    throw std::invalid_argument("row bits exceed row length");
  }
}

ExtRow ExtRow::from_string(std::string_view text) {
  ExtRow row(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) row.set(q, cell_from_char(text[q]));
  return row;
}

Cell ExtRow::operator[](std::size_t q) const {
  check_index(q, n_);
  if ((heart_ >> q) & 1) return Cell::Heart;
  return static_cast<Cell>(((x_ >> q) & 1) | (((z_ >> q) & 1) << 1));
}

void ExtRow::set(std::size_t q, Cell c) {
  check_index(q, n_);
  x_ &= ~bit(q);
  z_ &= ~bit(q);
  heart_ &= ~bit(q);
  if (c == Cell::Heart) {
    heart_ |= bit(q);
    return;
  }
  const auto v = static_cast<std::uint8_t>(c);
  if (v & 1) x_ |= bit(q);
  if (v & 2) z_ |= bit(q);
}

std::size_t ExtRow::weight() const {
  return static_cast<std::size_t>(std::popcount(x_ | z_ | heart_));
}

PauliRow ExtRow::to_pauli() const {
  if (is_heart_row()) throw std::logic_error("heart row has no Pauli form: " + str());
  return PauliRow(n_, x_, z_);
}

std::string ExtRow::str() const {
  std::string s(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) s[q] = to_char((*this)[q]);
  return s;
}

ExtRow& ExtRow::operator*=(const ExtRow& other) {
  check_lengths(n_, other.n_);
  heart_ |= other.heart_;
  x_ = (x_ ^ other.x_) & ~heart_;
  z_ = (z_ ^ other.z_) & ~heart_;
  return *this;
}

ExtRow ExtRow::erase_column(std::size_t q) const {
  check_index(q, n_);
  return ExtRow(n_ - 1, erase_bit(x_, q), erase_bit(z_, q), erase_bit(heart_, q));
}

ExtRow row_mul(const ExtRow& a, const ExtRow& b) {
  ExtRow out = a;
  out *= b;
  return out;
}

bool potential_commute(const ExtRow& a, const ExtRow& b) {
  check_lengths(a.size(), b.size());
  const std::uint64_t a_support = a.x_bits() | a.z_bits();
  const std::uint64_t b_support = b.x_bits() | b.z_bits();
  // A heart facing anything but I can be substituted to fix the parity.
  const std::uint64_t free = (a.heart_bits() & (b_support | b.heart_bits())) |
                             (b.heart_bits() & a_support);
  if (free != 0) return true;
  const std::uint64_t form = (a.x_bits() & b.z_bits()) ^ (a.z_bits() & b.x_bits());
  return (std::popcount(form) & 1) == 0;
}

ExtRow conj_1q(Gate g, std::size_t q, ExtRow row) {
  row.set(q, conj_1q(g, row[q]));
  return row;
}

ExtRow conj_cx(std::size_t control, std::size_t target, ExtRow row) {
  if (control == target) throw std::invalid_argument("CX needs distinct control and target");
  auto [c, t] = conj_cx(row[control], row[target]);
  row.set(control, c);
  row.set(target, t);
  return row;
}

}  // namespace qilent
