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
#include <string>
#include <string_view>
#include <utility>

namespace qilent {

/// Largest block a row can describe; rows are packed into 64-bit words.
inline constexpr std::size_t kMaxQubits = 64;

/// Signless single-qubit Pauli. The value is the symplectic pair
/// (bit 0 = x part, bit 1 = z part), so products are plain XOR.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

/// A cell of an extended row: a Pauli or the unknown-unitary marker.
enum class Cell : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3, Heart = 4 };

/// Single-qubit gates of the language. Only X, Y, Z, H and S are Clifford.
enum class Gate : std::uint8_t { X, Y, Z, H, S, T };

constexpr Pauli cell_mul(Pauli a, Pauli b) {
  return static_cast<Pauli>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

/// Product with the heart absorbing everything it touches.
constexpr Cell cell_mul(Cell a, Cell b) {
  if (a == Cell::Heart || b == Cell::Heart) return Cell::Heart;
  return static_cast<Cell>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr Cell to_cell(Pauli p) { return static_cast<Cell>(p); }

char to_char(Pauli p);
char to_char(Cell c);
Pauli pauli_from_char(char ch);  // throws std::invalid_argument
Cell cell_from_char(char ch);    // accepts 'I' 'X' 'Y' 'Z' '?'
char to_char(Gate g);
std::string_view gate_name(Gate g);

bool is_clifford(Gate g);

/// Signless conjugation U c U^dagger for U in {X, Y, Z, H, S}.
/// Throws std::invalid_argument for T, whose image leaves the Pauli group.
Pauli conj_1q(Gate g, Pauli c);
Cell conj_1q(Gate g, Cell c);

/// True when the cell stops a row from commuting with Z on that qubit.
constexpr bool t_blocks(Cell c) { return c != Cell::I && c != Cell::Z; }

/// Signless conjugation by CX on (control, target) cells.
std::pair<Pauli, Pauli> conj_cx(Pauli control, Pauli target);
std::pair<Cell, Cell> conj_cx(Cell control, Cell target);

/// A signless Pauli operator on n <= 64 qubits. Character k of the string
/// form (and bit k of each mask) is local qubit k.
class PauliRow {
 public:
  PauliRow() = default;
  explicit PauliRow(std::size_t n);
  PauliRow(std::size_t n, std::uint64_t x, std::uint64_t z);

  static PauliRow from_string(std::string_view text);
  static PauliRow single(std::size_t n, std::size_t q, Pauli p);

  std::size_t size() const { return n_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }

  Pauli operator[](std::size_t q) const;
  void set(std::size_t q, Pauli p);

  bool is_identity() const { return (x_ | z_) == 0; }
  std::size_t weight() const;
  std::string str() const;

  /// Cellwise product (XOR of the symplectic encodings).
  PauliRow& operator*=(const PauliRow& other);

  /// Drops column q, shifting higher columns down by one.
  PauliRow erase_column(std::size_t q) const;

  friend bool operator==(const PauliRow&, const PauliRow&) = default;

 private:
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  std::uint32_t n_ = 0;
};

PauliRow row_mul(const PauliRow& a, const PauliRow& b);
bool row_commutes(const PauliRow& a, const PauliRow& b);

PauliRow conj_1q(Gate g, std::size_t q, PauliRow row);
PauliRow conj_cx(std::size_t control, std::size_t target, PauliRow row);

/// Row of an extended array: heart cells are flagged in a separate mask and
/// carry zero x/z bits.
class ExtRow {
 public:
  ExtRow() = default;
  explicit ExtRow(std::size_t n);
  explicit ExtRow(const PauliRow& row);
  ExtRow(std::size_t n, std::uint64_t x, std::uint64_t z, std::uint64_t heart);

  static ExtRow from_string(std::string_view text);

  std::size_t size() const { return n_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  std::uint64_t heart_bits() const { return heart_; }

  Cell operator[](std::size_t q) const;
  void set(std::size_t q, Cell c);

  /// L-row (false) or heart-row (true); a pure function of the cells.
  bool is_heart_row() const { return heart_ != 0; }
  bool is_identity() const { return (x_ | z_ | heart_) == 0; }
  /// Number of non-I cells, hearts included.
  std::size_t weight() const;

  /// Only valid for L-rows.
  PauliRow to_pauli() const;
  std::string str() const;

  ExtRow& operator*=(const ExtRow& other);
  ExtRow erase_column(std::size_t q) const;

  friend bool operator==(const ExtRow&, const ExtRow&) = default;

 private:
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  std::uint64_t heart_ = 0;
  std::uint32_t n_ = 0;
};

ExtRow row_mul(const ExtRow& a, const ExtRow& b);

/// Whether some substitution of I/X/Y/Z for every heart makes the rows commute.
bool potential_commute(const ExtRow& a, const ExtRow& b);

ExtRow conj_1q(Gate g, std::size_t q, ExtRow row);
ExtRow conj_cx(std::size_t control, std::size_t target, ExtRow row);

}  // namespace qilent
