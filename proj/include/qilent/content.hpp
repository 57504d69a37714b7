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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qilent/extended.hpp"
#include "qilent/stabilizer.hpp"

namespace qilent {

/// Maximally mixed single qubit (the bottom of the content order).
struct Identity {
  friend bool operator==(Identity, Identity) { return true; }
};

/// No information (the top of the content order).
struct Opaque {
  friend bool operator==(Opaque, Opaque) { return true; }
};

using Content = std::variant<Identity, StabArray, ExtArray, Opaque>;

/// Sorted ascending, no duplicates.
using QubitSet = std::vector<std::size_t>;

/// Local index k of the content refers to qubits[k].
struct Block {
  QubitSet qubits;
  Content content;

  friend bool operator==(const Block&, const Block&) = default;
};

inline bool is_identity(const Content& c) { return std::holds_alternative<Identity>(c); }
inline bool is_opaque(const Content& c) { return std::holds_alternative<Opaque>(c); }
inline bool is_stab(const Content& c) { return std::holds_alternative<StabArray>(c); }
inline bool is_ext(const Content& c) { return std::holds_alternative<ExtArray>(c); }

/// "identity", "stabilizer", "extended" or "opaque".
std::string_view kind_name(const Content& c);

/// Row strings ('?' for hearts); empty for identity and opaque.
std::vector<std::string> content_rows(const Content& c);

/// Short text form such as "<XX,ZZ>", "{X?X,ZZI}", "1" or "#".
std::string content_str(const Content& c);

/// Single-generator content <p> on one qubit.
Content single_pauli(Pauli p);

/// Storage form on a block of n qubits. Arrays are canonicalized, a
/// generator-free array becomes opaque, heart rows supported on one qubit are
/// dropped, and a heart-free extended array becomes a stabilizer array.
Content settle(std::size_t n, Content c);

/// Width the content claims, or 0 for identity/opaque (which fit any block
/// they are allowed on).
std::size_t content_width(const Content& c);

}  // namespace qilent
