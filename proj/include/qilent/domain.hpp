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
#include <optional>
#include <string>
#include <vector>

#include "qilent/content.hpp"

namespace qilent {

enum class Domain { C, E };

/// A partition of {0, ..., n-1} into blocks, each with a content.
///
/// Construction checks that the blocks partition the qubits and that each
/// content fits its block, puts contents in storage form (see settle) and
/// orders blocks by their smallest qubit. Domain-specific rules are checked
/// separately by well_formed_violation.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::size_t n, std::vector<Block> blocks);

  /// One opaque block holding every qubit.
  static Assignment top(std::size_t n);
  /// Every qubit its own identity block.
  static Assignment bottom(std::size_t n);
  /// Every qubit its own <Z> block.
  static Assignment zeros(std::size_t n);

  std::size_t num_qubits() const { return n_; }
  const std::vector<Block>& blocks() const { return blocks_; }

  const Block& block_of(std::size_t q) const;
  std::size_t block_index(std::size_t q) const;
  const Content& content_of(std::size_t q) const { return block_of(q).content; }
  bool same_block(std::size_t a, std::size_t b) const;
  /// Position of q inside its block.
  std::size_t local_index(std::size_t q) const;

  bool has_extended() const;

  /// Deterministic text form, equal iff the assignments are equal.
  std::string key() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Block> blocks_;
  std::vector<std::size_t> owner_;
};

/// Reason the assignment is not an element of the domain, if any. The C
/// domain wants full-rank stabilizer blocks without single-qubit members and
/// no hearts; the E domain wants valid extended arrays and no single-qubit
/// member in the L-span of a multi-qubit block.
std::optional<std::string> well_formed_violation(const Assignment& a, Domain d);

// Content order: identity below everything, opaque above everything.
bool leq_s(const Content& s, const Content& t);
Content join_s(const Content& s, const Content& t);

/// Content a reads on the qubit set `probe`: the content of the block equal
/// to probe if there is one, identity if every probed qubit is an identity
/// block, opaque otherwise.
Content odot(const Assignment& a, const QubitSet& probe);

bool leq_c(const Assignment& a, const Assignment& b);
Assignment join_c(const Assignment& a, const Assignment& b);
Assignment meet_c(const Assignment& a, const Assignment& b);

/// Drops every heart row.
Assignment normal_form(const Assignment& g);
/// Join of the normal forms.
Assignment join_approx(const Assignment& g, const Assignment& d);

/// Removes the blocks meeting `qubits` and inserts `blocks`, which must cover
/// exactly the removed qubits.
Assignment replace(const Assignment& a, const QubitSet& qubits, std::vector<Block> blocks);
/// Replaces the content of q's block.
Assignment replace_content(const Assignment& a, std::size_t q, Content c);

}  // namespace qilent
