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
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qilent/pauli.hpp"

namespace qilent {

enum class StmtKind {
  Skip,
  Seq,
  Gate1,
  CX,
  If,
  While,
  // Derived forms, removed by desugar().
  Meas,
  Init,
  InitAll,
};

struct SourcePos {
  std::size_t line = 0;  // 1-based; 0 when synthesized
  std::size_t col = 0;
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

/// Immutable AST node. Subtrees are shared, never mutated.
///
/// Field use by kind: Gate1 uses gate and q; CX uses q (control) and t
/// (target); If uses q, first (outcome 0) and second (outcome 1); While uses
/// q and first (the body, run on outcome 0); Seq uses first and second;
/// Meas and Init use q.
struct Stmt {
  StmtKind kind = StmtKind::Skip;
  Gate gate = Gate::X;
  std::size_t q = 0;
  std::size_t t = 0;
  StmtPtr first;
  StmtPtr second;
  SourcePos pos;
};

/// Structural equality; positions are ignored.
bool same_stmt(const Stmt& a, const Stmt& b);

StmtPtr make_skip();
StmtPtr make_seq(StmtPtr a, StmtPtr b);
StmtPtr make_gate(Gate g, std::size_t q);
StmtPtr make_cx(std::size_t control, std::size_t target);
StmtPtr make_if(std::size_t q, StmtPtr then_branch, StmtPtr else_branch);
StmtPtr make_while(std::size_t q, StmtPtr body);
StmtPtr make_meas(std::size_t q);
StmtPtr make_init(std::size_t q);
StmtPtr make_init_all();

struct Program {
  std::size_t num_qubits = 0;
  StmtPtr body;
};

bool same_program(const Program& a, const Program& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message);
  SourcePos pos() const { return pos_; }
  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  SourcePos pos_;
  std::string detail_;
};

/// Parses `qubits N; stmt`. Sequencing is right-associative. Derived forms
/// are kept; call desugar() before interpretation. Throws ParseError.
Program parse(std::string_view source);

/// Rewrites meas/init into if statements, leaving only core forms.
Program desugar(const Program& p);

/// Whether the statement contains derived forms.
bool has_sugar(const Stmt& s);

/// Source text that parses back to the same AST.
std::string pretty(const Program& p);
std::string pretty(const Stmt& s);

/// Checks indices against n and CX operands; throws std::invalid_argument.
void validate(const Program& p);

/// Number of AST nodes.
std::size_t stmt_size(const Stmt& s);

}  // namespace qilent
