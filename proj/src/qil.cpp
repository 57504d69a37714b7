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

#include "qilent/qil.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <utility>
#include <vector>

namespace qilent {

namespace {

StmtPtr node(Stmt s) { return std::make_shared<const Stmt>(std::move(s)); }

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Int, LParen, RParen, Comma, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Int: return "number '" + t.text + "'";
    case Tok::Ident: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t m = 0; m < k; ++m) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    const char ch = src[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    if (ch == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const SourcePos pos{line, col};
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), pos});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (ch) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semi; break;
      default: throw ParseError(pos, std::string("unexpected character '") + ch + "'");
    }
    out.push_back({kind, std::string(1, ch), pos});
    advance(1);
  }
  out.push_back({Tok::End, "", SourcePos{line, col}});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

std::optional<Gate> gate_keyword(std::string_view word) {
  if (word == "X") return Gate::X;
  if (word == "Y") return Gate::Y;
  if (word == "Z") return Gate::Z;
  if (word == "H") return Gate::H;
  if (word == "S") return Gate::S;
  if (word == "T") return Gate::T;
  return std::nullopt;
}

std::optional<std::size_t> parse_number(std::string_view digits) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return value;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program program() {
    expect_word("qubits");
    const Token& count = expect(Tok::Int, "a qubit count");
    auto n = parse_number(count.text);
    if (!n || *n == 0) throw ParseError(count.pos, "qubit count must be a positive integer");
    n_ = *n;
    expect(Tok::Semi, "';' after the qubit count");
    StmtPtr body = stmt();
    if (peek().kind == Tok::Semi) next();  // tolerate a trailing separator
    if (peek().kind != Tok::End) {
      throw ParseError(peek().pos, "expected ';' or end of input, found " + describe(peek()));
    }
    return Program{n_, std::move(body)};
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  bool at_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) {
      throw ParseError(peek().pos, "expected " + what + ", found " + describe(peek()));
    }
    return next();
  }

  const Token& expect_word(std::string_view w) {
    if (!at_word(w)) {
      throw ParseError(peek().pos,
                       "expected '" + std::string(w) + "', found " + describe(peek()));
    }
    return next();
  }

  std::size_t qvar() {
    const Token& t = peek();
    if (t.kind != Tok::Ident || t.text.size() < 2 || t.text[0] != 'q') {
      throw ParseError(t.pos, "expected a qubit such as q0, found " + describe(t));
    }
    auto idx = parse_number(std::string_view(t.text).substr(1));
    if (!idx) throw ParseError(t.pos, "malformed qubit name '" + t.text + "'");
    if (*idx >= n_) {
      throw ParseError(t.pos, "qubit " + t.text + " out of range for " + std::to_string(n_) +
                                  " qubits");
    }
    next();
    return *idx;
  }

  StmtPtr stmt() {
    StmtPtr head = atom();
    if (peek().kind == Tok::Semi && toks_[pos_ + 1].kind == Tok::Ident) {
      const std::string& w = toks_[pos_ + 1].text;
      if (w != "fi" && w != "else" && w != "od") {
        next();
        return make_seq(std::move(head), stmt());
      }
    }
    return head;
  }

  StmtPtr atom() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) throw ParseError(t.pos, "expected a statement, found " + describe(t));
    const SourcePos pos = t.pos;
    StmtPtr out;
    if (t.text == "skip") {
      next();
      out = make_skip();
    } else if (auto g = gate_keyword(t.text)) {
      next();
      expect(Tok::LParen, "'('");
      const std::size_t q = qvar();
      expect(Tok::RParen, "')'");
      out = make_gate(*g, q);
    } else if (t.text == "CX") {
      next();
      expect(Tok::LParen, "'('");
      const SourcePos cpos = peek().pos;
      const std::size_t c = qvar();
      expect(Tok::Comma, "','");
      const std::size_t tq = qvar();
      expect(Tok::RParen, "')'");
      if (c == tq) throw ParseError(cpos, "CX needs distinct control and target");
      out = make_cx(c, tq);
    } else if (t.text == "meas") {
      next();
      expect(Tok::LParen, "'('");
      const std::size_t q = qvar();
      expect(Tok::RParen, "')'");
      out = make_meas(q);
    } else if (t.text == "init") {
      next();
      if (peek().kind == Tok::LParen) {
        next();
        const std::size_t q = qvar();
        expect(Tok::RParen, "')'");
        out = make_init(q);
      } else {
        out = make_init_all();
      }
    } else if (t.text == "if") {
      next();
      const std::size_t q = qvar();
      expect_word("then");
      StmtPtr a = stmt();
      expect_word("else");
      StmtPtr b = stmt();
      expect_word("fi");
      out = make_if(q, std::move(a), std::move(b));
    } else if (t.text == "while") {
      next();
      const std::size_t q = qvar();
      expect_word("do");
      StmtPtr body = stmt();
      expect_word("od");
      out = make_while(q, std::move(body));
    } else {
      throw ParseError(t.pos, "unknown statement " + describe(t));
    }
    Stmt copy = *out;
    copy.pos = pos;
    return node(std::move(copy));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t n_ = 0;
};

// ---------------------------------------------------------------------------
// Pretty printer

std::string qname(std::size_t q) { return "q" + std::to_string(q); }

void emit(const Stmt& s, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  switch (s.kind) {
    case StmtKind::Skip: out += pad + "skip"; return;
    case StmtKind::Seq:
      emit(*s.first, indent, out);
      out += ";\n";
      emit(*s.second, indent, out);
      return;
    case StmtKind::Gate1:
      out += pad + std::string(gate_name(s.gate)) + "(" + qname(s.q) + ")";
      return;
    case StmtKind::CX: out += pad + "CX(" + qname(s.q) + ", " + qname(s.t) + ")"; return;
    case StmtKind::If:
      out += pad + "if " + qname(s.q) + " then\n";
      emit(*s.first, indent + 2, out);
      out += "\n" + pad + "else\n";
      emit(*s.second, indent + 2, out);
      out += "\n" + pad + "fi";
      return;
    case StmtKind::While:
      out += pad + "while " + qname(s.q) + " do\n";
      emit(*s.first, indent + 2, out);
      out += "\n" + pad + "od";
      return;
    case StmtKind::Meas: out += pad + "meas(" + qname(s.q) + ")"; return;
    case StmtKind::Init: out += pad + "init(" + qname(s.q) + ")"; return;
    case StmtKind::InitAll: out += pad + "init"; return;
  }
}

StmtPtr desugar_stmt(const StmtPtr& s, std::size_t n) {
  switch (s->kind) {
    case StmtKind::Meas: return make_if(s->q, make_skip(), make_skip());
    case StmtKind::Init: return make_if(s->q, make_skip(), make_gate(Gate::X, s->q));
    case StmtKind::InitAll: {
      StmtPtr out = make_if(n - 1, make_skip(), make_gate(Gate::X, n - 1));
      for (std::size_t q = n - 1; q-- > 0;) {
        out = make_seq(make_if(q, make_skip(), make_gate(Gate::X, q)), out);
      }
      return out;
    }
    case StmtKind::Seq: {
      // INIT expands to a sequence; re-associate so the result stays
      // right-nested like parser output.
      StmtPtr head = desugar_stmt(s->first, n);
      StmtPtr tail = desugar_stmt(s->second, n);
      std::vector<StmtPtr> parts;
      while (head->kind == StmtKind::Seq) {
        parts.push_back(head->first);
        head = head->second;
      }
      parts.push_back(head);
      StmtPtr out = tail;
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) out = make_seq(*it, out);
      return out;
    }
    case StmtKind::If:
      return make_if(s->q, desugar_stmt(s->first, n), desugar_stmt(s->second, n));
    case StmtKind::While: return make_while(s->q, desugar_stmt(s->first, n));
    default: return s;
  }
}

void validate_stmt(const Stmt& s, std::size_t n) {
  auto check = [&](std::size_t q) {
    if (q >= n) {
      throw std::invalid_argument("qubit q" + std::to_string(q) + " out of range for " +
                                  std::to_string(n) + " qubits");
    }
  };
  switch (s.kind) {
    case StmtKind::Skip:
    case StmtKind::InitAll: return;
    case StmtKind::Seq:
      validate_stmt(*s.first, n);
      validate_stmt(*s.second, n);
      return;
    case StmtKind::CX:
      check(s.q);
      check(s.t);
      if (s.q == s.t) throw std::invalid_argument("CX needs distinct control and target");
      return;
    case StmtKind::If:
      check(s.q);
      validate_stmt(*s.first, n);
      validate_stmt(*s.second, n);
      return;
    case StmtKind::While:
      check(s.q);
      validate_stmt(*s.first, n);
      return;
    default: check(s.q); return;
  }
}

}  // namespace

bool same_stmt(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case StmtKind::Skip:
    case StmtKind::InitAll: return true;
    case StmtKind::Seq: return same_stmt(*a.first, *b.first) && same_stmt(*a.second, *b.second);
    case StmtKind::Gate1: return a.gate == b.gate && a.q == b.q;
    case StmtKind::CX: return a.q == b.q && a.t == b.t;
    case StmtKind::If:
      return a.q == b.q && same_stmt(*a.first, *b.first) && same_stmt(*a.second, *b.second);
    case StmtKind::While: return a.q == b.q && same_stmt(*a.first, *b.first);
    case StmtKind::Meas:
    case StmtKind::Init: return a.q == b.q;
  }
  return false;
}

StmtPtr make_skip() { return node(Stmt{}); }

StmtPtr make_seq(StmtPtr a, StmtPtr b) {
  Stmt s;
  s.kind = StmtKind::Seq;
  s.first = std::move(a);
  s.second = std::move(b);
  return node(std::move(s));
}

StmtPtr make_gate(Gate g, std::size_t q) {
  Stmt s;
  s.kind = StmtKind::Gate1;
  s.gate = g;
  s.q = q;
  return node(std::move(s));
}

StmtPtr make_cx(std::size_t control, std::size_t target) {
  Stmt s;
  s.kind = StmtKind::CX;
  s.q = control;
  s.t = target;
  return node(std::move(s));
}

StmtPtr make_if(std::size_t q, StmtPtr then_branch, StmtPtr else_branch) {
  Stmt s;
  s.kind = StmtKind::If;
  s.q = q;
  s.first = std::move(then_branch);
  s.second = std::move(else_branch);
  return node(std::move(s));
}

StmtPtr make_while(std::size_t q, StmtPtr body) {
  Stmt s;
  s.kind = StmtKind::While;
  s.q = q;
  s.first = std::move(body);
  return node(std::move(s));
}

StmtPtr make_meas(std::size_t q) {
  Stmt s;
  s.kind = StmtKind::Meas;
  s.q = q;
  return node(std::move(s));
}

StmtPtr make_init(std::size_t q) {
  Stmt s;
  s.kind = StmtKind::Init;
  s.q = q;
  return node(std::move(s));
}

StmtPtr make_init_all() {
  Stmt s;
  s.kind = StmtKind::InitAll;
  return node(std::move(s));
}

bool same_program(const Program& a, const Program& b) {
  return a.num_qubits == b.num_qubits && same_stmt(*a.body, *b.body);
}

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " +
                         message),
      pos_(pos),
      detail_(message) {}

Program parse(std::string_view source) { return Parser(lex(source)).program(); }

Program desugar(const Program& p) {
  validate(p);
  return Program{p.num_qubits, desugar_stmt(p.body, p.num_qubits)};
}

bool has_sugar(const Stmt& s) {
  switch (s.kind) {
    case StmtKind::Meas:
    case StmtKind::Init:
    case StmtKind::InitAll: return true;
    case StmtKind::Seq:
    case StmtKind::If: return has_sugar(*s.first) || has_sugar(*s.second);
    case StmtKind::While: return has_sugar(*s.first);
    default: return false;
  }
}

std::string pretty(const Stmt& s) {
  std::string out;
  emit(s, 0, out);
  return out;
}

std::string pretty(const Program& p) {
  return "qubits " + std::to_string(p.num_qubits) + ";\n" + pretty(*p.body);
}

void validate(const Program& p) {
  if (p.num_qubits == 0) throw std::invalid_argument("a program needs at least one qubit");
  if (!p.body) throw std::invalid_argument("program has no body");
  validate_stmt(*p.body, p.num_qubits);
}

std::size_t stmt_size(const Stmt& s) {
  std::size_t k = 1;
  if (s.first) k += stmt_size(*s.first);
  if (s.second) k += stmt_size(*s.second);
  return k;
}

}  // namespace qilent
