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

#include "qilent/abstract_interp.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "qilent/update.hpp"

namespace qilent {

namespace {

QubitSet without(const QubitSet& qs, std::size_t q) {
  QubitSet out;
  out.reserve(qs.size());
  for (std::size_t r : qs) {
    if (r != q) out.push_back(r);
  }
  return out;
}

std::size_t position(const QubitSet& qs, std::size_t q) {
  return static_cast<std::size_t>(std::lower_bound(qs.begin(), qs.end(), q) - qs.begin());
}

ExtArray as_ext(const Content& c) {
  if (const auto* s = std::get_if<StabArray>(&c)) return ExtArray::from_stab(*s);
  return std::get<ExtArray>(c);
}

// Rows of c (laid out over `from`) re-laid over the sorted superset `to`.
ExtArray embed(const Content& c, const QubitSet& from, const QubitSet& to) {
  const ExtArray src = as_ext(c);
  std::vector<ExtRow> rows;
  for (const auto& r : src.rows()) {
    ExtRow wide(to.size());
    for (std::size_t k = 0; k < from.size(); ++k) wide.set(position(to, from[k]), r[k]);
    rows.push_back(wide);
  }
  return ExtArray(to.size(), std::move(rows));
}

Content back_to_stab(ExtArray e) {
  if (e.has_heart_rows()) return e;
  return StabArray(e.num_qubits(), e.l_rows());
}

bool column_blocks_t(const Content& c, std::size_t k) {
  if (const auto* s = std::get_if<StabArray>(&c)) {
    return std::any_of(s->rows().begin(), s->rows().end(),
                       [k](const PauliRow& r) { return t_blocks(to_cell(r[k])); });
  }
  if (const auto* e = std::get_if<ExtArray>(&c)) {
    // Hearts already stand for any unitary, so only X/Y cells matter.
    return std::any_of(e->rows().begin(), e->rows().end(), [k](const ExtRow& r) {
      return r[k] == Cell::X || r[k] == Cell::Y;
    });
  }
  return false;
}

bool is_single(const Assignment& a, std::size_t q, Pauli p) {
  const Block& b = a.block_of(q);
  return b.qubits.size() == 1 && b.content == single_pauli(p);
}

Assignment measure_split_opaque(std::size_t i, const Assignment& a) {
  const Block& b = a.block_of(i);
  return replace(a, {i},
                 {Block{{i}, single_pauli(Pauli::Z)}, Block{without(b.qubits, i), Opaque{}}});
}

class Interpreter {
 public:
  Interpreter(const AnalysisConfig& cfg, std::vector<TraceEntry>* trace)
      : cfg_(cfg), trace_(trace) {}

  Assignment run(const Stmt& s, const Assignment& a, const std::string& path) {
    switch (s.kind) {
      case StmtKind::Skip: return record(path, s, a);
      case StmtKind::Seq: return run_seq(s, a, path);
      case StmtKind::Gate1: return record(path, s, gate(s.gate, s.q, a));
      case StmtKind::CX: return record(path, s, cx(s.q, s.t, a));
      case StmtKind::If: {
        const Assignment m = meas(s.q, a);
        Assignment t = run(*s.first, m, sub(path, "then"));
        Assignment f = run(*s.second, m, sub(path, "else"));
        return record(path, s, join(t, f));
      }
      case StmtKind::While: return record(path, s, loop(s, a, path));
      default: throw AnalysisError("derived form in the analyzed program; desugar it first");
    }
  }

  Assignment meas(std::size_t i, const Assignment& a) const {
    return cfg_.domain == Domain::C ? meas_c(i, a) : meas_e(i, a);
  }

 private:
  bool extended() const { return cfg_.domain == Domain::E; }

  Assignment join(const Assignment& x, const Assignment& y) const {
    return extended() ? join_approx(x, y) : join_c(x, y);
  }

  std::vector<Block> split(const QubitSet& j, const QubitSet& a, const Content& c) const {
    return extended() ? update_e(j, a, c) : update(j, a, c);
  }

  static std::string sub(const std::string& path, const std::string& leg) {
    return path.empty() ? leg : path + "." + leg;
  }

  Assignment record(const std::string& path, const Stmt& s, Assignment a) {
    if (trace_) {
      std::string text;
      switch (s.kind) {
        case StmtKind::If: text = "if q" + std::to_string(s.q) + " ... fi"; break;
        case StmtKind::While: text = "while q" + std::to_string(s.q) + " ... od"; break;
        default: text = pretty(s); break;
      }
      trace_->push_back(TraceEntry{path.empty() ? text : path + " " + text, a});
    }
    return a;
  }

  Assignment run_seq(const Stmt& s, Assignment a, const std::string& path) {
    const Stmt* cur = &s;
    std::size_t k = 1;
    while (cur->kind == StmtKind::Seq) {
      a = run(*cur->first, a, sub(path, std::to_string(k++)));
      cur = cur->second.get();
    }
    return run(*cur, a, sub(path, std::to_string(k)));
  }

  Assignment gate(Gate g, std::size_t i, const Assignment& a) const {
    const Block& b = a.block_of(i);
    const std::size_t k = a.local_index(i);
    if (is_identity(b.content) || is_opaque(b.content)) return a;
    if (g != Gate::T) {
      if (const auto* s = std::get_if<StabArray>(&b.content)) {
        return replace_content(a, i, conj_1q(g, k, *s));
      }
      return replace_content(a, i, conj_1q(g, k, std::get<ExtArray>(b.content)));
    }
    if (!column_blocks_t(b.content, k)) return a;
    if (!extended()) return replace_content(a, i, Opaque{});
    return replace_content(a, i, add_heart(k, as_ext(b.content)));
  }

  Assignment cx(std::size_t i, std::size_t j, const Assignment& a) const {
    if (a.same_block(i, j)) {
      const Block& b = a.block_of(i);
      if (is_opaque(b.content)) return a;
      const ExtArray moved = conj_cx(a.local_index(i), a.local_index(j), as_ext(b.content));
      return replace(a, {i}, split(pair(i, j), b.qubits, back_to_stab(moved)));
    }
    const Content& ci = a.content_of(i);
    const Content& cj = a.content_of(j);
    if (is_single(a, i, Pauli::Z) || is_single(a, j, Pauli::X) ||
        (is_identity(ci) && is_identity(cj))) {
      return a;
    }
    if (is_identity(ci)) return replace_content(a, i, single_pauli(Pauli::Z));
    if (is_identity(cj)) return replace_content(a, j, single_pauli(Pauli::X));

    QubitSet merged = a.block_of(i).qubits;
    const QubitSet& other = a.block_of(j).qubits;
    merged.insert(merged.end(), other.begin(), other.end());
    std::sort(merged.begin(), merged.end());
    if (is_opaque(ci) || is_opaque(cj)) return replace(a, merged, {Block{merged, Opaque{}}});

    const ExtArray left = embed(ci, a.block_of(i).qubits, merged);
    const ExtArray right = embed(cj, other, merged);
    std::vector<ExtRow> rows = left.rows();
    rows.insert(rows.end(), right.rows().begin(), right.rows().end());
    const ExtArray moved =
        conj_cx(position(merged, i), position(merged, j), ExtArray(merged.size(), std::move(rows)));
    if (extended() && cfg_.strict_paper) {
      return replace(a, merged, {Block{merged, back_to_stab(moved)}});
    }
    return replace(a, merged, split(pair(i, j), merged, back_to_stab(moved)));
  }

  static QubitSet pair(std::size_t i, std::size_t j) {
    return i < j ? QubitSet{i, j} : QubitSet{j, i};
  }

  // Accumulates the join of meas(i, g_k) over g_0 = start,
  // g_{k+1} = body(meas(i, g_k)) until some g_k repeats.
  Assignment loop(const Stmt& s, const Assignment& start, const std::string& path) {
    Assignment acc = Assignment::bottom(start.num_qubits());
    Assignment g = start;
    std::unordered_set<std::string> seen{g.key()};
    for (std::size_t iter = 1;; ++iter) {
      const Assignment m = meas(s.q, g);
      acc = join(acc, m);
      g = run(*s.first, m, sub(path, "body" + std::to_string(iter)));
      if (!seen.insert(g.key()).second) return acc;
      if (iter >= cfg_.max_while_iters) {
        throw AnalysisError("while q" + std::to_string(s.q) + " did not stabilize within " +
                            std::to_string(cfg_.max_while_iters) + " iterations");
      }
    }
  }

  const AnalysisConfig& cfg_;
  std::vector<TraceEntry>* trace_;
};

}  // namespace

Assignment meas_c(std::size_t i, const Assignment& a) {
  const Block& b = a.block_of(i);
  if (b.qubits.size() == 1) return replace_content(a, i, single_pauli(Pauli::Z));
  if (is_opaque(b.content)) return measure_split_opaque(i, a);
  const auto* s = std::get_if<StabArray>(&b.content);
  if (!s) throw AnalysisError("extended content in the C domain");
  return replace(a, {i}, update(b.qubits, b.qubits, meas_st(a.local_index(i), *s)));
}

Assignment meas_e(std::size_t i, const Assignment& g) {
  const Block& b = g.block_of(i);
  if (b.qubits.size() == 1) return replace_content(g, i, single_pauli(Pauli::Z));
  if (is_opaque(b.content)) return measure_split_opaque(i, g);
  if (const auto* s = std::get_if<StabArray>(&b.content); s && s->full_rank()) {
    return replace(g, {i}, update(b.qubits, b.qubits, meas_st(g.local_index(i), *s)));
  }
  auto res = meas_e_block(g.local_index(i), as_ext(b.content));
  if (std::holds_alternative<MeasUnknown>(res)) return measure_split_opaque(i, g);
  const QubitSet rest = without(b.qubits, i);
  std::vector<Block> blocks = update_e(rest, rest, back_to_stab(std::get<MeasSplit>(res).rest));
  blocks.push_back(Block{{i}, single_pauli(Pauli::Z)});
  return replace(g, {i}, std::move(blocks));
}

Assignment interp(const Stmt& s, const Assignment& start, const AnalysisConfig& cfg) {
  if (cfg.max_while_iters == 0) throw std::invalid_argument("max_while_iters must be positive");
  return Interpreter(cfg, nullptr).run(s, start, "");
}

Assignment interp_c(const Stmt& s, const Assignment& a, const AnalysisConfig& cfg) {
  AnalysisConfig c = cfg;
  c.domain = Domain::C;
  return interp(s, a, c);
}

Assignment interp_e(const Stmt& s, const Assignment& g, const AnalysisConfig& cfg) {
  AnalysisConfig c = cfg;
  c.domain = Domain::E;
  return interp(s, g, c);
}

AnalysisResult analyze(const Program& p, const Assignment& start, const AnalysisConfig& cfg) {
  if (cfg.max_while_iters == 0) throw std::invalid_argument("max_while_iters must be positive");
  if (start.num_qubits() != p.num_qubits) {
    throw AnalysisError("initial assignment has " + std::to_string(start.num_qubits()) +
                        " qubits, the program " + std::to_string(p.num_qubits));
  }
  if (auto why = well_formed_violation(start, cfg.domain)) {
    throw AnalysisError("initial assignment is not in the domain: " + *why);
  }
  const Program core = desugar(p);
  AnalysisResult out;
  Interpreter in(cfg, cfg.trace ? &out.trace : nullptr);
  out.result = in.run(*core.body, start, "");
  if (!cfg.strict_paper) {
    if (auto why = well_formed_violation(out.result, cfg.domain)) {
      throw AnalysisError("internal error, result left the domain: " + *why);
    }
  }
  return out;
}

}  // namespace qilent
