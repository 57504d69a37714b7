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

#include "qilent/soundness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <Eigen/Eigenvalues>

namespace qilent {

namespace {

std::string block_name(const QubitSet& qs) {
  std::string out = "{";
  for (std::size_t k = 0; k < qs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(qs[k]);
  }
  return out + "}";
}

void add(Verdict& v, const QubitSet& qs, std::string condition, double residual, bool hard) {
  v.status = Status::Inconclusive;
  v.diagnostics.push_back(Diagnostic{block_name(qs), std::move(condition), residual, hard});
}

double projector_residual(const Matrix& rho, std::size_t n, const PauliRow& l, const QubitSet& qs) {
  const Matrix l_rho = apply_pauli_left(rho, n, l, qs);
  const Matrix rho_l = l_rho.adjoint();
  const Matrix l_rho_l = apply_pauli_left(rho_l, n, l, qs);
  return (0.25 * (rho - rho_l + l_rho - l_rho_l)).norm();
}

// Distance from 1/2 I (x) Tr_q(rho): the twirl over all Paulis on q
// produces exactly that product.
double identity_residual(const Matrix& rho, std::size_t n, std::size_t q) {
  Matrix twirl = rho;
  for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
    const PauliRow row = PauliRow::single(1, 0, p);
    const Matrix left = apply_pauli_left(rho, n, row, {q});
    twirl += apply_pauli_left(Matrix(left.adjoint()), n, row, {q});
  }
  return (rho - 0.25 * twirl).norm();
}

double min_eigenvalue(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void check_factorization(Verdict& v, const Assignment& a, const Ensemble& e) {
  if (a.blocks().size() < 2) return;
  for (const auto& b : a.blocks()) {
    double worst = 0.0;
    for (const auto& br : e.branches) {
      const Matrix red = partial_trace(br.state, e.num_qubits, b.qubits);
      const double purity = (red * red).trace().real();
      worst = std::max(worst, 1.0 - purity);
    }
    if (worst > kCheckTol) add(v, b.qubits, "branch does not factor across the block", worst, false);
  }
}

void check_ppt(Verdict& v, const Assignment& a, const Matrix& rho, std::size_t n) {
  if (a.blocks().size() < 2) return;
  for (const auto& b : a.blocks()) {
    const double m = min_eigenvalue(partial_transpose(rho, n, b.qubits));
    if (m < -kCheckTol) add(v, b.qubits, "negative partial transpose across the block", -m, true);
  }
}

void check_rows(Verdict& v, const QubitSet& qs, const std::vector<PauliRow>& rows,
                const Matrix& rho, std::size_t n) {
  for (const auto& r : rows) {
    const double res = projector_residual(rho, n, r, qs);
    if (res > kCheckTol) add(v, qs, "projector condition fails for " + r.str(), res, true);
  }
}

void check_identity(Verdict& v, const QubitSet& qs, const Matrix& rho, std::size_t n) {
  const double res = identity_residual(rho, n, qs.front());
  if (res > kCheckTol) add(v, qs, "qubit is not maximally mixed and uncorrelated", res, true);
}

void check_dims(const Assignment& a, std::size_t n) {
  if (a.num_qubits() != n) throw std::invalid_argument("assignment and state sizes differ");
}

Vector random_state(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector v(static_cast<Eigen::Index>(std::size_t{1} << n));
  for (Eigen::Index k = 0; k < v.size(); ++k) v[k] = Complex(g(rng), g(rng));
  return v.normalized();
}

Ensemble pure(const Vector& v) { return single_branch(v); }

Ensemble two_way(const Vector& a, const Vector& b, double w) {
  Ensemble e = single_branch(a);
  e.branches.front().weight = w;
  e.branches.push_back(Branch{1.0 - w, b.normalized()});
  return e;
}

Vector eigenstate(Pauli p, bool minus) {
  switch (p) {
    case Pauli::Z: return ket(minus ? "1" : "0");
    case Pauli::X: return ket(minus ? "-" : "+");
    case Pauli::Y: {
      Vector v(2);
      const double r = 1.0 / std::sqrt(2.0);
      v << r, Complex(0.0, minus ? -r : r);
      return v;
    }
    default: break;
  }
  throw std::invalid_argument("no eigenstate for I");
}

struct BlockSample {
  Content content;
  Ensemble ensemble;
};

// Random Clifford word on |0...0>; the signless tableau follows along.
std::optional<BlockSample> random_stabilizer_block(std::size_t k, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<PauliRow> rows;
    for (std::size_t q = 0; q < k; ++q) rows.push_back(PauliRow::single(k, q, Pauli::Z));
    StabArray s(k, rows);
    Vector v = ket(std::string(k, '0'));
    const std::size_t len = 3 * k * k + rng() % (2 * k + 1);
    for (std::size_t step = 0; step < len; ++step) {
      const auto kind = rng() % 3;
      if (kind == 2) {
        const std::size_t c = rng() % k;
        std::size_t t = rng() % (k - 1);
        if (t >= c) ++t;
        s = conj_cx(c, t, s);
        apply_cx(v, k, c, t);
      } else {
        const Gate g = kind == 0 ? Gate::H : Gate::S;
        const std::size_t q = rng() % k;
        s = conj_1q(g, q, s);
        apply_1q(v, k, q, gate_matrix(g));
      }
    }
    QubitSet all(k);
    std::iota(all.begin(), all.end(), 0);
    if (well_formed_violation(Assignment(k, {Block{all, s}}), Domain::C)) continue;

    // Random Pauli frames flip generator signs without changing the group.
    auto frame = [&](Vector w) {
      for (std::size_t q = 0; q < k; ++q) {
        if (rng() % 2) apply_1q(w, k, q, gate_matrix(Gate::X));
        if (rng() % 2) apply_1q(w, k, q, gate_matrix(Gate::Z));
      }
      return w;
    };
    Ensemble e = rng() % 3 == 0
                     ? two_way(frame(v), frame(v), 0.2 + 0.6 * (rng() % 1000) / 1000.0)
                     : pure(frame(v));
    merge_branches(e);
    return BlockSample{s, std::move(e)};
  }
  return std::nullopt;
}

BlockSample random_block(std::size_t k, std::mt19937_64& rng) {
  if (k == 1) {
    switch (rng() % 6) {
      case 0: return {Identity{}, two_way(ket("0"), ket("1"), 0.5)};
      case 1:
      case 2:
      case 3: {
        const Pauli p = static_cast<Pauli>(1 + rng() % 3);
        if (rng() % 3 == 0) {
          return {single_pauli(p), two_way(eigenstate(p, false), eigenstate(p, true),
                                           0.1 + 0.8 * (rng() % 1000) / 1000.0)};
        }
        return {single_pauli(p), pure(eigenstate(p, rng() % 2 == 1))};
      }
      case 4: return {Opaque{}, pure(random_state(1, rng))};
      default: return {Opaque{}, two_way(random_state(1, rng), random_state(1, rng), 0.5)};
    }
  }
  if (rng() % 4 != 0) {
    if (auto s = random_stabilizer_block(k, rng)) return std::move(*s);
  }
  return {Opaque{}, pure(random_state(k, rng))};
}

std::string state_line(const Branch& b) {
  std::ostringstream os;
  os.precision(6);
  os << "weight " << b.weight << ":";
  for (Eigen::Index k = 0; k < b.state.size(); ++k) {
    os << ' ' << b.state[k].real() << (b.state[k].imag() < 0 ? "" : "+") << b.state[k].imag()
       << 'i';
  }
  return os.str();
}

Gate random_gate(std::mt19937_64& rng, const GenConfig& cfg) {
  const unsigned total = cfg.w_clifford + cfg.w_t;
  if (total > 0 && rng() % total < cfg.w_t) return Gate::T;
  constexpr Gate kCliffords[] = {Gate::X, Gate::Y, Gate::Z, Gate::H, Gate::S};
  return kCliffords[rng() % 5];
}

StmtPtr gen_seq(const GenConfig& cfg, std::mt19937_64& rng, std::size_t budget, int nest);

StmtPtr gen_atom(const GenConfig& cfg, std::mt19937_64& rng, int nest) {
  const std::size_t n = cfg.n_qubits;
  const unsigned w_cx = n >= 2 ? cfg.w_cx : 0;
  const unsigned w_if = nest < 2 ? cfg.w_if : 0;
  const unsigned w_while = cfg.while_allowed && nest < 2 ? cfg.w_while : 0;
  const unsigned total = cfg.w_clifford + cfg.w_t + w_cx + w_if + w_while;
  if (total == 0) return make_skip();
  unsigned r = static_cast<unsigned>(rng() % total);
  if (r < cfg.w_clifford + cfg.w_t) return make_gate(random_gate(rng, cfg), rng() % n);
  r -= cfg.w_clifford + cfg.w_t;
  if (r < w_cx) {
    const std::size_t c = rng() % n;
    std::size_t t = rng() % (n - 1);
    if (t >= c) ++t;
    return make_cx(c, t);
  }
  r -= w_cx;
  if (r < w_if) {
    const std::size_t q = rng() % n;
    const std::size_t sub = std::max<std::size_t>(1, cfg.max_depth / 3);
    StmtPtr a = gen_seq(cfg, rng, sub, nest + 1);
    StmtPtr b = gen_seq(cfg, rng, sub, nest + 1);
    return make_if(q, std::move(a), std::move(b));
  }
  const std::size_t q = rng() % n;
  return make_while(q, make_gate(random_gate(rng, cfg), rng() % n));
}

StmtPtr gen_seq(const GenConfig& cfg, std::mt19937_64& rng, std::size_t budget, int nest) {
  const std::size_t len = 1 + rng() % std::max<std::size_t>(1, budget);
  std::vector<StmtPtr> atoms;
  for (std::size_t k = 0; k < len; ++k) atoms.push_back(gen_atom(cfg, rng, nest));
  StmtPtr out = atoms.back();
  for (std::size_t k = atoms.size() - 1; k-- > 0;) out = make_seq(atoms[k], out);
  return out;
}

}  // namespace

bool Verdict::hard_failure() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.hard; });
}

std::string Verdict::summary() const {
  if (status == Status::Verified) return "verified";
  std::ostringstream os;
  os << (hard_failure() ? "refuted" : "inconclusive");
  for (const auto& d : diagnostics) {
    os << "; " << d.block << ' ' << d.condition << " (" << d.residual << (d.hard ? ", hard" : "")
       << ")";
  }
  return os.str();
}

Verdict models_c(const Assignment& a, const Ensemble& e) {
  check_dims(a, e.num_qubits);
  const std::size_t n = e.num_qubits;
  const Matrix rho = mix(e);
  Verdict v;
  check_factorization(v, a, e);
  for (const auto& b : a.blocks()) {
    if (const auto* s = std::get_if<StabArray>(&b.content)) {
      for (const auto& row : s->rows()) {
        double worst = 0.0;
        for (const auto& br : e.branches) {
          Vector mv = br.state;
          apply_pauli(mv, n, row, b.qubits);
          worst = std::max(worst, std::min((mv - br.state).norm(), (mv + br.state).norm()));
        }
        if (worst > kCheckTol) add(v, b.qubits, "branch is not an eigenvector of " + row.str(), worst, false);
      }
      check_rows(v, b.qubits, s->rows(), rho, n);
    } else if (is_identity(b.content)) {
      check_identity(v, b.qubits, rho, n);
    } else if (is_ext(b.content)) {
      add(v, b.qubits, "extended content in the C domain", 1.0, true);
    }
  }
  check_ppt(v, a, rho, n);
  return v;
}

Verdict models_e(const Assignment& g, const Matrix& rho, const Ensemble& e) {
  check_dims(g, e.num_qubits);
  const std::size_t n = e.num_qubits;
  if (rho.rows() != (Eigen::Index{1} << n)) throw std::invalid_argument("density size mismatch");
  Verdict v;
  check_factorization(v, g, e);
  for (const auto& b : g.blocks()) {
    if (const auto* s = std::get_if<StabArray>(&b.content)) {
      check_rows(v, b.qubits, s->rows(), rho, n);
    } else if (const auto* x = std::get_if<ExtArray>(&b.content)) {
      check_rows(v, b.qubits, x->l_rows(), rho, n);
    } else if (is_identity(b.content)) {
      check_identity(v, b.qubits, rho, n);
    }
  }
  check_ppt(v, g, rho, n);
  return v;
}

Program gen_program(const GenConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  return gen_program(cfg, rng);
}

Program gen_program(const GenConfig& cfg, std::mt19937_64& rng) {
  if (cfg.n_qubits == 0) throw std::invalid_argument("n_qubits must be positive");
  return Program{cfg.n_qubits, gen_seq(cfg, rng, std::max<std::size_t>(1, cfg.max_depth), 0)};
}

StartPair gen_start(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> label(n);
  for (auto& l : label) l = rng() % n;
  std::vector<QubitSet> parts;
  for (std::size_t l = 0; l < n; ++l) {
    QubitSet qs;
    for (std::size_t q = 0; q < n; ++q) {
      if (label[q] == l) qs.push_back(q);
    }
    if (!qs.empty()) parts.push_back(std::move(qs));
  }

  std::vector<Block> blocks;
  Ensemble e{0, {Branch{1.0, Vector::Ones(1)}}, 0.0};
  std::vector<std::size_t> order;
  for (const auto& qs : parts) {
    BlockSample s = random_block(qs.size(), rng);
    blocks.push_back(Block{qs, std::move(s.content)});
    e = tensor_ensembles(e, s.ensemble);
    order.insert(order.end(), qs.begin(), qs.end());
  }
  for (auto& b : e.branches) b.state = permute_qubits(b.state, n, order);
  return StartPair{Assignment(n, std::move(blocks)), std::move(e)};
}

SuiteReport check_case(const Program& p, const StartPair& start, const CaseOptions& opt) {
  SuiteReport rep;
  rep.cases = 1;
  const Program core = desugar(p);
  const Ensemble out = sem_ensemble(*core.body, start.ensemble, opt.sim);
  const Matrix rho = sem_density(*core.body, mix(start.ensemble), p.num_qubits, opt.sim);

  bool all_verified = true;
  bool hard = false;
  for (Domain d : {Domain::C, Domain::E}) {
    if ((d == Domain::C && !opt.check_c) || (d == Domain::E && !opt.check_e)) continue;
    AnalysisConfig cfg = opt.analysis;
    cfg.domain = d;
    Counterexample cx;
    cx.domain = d == Domain::C ? "c" : "e";
    cx.program = pretty(p);
    cx.start = start.assignment.key();
    for (const auto& b : start.ensemble.branches) cx.start_state.push_back(state_line(b));
    Verdict v;
    try {
      const Assignment res = analyze(p, start.assignment, cfg).result;
      cx.result = res.key();
      v = d == Domain::C ? models_c(res, out) : models_e(res, rho, out);
    } catch (const AnalysisError& err) {
      v.status = Status::Inconclusive;
      v.diagnostics.push_back(Diagnostic{"", std::string("analysis error: ") + err.what(), 0, true});
    }
    if (v.status != Status::Verified) all_verified = false;
    if (v.hard_failure()) {
      hard = true;
      for (const auto& dg : v.diagnostics) {
        cx.diagnostics.push_back(dg.block + " " + dg.condition + " (" + std::to_string(dg.residual) +
                                 (dg.hard ? ", hard)" : ")"));
      }
      rep.counterexamples.push_back(std::move(cx));
    }
  }
  if (hard) {
    ++rep.hard_failures;
  } else if (all_verified) {
    ++rep.verified;
  } else {
    ++rep.inconclusive;
  }
  return rep;
}

void merge_report(SuiteReport& into, const SuiteReport& from) {
  into.cases += from.cases;
  into.verified += from.verified;
  into.inconclusive += from.inconclusive;
  into.hard_failures += from.hard_failures;
  into.counterexamples.insert(into.counterexamples.end(), from.counterexamples.begin(),
                              from.counterexamples.end());
}

SuiteReport soundness_suite(const GenConfig& cfg, std::size_t cases, const CaseOptions& opt) {
  std::mt19937_64 rng(cfg.seed);
  SuiteReport rep;
  for (std::size_t k = 0; k < cases; ++k) {
    const Program p = gen_program(cfg, rng);
    const StartPair start = gen_start(cfg.n_qubits, rng);
    merge_report(rep, check_case(p, start, opt));
  }
  return rep;
}

SuiteReport soundness_for_program(const Program& p, std::size_t cases, std::uint64_t seed,
                                  const CaseOptions& opt) {
  std::mt19937_64 rng(seed);
  SuiteReport rep;
  for (std::size_t k = 0; k < cases; ++k) merge_report(rep, check_case(p, gen_start(p.num_qubits, rng), opt));
  return rep;
}

}  // namespace qilent
