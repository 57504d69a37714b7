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

#include "qilent/concrete_sim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qilent {

namespace {

using Index = std::size_t;

Index qmask(std::size_t n, std::size_t q) { return Index{1} << (n - 1 - q); }

void check_qubit(std::size_t n, std::size_t q) {
  if (q >= n) throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
}

void check_dim(Index dim, std::size_t n) {
  if (dim != (Index{1} << n)) throw std::invalid_argument("state dimension does not match 2^n");
}

// Positions of `keep` and the complementary qubits inside a basis index.
struct Split {
  std::vector<Index> kept_part;
  std::vector<Index> traced_part;
};

Split split_indices(std::size_t n, const std::vector<std::size_t>& keep) {
  std::vector<bool> kept(n, false);
  for (std::size_t q : keep) {
    check_qubit(n, q);
    kept[q] = true;
  }
  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n; ++q) {
    if (!kept[q]) traced.push_back(q);
  }
  const Index dim = Index{1} << n;
  Split s{std::vector<Index>(dim), std::vector<Index>(dim)};
  for (Index i = 0; i < dim; ++i) {
    Index k = 0;
    for (std::size_t q : keep) k = (k << 1) | ((i & qmask(n, q)) ? 1 : 0);
    Index t = 0;
    for (std::size_t q : traced) t = (t << 1) | ((i & qmask(n, q)) ? 1 : 0);
    s.kept_part[i] = k;
    s.traced_part[i] = t;
  }
  return s;
}

void prune_into(Ensemble& e, std::vector<Branch> candidates, double eps) {
  for (auto& b : candidates) {
    if (b.weight < eps) {
      e.discarded += b.weight;
    } else {
      e.branches.push_back(std::move(b));
    }
  }
}

// Splits every branch by the value of qubit q.
std::pair<Ensemble, Ensemble> measure_split(const Ensemble& e, std::size_t q, double eps) {
  Ensemble zero{e.num_qubits, {}, 0.0};
  Ensemble one{e.num_qubits, {}, 0.0};
  std::vector<Branch> zs;
  std::vector<Branch> os;
  for (const auto& b : e.branches) {
    for (int bit : {0, 1}) {
      Vector v = b.state;
      project(v, e.num_qubits, q, bit);
      const double p = v.squaredNorm();
      if (p == 0.0) continue;
      Branch nb{b.weight * p, v / std::sqrt(p)};
      (bit == 0 ? zs : os).push_back(std::move(nb));
    }
  }
  prune_into(zero, std::move(zs), eps);
  prune_into(one, std::move(os), eps);
  // Keep the discarded total on one side only so it is not counted twice.
  zero.discarded += e.discarded;
  return {std::move(zero), std::move(one)};
}

void append(Ensemble& into, Ensemble from) {
  for (auto& b : from.branches) into.branches.push_back(std::move(b));
  into.discarded += from.discarded;
}

}  // namespace

double Ensemble::total_weight() const {
  double w = 0.0;
  for (const auto& b : branches) w += b.weight;
  return w;
}

Eigen::Matrix2cd gate_matrix(Gate g) {
  const Complex i(0.0, 1.0);
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd m;
  switch (g) {
    case Gate::X: m << 0, 1, 1, 0; break;
    case Gate::Y: m << 0, -i, i, 0; break;
    case Gate::Z: m << 1, 0, 0, -1; break;
    case Gate::H: m << r, r, r, -r; break;
    case Gate::S: m << 1, 0, 0, i; break;
    case Gate::T: m << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4); break;
  }
  return m;
}

void apply_1q(Vector& v, std::size_t n, std::size_t q, const Eigen::Matrix2cd& u) {
  check_qubit(n, q);
  check_dim(static_cast<Index>(v.size()), n);
  const Index m = qmask(n, q);
  for (Index a = 0; a < static_cast<Index>(v.size()); ++a) {
    if (a & m) continue;
    const Complex x0 = v[a];
    const Complex x1 = v[a | m];
    v[a] = u(0, 0) * x0 + u(0, 1) * x1;
    v[a | m] = u(1, 0) * x0 + u(1, 1) * x1;
  }
}

void apply_cx(Vector& v, std::size_t n, std::size_t control, std::size_t target) {
  check_qubit(n, control);
  check_qubit(n, target);
  if (control == target) throw std::invalid_argument("CX needs distinct control and target");
  check_dim(static_cast<Index>(v.size()), n);
  const Index c = qmask(n, control);
  const Index t = qmask(n, target);
  for (Index a = 0; a < static_cast<Index>(v.size()); ++a) {
    if ((a & c) && !(a & t)) std::swap(v[a], v[a | t]);
  }
}

void apply_1q(Matrix& rho, std::size_t n, std::size_t q, const Eigen::Matrix2cd& u) {
  check_qubit(n, q);
  check_dim(static_cast<Index>(rho.rows()), n);
  const Index m = qmask(n, q);
  const Index dim = static_cast<Index>(rho.rows());
  // Rows: rho <- U rho.
  for (Index a = 0; a < dim; ++a) {
    if (a & m) continue;
    for (Index col = 0; col < dim; ++col) {
      const Complex x0 = rho(a, col);
      const Complex x1 = rho(a | m, col);
      rho(a, col) = u(0, 0) * x0 + u(0, 1) * x1;
      rho(a | m, col) = u(1, 0) * x0 + u(1, 1) * x1;
    }
  }
  // Columns: rho <- rho U^dagger.
  for (Index a = 0; a < dim; ++a) {
    if (a & m) continue;
    for (Index row = 0; row < dim; ++row) {
      const Complex x0 = rho(row, a);
      const Complex x1 = rho(row, a | m);
      rho(row, a) = x0 * std::conj(u(0, 0)) + x1 * std::conj(u(0, 1));
      rho(row, a | m) = x0 * std::conj(u(1, 0)) + x1 * std::conj(u(1, 1));
    }
  }
}

void apply_cx(Matrix& rho, std::size_t n, std::size_t control, std::size_t target) {
  check_qubit(n, control);
  check_qubit(n, target);
  if (control == target) throw std::invalid_argument("CX needs distinct control and target");
  check_dim(static_cast<Index>(rho.rows()), n);
  const Index c = qmask(n, control);
  const Index t = qmask(n, target);
  const Index dim = static_cast<Index>(rho.rows());
  for (Index a = 0; a < dim; ++a) {
    if ((a & c) && !(a & t)) rho.row(a).swap(rho.row(a | t));
  }
  for (Index a = 0; a < dim; ++a) {
    if ((a & c) && !(a & t)) rho.col(a).swap(rho.col(a | t));
  }
}

void project(Vector& v, std::size_t n, std::size_t q, int bit) {
  check_qubit(n, q);
  const Index m = qmask(n, q);
  for (Index a = 0; a < static_cast<Index>(v.size()); ++a) {
    if (((a & m) != 0) != (bit != 0)) v[a] = 0.0;
  }
}

void project(Matrix& rho, std::size_t n, std::size_t q, int bit) {
  check_qubit(n, q);
  const Index m = qmask(n, q);
  const Index dim = static_cast<Index>(rho.rows());
  for (Index a = 0; a < dim; ++a) {
    if (((a & m) != 0) == (bit != 0)) continue;
    rho.row(a).setZero();
    rho.col(a).setZero();
  }
}

void apply_pauli(Vector& v, std::size_t n, const PauliRow& p,
                 const std::vector<std::size_t>& qubits) {
  if (p.size() != qubits.size()) throw std::invalid_argument("Pauli width does not match qubits");
  for (std::size_t k = 0; k < qubits.size(); ++k) {
    switch (p[k]) {
      case Pauli::I: break;
      case Pauli::X: apply_1q(v, n, qubits[k], gate_matrix(Gate::X)); break;
      case Pauli::Y: apply_1q(v, n, qubits[k], gate_matrix(Gate::Y)); break;
      case Pauli::Z: apply_1q(v, n, qubits[k], gate_matrix(Gate::Z)); break;
    }
  }
}

Matrix apply_pauli_left(const Matrix& rho, std::size_t n, const PauliRow& p,
                        const std::vector<std::size_t>& qubits) {
  Matrix out = rho;
  for (Eigen::Index col = 0; col < out.cols(); ++col) {
    Vector v = out.col(col);
    apply_pauli(v, n, p, qubits);
    out.col(col) = v;
  }
  return out;
}

Vector ket(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("empty ket");
  Vector v = Vector::Zero(1);
  v[0] = 1.0;
  const double r = 1.0 / std::sqrt(2.0);
  for (char ch : bits) {
    Vector q(2);
    switch (ch) {
      case '0': q << 1.0, 0.0; break;
      case '1': q << 0.0, 1.0; break;
      case '+': q << r, r; break;
      case '-': q << r, -r; break;
      default: throw std::invalid_argument(std::string("bad ket character '") + ch + "'");
    }
    v = kron(v, q);
  }
  return v;
}

Matrix pure_density(const Vector& v) { return v * v.adjoint(); }

Matrix sem_density(const Stmt& s, const Matrix& rho, std::size_t n, const SimConfig& cfg,
                   SimStats* stats) {
  switch (s.kind) {
    case StmtKind::Skip: return rho;
    case StmtKind::Seq: {
      Matrix mid = sem_density(*s.first, rho, n, cfg, stats);
      return sem_density(*s.second, mid, n, cfg, stats);
    }
    case StmtKind::Gate1: {
      Matrix out = rho;
      apply_1q(out, n, s.q, gate_matrix(s.gate));
      return out;
    }
    case StmtKind::CX: {
      Matrix out = rho;
      apply_cx(out, n, s.q, s.t);
      return out;
    }
    case StmtKind::If: {
      Matrix zero = rho;
      Matrix one = rho;
      project(zero, n, s.q, 0);
      project(one, n, s.q, 1);
      return sem_density(*s.first, zero, n, cfg, stats) +
             sem_density(*s.second, one, n, cfg, stats);
    }
    case StmtKind::While: {
      Matrix acc = Matrix::Zero(rho.rows(), rho.cols());
      Matrix cur = rho;
      for (std::size_t k = 0; k < cfg.max_while_iters; ++k) {
        Matrix out = cur;
        project(out, n, s.q, 1);
        acc += out;
        project(cur, n, s.q, 0);
        if (cur.trace().real() < cfg.prune) {
          if (stats) stats->residual_trace += std::max(0.0, cur.trace().real());
          return acc;
        }
        cur = sem_density(*s.first, cur, n, cfg, stats);
      }
      if (stats) {
        stats->residual_trace += cur.trace().real();
        stats->truncated = true;
      }
      return acc;
    }
    default: throw std::invalid_argument("derived form in the simulated program; desugar it first");
  }
}

Ensemble sem_ensemble(const Stmt& s, const Ensemble& e, const SimConfig& cfg, SimStats* stats) {
  const std::size_t n = e.num_qubits;
  switch (s.kind) {
    case StmtKind::Skip: return e;
    case StmtKind::Seq: {
      Ensemble mid = sem_ensemble(*s.first, e, cfg, stats);
      return sem_ensemble(*s.second, mid, cfg, stats);
    }
    case StmtKind::Gate1: {
      Ensemble out = e;
      const auto u = gate_matrix(s.gate);
      for (auto& b : out.branches) apply_1q(b.state, n, s.q, u);
      return out;
    }
    case StmtKind::CX: {
      Ensemble out = e;
      for (auto& b : out.branches) apply_cx(b.state, n, s.q, s.t);
      return out;
    }
    case StmtKind::If: {
      auto [zero, one] = measure_split(e, s.q, cfg.prune);
      Ensemble out = sem_ensemble(*s.first, zero, cfg, stats);
      append(out, sem_ensemble(*s.second, one, cfg, stats));
      merge_branches(out);
      return out;
    }
    case StmtKind::While: {
      Ensemble out{n, {}, 0.0};
      Ensemble cur = e;
      for (std::size_t k = 0; k < cfg.max_while_iters; ++k) {
        auto [zero, one] = measure_split(cur, s.q, cfg.prune);
        append(out, std::move(one));
        out.discarded += zero.discarded;
        zero.discarded = 0.0;
        if (zero.branches.empty()) {
          merge_branches(out);
          return out;
        }
        cur = sem_ensemble(*s.first, zero, cfg, stats);
        out.discarded += cur.discarded;
        cur.discarded = 0.0;
        merge_branches(cur);
      }
      // Weight still inside the loop is reported as residual, not discarded.
      const double left = cur.total_weight();
      if (stats) {
        stats->residual_trace += left;
        stats->truncated = true;
      }
      merge_branches(out);
      return out;
    }
    default: throw std::invalid_argument("derived form in the simulated program; desugar it first");
  }
}

Matrix mix(const Ensemble& e) {
  const Index dim = Index{1} << e.num_qubits;
  Matrix rho = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& b : e.branches) rho += b.weight * (b.state * b.state.adjoint());
  return rho;
}

Ensemble single_branch(const Vector& v) {
  std::size_t n = 0;
  while ((Index{1} << n) < static_cast<Index>(v.size())) ++n;
  check_dim(static_cast<Index>(v.size()), n);
  return Ensemble{n, {Branch{1.0, v.normalized()}}, 0.0};
}

void merge_branches(Ensemble& e) {
  std::vector<Branch> kept;
  for (auto& b : e.branches) {
    bool merged = false;
    for (auto& k : kept) {
      if (std::abs(k.state.dot(b.state)) > 1.0 - 1e-12) {
        k.weight += b.weight;
        merged = true;
        break;
      }
    }
    if (!merged) kept.push_back(std::move(b));
  }
  e.branches = std::move(kept);
}

Matrix partial_trace(const Matrix& rho, std::size_t n, const std::vector<std::size_t>& keep) {
  check_dim(static_cast<Index>(rho.rows()), n);
  const Split sp = split_indices(n, keep);
  const Index dk = Index{1} << keep.size();
  const Index dim = Index{1} << n;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (Index a = 0; a < dim; ++a) {
    for (Index b = 0; b < dim; ++b) {
      if (sp.traced_part[a] == sp.traced_part[b]) out(sp.kept_part[a], sp.kept_part[b]) += rho(a, b);
    }
  }
  return out;
}

Matrix partial_trace(const Vector& v, std::size_t n, const std::vector<std::size_t>& keep) {
  check_dim(static_cast<Index>(v.size()), n);
  const Split sp = split_indices(n, keep);
  const Index dk = Index{1} << keep.size();
  const Index dt = Index{1} << (n - keep.size());
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dt));
  for (Index a = 0; a < static_cast<Index>(v.size()); ++a) m(sp.kept_part[a], sp.traced_part[a]) = v[a];
  return m * m.adjoint();
}

Matrix partial_transpose(const Matrix& rho, std::size_t n, const std::vector<std::size_t>& qubits) {
  check_dim(static_cast<Index>(rho.rows()), n);
  Index m = 0;
  for (std::size_t q : qubits) {
    check_qubit(n, q);
    m |= qmask(n, q);
  }
  const Index dim = Index{1} << n;
  Matrix out(rho.rows(), rho.cols());
  for (Index a = 0; a < dim; ++a) {
    for (Index b = 0; b < dim; ++b) {
      const Index a2 = (a & ~m) | (b & m);
      const Index b2 = (b & ~m) | (a & m);
      out(a2, b2) = rho(a, b);
    }
  }
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a[i] * b;
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Ensemble tensor_ensembles(const Ensemble& a, const Ensemble& b) {
  Ensemble out{a.num_qubits + b.num_qubits, {}, 0.0};
  for (const auto& x : a.branches) {
    for (const auto& y : b.branches) out.branches.push_back(Branch{x.weight * y.weight, kron(x.state, y.state)});
  }
  out.discarded = a.discarded + b.discarded;
  return out;
}

Vector permute_qubits(const Vector& v, std::size_t n, const std::vector<std::size_t>& perm) {
  check_dim(static_cast<Index>(v.size()), n);
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  Vector out = Vector::Zero(v.size());
  for (Index a = 0; a < static_cast<Index>(v.size()); ++a) {
    Index b = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (a & qmask(n, k)) b |= qmask(n, perm[k]);
    }
    out[b] = v[a];
  }
  return out;
}

}  // namespace qilent
