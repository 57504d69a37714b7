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

#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qilent/pauli.hpp"
#include "qilent/qil.hpp"

namespace qilent {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Basis index convention: qubit q is bit (n - 1 - q), so the ket |q0 q1 ...>
// reads left to right like the row strings.

struct SimConfig {
  /// Loop unrolling bound for concrete while loops.
  std::size_t max_while_iters = 256;
  /// Branches (or loop remainders) below this weight are dropped.
  double prune = 1e-12;
};

/// Weight that never left a while loop before the unrolling bound.
struct SimStats {
  double residual_trace = 0.0;
  bool truncated = false;
};

struct Branch {
  double weight = 0.0;
  Vector state;  // unit norm
};

/// p_k |phi_k><phi_k| summed over branches; discarded holds pruned weight.
struct Ensemble {
  std::size_t num_qubits = 0;
  std::vector<Branch> branches;
  double discarded = 0.0;

  double total_weight() const;
};

Eigen::Matrix2cd gate_matrix(Gate g);

void apply_1q(Vector& v, std::size_t n, std::size_t q, const Eigen::Matrix2cd& u);
void apply_cx(Vector& v, std::size_t n, std::size_t control, std::size_t target);
void apply_1q(Matrix& rho, std::size_t n, std::size_t q, const Eigen::Matrix2cd& u);
void apply_cx(Matrix& rho, std::size_t n, std::size_t control, std::size_t target);

/// Keeps the component with qubit q equal to bit (unnormalized).
void project(Vector& v, std::size_t n, std::size_t q, int bit);
/// P rho P for the projector onto qubit q equal to bit.
void project(Matrix& rho, std::size_t n, std::size_t q, int bit);

/// Signless Pauli P acting on `qubits` (row cell k on qubits[k]) applied to v.
void apply_pauli(Vector& v, std::size_t n, const PauliRow& p, const std::vector<std::size_t>& qubits);
/// P rho (left multiplication only).
Matrix apply_pauli_left(const Matrix& rho, std::size_t n, const PauliRow& p,
                        const std::vector<std::size_t>& qubits);

/// Computational basis ket from a string of '0'/'1' (or '+', '-').
Vector ket(std::string_view bits);
Matrix pure_density(const Vector& v);

/// Density semantics of a core statement. Unitaries conjugate, if sums both
/// projected arms, while sums P1 f^k(rho) P1 with f(rho) = body(P0 rho P0).
Matrix sem_density(const Stmt& s, const Matrix& rho, std::size_t n, const SimConfig& cfg,
                   SimStats* stats = nullptr);

/// Branching pure-state semantics; mix() of the result equals sem_density
/// up to the discarded weight. Branches equal up to phase are merged.
Ensemble sem_ensemble(const Stmt& s, const Ensemble& e, const SimConfig& cfg,
                      SimStats* stats = nullptr);

Matrix mix(const Ensemble& e);
Ensemble single_branch(const Vector& v);

/// Merges branches whose states agree up to a global phase.
void merge_branches(Ensemble& e);

/// Reduced state on `keep` (sorted); qubit order of the result follows keep.
Matrix partial_trace(const Matrix& rho, std::size_t n, const std::vector<std::size_t>& keep);
Matrix partial_trace(const Vector& v, std::size_t n, const std::vector<std::size_t>& keep);

/// Transpose of the subsystem `qubits`.
Matrix partial_transpose(const Matrix& rho, std::size_t n, const std::vector<std::size_t>& qubits);

/// Kronecker product, first factor on the leading qubits.
Vector kron(const Vector& a, const Vector& b);
Matrix kron(const Matrix& a, const Matrix& b);

/// Tensor product of ensembles (all branch pairs).
Ensemble tensor_ensembles(const Ensemble& a, const Ensemble& b);

/// Moves qubit k of v to position perm[k].
Vector permute_qubits(const Vector& v, std::size_t n, const std::vector<std::size_t>& perm);

}  // namespace qilent
