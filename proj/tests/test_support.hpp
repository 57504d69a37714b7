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


// Test-side oracles: dense Pauli matrices built from scratch, enumeration of
// stabilizer groups, and random generators for rows and assignments.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qilent/domain.hpp"
#include "qilent/extended.hpp"
#include "qilent/pauli.hpp"
#include "qilent/qil.hpp"
#include "qilent/stabilizer.hpp"

namespace qilent::testing {

using Cd = std::complex<double>;
using Dense = Eigen::MatrixXcd;

inline constexpr Pauli kPaulis[] = {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y};
inline constexpr Gate kCliffords[] = {Gate::X, Gate::Y, Gate::Z, Gate::H, Gate::S};

inline Dense pauli_2x2(Pauli p) {
  Dense m(2, 2);
  const Cd i(0, 1);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Dense gate_2x2(Gate g) {
  Dense m(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  const Cd i(0, 1);
  switch (g) {
    case Gate::X: return pauli_2x2(Pauli::X);
    case Gate::Y: return pauli_2x2(Pauli::Y);
    case Gate::Z: return pauli_2x2(Pauli::Z);
    case Gate::H: m << r, r, r, -r; break;
    case Gate::S: m << 1, 0, 0, i; break;
    case Gate::T: m << 1, 0, 0, std::exp(i * (M_PI / 4)); break;
  }
  return m;
}

inline Dense kron2(const Dense& a, const Dense& b) {
  Dense out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

/// Dense matrix of a row; cell 0 is the leading tensor factor.
inline Dense dense(const PauliRow& row) {
  Dense m = Dense::Identity(1, 1);
  for (std::size_t k = 0; k < row.size(); ++k) m = kron2(m, pauli_2x2(row[k]));
  return m;
}

/// Single-qubit gate g on qubit q of n.
inline Dense embed_1q(const Dense& u, std::size_t n, std::size_t q) {
  Dense m = Dense::Identity(1, 1);
  for (std::size_t k = 0; k < n; ++k) m = kron2(m, k == q ? u : Dense::Identity(2, 2));
  return m;
}

inline Dense cx_dense(std::size_t n, std::size_t c, std::size_t t) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Dense m = Dense::Zero(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto bit = [&](std::size_t q) { return (b >> (n - 1 - q)) & 1; };
    const Eigen::Index out = bit(c) ? (b ^ (Eigen::Index{1} << (n - 1 - t))) : b;
    m(out, b) = 1;
  }
  return m;
}

/// a == phase * b for some unit phase.
inline bool equal_up_to_phase(const Dense& a, const Dense& b, double tol = 1e-9) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) < tol) return a.norm() < tol;
  const Cd phase = a(r, c) / b(r, c);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return (a - phase * b).norm() < tol;
}

inline bool dense_commute(const PauliRow& a, const PauliRow& b) {
  const Dense x = dense(a), y = dense(b);
  return (x * y - y * x).norm() < 1e-9;
}

/// Every product of a subset of generators (2^k of them).
inline std::set<std::string> enumerate_group(const std::vector<PauliRow>& gens, std::size_t n) {
  std::set<std::string> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    PauliRow p(n);
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (mask >> k & 1) p *= gens[k];
    out.insert(p.str());
  }
  return out;
}

inline PauliRow random_row(std::size_t n, std::mt19937_64& rng) {
  PauliRow r(n);
  for (std::size_t q = 0; q < n; ++q) r.set(q, static_cast<Pauli>(rng() % 4));
  return r;
}

inline Gate random_clifford(std::mt19937_64& rng) {
  static constexpr Gate kGates[] = {Gate::X, Gate::Y, Gate::Z, Gate::H, Gate::S};
  return kGates[rng() % 5];
}

/// Random stabilizer group of rank k on n qubits: a Clifford word applied to
/// <Z_0, ..., Z_{k-1}>.
inline StabArray random_stab(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<PauliRow> rows;
  for (std::size_t q = 0; q < k; ++q) rows.push_back(PauliRow::single(n, q, Pauli::Z));
  StabArray s(n, rows);
  const std::size_t len = 4 * n * n + 4;
  for (std::size_t step = 0; step < len; ++step) {
    if (n >= 2 && rng() % 2) {
      const std::size_t c = rng() % n;
      std::size_t t = rng() % (n - 1);
      if (t >= c) ++t;
      s = conj_cx(c, t, s);
    } else {
      s = conj_1q(random_clifford(rng), rng() % n, s);
    }
  }
  return s;
}

/// Every full-rank signless stabilizer group on n qubits, by closure of the
/// all-Z group under H, S and CX.
inline std::vector<StabArray> all_full_rank_groups(std::size_t n) {
  std::vector<PauliRow> rows;
  for (std::size_t q = 0; q < n; ++q) rows.push_back(PauliRow::single(n, q, Pauli::Z));
  std::map<std::vector<std::string>, StabArray> seen;
  std::vector<StabArray> frontier{canonical(StabArray(n, rows))};
  seen.emplace(frontier[0].row_strings(), frontier[0]);
  while (!frontier.empty()) {
    std::vector<StabArray> next;
    for (const auto& s : frontier) {
      std::vector<StabArray> moves;
      for (std::size_t q = 0; q < n; ++q) {
        moves.push_back(conj_1q(Gate::H, q, s));
        moves.push_back(conj_1q(Gate::S, q, s));
        for (std::size_t t = 0; t < n; ++t)
          if (t != q) moves.push_back(conj_cx(q, t, s));
      }
      for (auto& m : moves) {
        StabArray c = canonical(m);
        if (seen.emplace(c.row_strings(), c).second) next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  std::vector<StabArray> out;
  for (auto& [key, s] : seen) out.push_back(s);
  return out;
}

/// True when some member of the group acts on exactly one qubit.
inline bool has_single_member(const StabArray& s) {
  for (const auto& str : enumerate_group(s.rows(), s.num_qubits())) {
    std::size_t w = 0;
    for (char ch : str) w += ch != 'I';
    if (w == 1) return true;
  }
  return false;
}

inline std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
  // Restricted growth strings.
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> label(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t used) {
    if (k == n) {
      out.push_back(label);
      return;
    }
    for (std::size_t v = 0; v <= used && v < n; ++v) {
      label[k] = v;
      rec(k + 1, std::max(used, v + 1));
    }
  };
  if (n > 0) {
    label[0] = 0;
    rec(1, 1);
  }
  return out;
}

/// Contents allowed on a block of size k in the stabilizer domain.
inline std::vector<Content> block_contents(std::size_t k) {
  std::vector<Content> out{Opaque{}};
  if (k == 1) {
    out.push_back(Identity{});
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) out.push_back(single_pauli(p));
    return out;
  }
  for (const auto& s : all_full_rank_groups(k))
    if (!has_single_member(s)) out.push_back(s);
  return out;
}

/// The whole stabilizer-domain lattice on n qubits (small n only).
inline std::vector<Assignment> all_assignments(std::size_t n) {
  std::map<std::size_t, std::vector<Content>> by_size;
  std::vector<Assignment> out;
  for (const auto& label : set_partitions(n)) {
    std::vector<QubitSet> parts;
    for (std::size_t q = 0; q < n; ++q) {
      if (label[q] >= parts.size()) parts.resize(label[q] + 1);
      parts[label[q]].push_back(q);
    }
    for (const auto& p : parts)
      if (!by_size.count(p.size())) by_size[p.size()] = block_contents(p.size());
    std::vector<std::size_t> idx(parts.size(), 0);
    while (true) {
      std::vector<Block> blocks;
      for (std::size_t b = 0; b < parts.size(); ++b)
        blocks.push_back(Block{parts[b], by_size[parts[b].size()][idx[b]]});
      out.emplace_back(n, std::move(blocks));
      std::size_t b = 0;
      while (b < parts.size() && ++idx[b] == by_size[parts[b].size()].size()) idx[b++] = 0;
      if (b == parts.size()) break;
    }
  }
  return out;
}

/// Random stabilizer-domain assignment; blocks of size >= 2 are entangled
/// stabilizer states or opaque.
inline Assignment random_assignment(std::size_t n, std::mt19937_64& rng, bool allow_identity = true) {
  std::vector<std::size_t> label(n);
  for (auto& l : label) l = rng() % n;
  std::map<std::size_t, QubitSet> parts;
  for (std::size_t q = 0; q < n; ++q) parts[label[q]].push_back(q);
  std::vector<Block> blocks;
  for (auto& [l, qs] : parts) {
    const std::size_t k = qs.size();
    if (k == 1) {
      const unsigned pick = rng() % (allow_identity ? 5 : 4);
      Content c = pick == 0 ? Content{Opaque{}}
                 : pick == 4 ? Content{Identity{}}
                             : single_pauli(static_cast<Pauli>(pick));
      blocks.push_back(Block{qs, c});
      continue;
    }
    Content c = Opaque{};
    if (rng() % 4 != 0) {
      for (int tries = 0; tries < 20; ++tries) {
        StabArray s = canonical(random_stab(k, k, rng));
        if (!has_single_member(s)) {
          c = s;
          break;
        }
      }
    }
    blocks.push_back(Block{qs, c});
  }
  return Assignment(n, std::move(blocks));
}

// Independent random AST generator that also emits the derived forms.
// Sequences are right-nested, the only shape the flat grammar can express.
inline StmtPtr random_stmt(std::size_t n, std::size_t depth, std::mt19937_64& rng) {
  unsigned pick = rng() % (depth == 0 ? 6 : 9);
  if (pick == 6) {
    StmtPtr head;
    do head = random_stmt(n, depth - 1, rng);
    while (head->kind == StmtKind::Seq);
    return make_seq(head, random_stmt(n, depth - 1, rng));
  }
  switch (pick) {
    case 0: return make_skip();
    case 1: return make_gate(static_cast<Gate>(rng() % 6), rng() % n);
    case 2: {
      if (n < 2) return make_skip();
      const std::size_t c = rng() % n;
      return make_cx(c, (c + 1 + rng() % (n - 1)) % n);
    }
    case 3: return make_meas(rng() % n);
    case 4: return make_init(rng() % n);
    case 5: return make_init_all();
    case 7:
      return make_if(rng() % n, random_stmt(n, depth - 1, rng), random_stmt(n, depth - 1, rng));
    default: return make_while(rng() % n, random_stmt(n, depth - 1, rng));
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qilent::testing
