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


#include "qilent/extended.hpp"

#include <gtest/gtest.h>

#include "qilent/update.hpp"
#include "test_support.hpp"

namespace qilent {
namespace {

using testing::Dense;
using testing::dense;

ExtArray E(std::initializer_list<const char*> rows) { return ExtArray::from_strings(rows); }

std::vector<std::string> sorted_rows(const ExtArray& e) {
  auto r = e.row_strings();
  std::sort(r.begin(), r.end());
  return r;
}

// Norm of P+ rho P- for the +-1 eigenspaces of the Pauli p.
double off_block(const Dense& rho, const PauliRow& p) {
  const Eigen::Index dim = rho.rows();
  const Dense id = Dense::Identity(dim, dim);
  const Dense l = dense(p);
  return ((id + l) / 2.0 * rho * (id - l) / 2.0).norm();
}

Dense code_state(const StabArray& s) {
  const Eigen::Index dim = Eigen::Index{1} << s.num_qubits();
  Dense rho = Dense::Identity(dim, dim);
  for (const auto& r : s.rows()) rho = rho * (Dense::Identity(dim, dim) + dense(r)) / 2.0;
  return rho / rho.trace();
}

// A valid extended array together with a dense state it describes: a random
// stabilizer state pushed through random Clifford and T gates.
struct Tracked {
  ExtArray e;
  Dense rho;
};

Tracked random_tracked(std::size_t n, std::mt19937_64& rng, std::size_t steps) {
  const StabArray s = testing::random_stab(n, n, rng);
  Tracked t{ExtArray::from_stab(s), code_state(s)};
  for (std::size_t k = 0; k < steps; ++k) {
    const std::size_t q = rng() % n;
    const unsigned pick = rng() % 4;
    if (pick == 0) {
      t.e = add_heart(q, t.e);
      const Dense u = testing::embed_1q(testing::gate_2x2(Gate::T), n, q);
      t.rho = u * t.rho * u.adjoint();
    } else if (pick == 1 && n >= 2) {
      const std::size_t c = q, tq = (q + 1 + rng() % (n - 1)) % n;
      t.e = conj_cx(c, tq, t.e);
      const Dense u = testing::cx_dense(n, c, tq);
      t.rho = u * t.rho * u.adjoint();
    } else {
      const Gate g = testing::random_clifford(rng);
      t.e = conj_1q(g, q, t.e);
      const Dense u = testing::embed_1q(testing::gate_2x2(g), n, q);
      t.rho = u * t.rho * u.adjoint();
    }
  }
  return t;
}

// Shape of an array stored in an extended assignment: valid rows and no
// single-qubit Pauli hiding in the L-span.
bool domain_shaped(const ExtArray& e) {
  if (!valid(e)) return false;
  for (std::size_t q = 0; q < e.num_qubits(); ++q)
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z})
      if (l_span_contains(e, PauliRow::single(e.num_qubits(), q, p))) return false;
  return true;
}

TEST(Valid, Examples) {
  EXPECT_TRUE(valid(E({"?X", "XZ"})));
  EXPECT_FALSE(valid(E({"?Y", "IX"})));
  EXPECT_FALSE(valid(E({"?ZY", "IXY", "Z??"})));
  EXPECT_FALSE(valid(E({"?X", "IZ"})));
  EXPECT_TRUE(valid(E({"X?X", "ZZI", "ZIZ"})));
  EXPECT_FALSE(valid(E({"XX", "XX"})));
  EXPECT_FALSE(valid(E({"XI", "ZZ"})));  // anticommuting L-rows
  EXPECT_FALSE(valid(E({"?I", "ZZ"})));  // a heart on one qubit only
}

TEST(Normalize, Examples) {
  const auto n = normalize(E({"X?X", "ZZI", "ZIZ"}));
  ASSERT_TRUE(n.has_value());
  EXPECT_EQ(*n, canonical(StabArray::from_strings({"ZZI", "ZIZ"})));
  EXPECT_FALSE(normalize(E({"??"})).has_value());
  const StabArray bell = canonical(StabArray::from_strings({"XX", "ZZ"}));
  EXPECT_EQ(normalize(ExtArray::from_stab(bell)), bell);
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(sorted_rows(canonicalize(E({"ZZ", "X?"}))), (std::vector<std::string>{"X?", "ZZ"}));
  EXPECT_EQ(sorted_rows(canonicalize(E({"XX", "ZZ", "??"}))),
            (std::vector<std::string>{"??", "XX", "ZZ"}));
  // Multiplying an L-row into the heart row gives the same representative.
  EXPECT_EQ(canonicalize(E({"ZZI", "ZIZ", "X?X"})), canonicalize(E({"ZZI", "ZIZ", "Y?X"})));
  EXPECT_EQ(canonicalize(E({"ZZI", "ZIZ", "X?X"})), canonicalize(E({"ZZI", "IZZ", "X?X"})));
}

TEST(Canonicalize, InvariantUnderRandomRowOperations) {
  std::mt19937_64 rng(31);
  int with_hearts = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const ExtArray e = random_tracked(n, rng, 1 + rng() % 6).e;
    with_hearts += e.has_heart_rows();
    std::vector<ExtRow> rows = e.rows();
    const std::size_t ops = 1 + rng() % 20;
    for (std::size_t op = 0; op < ops; ++op) {
      const std::size_t a = rng() % rows.size(), b = rng() % rows.size();
      if (a == b) continue;
      if (rng() % 2) std::swap(rows[a], rows[b]);
      else if (!rows[b].is_heart_row()) rows[a] *= rows[b];
    }
    const ExtArray moved(n, rows);
    EXPECT_EQ(canonicalize(moved), canonicalize(e)) << trial;
    EXPECT_EQ(canonicalize(canonicalize(e)), canonicalize(e));
  }
  EXPECT_GT(with_hearts, 200);
}

TEST(AddHeart, Examples) {
  const ExtArray ghz = ExtArray::from_stab(StabArray::from_strings({"XXX", "ZZI", "ZIZ"}));
  EXPECT_EQ(canonicalize(add_heart(1, ghz)), canonicalize(E({"X?X", "ZZI", "ZIZ"})));
  const ExtArray zz = ExtArray::from_stab(StabArray::from_strings({"ZI", "IZ"}));
  EXPECT_EQ(add_heart(0, zz), zz);
  const ExtArray bell = add_heart(0, E({"XX", "ZZ"}));
  EXPECT_EQ(sorted_rows(bell), (std::vector<std::string>{"?X", "ZZ"}));
  EXPECT_TRUE(valid(bell));
}

TEST(AddHeart, SoundAgainstDenseStatesAndLosesAtMostOneRow) {
  std::mt19937_64 rng(32);
  int shaped = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    Tracked t = random_tracked(n, rng, rng() % 5);
    const std::size_t q = rng() % n;
    const ExtArray after = add_heart(q, t.e);
    if (n >= 2 && domain_shaped(t.e)) {
      ++shaped;
      std::string dbg;
      for (auto& r : t.e.row_strings()) dbg += r + " ";
      dbg += "| q" + std::to_string(q) + " | ";
      for (auto& r : after.row_strings()) dbg += r + " ";
      EXPECT_TRUE(valid(after)) << dbg;
    }
    EXPECT_LE(t.e.l_rows().size() - after.l_rows().size(), 1u);
    const Dense u = testing::embed_1q(testing::gate_2x2(Gate::T), n, q);
    const Dense rho = u * t.rho * u.adjoint();
    for (const auto& l : after.l_rows()) EXPECT_LT(off_block(rho, l), 1e-9) << l.str();
    const auto before_norm = normalize(t.e), after_norm = normalize(after);
    const std::size_t nb = before_norm ? before_norm->rank() : 0;
    const std::size_t na = after_norm ? after_norm->rank() : 0;
    EXPECT_LE(na, nb);
  }
  EXPECT_GT(shaped, 30);
}

TEST(TrackedStates, SatisfyTheirLRows) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const Tracked t = random_tracked(n, rng, 8);
    for (const auto& l : t.e.l_rows()) EXPECT_LT(off_block(t.rho, l), 1e-9);
  }
}

TEST(MeasEBlock, Examples) {
  const auto split = meas_e_block(0, E({"X?X", "ZZI", "ZIZ"}));
  ASSERT_TRUE(std::holds_alternative<MeasSplit>(split));
  const ExtArray rest = std::get<MeasSplit>(split).rest;
  EXPECT_FALSE(rest.has_heart_rows());
  EXPECT_TRUE(same_group(StabArray(2, rest.l_rows()), StabArray::from_strings({"ZI", "IZ"})));
  EXPECT_TRUE(std::holds_alternative<MeasUnknown>(meas_e_block(1, E({"X?X", "ZZI", "ZIZ"}))));
  EXPECT_TRUE(std::holds_alternative<MeasUnknown>(meas_e_block(0, E({"??", "X?"}))));
}

TEST(MeasEBlock, SplitsAreSoundAgainstProjectedStates) {
  std::mt19937_64 rng(34);
  int splits = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const Tracked t = random_tracked(n, rng, 1 + rng() % 6);
    const std::size_t i = rng() % n;
    const auto res = meas_e_block(i, t.e);
    if (!std::holds_alternative<MeasSplit>(res)) continue;
    ++splits;
    const ExtArray& rest = std::get<MeasSplit>(res).rest;
    ASSERT_EQ(rest.num_qubits(), n - 1);
    const Dense zi = testing::embed_1q(testing::pauli_2x2(Pauli::Z), n, i);
    const Eigen::Index dim = t.rho.rows();
    for (int bit = 0; bit < 2; ++bit) {
      const Dense proj = (Dense::Identity(dim, dim) + (bit ? -1.0 : 1.0) * zi) / 2.0;
      const Dense post = proj * t.rho * proj;
      for (const auto& l : rest.l_rows()) {
        PauliRow wide(n);
        for (std::size_t q = 0, k = 0; q < n; ++q)
          if (q != i) wide.set(q, l[k++]);
        EXPECT_LT(off_block(post, wide), 1e-9) << trial << " " << l.str();
      }
    }
  }
  EXPECT_GT(splits, 50);
}

TEST(UpdateE, Examples) {
  const auto zz = update_e({1, 2}, {1, 2}, ExtArray::from_stab(StabArray::from_strings({"ZI", "IZ"})));
  ASSERT_EQ(zz.size(), 2u);
  EXPECT_EQ(zz[0], (Block{{1}, single_pauli(Pauli::Z)}));
  EXPECT_EQ(zz[1], (Block{{2}, single_pauli(Pauli::Z)}));

  const ExtArray xh = E({"X?", "ZZ"});
  const auto kept = update_e({0, 1}, {0, 1}, xh);
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0].qubits, (QubitSet{0, 1}));
  EXPECT_EQ(kept[0].content, Content{canonicalize(xh)});

  auto split = update_e({0, 1}, {0, 1}, E({"??", "IZ"}));
  std::sort(split.begin(), split.end(),
            [](const Block& a, const Block& b) { return a.qubits < b.qubits; });
  ASSERT_EQ(split.size(), 2u);
  EXPECT_EQ(split[0], (Block{{0}, Opaque{}}));
  EXPECT_EQ(split[1], (Block{{1}, single_pauli(Pauli::Z)}));
}

TEST(UpdateE, EqualsUpdateOnHeartFreeInput) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const StabArray s = testing::random_stab(n, n, rng);
    QubitSet a(n), j;
    for (std::size_t q = 0; q < n; ++q) a[q] = q;
    for (std::size_t q = 0; q < n; ++q)
      if (rng() % 2) j.push_back(q);
    EXPECT_EQ(update_e(j, a, ExtArray::from_stab(s)), update(j, a, s));
  }
}

TEST(TensorE, Examples) {
  EXPECT_EQ(tensor_e(E({"?"}), ExtArray::from_stab(StabArray::from_strings({"Z"}))).row_strings(),
            (std::vector<std::string>{"?I", "IZ"}));
  EXPECT_EQ(tensor_e(E({"X"}), E({"Z"})).row_strings(), (std::vector<std::string>{"XI", "IZ"}));
}

TEST(ConjCxE, HeartSpreadsToBothCells) {
  EXPECT_EQ(conj_cx(0, 1, E({"?I"})).row_strings(), (std::vector<std::string>{"??"}));
  EXPECT_EQ(conj_cx(0, 1, E({"I?"})).row_strings(), (std::vector<std::string>{"??"}));
}

}  // namespace
}  // namespace qilent
