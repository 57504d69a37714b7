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


#include "qilent/domain.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace qilent {
namespace {

Content Z() { return single_pauli(Pauli::Z); }
Content X() { return single_pauli(Pauli::X); }
Content Y() { return single_pauli(Pauli::Y); }
Content bell() { return canonical(StabArray::from_strings({"XX", "ZZ"})); }

const std::vector<Assignment>& lattice(std::size_t n) {
  static std::map<std::size_t, std::vector<Assignment>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, testing::all_assignments(n)).first;
  return it->second;
}

TEST(Assignment, ConstructionChecks) {
  EXPECT_THROW(Assignment(2, {Block{{0}, Z()}}), std::invalid_argument);
  EXPECT_THROW(Assignment(2, {Block{{0, 1}, Z()}}), std::invalid_argument);
  EXPECT_THROW(Assignment(2, {Block{{0}, Z()}, Block{{0, 1}, bell()}}), std::invalid_argument);
  const Assignment a(3, {Block{{2}, Z()}, Block{{0, 1}, bell()}});
  EXPECT_EQ(a.blocks()[0].qubits, (QubitSet{0, 1}));
  EXPECT_EQ(a.local_index(1), 1u);
  EXPECT_TRUE(a.same_block(0, 1));
  EXPECT_FALSE(a.same_block(1, 2));
}

TEST(WellFormed, StabilizerDomainRules) {
  EXPECT_FALSE(well_formed_violation(Assignment::zeros(3), Domain::C));
  EXPECT_FALSE(well_formed_violation(Assignment::top(3), Domain::C));
  EXPECT_TRUE(well_formed_violation(Assignment(2, {Block{{0, 1}, StabArray::from_strings({"ZI", "IZ"})}}),
                                    Domain::C));
  EXPECT_TRUE(well_formed_violation(Assignment(2, {Block{{0, 1}, StabArray::from_strings({"XX"})}}),
                                    Domain::C));
  const Assignment ext(3, {Block{{0, 1, 2}, ExtArray::from_strings({"X?X", "ZZI", "ZIZ"})}});
  EXPECT_TRUE(well_formed_violation(ext, Domain::C));
  EXPECT_FALSE(well_formed_violation(ext, Domain::E));
}

TEST(LeqS, Examples) {
  EXPECT_TRUE(leq_s(Identity{}, X()));
  EXPECT_FALSE(leq_s(X(), Z()));
  EXPECT_TRUE(leq_s(bell(), Opaque{}));
  EXPECT_TRUE(leq_s(Z(), Z()));
  EXPECT_FALSE(leq_s(Opaque{}, Z()));
}

TEST(JoinS, Examples) {
  EXPECT_EQ(join_s(Identity{}, X()), X());
  EXPECT_EQ(join_s(Z(), Z()), Z());
  EXPECT_EQ(join_s(Z(), X()), Content{Opaque{}});
}

TEST(LeqC, Examples) {
  const Assignment a(2, {Block{{0}, Identity{}}, Block{{1}, Z()}});
  const Assignment b(2, {Block{{0}, X()}, Block{{1}, Z()}});
  EXPECT_TRUE(leq_c(a, b));
  EXPECT_FALSE(leq_c(b, a));
  for (const auto& x : lattice(2)) {
    EXPECT_TRUE(leq_c(x, Assignment::top(2)));
    EXPECT_TRUE(leq_c(Assignment::bottom(2), x));
  }
}

TEST(JoinC, Examples) {
  const Assignment a(2, {Block{{0}, X()}, Block{{1}, Z()}});
  const Assignment b(2, {Block{{0, 1}, bell()}});
  EXPECT_EQ(join_c(a, b), Assignment(2, {Block{{0, 1}, Opaque{}}}));
  EXPECT_EQ(join_c(a, a), a);
  const Assignment z = Assignment::zeros(2);
  EXPECT_EQ(join_c(z, z), z);
}

TEST(LatticeLaws, ExhaustiveOnTwoQubits) {
  const auto& all = lattice(2);
  ASSERT_GT(all.size(), 20u);
  for (const auto& a : all) {
    EXPECT_FALSE(well_formed_violation(a, Domain::C));
    EXPECT_TRUE(leq_c(a, a));
    EXPECT_EQ(join_c(a, a), a);
    EXPECT_EQ(meet_c(a, a), a);
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      const Assignment j = join_c(a, b);
      const Assignment m = meet_c(a, b);
      EXPECT_EQ(j, join_c(b, a));
      EXPECT_EQ(m, meet_c(b, a));
      EXPECT_FALSE(well_formed_violation(j, Domain::C));
      EXPECT_FALSE(well_formed_violation(m, Domain::C));
      EXPECT_TRUE(leq_c(a, j) && leq_c(b, j));
      EXPECT_TRUE(leq_c(m, a) && leq_c(m, b));
      if (leq_c(a, b) && leq_c(b, a)) EXPECT_EQ(a, b);
      EXPECT_EQ(join_c(a, meet_c(a, b)), a);
      EXPECT_EQ(meet_c(a, join_c(a, b)), a);
      for (const auto& c : all) {
        if (leq_c(a, c) && leq_c(b, c)) EXPECT_TRUE(leq_c(j, c));
        if (leq_c(c, a) && leq_c(c, b)) EXPECT_TRUE(leq_c(c, m));
        if (leq_c(a, b) && leq_c(b, c)) EXPECT_TRUE(leq_c(a, c));
      }
    }
  }
}

TEST(LatticeLaws, SampledOnThreeAndFourQubits) {
  std::mt19937_64 rng(41);
  const auto& all3 = lattice(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Assignment& a = all3[rng() % all3.size()];
    const Assignment& b = all3[rng() % all3.size()];
    const Assignment j = join_c(a, b);
    EXPECT_TRUE(leq_c(a, j) && leq_c(b, j));
    for (const auto& c : all3)
      if (leq_c(a, c) && leq_c(b, c)) EXPECT_TRUE(leq_c(j, c));
  }
  for (int trial = 0; trial < 500; ++trial) {
    const Assignment a = testing::random_assignment(4, rng);
    const Assignment b = testing::random_assignment(4, rng);
    const Assignment c = testing::random_assignment(4, rng);
    EXPECT_EQ(join_c(join_c(a, b), c), join_c(a, join_c(b, c)));
    EXPECT_EQ(meet_c(meet_c(a, b), c), meet_c(a, meet_c(b, c)));
    const Assignment j = join_c(a, b);
    EXPECT_TRUE(leq_c(a, j) && leq_c(b, j));
    EXPECT_FALSE(well_formed_violation(j, Domain::C));
    if (leq_c(a, c) && leq_c(b, c)) EXPECT_TRUE(leq_c(j, c));
    if (leq_c(a, b) && leq_c(b, c)) EXPECT_TRUE(leq_c(a, c));
  }
}

TEST(NormalForm, Examples) {
  const Assignment g(3, {Block{{0, 1, 2}, ExtArray::from_strings({"X?X", "ZZI", "ZIZ"})}});
  EXPECT_EQ(normal_form(g),
            Assignment(3, {Block{{0, 1, 2}, canonical(StabArray::from_strings({"ZZI", "ZIZ"}))}}));
  const Assignment z = Assignment::zeros(3);
  EXPECT_EQ(normal_form(z), z);
  EXPECT_EQ(normal_form(Assignment(2, {Block{{0, 1}, ExtArray::from_strings({"??"})}})),
            Assignment(2, {Block{{0, 1}, Opaque{}}}));
}

TEST(JoinApprox, Examples) {
  const Assignment a(2, {Block{{0}, X()}, Block{{1}, Z()}});
  const Assignment b(2, {Block{{0, 1}, bell()}});
  EXPECT_EQ(join_approx(a, b), Assignment(2, {Block{{0, 1}, Opaque{}}}));
  const Assignment g(3, {Block{{0, 1, 2}, ExtArray::from_strings({"X?X", "ZZI", "ZIZ"})}});
  EXPECT_EQ(join_approx(g, g), normal_form(g));
  EXPECT_NE(join_approx(g, g), g);
  EXPECT_EQ(join_approx(g, Assignment::top(3)), Assignment::top(3));
}

TEST(Replace, Examples) {
  const Assignment a(2, {Block{{0}, Identity{}}, Block{{1}, Z()}});
  EXPECT_EQ(replace_content(a, 0, Z()), Assignment::zeros(2));
  const Assignment z2 = Assignment::zeros(2);
  EXPECT_EQ(replace(z2, {0, 1}, {Block{{0, 1}, bell()}}), Assignment(2, {Block{{0, 1}, bell()}}));
  const Assignment top3 = Assignment::top(3);
  EXPECT_EQ(replace(top3, {0}, {Block{{0}, Z()}, Block{{1, 2}, Opaque{}}}),
            Assignment(3, {Block{{0}, Z()}, Block{{1, 2}, Opaque{}}}));
  EXPECT_THROW(replace(top3, {0}, {Block{{0}, Z()}}), std::logic_error);
}

TEST(Odot, ProbeSemantics) {
  const Assignment a(3, {Block{{0, 1}, bell()}, Block{{2}, Identity{}}});
  EXPECT_EQ(odot(a, {0, 1}), bell());
  EXPECT_EQ(odot(a, {2}), Content{Identity{}});
  EXPECT_EQ(odot(a, {0}), Content{Opaque{}});
  EXPECT_EQ(odot(a, {0, 1, 2}), Content{Opaque{}});
}

}  // namespace
}  // namespace qilent
