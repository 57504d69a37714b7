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

#include "qilent/update.hpp"

#include <algorithm>
#include <stdexcept>

namespace qilent {

namespace {

std::size_t local_index(const QubitSet& a, std::size_t q) {
  auto it = std::lower_bound(a.begin(), a.end(), q);
  if (it == a.end() || *it != q) {
    throw std::invalid_argument("qubit " + std::to_string(q) + " is not in the block");
  }
  return static_cast<std::size_t>(it - a.begin());
}

void check_subset(const QubitSet& j, const QubitSet& a) {
  if (!std::is_sorted(a.begin(), a.end()) || !std::is_sorted(j.begin(), j.end())) {
    throw std::invalid_argument("qubit sets must be sorted");
  }
  for (std::size_t q : j) local_index(a, q);
}

}  // namespace

std::vector<Block> update(const QubitSet& j, const QubitSet& a, const Content& c) {
  check_subset(j, a);
  if (is_ext(c)) throw std::invalid_argument("update on an extended array; use update_e");
  if (!is_stab(c) || j.empty()) return {Block{a, settle(a.size(), c)}};

  std::vector<Block> out;
  QubitSet rest = a;
  StabArray s = std::get<StabArray>(c);
  for (std::size_t q : j) {
    if (rest.size() < 2) break;
    const std::size_t k = local_index(rest, q);
    auto split = extract_single(k, s);
    if (!split) continue;
    out.push_back(Block{{q}, single_pauli(split->sigma)});
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    s = std::move(split->rest);
  }
  out.push_back(Block{rest, settle(rest.size(), s)});
  return out;
}

std::vector<Block> update_e(const QubitSet& j, const QubitSet& a, const Content& c) {
  check_subset(j, a);
  const Content settled = settle(a.size(), c);
  if (!is_ext(settled)) return update(j, a, settled);

  const auto& e = std::get<ExtArray>(settled);
  std::vector<Block> out;
  QubitSet rest = a;
  for (std::size_t q : j) {
    const std::size_t k = local_index(a, q);
    for (Pauli sigma : {Pauli::Z, Pauli::X, Pauli::Y}) {
      if (!l_span_contains(e, PauliRow::single(a.size(), k, sigma))) continue;
      out.push_back(Block{{q}, single_pauli(sigma)});
      rest.erase(std::find(rest.begin(), rest.end(), q));
      break;
    }
  }
  if (out.empty()) return {Block{a, settled}};
  if (!rest.empty()) out.push_back(Block{rest, Opaque{}});
  return out;
}

}  // namespace qilent
