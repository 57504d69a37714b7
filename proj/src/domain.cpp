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

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace qilent {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void check_same_size(const Assignment& a, const Assignment& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("assignments over different qubit counts");
  }
}

// Whether some single-qubit Pauli lies in the group spanned by rows.
bool has_single_member(std::size_t n, const std::vector<PauliRow>& rows) {
  const auto echelon = row_echelon(rows);
  for (std::size_t k = 0; k < n; ++k) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      if (in_echelon_span(echelon, PauliRow::single(n, k, p))) return true;
    }
  }
  return false;
}

Content meet_s(const Content& s, const Content& t) {
  if (is_identity(s) || is_identity(t)) return Identity{};
  if (is_opaque(s)) return t;
  if (is_opaque(t)) return s;
  if (s == t) return s;
  return Identity{};
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<QubitSet> groups_by(std::size_t n, const std::vector<std::size_t>& label) {
  std::map<std::size_t, QubitSet> by_label;
  for (std::size_t q = 0; q < n; ++q) by_label[label[q]].push_back(q);
  std::vector<QubitSet> out;
  out.reserve(by_label.size());
  for (auto& [l, qs] : by_label) out.push_back(std::move(qs));
  return out;
}

}  // namespace

Assignment::Assignment(std::size_t n, std::vector<Block> blocks) : n_(n), owner_(n, kNone) {
  for (auto& b : blocks) {
    if (b.qubits.empty()) throw std::invalid_argument("empty block");
    std::sort(b.qubits.begin(), b.qubits.end());
    for (std::size_t q : b.qubits) {
      if (q >= n) throw std::invalid_argument("qubit " + std::to_string(q) + " out of range");
      if (owner_[q] != kNone) {
        throw std::invalid_argument("qubit " + std::to_string(q) + " is in two blocks");
      }
      owner_[q] = 0;
    }
    if (is_identity(b.content) && b.qubits.size() != 1) {
      throw std::invalid_argument("identity content on a block of " +
                                  std::to_string(b.qubits.size()) + " qubits");
    }
    const std::size_t w = content_width(b.content);
    if (w != 0 && w != b.qubits.size()) {
      throw std::invalid_argument("content of width " + std::to_string(w) + " on a block of " +
                                  std::to_string(b.qubits.size()) + " qubits");
    }
    b.content = settle(b.qubits.size(), std::move(b.content));
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (owner_[q] == kNone) {
      throw std::invalid_argument("qubit " + std::to_string(q) + " is in no block");
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& x, const Block& y) { return x.qubits.front() < y.qubits.front(); });
  blocks_ = std::move(blocks);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    for (std::size_t q : blocks_[i].qubits) owner_[q] = i;
  }
}

Assignment Assignment::top(std::size_t n) {
  if (n == 0) return Assignment(0, {});
  QubitSet all(n);
  std::iota(all.begin(), all.end(), 0);
  return Assignment(n, {Block{all, Opaque{}}});
}

Assignment Assignment::bottom(std::size_t n) {
  std::vector<Block> blocks;
  for (std::size_t q = 0; q < n; ++q) blocks.push_back(Block{{q}, Identity{}});
  return Assignment(n, std::move(blocks));
}

Assignment Assignment::zeros(std::size_t n) {
  std::vector<Block> blocks;
  for (std::size_t q = 0; q < n; ++q) blocks.push_back(Block{{q}, single_pauli(Pauli::Z)});
  return Assignment(n, std::move(blocks));
}

const Block& Assignment::block_of(std::size_t q) const { return blocks_[block_index(q)]; }

std::size_t Assignment::block_index(std::size_t q) const {
  if (q >= n_) throw std::out_of_range("qubit " + std::to_string(q) + " out of range");
  return owner_[q];
}

bool Assignment::same_block(std::size_t a, std::size_t b) const {
  return block_index(a) == block_index(b);
}

std::size_t Assignment::local_index(std::size_t q) const {
  const auto& qs = block_of(q).qubits;
  return static_cast<std::size_t>(std::lower_bound(qs.begin(), qs.end(), q) - qs.begin());
}

bool Assignment::has_extended() const {
  return std::any_of(blocks_.begin(), blocks_.end(),
                     [](const Block& b) { return is_ext(b.content); });
}

std::string Assignment::key() const {
  std::string out = std::to_string(n_);
  for (const auto& b : blocks_) {
    out += '|';
    for (std::size_t k = 0; k < b.qubits.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(b.qubits[k]);
    }
    out += ':';
    out += content_str(b.content);
  }
  return out;
}

std::optional<std::string> well_formed_violation(const Assignment& a, Domain d) {
  for (const auto& b : a.blocks()) {
    const std::size_t k = b.qubits.size();
    const std::string where = "block starting at q" + std::to_string(b.qubits.front());
    if (const auto* s = std::get_if<StabArray>(&b.content)) {
      if (d == Domain::C && !s->full_rank()) return where + ": stabilizer array is not full rank";
      if (k >= 2 && has_single_member(k, s->rows())) {
        return where + ": group contains a single-qubit Pauli";
      }
    } else if (const auto* e = std::get_if<ExtArray>(&b.content)) {
      if (d == Domain::C) return where + ": extended array in the C domain";
      if (!valid(*e)) return where + ": extended array is not valid";
      if (k >= 2 && has_single_member(k, e->l_rows())) {
        return where + ": L-span contains a single-qubit Pauli";
      }
    }
  }
  return std::nullopt;
}

bool leq_s(const Content& s, const Content& t) { return is_identity(s) || is_opaque(t) || s == t; }

Content join_s(const Content& s, const Content& t) {
  if (is_identity(s)) return t;
  if (is_identity(t)) return s;
  if (s == t) return s;
  return Opaque{};
}

Content odot(const Assignment& a, const QubitSet& probe) {
  if (probe.empty()) throw std::invalid_argument("empty probe set");
  const Block& first = a.block_of(probe.front());
  if (first.qubits == probe) return first.content;
  for (std::size_t q : probe) {
    if (!is_identity(a.content_of(q))) return Opaque{};
  }
  return Identity{};
}

bool leq_c(const Assignment& a, const Assignment& b) {
  check_same_size(a, b);
  for (const auto& blk : a.blocks()) {
    const std::size_t owner = b.block_index(blk.qubits.front());
    for (std::size_t q : blk.qubits) {
      if (b.block_index(q) != owner) return false;
    }
  }
  for (const auto& blk : b.blocks()) {
    if (!leq_s(odot(a, blk.qubits), blk.content)) return false;
  }
  return true;
}

Assignment join_c(const Assignment& a, const Assignment& b) {
  check_same_size(a, b);
  const std::size_t n = a.num_qubits();
  UnionFind uf(n);
  for (const auto* side : {&a, &b}) {
    for (const auto& blk : side->blocks()) {
      for (std::size_t q : blk.qubits) uf.unite(blk.qubits.front(), q);
    }
  }
  std::vector<std::size_t> label(n);
  for (std::size_t q = 0; q < n; ++q) label[q] = uf.find(q);
  std::vector<Block> blocks;
  for (auto& qs : groups_by(n, label)) {
    Content c = join_s(odot(a, qs), odot(b, qs));
    blocks.push_back(Block{std::move(qs), std::move(c)});
  }
  return Assignment(n, std::move(blocks));
}

// Starts from the common refinement. A block whose content is not opaque
// cannot be split without every piece becoming identity, and two distinct
// stabilizers meet at identity, so those qubits are forced to identity
// singletons; forcing can split further blocks, hence the loop.
Assignment meet_c(const Assignment& a, const Assignment& b) {
  check_same_size(a, b);
  const std::size_t n = a.num_qubits();
  std::vector<bool> forced(n, false);

  auto current_groups = [&]() {
    std::vector<std::size_t> label(n);
    for (std::size_t q = 0; q < n; ++q) {
      label[q] = forced[q] ? n * n + q : a.block_index(q) * n + b.block_index(q);
    }
    return groups_by(n, label);
  };
  auto force = [&](const QubitSet& qs) {
    bool changed = false;
    for (std::size_t q : qs) {
      if (!forced[q]) changed = forced[q] = true;
    }
    return changed;
  };
  auto split = [&](const Block& blk, const std::vector<std::size_t>& group_of) {
    for (std::size_t q : blk.qubits) {
      if (group_of[q] != group_of[blk.qubits.front()]) return true;
    }
    return false;
  };

  std::vector<QubitSet> groups;
  for (bool changed = true; changed;) {
    changed = false;
    groups = current_groups();
    std::vector<std::size_t> group_of(n);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (std::size_t q : groups[g]) group_of[q] = g;
    }
    for (const auto* side : {&a, &b}) {
      for (const auto& blk : side->blocks()) {
        if (!is_opaque(blk.content) && split(blk, group_of)) changed |= force(blk.qubits);
      }
    }
    for (const auto& qs : groups) {
      if (qs.size() < 2 || forced[qs.front()]) continue;
      const Content m = meet_s(odot(a, qs), odot(b, qs));
      if (is_identity(m)) changed |= force(qs);
    }
  }

  std::vector<Block> blocks;
  for (auto& qs : groups) {
    Content c = forced[qs.front()] ? Content(Identity{}) : meet_s(odot(a, qs), odot(b, qs));
    blocks.push_back(Block{std::move(qs), std::move(c)});
  }
  return Assignment(n, std::move(blocks));
}

Assignment normal_form(const Assignment& g) {
  std::vector<Block> blocks = g.blocks();
  for (auto& b : blocks) {
    if (const auto* e = std::get_if<ExtArray>(&b.content)) {
      auto s = normalize(*e);
      b.content = s ? Content(std::move(*s)) : Content(Opaque{});
    }
  }
  return Assignment(g.num_qubits(), std::move(blocks));
}

Assignment join_approx(const Assignment& g, const Assignment& d) {
  return join_c(normal_form(g), normal_form(d));
}

Assignment replace(const Assignment& a, const QubitSet& qubits, std::vector<Block> blocks) {
  std::vector<bool> removed(a.num_qubits(), false);
  for (std::size_t q : qubits) {
    for (std::size_t r : a.block_of(q).qubits) removed[r] = true;
  }
  std::vector<bool> covered(a.num_qubits(), false);
  for (const auto& b : blocks) {
    for (std::size_t q : b.qubits) {
      if (q >= a.num_qubits() || !removed[q] || covered[q]) {
        throw std::logic_error("replacement blocks do not match the removed blocks");
      }
      covered[q] = true;
    }
  }
  if (covered != removed) throw std::logic_error("replacement blocks leave qubits uncovered");
  for (const auto& b : a.blocks()) {
    if (!removed[b.qubits.front()]) blocks.push_back(b);
  }
  return Assignment(a.num_qubits(), std::move(blocks));
}

Assignment replace_content(const Assignment& a, std::size_t q, Content c) {
  const auto& qs = a.block_of(q).qubits;
  return replace(a, {q}, {Block{qs, std::move(c)}});
}

}  // namespace qilent
