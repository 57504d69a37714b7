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

#include "qilent/content.hpp"

#include <stdexcept>
#include <utility>

namespace qilent {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string join_rows(const std::vector<std::string>& rows) {
  std::string out;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    if (k) out += ',';
    out += rows[k];
  }
  return out;
}

}  // namespace

std::string_view kind_name(const Content& c) {
  return std::visit(overloaded{[](const Identity&) { return std::string_view("identity"); },
                               [](const StabArray&) { return std::string_view("stabilizer"); },
                               [](const ExtArray&) { return std::string_view("extended"); },
                               [](const Opaque&) { return std::string_view("opaque"); }},
                    c);
}

std::vector<std::string> content_rows(const Content& c) {
  if (const auto* s = std::get_if<StabArray>(&c)) return s->row_strings();
  if (const auto* e = std::get_if<ExtArray>(&c)) return e->row_strings();
  return {};
}

std::string content_str(const Content& c) {
  if (is_identity(c)) return "1";
  if (is_opaque(c)) return "#";
  if (is_stab(c)) return "<" + join_rows(content_rows(c)) + ">";
  return "{" + join_rows(content_rows(c)) + "}";
}

Content single_pauli(Pauli p) {
  if (p == Pauli::I) throw std::invalid_argument("a generator cannot be the identity");
  return StabArray(1, {PauliRow::single(1, 0, p)});
}

std::size_t content_width(const Content& c) {
  if (const auto* s = std::get_if<StabArray>(&c)) return s->num_qubits();
  if (const auto* e = std::get_if<ExtArray>(&c)) return e->num_qubits();
  return 0;
}

Content settle(std::size_t n, Content c) {
  if (is_identity(c)) {
    if (n != 1) throw std::logic_error("identity content on a block of " + std::to_string(n));
    return c;
  }
  if (is_opaque(c)) return c;
  if (content_width(c) != n) {
    throw std::logic_error("content of width " + std::to_string(content_width(c)) +
                           " on a block of " + std::to_string(n));
  }
  if (auto* s = std::get_if<StabArray>(&c)) {
    if (s->rank() == 0) return Opaque{};
    return canonical(*s);
  }
  const auto& raw = std::get<ExtArray>(c);
  std::vector<ExtRow> kept;
  for (const auto& r : raw.rows()) {
    if (r.is_identity()) continue;
    if (r.is_heart_row() && n >= 2 && r.weight() <= 1) continue;
    kept.push_back(r);
  }
  ExtArray e = canonicalize(ExtArray(n, std::move(kept)));
  if (e.num_rows() == 0) return Opaque{};
  if (!e.has_heart_rows()) return StabArray(n, e.l_rows());
  return e;
}

}  // namespace qilent
