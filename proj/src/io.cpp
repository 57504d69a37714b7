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

#include "qilent/io.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qilent {

using nlohmann::json;

namespace {

json complex_pair(const Complex& z) { return json::array({z.real(), z.imag()}); }

std::string qubit_list(const QubitSet& qs) {
  std::string out = "{";
  for (std::size_t k = 0; k < qs.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(qs[k]);
  }
  return out + "}";
}

}  // namespace

json to_json(const Assignment& a) {
  json blocks = json::array();
  for (const auto& b : a.blocks()) {
    json jb = {{"qubits", b.qubits}, {"kind", std::string(kind_name(b.content))}};
    if (is_stab(b.content) || is_ext(b.content)) jb["rows"] = content_rows(b.content);
    blocks.push_back(std::move(jb));
  }
  return {{"qubits", a.num_qubits()}, {"blocks", std::move(blocks)}};
}

Assignment assignment_from_json(const json& j) {
  try {
    if (!j.is_object()) throw std::invalid_argument("assignment must be a JSON object");
    const auto n = j.at("qubits").get<std::size_t>();
    std::vector<Block> blocks;
    for (const auto& jb : j.at("blocks")) {
      const auto listed = jb.at("qubits").get<QubitSet>();
      const auto kind = jb.at("kind").get<std::string>();
      // Blocks store qubits sorted; row columns follow the listed order.
      std::vector<std::size_t> order(listed.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return listed[x] < listed[y]; });
      QubitSet qubits;
      for (std::size_t k : order) qubits.push_back(listed[k]);
      auto rows = [&] {
        std::vector<std::string> out;
        for (const auto& r : jb.at("rows").get<std::vector<std::string>>()) {
          if (r.size() != listed.size()) throw std::invalid_argument("row '" + r + "' does not match the block size");
          std::string s;
          for (std::size_t k : order) s += r[k];
          out.push_back(std::move(s));
        }
        return out;
      };
      Content c;
      if (kind == "identity") {
        c = Identity{};
      } else if (kind == "opaque") {
        c = Opaque{};
      } else if (kind == "stabilizer") {
        c = StabArray::from_strings(qubits.size(), rows());
      } else if (kind == "extended") {
        c = ExtArray::from_strings(qubits.size(), rows());
      } else {
        throw std::invalid_argument("unknown block kind '" + kind + "'");
      }
      blocks.push_back(Block{std::move(qubits), std::move(c)});
    }
    return Assignment(n, std::move(blocks));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed assignment JSON: ") + e.what());
  }
}

json to_json(const Ensemble& e) {
  json branches = json::array();
  for (const auto& b : e.branches) {
    json amps = json::array();
    for (Eigen::Index k = 0; k < b.state.size(); ++k) amps.push_back(complex_pair(b.state[k]));
    branches.push_back({{"weight", b.weight}, {"amplitudes", std::move(amps)}});
  }
  return {{"qubits", e.num_qubits}, {"branches", std::move(branches)}, {"discarded", e.discarded}};
}

json density_to_json(const Matrix& rho, std::size_t n) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < rho.cols(); ++c) row.push_back(complex_pair(rho(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"qubits", n}, {"density", std::move(rows)}};
}

json to_json(const SuiteReport& r) {
  json cex = json::array();
  for (const auto& c : r.counterexamples) {
    cex.push_back({{"domain", c.domain},
                   {"program", c.program},
                   {"start", c.start},
                   {"result", c.result},
                   {"start_state", c.start_state},
                   {"diagnostics", c.diagnostics}});
  }
  return {{"cases", r.cases},
          {"verified", r.verified},
          {"inconclusive", r.inconclusive},
          {"hard_failures", r.hard_failures},
          {"counterexamples", std::move(cex)}};
}

json to_json(const TraceEntry& t) { return {{"point", t.point}, {"assignment", to_json(t.assignment)}}; }

Vector state_from_json(const json& j) {
  try {
    const auto n = j.at("qubits").get<std::size_t>();
    const auto& amps = j.at("amplitudes");
    if (n > 20 || amps.size() != (std::size_t{1} << n)) {
      throw std::invalid_argument("expected 2^qubits amplitudes");
    }
    Vector v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t k = 0; k < amps.size(); ++k) {
      const auto& a = amps[k];
      v[static_cast<Eigen::Index>(k)] =
          a.is_array() ? Complex(a.at(0).get<double>(), a.at(1).get<double>()) : Complex(a.get<double>(), 0.0);
    }
    if (v.norm() == 0.0) throw std::invalid_argument("zero state vector");
    return v.normalized();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed state JSON: ") + e.what());
  }
}

std::string render_text(const Assignment& a) {
  const std::size_t n = a.num_qubits();
  std::string out = "   ";
  for (std::size_t q = 0; q < n; ++q) {
    std::string label = "q" + std::to_string(q);
    label.resize(std::max<std::size_t>(label.size(), 3), ' ');
    out += label;
  }
  while (out.back() == ' ') out.pop_back();
  out += '\n';
  for (const auto& b : a.blocks()) {
    std::vector<std::string> rows;
    if (is_stab(b.content) || is_ext(b.content)) {
      rows = content_rows(b.content);
    } else {
      rows.push_back(std::string(b.qubits.size(), is_identity(b.content) ? 'I' : '#'));
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::string line = "[  ";
      for (std::size_t q = 0; q < n; ++q) {
        auto it = std::find(b.qubits.begin(), b.qubits.end(), q);
        std::string cell = it == b.qubits.end()
                               ? "."
                               : std::string(1, rows[r][static_cast<std::size_t>(it - b.qubits.begin())]);
        cell.resize(std::max<std::size_t>(3, ("q" + std::to_string(q)).size()), ' ');
        line += cell;
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      line += " ]";
      if (r == 0) line += "  " + qubit_list(b.qubits) + " " + std::string(kind_name(b.content));
      out += line + '\n';
    }
  }
  return out;
}

}  // namespace qilent
