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


// Native half of the Python package. Assignments and reports cross the
// boundary as JSON text; qilent/__init__.py turns them into dicts.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "qilent/abstract_interp.hpp"
#include "qilent/concrete_sim.hpp"
#include "qilent/io.hpp"
#include "qilent/qil.hpp"
#include "qilent/soundness.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace qilent {
namespace {

Domain domain_of(const std::string& d) {
  if (d == "c") return Domain::C;
  if (d == "e") return Domain::E;
  throw std::invalid_argument("domain must be 'c' or 'e'");
}

Assignment start_of(const std::string& init, std::size_t n) {
  if (init == "top") return Assignment::top(n);
  if (init == "zeros") return Assignment::zeros(n);
  return assignment_from_json(json::parse(init));
}

json analyze_json(const std::string& source, const std::string& domain, const std::string& init,
                  bool strict_paper, bool trace, std::size_t max_while_iters) {
  const Program p = parse(source);
  AnalysisConfig cfg;
  cfg.domain = domain_of(domain);
  cfg.strict_paper = strict_paper;
  cfg.trace = trace;
  cfg.max_while_iters = max_while_iters;
  const AnalysisResult r = analyze(p, start_of(init, p.num_qubits), cfg);
  json out = {{"result", to_json(r.result)}};
  if (trace) {
    out["trace"] = json::array();
    for (const auto& t : r.trace) out["trace"].push_back(to_json(t));
  }
  return out;
}

Matrix simulate(const std::string& source, const std::optional<Vector>& state, std::size_t max_while_iters) {
  const Program p = desugar(parse(source));
  if (p.num_qubits > 10) throw std::invalid_argument("density simulation supports at most 10 qubits");
  const Vector psi = state ? *state : ket(std::string(p.num_qubits, '0'));
  if (psi.size() != (Eigen::Index{1} << p.num_qubits) || psi.norm() == 0.0) {
    throw std::invalid_argument("state must be a nonzero vector of length 2^qubits");
  }
  SimConfig cfg;
  cfg.max_while_iters = max_while_iters;
  return sem_density(*p.body, pure_density(psi.normalized()), p.num_qubits, cfg);
}

json check_json(const std::optional<std::string>& source, const std::string& domain, std::size_t cases,
                std::uint64_t seed, std::size_t qubits) {
  CaseOptions opt;
  opt.check_c = domain != "e";
  opt.check_e = domain != "c";
  if (!source) {
    GenConfig g;
    g.seed = seed;
    g.n_qubits = qubits;
    return to_json(soundness_suite(g, cases, opt));
  }
  return to_json(soundness_for_program(parse(*source), cases, seed, opt));
}

}  // namespace
}  // namespace qilent

PYBIND11_MODULE(_qilent, m) {
  using namespace qilent;
  m.doc() = "Native core of qilent.";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<AnalysisError> analysis_error(m, "AnalysisError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const AnalysisError& e) {
      py::set_error(analysis_error, e.what());
    } catch (const json::exception& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("pretty", [](const std::string& source) { return pretty(parse(source)); }, py::arg("source"));
  m.def("desugar", [](const std::string& source) { return pretty(desugar(parse(source))); },
        py::arg("source"));
  m.def(
      "analyze",
      [](const std::string& source, const std::string& domain, const std::string& init, bool strict_paper,
         bool trace, std::size_t max_while_iters) {
        return analyze_json(source, domain, init, strict_paper, trace, max_while_iters).dump();
      },
      py::arg("source"), py::arg("domain") = "e", py::arg("init") = "top", py::arg("strict_paper") = false,
      py::arg("trace") = false, py::arg("max_while_iters") = 1024);
  m.def("render", [](const std::string& a) { return render_text(assignment_from_json(json::parse(a))); },
        py::arg("assignment"));
  m.def("leq_c",
        [](const std::string& a, const std::string& b) {
          return leq_c(assignment_from_json(json::parse(a)), assignment_from_json(json::parse(b)));
        },
        py::arg("a"), py::arg("b"));
  m.def("join_c",
        [](const std::string& a, const std::string& b) {
          return to_json(join_c(assignment_from_json(json::parse(a)), assignment_from_json(json::parse(b))))
              .dump();
        },
        py::arg("a"), py::arg("b"));
  m.def("simulate", &simulate, py::arg("source"), py::arg("state") = std::nullopt,
        py::arg("max_while_iters") = 256);
  m.def(
      "check",
      [](const std::optional<std::string>& source, const std::string& domain, std::size_t cases,
         std::uint64_t seed, std::size_t qubits) { return check_json(source, domain, cases, seed, qubits).dump(); },
      py::arg("source") = std::nullopt, py::arg("domain") = "both", py::arg("cases") = 100, py::arg("seed") = 1,
      py::arg("qubits") = 3);
}
