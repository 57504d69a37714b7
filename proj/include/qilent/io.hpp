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

#include <string>

#include <json.hpp>

#include "qilent/abstract_interp.hpp"
#include "qilent/concrete_sim.hpp"
#include "qilent/domain.hpp"
#include "qilent/soundness.hpp"

namespace qilent {

// Assignment schema:
//   {"qubits": N, "blocks": [{"qubits": [...], "kind": "...", "rows": [...]}]}
// kind is identity, stabilizer, extended or opaque; rows ('?' for a heart)
// are omitted for identity and opaque blocks.
nlohmann::json to_json(const Assignment& a);
/// Throws std::invalid_argument on schema or content errors.
Assignment assignment_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Ensemble& e);
/// Entries as [re, im] pairs, row-major.
nlohmann::json density_to_json(const Matrix& rho, std::size_t n);
nlohmann::json to_json(const SuiteReport& r);
nlohmann::json to_json(const TraceEntry& t);

/// Pure state from {"qubits": N, "amplitudes": [[re, im], ...]}.
Vector state_from_json(const nlohmann::json& j);

/// Block-diagonal text picture: one bracketed group of rows per block, with
/// the block's cells in its own columns and '.' elsewhere. Identity blocks
/// print I, opaque blocks '#', hearts '?'.
std::string render_text(const Assignment& a);

}  // namespace qilent
