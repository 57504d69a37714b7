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

#include <vector>

#include "qilent/content.hpp"

namespace qilent {

/// Splits single-qubit factors at the qubits of j off a block A holding c.
/// Candidates are visited in ascending order. Opaque stays one block. The
/// returned blocks partition A; contents are in storage form.
std::vector<Block> update(const QubitSet& j, const QubitSet& a, const Content& c);

/// Extended variant. Heart-free contents go through update(); otherwise
/// every single-qubit Pauli at some j in the L-span becomes its own block and
/// the rest of A, if any, becomes opaque. With no such member the block is
/// returned as it is.
std::vector<Block> update_e(const QubitSet& j, const QubitSet& a, const Content& c);

}  // namespace qilent
