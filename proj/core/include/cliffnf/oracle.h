// Copyright 2026 The cliffnf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLIFFNF_ORACLE_H
#define CLIFFNF_ORACLE_H

#include <cstddef>

#include "cliffnf/circuit.h"
#include "cliffnf/exact_matrix.h"
#include "cliffnf/gate_library.h"

namespace cliffnf {

/// Default largest register for which dense exact matrices are built.
constexpr std::size_t kDefaultOracleLimit = 8;

struct OracleOptions {
    std::size_t max_qubits = kDefaultOracleLimit;
    /// Accept CZ between non-adjacent wires (applied directly; the matrix is the same
    /// as that of the swap-conjugated expansion). When false such gates are rejected.
    bool allow_nonadjacent = false;
};

/// Matrix of a single gate on its own wires: 2x2 for one-wire gates, 4x4 for
/// two-wire gates (first listed wire is the leftmost factor), 1x1 for omega.
ExactMatrix gate_matrix(const Gate &g, const GateLibrary &lib = GateLibrary::standard());

/// Exact unitary of a circuit, gates applied left to right.
/// Throws OracleLimitError above `opts.max_qubits`.
ExactMatrix circuit_unitary(const Circuit &c, const OracleOptions &opts = {},
                            const GateLibrary &lib = GateLibrary::standard());

}  // namespace cliffnf

#endif
