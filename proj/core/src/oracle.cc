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

#include "cliffnf/oracle.h"

#include <stdexcept>
#include <string>

#include "cliffnf/errors.h"

namespace cliffnf {

namespace {

void apply_generator(ExactMatrix &m, const Gate &g) {
    switch (g.kind) {
        case GateKind::H:
            m.apply_h(g.q0);
            break;
        case GateKind::S:
            m.apply_s(g.q0);
            break;
        case GateKind::X:
            m.apply_x(g.q0);
            break;
        case GateKind::CZ:
            m.apply_cz(g.q0, g.q1);
            break;
        case GateKind::Omega:
            m.apply_omega(1);
            break;
        default:
            throw std::invalid_argument("unexpanded library gate " + g.str());
    }
}

void apply_any(ExactMatrix &m, const Gate &g, const GateLibrary &lib) {
    if (!g.is_library()) {
        apply_generator(m, g);
        return;
    }
    for (Gate r : lib.realization(g.kind, g.index).gates) {
        r.q0 += g.q0;
        if (r.arity() == 2) {
            r.q1 += g.q0;
        }
        apply_generator(m, r);
    }
}

}  // namespace

ExactMatrix gate_matrix(const Gate &g, const GateLibrary &lib) {
    Gate local = g;
    local.q0 = 0;
    if (g.arity() == 2) {
        if (g.q0 == g.q1) {
            throw std::invalid_argument("two-wire gate on a single wire");
        }
        local.q1 = 1;
    }
    ExactMatrix m = ExactMatrix::identity(std::size_t{1} << g.arity());
    apply_any(m, local, lib);
    return m;
}

ExactMatrix circuit_unitary(const Circuit &c, const OracleOptions &opts, const GateLibrary &lib) {
    if (c.num_qubits > opts.max_qubits) {
        throw OracleLimitError("exact oracle limited to " + std::to_string(opts.max_qubits) + " qubits, circuit has " +
                               std::to_string(c.num_qubits));
    }
    c.validate(!opts.allow_nonadjacent);
    ExactMatrix m = ExactMatrix::identity(std::size_t{1} << c.num_qubits);
    for (const Gate &g : c.gates) {
        apply_any(m, g, lib);
    }
    return m;
}

}  // namespace cliffnf
