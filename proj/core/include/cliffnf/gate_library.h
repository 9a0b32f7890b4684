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

#ifndef CLIFFNF_GATE_LIBRARY_H
#define CLIFFNF_GATE_LIBRARY_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliffnf/circuit.h"
#include "cliffnf/pauli.h"
#include "cliffnf/tableau.h"

namespace cliffnf {

/// One defining requirement of a library gate: the gate must conjugate
/// `input` to `output` (or to +-`output` when `up_to_sign`).
struct PauliConstraint {
    PauliOperator input;
    PauliOperator output;
    bool up_to_sign = false;
};

/// The Pauli-action constraints that define a library family member.
/// Index conventions: A over (Z, X, Y); B and D over the Pauli (I, X, Y, Z)
/// on the non-carrier wire; C over (+Z, -Z); E over (+X, -X, +Y, -Y).
std::vector<PauliConstraint> family_constraints(GateKind family, int index);

bool satisfies_constraints(const CliffordTableau &t, const std::vector<PauliConstraint> &constraints);

/// Concrete words over {H, S, CZ} for every member of A..E. One-wire families
/// are realized on wire 0 of a 1-qubit circuit, two-wire families on (0, 1).
class GateLibrary {
   public:
    /// The library used throughout: `derive_realizations` with the default depth.
    static const GateLibrary &standard();

    const Circuit &realization(GateKind family, int index) const;
    void set_realization(GateKind family, int index, Circuit word);
    /// True when all 17 members have a realization.
    bool complete() const;

    /// Replaces library gates by their realizations; generators pass through.
    Circuit expand(const Circuit &c) const;
    /// Tableau of a circuit that may contain library gates.
    CliffordTableau tableau(const Circuit &c) const;
    /// Applies one (possibly library) gate to `t` in place.
    void apply(CliffordTableau &t, const Gate &g) const;
    /// Conjugates `p` in place by one (possibly library) gate.
    void conjugate(PauliOperator &p, const Gate &g) const;

    /// Text form: one line per member, "A 2 : H", "B 2 : CZ01 H0", followed by
    /// a "# hash " line holding the FNV-1a digest of the preceding lines.
    std::string serialize() const;
    /// Inverse of `serialize`; a present hash line must match.
    static GateLibrary parse(std::string_view text);
    std::uint64_t content_hash() const;

    bool operator==(const GateLibrary &other) const {
        return words_ == other.words_;
    }

   private:
    std::map<std::pair<GateKind, int>, Circuit> words_;
};

/// Breadth-first search for the shortest word (ties broken lexicographically
/// in generator order H, S resp. H0, H1, S0, S1, CZ) meeting each member's
/// constraints. B1 and D1 are then pinned to the swap word, so that their
/// product is the identity. Throws SearchExhaustedError past `max_depth`.
GateLibrary derive_realizations(int max_depth = 12);

/// H a, H b, CZ, H a, H b, CZ, H a, H b, CZ: an exact swap of adjacent wires.
Circuit swap_word(std::uint32_t a, std::uint32_t b, std::size_t num_qubits);

/// Rewrites every CZ between wires at distance > 1 as swap-conjugated
/// adjacent CZs, with the swaps expanded into H/CZ words.
Circuit expand_nonadjacent(const Circuit &c);

CliffordTableau circuit_tableau(const Circuit &c, const GateLibrary &lib = GateLibrary::standard());

/// Word syntax used by realization and rule files: space separated tokens
/// "H", "S", "X" on a single wire; "H0", "S2", "CZ12", ... otherwise ("W" is omega).
/// An empty word is an empty string. Supports at most 10 wires.
std::string format_word(const Circuit &word);
Circuit parse_word(std::string_view text, std::size_t num_qubits);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace cliffnf

#endif
