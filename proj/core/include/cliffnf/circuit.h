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

#ifndef CLIFFNF_CIRCUIT_H
#define CLIFFNF_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cliffnf {

/// Generators (H, S, CZ, Omega), the Pauli X, and the normal-form gate families A..E.
enum class GateKind : std::uint8_t { H, S, X, CZ, Omega, A, B, C, D, E };

/// Number of members in a library family (0 for generators).
int family_size(GateKind kind);
/// Number of wires a gate of this kind acts on.
std::size_t gate_arity(GateKind kind);
bool is_library_kind(GateKind kind);
/// "H", "S", "X", "CZ", "W", "A", ..., "E".
const char *kind_name(GateKind kind);

/// A gate placed on wires. Two-wire gates store the wires in the order given;
/// library two-wire gates always act on (q, q+1).
struct Gate {
    GateKind kind = GateKind::H;
    std::uint8_t index = 0;  ///< Family member, 1-based; 0 for generators.
    std::uint32_t q0 = 0;
    std::uint32_t q1 = 0;

    static Gate h(std::uint32_t q) {
        return {GateKind::H, 0, q, 0};
    }
    static Gate s(std::uint32_t q) {
        return {GateKind::S, 0, q, 0};
    }
    static Gate x(std::uint32_t q) {
        return {GateKind::X, 0, q, 0};
    }
    static Gate cz(std::uint32_t a, std::uint32_t b) {
        return {GateKind::CZ, 0, a, b};
    }
    static Gate omega() {
        return {GateKind::Omega, 0, 0, 0};
    }
    /// Library family member on wire q (and q+1 for B and D).
    static Gate library(GateKind kind, int index, std::uint32_t q);

    std::size_t arity() const {
        return gate_arity(kind);
    }
    bool is_library() const {
        return is_library_kind(kind);
    }
    bool touches(std::size_t q) const;
    std::uint32_t min_wire() const;
    std::uint32_t max_wire() const;

    /// Same syntax as a circuit-file line, e.g. "CZ 0 1", "B3 1 2", "W".
    std::string str() const;

    bool operator==(const Gate &other) const;
    bool operator!=(const Gate &other) const {
        return !(*this == other);
    }
    /// Total order used for deterministic tie-breaks.
    bool operator<(const Gate &other) const;
};

/// A word of gates applied left to right on `num_qubits` wires.
struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;

    Circuit() = default;
    explicit Circuit(std::size_t n, std::vector<Gate> g = {}) : num_qubits(n), gates(std::move(g)) {
    }

    /// Throws std::out_of_range / std::invalid_argument on bad wires or indices.
    /// With `require_adjacent`, two-wire gates must act on neighbouring wires.
    void validate(bool require_adjacent = true) const;
    bool has_library_gates() const;
    std::size_t count(GateKind kind) const;

    Circuit &append(const Circuit &other);
    Circuit &operator+=(const Gate &g) {
        gates.push_back(g);
        return *this;
    }
    /// Shifts every wire by `offset` inside a register of `n` wires.
    Circuit shifted(std::size_t offset, std::size_t n) const;

    bool operator==(const Circuit &other) const {
        return num_qubits == other.num_qubits && gates == other.gates;
    }
};

std::ostream &operator<<(std::ostream &out, const Gate &g);

}  // namespace cliffnf

#endif
