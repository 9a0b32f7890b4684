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

#include "cliffnf/circuit.h"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace cliffnf {

int family_size(GateKind kind) {
    switch (kind) {
        case GateKind::A:
            return 3;
        case GateKind::C:
            return 2;
        case GateKind::B:
        case GateKind::D:
        case GateKind::E:
            return 4;
        default:
            return 0;
    }
}

std::size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::Omega:
            return 0;
        case GateKind::CZ:
        case GateKind::B:
        case GateKind::D:
            return 2;
        default:
            return 1;
    }
}

bool is_library_kind(GateKind kind) {
    return family_size(kind) > 0;
}

const char *kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::X:
            return "X";
        case GateKind::CZ:
            return "CZ";
        case GateKind::Omega:
            return "W";
        case GateKind::A:
            return "A";
        case GateKind::B:
            return "B";
        case GateKind::C:
            return "C";
        case GateKind::D:
            return "D";
        case GateKind::E:
            return "E";
    }
    return "?";
}

Gate Gate::library(GateKind kind, int index, std::uint32_t q) {
    if (!is_library_kind(kind)) {
        throw std::invalid_argument(std::string(kind_name(kind)) + " is not a library family");
    }
    if (index < 1 || index > family_size(kind)) {
        throw std::out_of_range(
            std::string(kind_name(kind)) + " index " + std::to_string(index) + " out of range 1.." +
            std::to_string(family_size(kind)));
    }
    Gate g{kind, static_cast<std::uint8_t>(index), q, 0};
    if (gate_arity(kind) == 2) {
        g.q1 = q + 1;
    }
    return g;
}

bool Gate::touches(std::size_t q) const {
    switch (arity()) {
        case 0:
            return false;
        case 1:
            return q0 == q;
        default:
            return q0 == q || q1 == q;
    }
}

std::uint32_t Gate::min_wire() const {
    return arity() == 2 ? std::min(q0, q1) : q0;
}

std::uint32_t Gate::max_wire() const {
    return arity() == 2 ? std::max(q0, q1) : q0;
}

std::string Gate::str() const {
    std::string out = kind_name(kind);
    if (is_library()) {
        out += std::to_string(index);
    }
    if (arity() >= 1) {
        out += ' ';
        out += std::to_string(q0);
    }
    if (arity() == 2) {
        out += ' ';
        out += std::to_string(q1);
    }
    return out;
}

bool Gate::operator==(const Gate &other) const {
    if (kind != other.kind || index != other.index) {
        return false;
    }
    switch (arity()) {
        case 0:
            return true;
        case 1:
            return q0 == other.q0;
        default:
            return q0 == other.q0 && q1 == other.q1;
    }
}

bool Gate::operator<(const Gate &other) const {
    auto key = [](const Gate &g) {
        std::uint32_t a = g.arity() >= 1 ? g.q0 : 0;
        std::uint32_t b = g.arity() == 2 ? g.q1 : 0;
        return std::make_tuple(static_cast<int>(g.kind), g.index, a, b);
    };
    return key(*this) < key(other);
}

void Circuit::validate(bool require_adjacent) const {
    for (const Gate &g : gates) {
        if (g.is_library() && (g.index < 1 || g.index > family_size(g.kind))) {
            throw std::out_of_range("gate " + g.str() + ": family index out of range");
        }
        if (g.arity() >= 1 && g.q0 >= num_qubits) {
            throw std::out_of_range(
                "gate " + g.str() + ": wire out of range for " + std::to_string(num_qubits) + " qubits");
        }
        if (g.arity() == 2) {
            if (g.q1 >= num_qubits) {
                throw std::out_of_range(
                    "gate " + g.str() + ": wire out of range for " + std::to_string(num_qubits) + " qubits");
            }
            if (g.q0 == g.q1) {
                throw std::invalid_argument("gate " + g.str() + ": wires must be distinct");
            }
            if (g.is_library() && g.q1 != g.q0 + 1) {
                throw std::invalid_argument("gate " + g.str() + ": library gates act on (q, q+1)");
            }
            if (require_adjacent && g.max_wire() - g.min_wire() != 1) {
                throw std::invalid_argument("gate " + g.str() + ": non-adjacent two-wire gate");
            }
        }
    }
}

bool Circuit::has_library_gates() const {
    return std::any_of(gates.begin(), gates.end(), [](const Gate &g) { return g.is_library(); });
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(gates.begin(), gates.end(), [kind](const Gate &g) { return g.kind == kind; }));
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.num_qubits > num_qubits) {
        throw std::invalid_argument("appended circuit is wider than the target");
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    return *this;
}

Circuit Circuit::shifted(std::size_t offset, std::size_t n) const {
    Circuit out(n);
    out.gates.reserve(gates.size());
    for (Gate g : gates) {
        if (g.arity() >= 1) {
            g.q0 += static_cast<std::uint32_t>(offset);
        }
        if (g.arity() == 2) {
            g.q1 += static_cast<std::uint32_t>(offset);
        }
        out.gates.push_back(g);
    }
    out.validate(false);
    return out;
}

std::ostream &operator<<(std::ostream &out, const Gate &g) {
    return out << g.str();
}

}  // namespace cliffnf
