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

#ifndef CLIFFNF_CIRCUIT_IO_H
#define CLIFFNF_CIRCUIT_IO_H

#include <cstddef>
#include <string>
#include <string_view>

#include "cliffnf/circuit.h"

namespace cliffnf {

struct CircuitParseOptions {
    /// Replace CZ between distant wires by swap-conjugated adjacent CZs.
    /// When false such gates are a parse error.
    bool expand_nonadjacent = false;
};

/// One gate in circuit-file syntax: "H 0", "S 1", "X 0", "CZ 0 1", "W",
/// "A2 0", "B3 0 1". Throws ParseError (with `line`) on malformed input.
Gate parse_gate(std::string_view text, std::size_t line = 0);

/// A "qubits <n>" header followed by one gate per line; '#' starts a comment,
/// blank lines are ignored.
Circuit parse_circuit(std::string_view text, const CircuitParseOptions &opts = {});

/// Canonical text: the header, then one gate per line. parse_circuit of the
/// result reproduces the circuit.
std::string print_circuit(const Circuit &c);

}  // namespace cliffnf

#endif
