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

#include "cliffnf/circuit_io.h"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "cliffnf/errors.h"
#include "cliffnf/gate_library.h"

namespace cliffnf {

namespace {

std::string_view strip(std::string_view s) {
    std::size_t hash = s.find('#');
    if (hash != std::string_view::npos) {
        s = s.substr(0, hash);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
            i++;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) {
            j++;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::uint32_t parse_wire(std::string_view tok, std::size_t line) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "bad wire index '" + std::string(tok) + "'");
    }
    return v;
}

}  // namespace

Gate parse_gate(std::string_view text, std::size_t line) {
    auto toks = split_ws(strip(text));
    if (toks.empty()) {
        throw ParseError(line, "empty gate");
    }
    std::string_view name = toks[0];
    GateKind kind;
    int index = 0;
    if (name == "H") {
        kind = GateKind::H;
    } else if (name == "S") {
        kind = GateKind::S;
    } else if (name == "X") {
        kind = GateKind::X;
    } else if (name == "CZ") {
        kind = GateKind::CZ;
    } else if (name == "W") {
        kind = GateKind::Omega;
    } else if (name.size() == 2 && name[0] >= 'A' && name[0] <= 'E' && name[1] >= '1' && name[1] <= '9') {
        kind = static_cast<GateKind>(static_cast<int>(GateKind::A) + (name[0] - 'A'));
        index = name[1] - '0';
        if (index > family_size(kind)) {
            throw ParseError(line, "family index out of range in '" + std::string(name) + "'");
        }
    } else {
        throw ParseError(line, "unknown gate '" + std::string(name) + "'");
    }
    std::size_t arity = gate_arity(kind);
    if (toks.size() != arity + 1) {
        throw ParseError(line, std::string(name) + " takes " + std::to_string(arity) + " wire(s)");
    }
    Gate g{kind, static_cast<std::uint8_t>(index), 0, 0};
    if (arity >= 1) {
        g.q0 = parse_wire(toks[1], line);
    }
    if (arity == 2) {
        g.q1 = parse_wire(toks[2], line);
        if (g.q0 == g.q1) {
            throw ParseError(line, "two-wire gate needs distinct wires");
        }
        if (is_library_kind(kind) && g.q1 != g.q0 + 1) {
            throw ParseError(line, "library gate " + std::string(name) + " acts on wires q, q+1");
        }
    }
    return g;
}

Circuit parse_circuit(std::string_view text, const CircuitParseOptions &opts) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t lineno = 0;
    bool have_header = false;
    Circuit c;
    while (std::getline(in, raw)) {
        lineno++;
        std::string_view s = strip(raw);
        if (s.empty()) {
            continue;
        }
        if (!have_header) {
            auto toks = split_ws(s);
            if (toks.size() != 2 || toks[0] != "qubits") {
                throw ParseError(lineno, "expected header 'qubits <n>'");
            }
            c.num_qubits = parse_wire(toks[1], lineno);
            have_header = true;
            continue;
        }
        Gate g = parse_gate(s, lineno);
        if (g.arity() >= 1 && g.max_wire() >= c.num_qubits) {
            throw ParseError(lineno, "wire out of range for " + std::to_string(c.num_qubits) + " qubits");
        }
        if (g.kind == GateKind::CZ && g.max_wire() - g.min_wire() > 1 && !opts.expand_nonadjacent) {
            throw ParseError(lineno, "non-adjacent CZ " + std::to_string(g.q0) + " " + std::to_string(g.q1) +
                                         " (use --expand-nonadjacent)");
        }
        c += g;
    }
    if (!have_header) {
        throw ParseError(0, "missing header 'qubits <n>'");
    }
    return opts.expand_nonadjacent ? expand_nonadjacent(c) : c;
}

std::string print_circuit(const Circuit &c) {
    std::string out = "qubits " + std::to_string(c.num_qubits) + "\n";
    for (const Gate &g : c.gates) {
        out += g.str();
        out += '\n';
    }
    return out;
}

}  // namespace cliffnf
