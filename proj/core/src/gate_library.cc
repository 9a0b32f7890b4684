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

#include "cliffnf/gate_library.h"

#include <cctype>
#include <cstdio>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "cliffnf/errors.h"
#include "packed_tableau.h"

namespace cliffnf {

namespace {

constexpr GateKind kFamilies[] = {GateKind::A, GateKind::B, GateKind::C, GateKind::D, GateKind::E};
constexpr char kPauliOrder[] = {'I', 'X', 'Y', 'Z'};

PauliOperator letters(std::string_view s, bool minus = false) {
    return PauliOperator::from_letters(s, minus ? 2 : 0);
}

/// Generators in tie-break order for a register of 1 or 2 wires.
std::vector<Gate> search_generators(std::size_t n) {
    if (n == 1) {
        return {Gate::h(0), Gate::s(0)};
    }
    return {Gate::h(0), Gate::h(1), Gate::s(0), Gate::s(1), Gate::cz(0, 1)};
}

/// Breadth-first closure of the group generated by `gens`, recording for each
/// element its discovery parent; discovery order is shortlex order of words.
struct Closure {
    std::vector<detail::PackedTableau> elements;
    std::vector<std::uint32_t> parent;
    std::vector<std::uint8_t> via;
    std::vector<std::uint16_t> depth;

    Circuit word(std::size_t idx, std::size_t n, const std::vector<Gate> &gens) const {
        std::vector<Gate> rev;
        while (idx != 0) {
            rev.push_back(gens[via[idx]]);
            idx = parent[idx];
        }
        return Circuit(n, std::vector<Gate>(rev.rbegin(), rev.rend()));
    }
};

Closure close_group(std::size_t n, const std::vector<Gate> &gens) {
    Closure c;
    std::unordered_map<std::uint64_t, std::uint32_t> seen;
    c.elements.emplace_back(n);
    c.parent.push_back(0);
    c.via.push_back(0);
    c.depth.push_back(0);
    seen.emplace(c.elements[0].key(), 0);
    for (std::size_t head = 0; head < c.elements.size(); head++) {
        for (std::size_t g = 0; g < gens.size(); g++) {
            detail::PackedTableau next = c.elements[head];
            next.apply(gens[g]);
            if (seen.emplace(next.key(), static_cast<std::uint32_t>(c.elements.size())).second) {
                c.elements.push_back(next);
                c.parent.push_back(static_cast<std::uint32_t>(head));
                c.via.push_back(static_cast<std::uint8_t>(g));
                c.depth.push_back(static_cast<std::uint16_t>(c.depth[head] + 1));
            }
        }
    }
    return c;
}

std::string family_line_prefix(GateKind kind, int index) {
    return std::string(kind_name(kind)) + " " + std::to_string(index) + " :";
}

}  // namespace

std::vector<PauliConstraint> family_constraints(GateKind family, int index) {
    if (!is_library_kind(family)) {
        throw std::invalid_argument(std::string(kind_name(family)) + " is not a library family");
    }
    if (index < 1 || index > family_size(family)) {
        throw std::out_of_range(std::string(kind_name(family)) + " index " + std::to_string(index) + " out of range");
    }
    switch (family) {
        case GateKind::A: {
            static constexpr const char *kIn[] = {"Z", "X", "Y"};
            return {{letters(kIn[index - 1]), letters("Z"), index != 1}};
        }
        case GateKind::B: {
            std::string in = {kPauliOrder[index - 1], 'Z'};
            return {{letters(in), letters("ZI"), false}};
        }
        case GateKind::C:
            return {{letters("Z"), letters("Z", index == 2), false}};
        case GateKind::D: {
            std::string in = {'X', kPauliOrder[index - 1]};
            return {{letters(in), letters("IX"), false}, {letters("ZI"), letters("IZ"), false}};
        }
        default: {
            bool minus = index == 2 || index == 4;
            const char *q = index <= 2 ? "X" : "Y";
            return {{letters(q, minus), letters("X"), false}, {letters("Z"), letters("Z"), false}};
        }
    }
}

bool satisfies_constraints(const CliffordTableau &t, const std::vector<PauliConstraint> &constraints) {
    for (const auto &c : constraints) {
        PauliOperator image = t(c.input);
        if (image == c.output) {
            continue;
        }
        if (c.up_to_sign) {
            image.negate();
            if (image == c.output) {
                continue;
            }
        }
        return false;
    }
    return true;
}

const GateLibrary &GateLibrary::standard() {
    static const GateLibrary lib = derive_realizations();
    return lib;
}

const Circuit &GateLibrary::realization(GateKind family, int index) const {
    auto it = words_.find({family, index});
    if (it == words_.end()) {
        throw std::out_of_range("no realization for " + std::string(kind_name(family)) + std::to_string(index));
    }
    return it->second;
}

void GateLibrary::set_realization(GateKind family, int index, Circuit word) {
    if (index < 1 || index > family_size(family)) {
        throw std::out_of_range("bad library member " + std::string(kind_name(family)) + std::to_string(index));
    }
    if (word.num_qubits != gate_arity(family)) {
        throw DimensionError("realization register does not match the family arity");
    }
    word.validate();
    if (word.has_library_gates()) {
        throw std::invalid_argument("realizations must use generator gates only");
    }
    words_[{family, index}] = std::move(word);
}

bool GateLibrary::complete() const {
    return words_.size() == 17;
}

Circuit GateLibrary::expand(const Circuit &c) const {
    Circuit out(c.num_qubits);
    out.gates.reserve(c.gates.size());
    for (const Gate &g : c.gates) {
        if (!g.is_library()) {
            out.gates.push_back(g);
            continue;
        }
        const Circuit &w = realization(g.kind, g.index);
        for (Gate r : w.gates) {
            r.q0 += g.q0;
            if (r.arity() == 2) {
                r.q1 += g.q0;
            }
            out.gates.push_back(r);
        }
    }
    return out;
}

void GateLibrary::apply(CliffordTableau &t, const Gate &g) const {
    if (!g.is_library()) {
        t.apply(g);
        return;
    }
    if (g.max_wire() >= t.num_qubits()) {
        throw std::out_of_range("gate " + g.str() + " out of range");
    }
    for (Gate r : realization(g.kind, g.index).gates) {
        r.q0 += g.q0;
        if (r.arity() == 2) {
            r.q1 += g.q0;
        }
        t.apply(r);
    }
}

void GateLibrary::conjugate(PauliOperator &p, const Gate &g) const {
    if (!g.is_library()) {
        conjugate_by_gate(p, g);
        return;
    }
    for (Gate r : realization(g.kind, g.index).gates) {
        r.q0 += g.q0;
        if (r.arity() == 2) {
            r.q1 += g.q0;
        }
        conjugate_by_gate(p, r);
    }
}

CliffordTableau GateLibrary::tableau(const Circuit &c) const {
    CliffordTableau t(c.num_qubits);
    for (const Gate &g : c.gates) {
        apply(t, g);
    }
    return t;
}

std::string GateLibrary::serialize() const {
    std::string body;
    for (GateKind kind : kFamilies) {
        for (int i = 1; i <= family_size(kind); i++) {
            auto it = words_.find({kind, i});
            if (it == words_.end()) {
                continue;
            }
            std::string w = format_word(it->second);
            body += family_line_prefix(kind, i) + (w.empty() ? "" : " " + w) + "\n";
        }
    }
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
    return body + "# hash " + hex + "\n";
}

std::uint64_t GateLibrary::content_hash() const {
    std::string s = serialize();
    return std::stoull(s.substr(s.rfind("# hash ") + 7, 16), nullptr, 16);
}

GateLibrary GateLibrary::parse(std::string_view text) {
    GateLibrary lib;
    std::string body;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (line.rfind("# hash ", 0) == 0) {
            char hex[17];
            std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
            if (line.substr(7) != hex) {
                throw ParseError(lineno, "realization table hash mismatch");
            }
            continue;
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        body += line + "\n";
        std::istringstream ls(line);
        std::string fam, colon;
        int index = 0;
        if (!(ls >> fam >> index >> colon) || colon != ":" || fam.size() != 1) {
            throw ParseError(lineno, "expected '<family> <index> : <word>'");
        }
        GateKind kind;
        switch (fam[0]) {
            case 'A': kind = GateKind::A; break;
            case 'B': kind = GateKind::B; break;
            case 'C': kind = GateKind::C; break;
            case 'D': kind = GateKind::D; break;
            case 'E': kind = GateKind::E; break;
            default:
                throw ParseError(lineno, "unknown family '" + fam + "'");
        }
        std::string rest;
        std::getline(ls, rest);
        try {
            lib.set_realization(kind, index, parse_word(rest, gate_arity(kind)));
        } catch (const ParseError &e) {
            throw ParseError(lineno, e.what());
        } catch (const std::exception &e) {
            throw ParseError(lineno, e.what());
        }
    }
    return lib;
}

GateLibrary derive_realizations(int max_depth) {
    GateLibrary lib;
    for (std::size_t n : {std::size_t{1}, std::size_t{2}}) {
        std::vector<Gate> gens = search_generators(n);
        Closure group = close_group(n, gens);
        for (GateKind kind : kFamilies) {
            if (gate_arity(kind) != n) {
                continue;
            }
            for (int i = 1; i <= family_size(kind); i++) {
                auto constraints = family_constraints(kind, i);
                bool found = false;
                for (std::size_t e = 0; e < group.elements.size() && group.depth[e] <= max_depth; e++) {
                    if (satisfies_constraints(group.elements[e].unpack(), constraints)) {
                        lib.set_realization(kind, i, group.word(e, n, gens));
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    throw SearchExhaustedError("no realization of " + std::string(kind_name(kind)) +
                                               std::to_string(i) + " within depth " + std::to_string(max_depth));
                }
            }
        }
    }
    // B1 and D1 both admit the swap; pinning them to it makes B1 D1 = 1.
    for (GateKind kind : {GateKind::B, GateKind::D}) {
        Circuit sw = swap_word(0, 1, 2);
        if (!satisfies_constraints(circuit_tableau(sw, lib), family_constraints(kind, 1))) {
            throw InvariantError("swap word does not satisfy the pinned family constraints");
        }
        lib.set_realization(kind, 1, std::move(sw));
    }
    return lib;
}

Circuit swap_word(std::uint32_t a, std::uint32_t b, std::size_t num_qubits) {
    Circuit c(num_qubits);
    for (int rep = 0; rep < 3; rep++) {
        c += Gate::h(a);
        c += Gate::h(b);
        c += Gate::cz(a, b);
    }
    c.validate();
    return c;
}

namespace {

void emit_cz(Circuit &out, std::uint32_t lo, std::uint32_t hi) {
    if (hi - lo <= 1) {
        out += Gate::cz(lo, hi);
        return;
    }
    Circuit sw = swap_word(hi - 1, hi, out.num_qubits);
    out.append(sw);
    emit_cz(out, lo, hi - 1);
    out.append(sw);
}

}  // namespace

Circuit expand_nonadjacent(const Circuit &c) {
    Circuit out(c.num_qubits);
    for (const Gate &g : c.gates) {
        if (g.kind == GateKind::CZ && g.max_wire() - g.min_wire() > 1) {
            emit_cz(out, g.min_wire(), g.max_wire());
        } else {
            out += g;
        }
    }
    return out;
}

CliffordTableau circuit_tableau(const Circuit &c, const GateLibrary &lib) {
    return lib.tableau(c);
}

std::string format_word(const Circuit &word) {
    if (word.num_qubits > 10) {
        throw std::invalid_argument("word syntax supports at most 10 wires");
    }
    std::string out;
    for (const Gate &g : word.gates) {
        if (!out.empty()) {
            out += ' ';
        }
        out += kind_name(g.kind);
        if (g.is_library()) {
            out += std::to_string(g.index);
            out += '_';
        }
        if (word.num_qubits > 1 || g.is_library()) {
            if (g.arity() >= 1) {
                out += static_cast<char>('0' + g.q0);
            }
            if (g.arity() == 2) {
                out += static_cast<char>('0' + g.q1);
            }
        }
    }
    return out;
}

Circuit parse_word(std::string_view text, std::size_t num_qubits) {
    Circuit out(num_qubits);
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        std::size_t pos = 0;
        while (pos < tok.size() && std::isupper(static_cast<unsigned char>(tok[pos]))) {
            pos++;
        }
        std::string name = tok.substr(0, pos);
        std::string tail = tok.substr(pos);
        auto bad = [&]() { return ParseError(0, "bad gate token '" + tok + "'"); };
        GateKind kind;
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
        } else if (name.size() == 1 && name[0] >= 'A' && name[0] <= 'E') {
            kind = static_cast<GateKind>(static_cast<int>(GateKind::A) + (name[0] - 'A'));
        } else {
            throw bad();
        }
        Gate g{kind, 0, 0, 0};
        if (is_library_kind(kind)) {
            std::size_t us = tail.find('_');
            if (us == std::string::npos || us == 0) {
                throw bad();
            }
            g.index = static_cast<std::uint8_t>(std::stoi(tail.substr(0, us)));
            tail = tail.substr(us + 1);
        }
        std::size_t arity = gate_arity(kind);
        std::vector<std::uint32_t> wires;
        for (char ch : tail) {
            if (ch < '0' || ch > '9') {
                throw bad();
            }
            wires.push_back(static_cast<std::uint32_t>(ch - '0'));
        }
        if (wires.empty() && arity == 1 && num_qubits == 1 && !is_library_kind(kind)) {
            wires.push_back(0);
        }
        if (wires.size() != arity) {
            throw bad();
        }
        if (arity >= 1) {
            g.q0 = wires[0];
        }
        if (arity == 2) {
            g.q1 = wires[1];
        }
        if (is_library_kind(kind)) {
            g = Gate::library(kind, g.index, g.q0);
            if (arity == 2 && wires[1] != wires[0] + 1) {
                throw bad();
            }
        }
        out += g;
    }
    out.validate();
    return out;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace cliffnf
