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

#include "cliffnf/relations.h"

#include <cctype>

#include "cliffnf/oracle.h"

namespace cliffnf {

namespace {

using G = Gate;

Relation rel(std::string name, std::size_t n, std::vector<Gate> lhs, std::vector<Gate> rhs) {
    return {std::move(name), Circuit(n, std::move(lhs)), Circuit(n, std::move(rhs))};
}

std::vector<Gate> omegas(int k) {
    return std::vector<Gate>(static_cast<std::size_t>(k), G::omega());
}

std::vector<Gate> cat(std::vector<Gate> a, const std::vector<Gate> &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Reflects a word top-to-bottom on a register of n wires.
std::vector<Gate> mirror(const std::vector<Gate> &word, std::size_t n) {
    std::vector<Gate> out;
    auto flip = [n](std::uint32_t q) { return static_cast<std::uint32_t>(n - 1 - q); };
    for (Gate g : word) {
        if (g.arity() >= 1) {
            g.q0 = flip(g.q0);
        }
        if (g.arity() == 2) {
            g.q1 = flip(g.q1);
            if (g.q0 > g.q1) {
                std::swap(g.q0, g.q1);
            }
        }
        out.push_back(g);
    }
    return out;
}

}  // namespace

std::vector<Relation> builtin_relations() {
    const Gate h0 = G::h(0), h1 = G::h(1), h2 = G::h(2);
    const Gate s0 = G::s(0), s1 = G::s(1);
    const Gate cz01 = G::cz(0, 1), cz12 = G::cz(1, 2);

    std::vector<Relation> out;
    out.push_back(rel("C1", 0, omegas(8), {}));
    out.push_back(rel("C2", 1, {h0, h0}, {}));
    out.push_back(rel("C3", 1, {s0, s0, s0, s0}, {}));
    out.push_back(rel("C4", 1, {s0, h0, s0, h0, s0, h0}, {G::omega()}));
    out.push_back(rel("C5", 2, {cz01, cz01}, {}));
    out.push_back(rel("C6", 2, {s0, cz01}, {cz01, s0}));
    out.push_back(rel("C7", 2, {s1, cz01}, {cz01, s1}));

    std::vector<Gate> c8_lhs = {h0, s0, s0, h0, cz01};
    std::vector<Gate> c8_rhs = {cz01, s1, s1, h0, s0, s0, h0};
    out.push_back(rel("C8", 2, c8_lhs, c8_rhs));
    out.push_back(rel("C9", 2, mirror(c8_lhs, 2), mirror(c8_rhs, 2)));

    std::vector<Gate> c10_lhs = {cz01, h0, cz01};
    std::vector<Gate> c10_rhs = cat({s0, h0, cz01, s1, s0, h0, s0}, omegas(7));
    out.push_back(rel("C10", 2, c10_lhs, c10_rhs));
    out.push_back(rel("C11", 2, mirror(c10_lhs, 2), mirror(c10_rhs, 2)));

    out.push_back(rel("C12", 3, {cz12, cz01}, {cz01, cz12}));
    out.push_back(rel("C13", 3, {cz01, h0, h1, cz01, h1, h2, cz12, h1, h2, cz01, h0, h1, cz01},
                      {cz12, h2, h1, cz12, h1, h0, cz01, h1, h0, cz12, h2, h1, cz12}));
    std::vector<Gate> c14 = {cz01, h0, h1, cz01, h0, h1, cz12, cz01, h0, h1, cz01,
                             h0,   h1, cz12, cz01, h0, h1, cz01, h1, h0, cz12};
    out.push_back(rel("C14", 3, c14, {}));
    out.push_back(rel("C15", 3, mirror(c14, 3), {}));

    out.push_back(rel("ACE", 1, {},
                      {G::library(GateKind::A, 1, 0), G::library(GateKind::C, 1, 0), G::library(GateKind::E, 1, 0)}));
    out.push_back(rel("BCD", 2, {G::library(GateKind::C, 1, 1)},
                      {G::library(GateKind::B, 1, 0), G::library(GateKind::C, 1, 0), G::library(GateKind::D, 1, 0)}));
    return out;
}

std::vector<RelationCheck> verify_relations(const std::vector<Relation> &relations, const GateLibrary &lib) {
    std::vector<RelationCheck> out;
    for (const auto &r : relations) {
        RelationCheck check{r.name, r.lhs.num_qubits, false};
        if (r.lhs.num_qubits == r.rhs.num_qubits) {
            check.passed = circuit_unitary(r.lhs, {}, lib) == circuit_unitary(r.rhs, {}, lib);
        }
        out.push_back(check);
    }
    return out;
}

std::string format_relation_report(const std::vector<RelationCheck> &checks) {
    std::string out;
    int core_pass = 0, core_total = 0, extra_pass = 0, extra_total = 0;
    for (const auto &c : checks) {
        out += c.name + " (" + std::to_string(c.num_qubits) + " qubit" + (c.num_qubits == 1 ? "" : "s") +
               "): " + (c.passed ? "ok" : "FAILED") + "\n";
        bool core = c.name.size() >= 2 && c.name[0] == 'C' && std::isdigit(static_cast<unsigned char>(c.name[1]));
        (core ? core_total : extra_total)++;
        if (c.passed) {
            (core ? core_pass : extra_pass)++;
        }
    }
    out += "relations " + std::to_string(core_pass) + "/" + std::to_string(core_total) + ", identities " +
           std::to_string(extra_pass) + "/" + std::to_string(extra_total) + "\n";
    return out;
}

}  // namespace cliffnf
