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

#ifndef CLIFFNF_RELATIONS_H
#define CLIFFNF_RELATIONS_H

#include <string>
#include <vector>

#include "cliffnf/circuit.h"
#include "cliffnf/gate_library.h"

namespace cliffnf {

/// An equation between two circuits on the same register.
struct Relation {
    std::string name;
    Circuit lhs;
    Circuit rhs;
};

/// C1..C15: the defining equations of the Clifford group on at most three
/// wires (wire 0 on top), followed by "ACE" (a wire equals A1 C1 E1) and
/// "BCD" (C1 on the lower wire equals B1, C1 on the upper wire, D1).
std::vector<Relation> builtin_relations();

struct RelationCheck {
    std::string name;
    std::size_t num_qubits = 0;
    bool passed = false;
};

/// Compares both sides of every relation with the exact oracle.
std::vector<RelationCheck> verify_relations(const std::vector<Relation> &relations,
                                            const GateLibrary &lib = GateLibrary::standard());

/// "C4 (1 qubit): ok" lines plus a "15/15 + 2/2"-style summary line.
std::string format_relation_report(const std::vector<RelationCheck> &checks);

}  // namespace cliffnf

#endif
