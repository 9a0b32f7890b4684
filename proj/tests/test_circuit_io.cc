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

#include <gtest/gtest.h>

#include "cliffnf/errors.h"
#include "cliffnf/exact_matrix.h"
#include "cliffnf/oracle.h"

namespace cliffnf {
namespace {

TEST(CircuitIoTest, ParsesGates) {
    Circuit c = parse_circuit("qubits 3\n# comment\n\nH 0\nS 1  # trailing\nX 2\nCZ 1 2\nW\nA2 0\nB3 1 2\n");
    ASSERT_EQ(c.num_qubits, 3u);
    ASSERT_EQ(c.gates.size(), 7u);
    EXPECT_EQ(c.gates[3], Gate::cz(1, 2));
    EXPECT_EQ(c.gates[4], Gate::omega());
    EXPECT_EQ(c.gates[5], Gate::library(GateKind::A, 2, 0));
    EXPECT_EQ(c.gates[6], Gate::library(GateKind::B, 3, 1));
    EXPECT_EQ(parse_circuit("qubits 1\nH 0\nH 0").gates.size(), 2u);
}

TEST(CircuitIoTest, CanonicalFilesRoundTripByteIdentically) {
    const std::string text = "qubits 3\nH 0\nS 1\nX 2\nCZ 1 2\nCZ 1 0\nW\nA3 2\nB2 0 1\nC2 0\nD4 1 2\nE3 1\n";
    EXPECT_EQ(print_circuit(parse_circuit(text)), text);
    EXPECT_EQ(print_circuit(Circuit(2)), "qubits 2\n");
}

TEST(CircuitIoTest, ErrorsCarryLineNumbers) {
    try {
        parse_circuit("qubits 2\nH 0\nQ 1\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_circuit("H 0\n"), ParseError);
    EXPECT_THROW(parse_circuit(""), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nH 2\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nCZ 1 1\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nCZ 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nH x\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 3\nB1 0 2\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 1\nA4 0\n"), ParseError);
}

TEST(CircuitIoTest, NonAdjacentCz) {
    try {
        parse_circuit("qubits 3\nCZ 0 2\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError &e) {
        EXPECT_NE(std::string(e.what()).find("non-adjacent"), std::string::npos);
    }
    CircuitParseOptions opts;
    opts.expand_nonadjacent = true;
    Circuit c = parse_circuit("qubits 3\nCZ 0 2\n", opts);
    EXPECT_EQ(c.gates.size(), 19u);
    OracleOptions loose;
    loose.allow_nonadjacent = true;
    EXPECT_EQ(circuit_unitary(c), circuit_unitary(Circuit(3, {Gate::cz(0, 2)}), loose));
}

TEST(CircuitIoTest, ParseGate) {
    EXPECT_EQ(parse_gate("CZ 0 1"), Gate::cz(0, 1));
    EXPECT_EQ(parse_gate("E4 5"), Gate::library(GateKind::E, 4, 5));
    EXPECT_THROW(parse_gate("H"), ParseError);
    EXPECT_THROW(parse_gate("W 0"), ParseError);
}

}  // namespace
}  // namespace cliffnf
