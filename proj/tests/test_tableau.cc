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


#include "cliffnf/tableau.h"

#include <gtest/gtest.h>

#include <random>

#include "cliffnf/exact_matrix.h"
#include "cliffnf/gate_library.h"
#include "cliffnf/oracle.h"
#include "test_support.h"

namespace cliffnf {
namespace {

PauliOperator image(const Circuit &c, std::string_view p) {
    return circuit_tableau(c)(PauliOperator::parse(p));
}

TEST(TableauTest, GeneratorRules) {
    EXPECT_EQ(image(Circuit(1, {Gate::h(0)}), "X"), PauliOperator::parse("Z"));
    EXPECT_EQ(image(Circuit(1, {Gate::h(0)}), "Y"), PauliOperator::parse("-Y"));
    EXPECT_EQ(image(Circuit(1, {Gate::s(0)}), "X"), PauliOperator::parse("Y"));
    EXPECT_EQ(image(Circuit(1, {Gate::s(0)}), "Y"), PauliOperator::parse("-X"));
    EXPECT_EQ(image(Circuit(1, {Gate::x(0)}), "Z"), PauliOperator::parse("-Z"));
    EXPECT_EQ(image(Circuit(2, {Gate::cz(0, 1)}), "XI"), PauliOperator::parse("XZ"));
    EXPECT_EQ(image(Circuit(2, {Gate::cz(0, 1)}), "YY"), PauliOperator::parse("XX"));
    EXPECT_EQ(image(Circuit(1, {Gate::omega()}), "X"), PauliOperator::parse("X"));
}

TEST(TableauTest, CompositionOrder) {
    // Circuit order: H then S. The operator is S H, so X -> Z -> Z and Z -> X -> Y.
    Circuit c(1, {Gate::h(0), Gate::s(0)});
    auto t = circuit_tableau(c);
    EXPECT_EQ(t.x_image(0).compact(), "Z");
    EXPECT_EQ(t.z_image(0).compact(), "Y");
    auto th = circuit_tableau(Circuit(1, {Gate::h(0)}));
    auto ts = circuit_tableau(Circuit(1, {Gate::s(0)}));
    EXPECT_EQ(ts * th, t);
    EXPECT_EQ(tableau_compose(ts, th), t);
}

TEST(TableauTest, LibraryGatesRejectedByGeneratorConjugation) {
    PauliOperator p = PauliOperator::parse("X");
    EXPECT_THROW(conjugate_by_gate(p, Gate::library(GateKind::A, 2, 0)), std::invalid_argument);
}

TEST(TableauTest, Text) {
    auto t = circuit_tableau(Circuit(1, {Gate::h(0), Gate::s(0), Gate::s(0)}));
    // The operator is S S H = Z H.
    EXPECT_EQ(t.str(), "X_0 ↦ +Z\nZ_0 ↦ -X\n");
}

// The tableau agrees with the exact matrix on every basis Pauli, and group
// operations agree with circuit operations.
TEST(TableauTest, RandomCircuitsMatchOracle) {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 60; it++) {
        std::size_t n = 1 + rng() % 4;
        auto a = testing::random_circuit(rng, n, rng() % 40);
        auto b = testing::random_circuit(rng, n, rng() % 40);
        auto ta = circuit_tableau(a);
        auto tb = circuit_tableau(b);
        ASSERT_TRUE(ta.is_valid());
        auto u = circuit_unitary(a);
        for (std::size_t q = 0; q < n; q++) {
            for (auto axis : {PauliAxis::X, PauliAxis::Z}) {
                auto p = basis_pauli(n, axis, q);
                ASSERT_EQ(ta(p), conjugate_pauli_by_matrix(u, p));
            }
        }
        auto random_p = testing::random_hermitian_pauli(rng, n);
        ASSERT_EQ(ta(random_p), conjugate_pauli_by_matrix(u, random_p));
        Circuit ab = a;
        ab.append(b);
        ASSERT_EQ(circuit_tableau(ab), tb * ta);
        ASSERT_EQ(ta * ta.inverse(), CliffordTableau::identity(n));
        ASSERT_EQ(tableau_inverse(ta) * ta, CliffordTableau::identity(n));
        ASSERT_EQ(tableau_action(ta, random_p), ta(random_p));
        ASSERT_EQ(std::hash<CliffordTableau>{}(ta), circuit_tableau(a).hash());
    }
}

TEST(TableauTest, PrefixAndTail) {
    auto t = circuit_tableau(Circuit(3, {Gate::h(0), Gate::cz(0, 1)}));
    EXPECT_TRUE(t.is_tensor_identity_tail(2));
    EXPECT_FALSE(t.is_tensor_identity_tail(1));
    EXPECT_EQ(t.prefix(2), circuit_tableau(Circuit(2, {Gate::h(0), Gate::cz(0, 1)})));
}

TEST(TableauTest, InvalidTableauDetected) {
    CliffordTableau t(2);
    t.z_image(0) = PauliOperator::parse("XI");
    EXPECT_FALSE(t.is_valid());
}

}  // namespace
}  // namespace cliffnf
