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


#include "cliffnf/pauli.h"

#include <gtest/gtest.h>

#include <random>

#include "cliffnf/errors.h"

#include "test_support.h"

namespace cliffnf {
namespace {

TEST(PauliTest, SingleQubitProducts) {
    auto X = PauliOperator::parse("X");
    auto Y = PauliOperator::parse("Y");
    auto Z = PauliOperator::parse("Z");
    EXPECT_EQ(X * Y, PauliOperator::parse("iZ"));
    EXPECT_EQ(Y * Z, PauliOperator::parse("iX"));
    EXPECT_EQ(Z * X, PauliOperator::parse("iY"));
    EXPECT_EQ(X * Z, PauliOperator::parse("-iY"));
    EXPECT_TRUE((X * X).is_scalar());
    EXPECT_EQ((Y * Y).phase_exp(), 0u);
}

TEST(PauliTest, ParseAndPrint) {
    auto p = PauliOperator::parse("-iXYZ");
    EXPECT_EQ(p.num_qubits(), 3u);
    EXPECT_EQ(p.phase_exp(), 3u);
    EXPECT_EQ(p.compact(), "-iXYZ");
    EXPECT_EQ(PauliOperator::parse(p.str()), p);
    EXPECT_EQ(PauliOperator::parse("1").num_qubits(), 0u);
    EXPECT_THROW(PauliOperator::parse("XQ"), ParseError);
}

TEST(PauliTest, Commutation) {
    EXPECT_FALSE(pauli_commutes(PauliOperator::parse("XI"), PauliOperator::parse("ZI")));
    EXPECT_TRUE(pauli_commutes(PauliOperator::parse("XX"), PauliOperator::parse("ZZ")));
    EXPECT_TRUE(pauli_commutes(PauliOperator::parse("XI"), PauliOperator::parse("IZ")));
}

TEST(PauliTest, BasisAndStructure) {
    auto z1 = basis_pauli(3, PauliAxis::Z, 1);
    EXPECT_EQ(z1.compact(), "IZI");
    EXPECT_EQ(z1.weight(), 1u);
    EXPECT_EQ(PauliOperator::parse("XYZ").prefix(2).compact(), "XY");
    EXPECT_EQ(PauliOperator::parse("iX").tensor(PauliOperator::parse("iZ")).compact(), "-XZ");
}

TEST(PauliTest, ManyWordsAboveSixtyFourQubits) {
    PauliOperator a(130), b(130);
    a.set_letter(100, 'X');
    b.set_letter(100, 'Z');
    b.set_letter(3, 'Y');
    EXPECT_FALSE(a.commutes_with(b));
    auto ab = a * b;
    EXPECT_EQ(ab.letter(100), 'Y');
    EXPECT_EQ(ab.letter(3), 'Y');
    EXPECT_EQ(ab.weight(), 2u);
}

// Multiplication is associative and a*b = +-b*a according to commutation.
TEST(PauliTest, RandomAlgebraLaws) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 500; it++) {
        std::size_t n = 1 + rng() % 6;
        auto a = testing::random_hermitian_pauli(rng, n);
        auto b = testing::random_hermitian_pauli(rng, n);
        auto c = testing::random_hermitian_pauli(rng, n);
        ASSERT_EQ((a * b) * c, a * (b * c));
        auto ba = b * a;
        if (!a.commutes_with(b)) ba.negate();
        ASSERT_EQ(a * b, ba);
        ASSERT_EQ(a.hash(), PauliOperator::parse(a.compact()).hash());
    }
}

}  // namespace
}  // namespace cliffnf
