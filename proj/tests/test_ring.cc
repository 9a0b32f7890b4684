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


#include "cliffnf/ring.h"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

namespace cliffnf {
namespace {

constexpr double kPi = 3.14159265358979323846;

TEST(RingTest, OmegaPowers) {
    EXPECT_EQ(RingScalar::omega_power(8), RingScalar::one());
    EXPECT_EQ(RingScalar::omega_power(-1), RingScalar::omega_power(7));
    EXPECT_EQ(RingScalar::omega_power(2) * RingScalar::omega_power(2), -RingScalar::one());
    auto w = RingScalar::omega_power(1).to_complex();
    EXPECT_NEAR(w.real(), std::cos(kPi / 4), 1e-12);
    EXPECT_NEAR(w.imag(), std::sin(kPi / 4), 1e-12);
}

TEST(RingTest, SqrtTwo) {
    auto r = RingScalar::sqrt2();
    EXPECT_EQ(r * r, RingScalar(2, 0, 0, 0));
    EXPECT_EQ(r * RingScalar::inv_sqrt2(), RingScalar::one());
    EXPECT_EQ(RingScalar::one().div_sqrt2(), RingScalar::inv_sqrt2());
}

TEST(RingTest, Normalization) {
    // (2, 0, 0, 0)/sqrt2^2 is 1.
    auto s = RingScalar::unnormalized(2, 0, 0, 0, 2);
    EXPECT_NE(s, RingScalar::one());
    EXPECT_EQ(s.normalized(), RingScalar::one());
    EXPECT_EQ(ring_normalize(s).sqrt2_exp(), 0u);
    // sqrt2 * sqrt2 / sqrt2^2 = 1 reached through the w - w^3 form.
    EXPECT_EQ(RingScalar(0, 1, 0, -1, 1), RingScalar::one());
    EXPECT_TRUE(RingScalar(0, 0, 0, 0, 5).is_zero());
    EXPECT_EQ(RingScalar(0, 0, 0, 0, 5).sqrt2_exp(), 0u);
}

TEST(RingTest, RandomFieldLawsMatchComplex) {
    std::mt19937_64 rng(3);
    auto rnd = [&] {
        auto v = [&] { return Integer(static_cast<long>(rng() % 11) - 5); };
        return RingScalar(v(), v(), v(), v(), static_cast<unsigned>(rng() % 4));
    };
    for (int it = 0; it < 300; it++) {
        auto a = rnd(), b = rnd(), c = rnd();
        ASSERT_EQ((a + b) * c, a * c + b * c);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b).conj(), a.conj() * b.conj());
        ASSERT_EQ(a.times_omega(3), a * RingScalar::omega_power(3));
        ASSERT_TRUE((a - a).is_zero());
        std::complex<double> expect = a.to_complex() * b.to_complex();
        ASSERT_LT(std::abs((a * b).to_complex() - expect), 1e-9);
    }
}

TEST(RingTest, Text) {
    EXPECT_EQ(RingScalar::inv_sqrt2().str(), "(1,0,0,0)/√2^1");
    EXPECT_EQ(RingScalar::one().hash(), RingScalar::unnormalized(2, 0, 0, 0, 2).normalized().hash());
}

}  // namespace
}  // namespace cliffnf
