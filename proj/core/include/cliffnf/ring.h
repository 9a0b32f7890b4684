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

#ifndef CLIFFNF_RING_H
#define CLIFFNF_RING_H

#include <array>
#include <complex>
#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliffnf {

using Integer = boost::multiprecision::cpp_int;

/// An element (a + b w + c w^2 + d w^3) / sqrt(2)^k of Z[w, 1/sqrt(2)], w = e^{i pi/4}.
///
/// Values produced by the public constructors and arithmetic are canonical:
/// k is minimal, so two scalars are equal iff their fields are equal.
class RingScalar {
   public:
    /// Zero.
    RingScalar() = default;
    /// Builds and normalizes (a + b w + c w^2 + d w^3) / sqrt(2)^k.
    RingScalar(Integer a, Integer b, Integer c, Integer d, unsigned k = 0);

    /// Stores the representation as given, without reducing k. Only useful for
    /// exercising `normalized()`.
    static RingScalar unnormalized(Integer a, Integer b, Integer c, Integer d, unsigned k);

    static RingScalar one() {
        return RingScalar(1, 0, 0, 0);
    }
    /// w^p for any integer p.
    static RingScalar omega_power(int p);
    static RingScalar sqrt2() {
        return RingScalar(0, 1, 0, -1);
    }
    static RingScalar inv_sqrt2() {
        return RingScalar(1, 0, 0, 0, 1);
    }

    const Integer &coeff(std::size_t i) const {
        return coeffs_[i];
    }
    unsigned sqrt2_exp() const {
        return k_;
    }
    bool is_zero() const;

    /// Canonical representative with the same value.
    RingScalar normalized() const;

    RingScalar operator+(const RingScalar &other) const;
    RingScalar operator-(const RingScalar &other) const;
    RingScalar operator*(const RingScalar &other) const;
    RingScalar operator-() const;
    RingScalar &operator+=(const RingScalar &other) {
        return *this = *this + other;
    }
    /// Complex conjugate.
    RingScalar conj() const;
    /// Multiplies by w^p.
    RingScalar times_omega(int p) const;
    /// Divides by sqrt(2).
    RingScalar div_sqrt2() const;

    bool operator==(const RingScalar &other) const {
        return k_ == other.k_ && coeffs_ == other.coeffs_;
    }
    bool operator!=(const RingScalar &other) const {
        return !(*this == other);
    }

    std::complex<double> to_complex() const;
    /// "(a,b,c,d)/√2^k".
    std::string str() const;
    std::size_t hash() const;

   private:
    void normalize();

    std::array<Integer, 4> coeffs_{};
    unsigned k_ = 0;
};

RingScalar ring_normalize(const RingScalar &s);

}  // namespace cliffnf

#endif
