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

#include <cmath>

namespace cliffnf {

namespace {

using Coeffs = std::array<Integer, 4>;

// x * (w - w^3) = x * sqrt(2).
Coeffs times_sqrt2(const Coeffs &x) {
    return {x[1] - x[3], x[0] + x[2], x[1] + x[3], x[2] - x[0]};
}

bool is_odd(const Integer &v) {
    return boost::multiprecision::bit_test(v, 0);
}

// Rewrites `x / sqrt2^from` over the larger denominator sqrt2^to.
Coeffs lift(Coeffs x, unsigned from, unsigned to) {
    unsigned d = to - from;
    if (d & 1) {
        x = times_sqrt2(x);
    }
    if (d >= 2) {
        for (auto &c : x) {
            c <<= static_cast<int>(d / 2);
        }
    }
    return x;
}

}  // namespace

RingScalar::RingScalar(Integer a, Integer b, Integer c, Integer d, unsigned k)
    : coeffs_{std::move(a), std::move(b), std::move(c), std::move(d)}, k_(k) {
    normalize();
}

RingScalar RingScalar::unnormalized(Integer a, Integer b, Integer c, Integer d, unsigned k) {
    RingScalar s;
    s.coeffs_ = {std::move(a), std::move(b), std::move(c), std::move(d)};
    s.k_ = k;
    return s;
}

RingScalar RingScalar::omega_power(int p) {
    p = ((p % 8) + 8) % 8;
    RingScalar s;
    s.coeffs_[p & 3] = (p >= 4) ? -1 : 1;
    return s;
}

bool RingScalar::is_zero() const {
    return coeffs_[0].is_zero() && coeffs_[1].is_zero() && coeffs_[2].is_zero() && coeffs_[3].is_zero();
}

void RingScalar::normalize() {
    if (is_zero()) {
        k_ = 0;
        return;
    }
    // x is divisible by sqrt(2) in Z[w] iff a = c and b = d (mod 2); then
    // x / sqrt(2) = x * sqrt(2) / 2.
    while (k_ > 0 && is_odd(coeffs_[0]) == is_odd(coeffs_[2]) && is_odd(coeffs_[1]) == is_odd(coeffs_[3])) {
        coeffs_ = times_sqrt2(coeffs_);
        for (auto &c : coeffs_) {
            c >>= 1;
        }
        k_--;
    }
}

RingScalar RingScalar::normalized() const {
    RingScalar out = *this;
    out.normalize();
    return out;
}

RingScalar RingScalar::operator+(const RingScalar &other) const {
    unsigned k = std::max(k_, other.k_);
    Coeffs x = lift(coeffs_, k_, k);
    Coeffs y = lift(other.coeffs_, other.k_, k);
    return RingScalar(x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3], k);
}

RingScalar RingScalar::operator-(const RingScalar &other) const {
    return *this + (-other);
}

RingScalar RingScalar::operator-() const {
    RingScalar out = *this;
    for (auto &c : out.coeffs_) {
        c = -c;
    }
    return out;
}

RingScalar RingScalar::operator*(const RingScalar &other) const {
    const Coeffs &a = coeffs_;
    const Coeffs &b = other.coeffs_;
    Coeffs r{};
    for (std::size_t i = 0; i < 4; i++) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < 4; j++) {
            std::size_t e = i + j;
            if (e < 4) {
                r[e] += a[i] * b[j];
            } else {
                r[e - 4] -= a[i] * b[j];
            }
        }
    }
    return RingScalar(std::move(r[0]), std::move(r[1]), std::move(r[2]), std::move(r[3]), k_ + other.k_);
}

RingScalar RingScalar::conj() const {
    // conj(w^j) = w^{8-j}: w -> -w^3, w^2 -> -w^2, w^3 -> -w.
    RingScalar out;
    out.coeffs_ = {coeffs_[0], -coeffs_[3], -coeffs_[2], -coeffs_[1]};
    out.k_ = k_;
    return out;
}

RingScalar RingScalar::times_omega(int p) const {
    p = ((p % 8) + 8) % 8;
    RingScalar out = *this;
    for (int t = 0; t < p; t++) {
        Coeffs &c = out.coeffs_;
        Integer top = -c[3];
        c[3] = std::move(c[2]);
        c[2] = std::move(c[1]);
        c[1] = std::move(c[0]);
        c[0] = std::move(top);
    }
    return out;
}

RingScalar RingScalar::div_sqrt2() const {
    RingScalar out = *this;
    out.k_++;
    out.normalize();
    return out;
}

std::complex<double> RingScalar::to_complex() const {
    const double h = std::sqrt(0.5);
    std::complex<double> w(h, h);
    std::complex<double> v = coeffs_[0].convert_to<double>() + coeffs_[1].convert_to<double>() * w +
                             coeffs_[2].convert_to<double>() * w * w +
                             coeffs_[3].convert_to<double>() * w * w * w;
    return v / std::pow(std::sqrt(2.0), static_cast<double>(k_));
}

std::string RingScalar::str() const {
    return "(" + coeffs_[0].str() + "," + coeffs_[1].str() + "," + coeffs_[2].str() + "," + coeffs_[3].str() +
           ")/\xE2\x88\x9A" "2^" + std::to_string(k_);
}

std::size_t RingScalar::hash() const {
    std::size_t h = k_;
    for (const auto &c : coeffs_) {
        h = (h ^ static_cast<std::size_t>(c.convert_to<long long>())) * 0x100000001B3ull;
    }
    return h;
}

RingScalar ring_normalize(const RingScalar &s) {
    return s.normalized();
}

}  // namespace cliffnf
