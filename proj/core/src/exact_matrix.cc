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

#include "cliffnf/exact_matrix.h"

#include <bit>
#include <cstdio>
#include <stdexcept>

#include "cliffnf/errors.h"

namespace cliffnf {

ExactMatrix::ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
}

ExactMatrix ExactMatrix::identity(std::size_t dim) {
    ExactMatrix m(dim);
    for (std::size_t k = 0; k < dim; k++) {
        m(k, k) = RingScalar::one();
    }
    return m;
}

std::size_t ExactMatrix::num_qubits() const {
    if (dim_ == 0 || !std::has_single_bit(dim_)) {
        throw DimensionError("matrix dimension " + std::to_string(dim_) + " is not a power of two");
    }
    return static_cast<std::size_t>(std::countr_zero(dim_));
}

std::size_t ExactMatrix::bit_of(std::size_t q) const {
    std::size_t n = num_qubits();
    if (q >= n) {
        throw std::out_of_range("wire " + std::to_string(q) + " out of range for " + std::to_string(n) + " qubits");
    }
    return std::size_t{1} << (n - 1 - q);
}

ExactMatrix ExactMatrix::of_pauli(const PauliOperator &p) {
    std::size_t n = p.num_qubits();
    std::size_t dim = std::size_t{1} << n;
    ExactMatrix m(dim);
    std::size_t xmask = 0;
    for (std::size_t q = 0; q < n; q++) {
        if (p.x(q)) {
            xmask |= std::size_t{1} << (n - 1 - q);
        }
    }
    for (std::size_t c = 0; c < dim; c++) {
        std::size_t r = c ^ xmask;
        // Per site: X|b> = |1-b>, Z|b> = (-1)^b |b>, Y|b> = i (-1)^b |1-b>.
        int i_power = static_cast<int>(p.phase_exp());
        for (std::size_t q = 0; q < n; q++) {
            bool b = (c >> (n - 1 - q)) & 1;
            if (p.z(q) && b) {
                i_power += 2;
            }
            if (p.z(q) && p.x(q)) {
                i_power += 1;
            }
        }
        m(r, c) = RingScalar::omega_power(2 * i_power);
    }
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix &other) const {
    if (dim_ != other.dim_) {
        throw DimensionError("matrix product of mismatched dimensions");
    }
    ExactMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t k = 0; k < dim_; k++) {
            const RingScalar &a = (*this)(r, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; c++) {
                const RingScalar &b = other(k, c);
                if (!b.is_zero()) {
                    out(r, c) += a * b;
                }
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::adjoint() const {
    ExactMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            out(c, r) = (*this)(r, c).conj();
        }
    }
    return out;
}

ExactMatrix ExactMatrix::times_omega(int p) const {
    ExactMatrix out = *this;
    out.apply_omega(p);
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix &other) const {
    return dim_ == other.dim_ && entries_ == other.entries_;
}

bool ExactMatrix::is_unitary() const {
    return (*this) * adjoint() == identity(dim_);
}

void ExactMatrix::apply_h(std::size_t q) {
    std::size_t bit = bit_of(q);
    for (std::size_t r = 0; r < dim_; r++) {
        if (r & bit) {
            continue;
        }
        for (std::size_t c = 0; c < dim_; c++) {
            RingScalar &top = (*this)(r, c);
            RingScalar &bottom = (*this)(r | bit, c);
            if (top.is_zero() && bottom.is_zero()) {
                continue;
            }
            RingScalar sum = (top + bottom).div_sqrt2();
            RingScalar diff = (top - bottom).div_sqrt2();
            top = std::move(sum);
            bottom = std::move(diff);
        }
    }
}

void ExactMatrix::apply_s(std::size_t q) {
    std::size_t bit = bit_of(q);
    for (std::size_t r = 0; r < dim_; r++) {
        if (r & bit) {
            for (std::size_t c = 0; c < dim_; c++) {
                RingScalar &e = (*this)(r, c);
                if (!e.is_zero()) {
                    e = e.times_omega(2);
                }
            }
        }
    }
}

void ExactMatrix::apply_x(std::size_t q) {
    std::size_t bit = bit_of(q);
    for (std::size_t r = 0; r < dim_; r++) {
        if (!(r & bit)) {
            for (std::size_t c = 0; c < dim_; c++) {
                std::swap((*this)(r, c), (*this)(r | bit, c));
            }
        }
    }
}

void ExactMatrix::apply_cz(std::size_t a, std::size_t b) {
    if (a == b) {
        throw std::invalid_argument("CZ needs two distinct wires");
    }
    std::size_t mask = bit_of(a) | bit_of(b);
    for (std::size_t r = 0; r < dim_; r++) {
        if ((r & mask) == mask) {
            for (std::size_t c = 0; c < dim_; c++) {
                RingScalar &e = (*this)(r, c);
                if (!e.is_zero()) {
                    e = -e;
                }
            }
        }
    }
}

void ExactMatrix::apply_omega(int p) {
    p = ((p % 8) + 8) % 8;
    if (p == 0) {
        return;
    }
    for (auto &e : entries_) {
        if (!e.is_zero()) {
            e = e.times_omega(p);
        }
    }
}

std::string ExactMatrix::str() const {
    std::string out;
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            if (c) {
                out += ' ';
            }
            out += (*this)(r, c).str();
        }
        out += '\n';
    }
    return out;
}

std::string ExactMatrix::decimal_str(int precision) const {
    std::string out;
    char buf[96];
    for (std::size_t r = 0; r < dim_; r++) {
        for (std::size_t c = 0; c < dim_; c++) {
            auto v = (*this)(r, c).to_complex();
            double re = v.real() == 0 ? 0.0 : v.real();
            double im = v.imag() == 0 ? 0.0 : v.imag();
            std::snprintf(buf, sizeof(buf), "%s%.*f%+.*fi", c ? " " : "", precision, re, precision, im);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

std::size_t ExactMatrix::hash() const {
    std::size_t h = dim_;
    for (const auto &e : entries_) {
        h = (h ^ e.hash()) * 0x100000001B3ull;
    }
    return h;
}

std::optional<int> global_phase_ratio(const ExactMatrix &u, const ExactMatrix &v) {
    if (u.dim() != v.dim()) {
        throw DimensionError("global_phase_ratio: dimensions differ");
    }
    std::size_t dim = v.dim();
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            const RingScalar &ve = v(r, c);
            if (ve.is_zero()) {
                continue;
            }
            for (int p = 0; p < 8; p++) {
                if (ve.times_omega(p) == u(r, c)) {
                    if (u == v.times_omega(p)) {
                        return p;
                    }
                    return std::nullopt;
                }
            }
            return std::nullopt;
        }
    }
    // v = 0; proportional only to u = 0.
    return u == v ? std::optional<int>(0) : std::nullopt;
}

PauliOperator conjugate_pauli_by_matrix(const ExactMatrix &u, const PauliOperator &p) {
    std::size_t n = p.num_qubits();
    if (u.dim() != (std::size_t{1} << n)) {
        throw DimensionError("conjugate_pauli_by_matrix: matrix and Pauli sizes differ");
    }
    ExactMatrix m = u * ExactMatrix::of_pauli(p) * u.adjoint();
    auto not_pauli = [] { return std::domain_error("conjugate is not a Pauli operator; matrix is not Clifford"); };
    std::size_t dim = m.dim();
    std::size_t xmask = dim;
    for (std::size_t c = 0; c < dim; c++) {
        if (!m(0, c).is_zero()) {
            xmask = c;
            break;
        }
    }
    if (xmask == dim) {
        throw not_pauli();
    }
    PauliOperator candidate(n);
    for (std::size_t q = 0; q < n; q++) {
        std::size_t bit = std::size_t{1} << (n - 1 - q);
        bool x_bit = (xmask & bit) != 0;
        // Row `bit` differs from row 0 only in wire q: Z and Y flip sign there.
        const RingScalar &base = m(0, xmask);
        const RingScalar &probe = m(bit, bit ^ xmask);
        bool z_bit;
        if (probe == base) {
            z_bit = false;
        } else if (probe == -base) {
            z_bit = true;
        } else {
            throw not_pauli();
        }
        candidate.set(q, x_bit, z_bit);
    }
    // Entry (0, xmask) of the unit-phase candidate is (-i)^{#Y}.
    ExactMatrix unit = ExactMatrix::of_pauli(candidate);
    for (unsigned e = 0; e < 4; e++) {
        if (unit(0, xmask).times_omega(2 * static_cast<int>(e)) == m(0, xmask)) {
            candidate.set_phase_exp(static_cast<int>(e));
            if (ExactMatrix::of_pauli(candidate) != m) {
                throw not_pauli();
            }
            return candidate;
        }
    }
    throw not_pauli();
}

}  // namespace cliffnf
