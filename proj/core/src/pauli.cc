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

#include <bit>
#include <ostream>

#include "cliffnf/errors.h"

namespace cliffnf {

namespace {

std::size_t num_words(std::size_t n) {
    return (n + 63) / 64;
}

void require_same_size(const PauliOperator &a, const PauliOperator &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw DimensionError(
            "Pauli operators act on different qubit counts (" + std::to_string(a.num_qubits()) + " vs " +
            std::to_string(b.num_qubits()) + ")");
    }
}

constexpr std::string_view kMinus = "\xE2\x88\x92";  // U+2212
constexpr std::string_view kDot = "\xC2\xB7";        // U+00B7
constexpr std::string_view kTensor = "\xE2\x8A\x97";  // U+2297

}  // namespace

PauliOperator::PauliOperator(std::size_t num_qubits)
    : num_qubits_(num_qubits), xs_(num_words(num_qubits), 0), zs_(num_words(num_qubits), 0) {
}

PauliOperator PauliOperator::from_letters(std::string_view letters, unsigned phase_exp) {
    PauliOperator p(letters.size());
    for (std::size_t q = 0; q < letters.size(); q++) {
        p.set_letter(q, letters[q]);
    }
    p.set_phase_exp(static_cast<int>(phase_exp));
    return p;
}

void PauliOperator::set(std::size_t q, bool x_bit, bool z_bit) {
    std::uint64_t m = std::uint64_t{1} << (q & 63);
    auto &xw = xs_[q >> 6];
    auto &zw = zs_[q >> 6];
    xw = x_bit ? (xw | m) : (xw & ~m);
    zw = z_bit ? (zw | m) : (zw & ~m);
}

char PauliOperator::letter(std::size_t q) const {
    static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
    return kLetters[(x(q) ? 1 : 0) | (z(q) ? 2 : 0)];
}

void PauliOperator::set_letter(std::size_t q, char c) {
    switch (c) {
        case 'I':
            set(q, false, false);
            break;
        case 'X':
            set(q, true, false);
            break;
        case 'Y':
            set(q, true, true);
            break;
        case 'Z':
            set(q, false, true);
            break;
        default:
            throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
    }
}

bool PauliOperator::is_scalar() const {
    for (std::size_t w = 0; w < xs_.size(); w++) {
        if (xs_[w] | zs_[w]) {
            return false;
        }
    }
    return true;
}

std::size_t PauliOperator::weight() const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < xs_.size(); w++) {
        total += static_cast<std::size_t>(std::popcount(xs_[w] | zs_[w]));
    }
    return total;
}

PauliOperator PauliOperator::operator*(const PauliOperator &other) const {
    require_same_size(*this, other);
    PauliOperator out(num_qubits_);
    // Single-site products: XY=iZ, YZ=iX, ZX=iY contribute +1 to the i-exponent;
    // the reversed orders contribute -1.
    int exponent = phase_exp_ + other.phase_exp_;
    for (std::size_t w = 0; w < xs_.size(); w++) {
        std::uint64_t x1 = xs_[w], z1 = zs_[w], x2 = other.xs_[w], z2 = other.zs_[w];
        std::uint64_t a_x = x1 & ~z1, a_y = x1 & z1, a_z = ~x1 & z1;
        std::uint64_t b_x = x2 & ~z2, b_y = x2 & z2, b_z = ~x2 & z2;
        std::uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
        std::uint64_t minus = (a_x & b_z) | (a_y & b_x) | (a_z & b_y);
        exponent += std::popcount(plus) - std::popcount(minus);
        out.xs_[w] = x1 ^ x2;
        out.zs_[w] = z1 ^ z2;
    }
    out.set_phase_exp(exponent);
    return out;
}

bool PauliOperator::commutes_with(const PauliOperator &other) const {
    require_same_size(*this, other);
    std::uint64_t parity = 0;
    for (std::size_t w = 0; w < xs_.size(); w++) {
        parity ^= (xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w]);
    }
    return (std::popcount(parity) & 1) == 0;
}

PauliOperator PauliOperator::prefix(std::size_t k) const {
    if (k > num_qubits_) {
        throw DimensionError("prefix longer than operator");
    }
    PauliOperator out(k);
    for (std::size_t q = 0; q < k; q++) {
        out.set(q, x(q), z(q));
    }
    out.phase_exp_ = phase_exp_;
    return out;
}

PauliOperator PauliOperator::tensor(const PauliOperator &other) const {
    PauliOperator out(num_qubits_ + other.num_qubits_);
    for (std::size_t q = 0; q < num_qubits_; q++) {
        out.set(q, x(q), z(q));
    }
    for (std::size_t q = 0; q < other.num_qubits_; q++) {
        out.set(num_qubits_ + q, other.x(q), other.z(q));
    }
    out.set_phase_exp(phase_exp_ + other.phase_exp_);
    return out;
}

bool PauliOperator::operator==(const PauliOperator &other) const {
    return num_qubits_ == other.num_qubits_ && phase_exp_ == other.phase_exp_ && xs_ == other.xs_ &&
           zs_ == other.zs_;
}

std::string PauliOperator::str() const {
    static constexpr std::string_view kScalars[4] = {"1", "i", "\xE2\x88\x92" "1", "\xE2\x88\x92i"};
    if (num_qubits_ == 0) {
        return std::string(kScalars[phase_exp_]);
    }
    std::string out;
    if (phase_exp_ >= 2) {
        out += kMinus;
    }
    if (phase_exp_ & 1) {
        out += "i";
        out += kDot;
    }
    for (std::size_t q = 0; q < num_qubits_; q++) {
        if (q) {
            out += kTensor;
        }
        out += letter(q);
    }
    return out;
}

std::string PauliOperator::compact() const {
    static constexpr std::string_view kScalars[4] = {"1", "i", "-1", "-i"};
    if (num_qubits_ == 0) {
        return std::string(kScalars[phase_exp_]);
    }
    std::string out;
    if (phase_exp_ >= 2) {
        out += '-';
    }
    if (phase_exp_ & 1) {
        out += 'i';
    }
    for (std::size_t q = 0; q < num_qubits_; q++) {
        out += letter(q);
    }
    return out;
}

PauliOperator PauliOperator::parse(std::string_view text) {
    auto fail = [&]() -> PauliOperator {
        throw ParseError(0, "not a Pauli operator: '" + std::string(text) + "'");
    };
    auto consume = [](std::string_view &s, std::string_view token) {
        if (s.substr(0, token.size()) == token) {
            s.remove_prefix(token.size());
            return true;
        }
        return false;
    };
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    unsigned phase = 0;
    if (consume(s, "-") || consume(s, kMinus)) {
        phase += 2;
    } else {
        consume(s, "+");
    }
    bool had_i = false;
    if (consume(s, "i")) {
        phase += 1;
        had_i = true;
        if (!consume(s, kDot)) {
            consume(s, "*");
        }
    }
    if (s == "1") {
        return PauliOperator::from_letters("", phase);
    }
    if (s.empty()) {
        if (!had_i) {
            return fail();
        }
        return PauliOperator::from_letters("", phase);
    }
    std::string letters;
    bool expect_letter = true;
    while (!s.empty()) {
        if (!expect_letter && consume(s, kTensor)) {
            expect_letter = true;
            continue;
        }
        char c = s.front();
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
            return fail();
        }
        letters += c;
        s.remove_prefix(1);
        expect_letter = false;
    }
    if (expect_letter) {
        return fail();
    }
    return PauliOperator::from_letters(letters, phase);
}

std::size_t PauliOperator::hash() const {
    std::size_t h = num_qubits_ * 0x9E3779B97F4A7C15ull + phase_exp_;
    for (std::size_t w = 0; w < xs_.size(); w++) {
        h = (h ^ xs_[w]) * 0x100000001B3ull;
        h = (h ^ zs_[w]) * 0x100000001B3ull;
    }
    return h;
}

PauliOperator pauli_mul(const PauliOperator &a, const PauliOperator &b) {
    return a * b;
}

bool pauli_commutes(const PauliOperator &a, const PauliOperator &b) {
    return a.commutes_with(b);
}

PauliOperator basis_pauli(std::size_t num_qubits, PauliAxis axis, std::size_t q) {
    if (q >= num_qubits) {
        throw std::out_of_range(
            "qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits) + " qubits");
    }
    PauliOperator p(num_qubits);
    p.set(q, axis == PauliAxis::X, axis == PauliAxis::Z);
    return p;
}

std::ostream &operator<<(std::ostream &out, const PauliOperator &p) {
    return out << p.str();
}

}  // namespace cliffnf
