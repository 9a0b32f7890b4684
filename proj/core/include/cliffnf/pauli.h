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

#ifndef CLIFFNF_PAULI_H
#define CLIFFNF_PAULI_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>

namespace cliffnf {

enum class PauliAxis : std::uint8_t { X, Z };

/// An element i^phase * P_0 (x) ... (x) P_{n-1} of the n-qubit Pauli group.
///
/// Qubit q carries the letter given by the bit pair (x_q, z_q): (0,0)=I,
/// (1,0)=X, (0,1)=Z, (1,1)=Y. Y is stored literally, so the operator is exactly
/// i^phase_exp times the tensor product of the letters and the encoding is
/// canonical: equal fields iff equal operators.
class PauliOperator {
   public:
    using Words = boost::container::small_vector<std::uint64_t, 1>;

    /// The identity on `num_qubits` qubits.
    explicit PauliOperator(std::size_t num_qubits = 0);

    /// Parses either "−i·X⊗Y⊗Z" or "-iXYZ". Scalars (n = 0) are "1", "i", "-1", "-i".
    static PauliOperator parse(std::string_view text);
    static PauliOperator from_letters(std::string_view letters, unsigned phase_exp = 0);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    unsigned phase_exp() const {
        return phase_exp_;
    }
    void set_phase_exp(int e) {
        phase_exp_ = static_cast<std::uint8_t>(((e % 4) + 4) % 4);
    }
    void negate() {
        phase_exp_ = static_cast<std::uint8_t>((phase_exp_ + 2) & 3);
    }

    bool x(std::size_t q) const {
        return (xs_[q >> 6] >> (q & 63)) & 1;
    }
    bool z(std::size_t q) const {
        return (zs_[q >> 6] >> (q & 63)) & 1;
    }
    void set(std::size_t q, bool x_bit, bool z_bit);
    char letter(std::size_t q) const;
    void set_letter(std::size_t q, char letter);

    const Words &x_words() const {
        return xs_;
    }
    const Words &z_words() const {
        return zs_;
    }
    Words &x_words() {
        return xs_;
    }
    Words &z_words() {
        return zs_;
    }

    /// True when every site is I (the operator is i^phase_exp times identity).
    bool is_scalar() const;
    /// Squares to +identity. Under the literal-Y encoding this is phase_exp in {0, 2}.
    bool is_hermitian() const {
        return (phase_exp_ & 1) == 0;
    }
    /// Sites carrying a non-identity letter.
    std::size_t weight() const;

    PauliOperator operator*(const PauliOperator &other) const;
    bool commutes_with(const PauliOperator &other) const;

    /// Keeps qubits [0, k).
    PauliOperator prefix(std::size_t k) const;
    /// Returns this (x) other with phases multiplied.
    PauliOperator tensor(const PauliOperator &other) const;

    bool operator==(const PauliOperator &other) const;
    bool operator!=(const PauliOperator &other) const {
        return !(*this == other);
    }

    /// "−i·X⊗Y⊗Z" style rendering.
    std::string str() const;
    /// "-iXYZ" style rendering.
    std::string compact() const;
    std::size_t hash() const;

   private:
    std::size_t num_qubits_;
    std::uint8_t phase_exp_ = 0;
    Words xs_;
    Words zs_;
};

PauliOperator pauli_mul(const PauliOperator &a, const PauliOperator &b);
bool pauli_commutes(const PauliOperator &a, const PauliOperator &b);
PauliOperator basis_pauli(std::size_t num_qubits, PauliAxis axis, std::size_t q);

std::ostream &operator<<(std::ostream &out, const PauliOperator &p);

}  // namespace cliffnf

template <>
struct std::hash<cliffnf::PauliOperator> {
    std::size_t operator()(const cliffnf::PauliOperator &p) const {
        return p.hash();
    }
};

#endif
