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

#ifndef CLIFFNF_EXACT_MATRIX_H
#define CLIFFNF_EXACT_MATRIX_H

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cliffnf/pauli.h"
#include "cliffnf/ring.h"

namespace cliffnf {

/// Dense square matrix over Z[w, 1/sqrt(2)].
///
/// For n-qubit operators the row/column index bit (n-1-q) belongs to wire q, so
/// wire 0 is the leftmost tensor factor.
class ExactMatrix {
   public:
    ExactMatrix() = default;
    /// The zero matrix of the given dimension.
    explicit ExactMatrix(std::size_t dim);

    static ExactMatrix identity(std::size_t dim);
    /// The 2^n x 2^n matrix of a Pauli operator, phase included.
    static ExactMatrix of_pauli(const PauliOperator &p);

    std::size_t dim() const {
        return dim_;
    }
    /// log2(dim). Throws DimensionError when dim is not a power of two.
    std::size_t num_qubits() const;

    const RingScalar &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * dim_ + c];
    }
    RingScalar &operator()(std::size_t r, std::size_t c) {
        return entries_[r * dim_ + c];
    }

    ExactMatrix operator*(const ExactMatrix &other) const;
    ExactMatrix adjoint() const;
    ExactMatrix times_omega(int p) const;
    bool operator==(const ExactMatrix &other) const;
    bool operator!=(const ExactMatrix &other) const {
        return !(*this == other);
    }
    bool is_unitary() const;

    // In-place left multiplication by a gate acting on the given wires of an
    // n-qubit register, n = num_qubits().
    void apply_h(std::size_t q);
    void apply_s(std::size_t q);
    void apply_x(std::size_t q);
    void apply_cz(std::size_t a, std::size_t b);
    void apply_omega(int p);

    /// One row per line, entries "(a,b,c,d)/√2^k" separated by spaces.
    std::string str() const;
    /// Same layout with entries rendered as approximate complex decimals.
    std::string decimal_str(int precision = 4) const;
    std::size_t hash() const;

   private:
    std::size_t bit_of(std::size_t q) const;

    std::size_t dim_ = 0;
    std::vector<RingScalar> entries_;
};

/// Returns p with u = w^p v, or nullopt when no such p exists.
std::optional<int> global_phase_ratio(const ExactMatrix &u, const ExactMatrix &v);

/// Computes u p u^dagger and decodes it as a Pauli operator. Throws
/// std::domain_error when the conjugate is not a Pauli operator.
PauliOperator conjugate_pauli_by_matrix(const ExactMatrix &u, const PauliOperator &p);

}  // namespace cliffnf

#endif
