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

#ifndef CLIFFNF_TABLEAU_H
#define CLIFFNF_TABLEAU_H

#include <cstddef>
#include <string>
#include <vector>

#include "cliffnf/circuit.h"
#include "cliffnf/pauli.h"

namespace cliffnf {

/// Conjugates `p` in place by a generator gate (H, S, X, CZ, Omega): p <- g p g^dagger.
/// Library gates are rejected with std::invalid_argument; expand them first.
void conjugate_by_gate(PauliOperator &p, const Gate &g);

/// A scalar-fixing automorphism of the n-qubit Pauli group, stored as the
/// images of X_q and Z_q. This is a Clifford operator modulo global phase.
class CliffordTableau {
   public:
    explicit CliffordTableau(std::size_t num_qubits = 0);

    static CliffordTableau identity(std::size_t num_qubits) {
        return CliffordTableau(num_qubits);
    }

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    const PauliOperator &x_image(std::size_t q) const {
        return x_images_[q];
    }
    const PauliOperator &z_image(std::size_t q) const {
        return z_images_[q];
    }
    PauliOperator &x_image(std::size_t q) {
        return x_images_[q];
    }
    PauliOperator &z_image(std::size_t q) {
        return z_images_[q];
    }

    /// The image of an arbitrary Pauli operator, phase included.
    PauliOperator operator()(const PauliOperator &p) const;

    /// Replaces this tableau by the tableau of (this, then g) in circuit order.
    CliffordTableau &apply(const Gate &g);
    CliffordTableau &apply(const Circuit &c);

    /// (a * b)(P) = a(b(P)): b acts first.
    CliffordTableau operator*(const CliffordTableau &other) const;
    CliffordTableau inverse() const;

    /// Restriction to the first k qubits. Only meaningful when the tableau is
    /// of the form T' (x) I on the remaining qubits; see `is_tensor_identity_tail`.
    CliffordTableau prefix(std::size_t k) const;
    /// True if qubits [k, n) are mapped identically and qubits [0, k) never leak onto them.
    bool is_tensor_identity_tail(std::size_t k) const;

    /// Images are Hermitian and satisfy the symplectic commutation relations.
    bool is_valid() const;

    bool operator==(const CliffordTableau &other) const;
    bool operator!=(const CliffordTableau &other) const {
        return !(*this == other);
    }
    std::size_t hash() const;

    /// Rows "X_q ↦ +P" and "Z_q ↦ -P", X rows first.
    std::string str() const;

   private:
    std::size_t num_qubits_;
    std::vector<PauliOperator> x_images_;
    std::vector<PauliOperator> z_images_;
};

PauliOperator tableau_action(const CliffordTableau &t, const PauliOperator &p);
CliffordTableau tableau_apply_gate(const CliffordTableau &t, const Gate &g);
CliffordTableau tableau_compose(const CliffordTableau &a, const CliffordTableau &b);
CliffordTableau tableau_inverse(const CliffordTableau &a);

}  // namespace cliffnf

template <>
struct std::hash<cliffnf::CliffordTableau> {
    std::size_t operator()(const cliffnf::CliffordTableau &t) const {
        return t.hash();
    }
};

#endif
