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

#include <stdexcept>

#include "cliffnf/errors.h"

namespace cliffnf {

void conjugate_by_gate(PauliOperator &p, const Gate &g) {
    switch (g.kind) {
        case GateKind::Omega:
            return;
        case GateKind::H: {
            bool x = p.x(g.q0), z = p.z(g.q0);
            if (x && z) {
                p.negate();
            }
            p.set(g.q0, z, x);
            return;
        }
        case GateKind::S: {
            bool x = p.x(g.q0), z = p.z(g.q0);
            if (x && z) {
                p.negate();
            }
            p.set(g.q0, x, z ^ x);
            return;
        }
        case GateKind::X: {
            if (p.z(g.q0)) {
                p.negate();
            }
            return;
        }
        case GateKind::CZ: {
            bool xa = p.x(g.q0), za = p.z(g.q0), xb = p.x(g.q1), zb = p.z(g.q1);
            if (xa && xb && (za != zb)) {
                p.negate();
            }
            p.set(g.q0, xa, za ^ xb);
            p.set(g.q1, xb, zb ^ xa);
            return;
        }
        default:
            throw std::invalid_argument("gate " + g.str() + " must be expanded before conjugation");
    }
}

CliffordTableau::CliffordTableau(std::size_t num_qubits) : num_qubits_(num_qubits) {
    x_images_.reserve(num_qubits);
    z_images_.reserve(num_qubits);
    for (std::size_t q = 0; q < num_qubits; q++) {
        x_images_.push_back(basis_pauli(num_qubits, PauliAxis::X, q));
        z_images_.push_back(basis_pauli(num_qubits, PauliAxis::Z, q));
    }
}

PauliOperator CliffordTableau::operator()(const PauliOperator &p) const {
    if (p.num_qubits() != num_qubits_) {
        throw DimensionError("tableau and Pauli operator act on different qubit counts");
    }
    // p = i^{s + #Y} prod_q X_q^{x_q} Z_q^{z_q}, since Y = i X Z.
    PauliOperator out(num_qubits_);
    int extra = static_cast<int>(p.phase_exp());
    for (std::size_t q = 0; q < num_qubits_; q++) {
        bool x = p.x(q), z = p.z(q);
        if (x) {
            out = out * x_images_[q];
        }
        if (z) {
            out = out * z_images_[q];
        }
        if (x && z) {
            extra += 1;
        }
    }
    out.set_phase_exp(static_cast<int>(out.phase_exp()) + extra);
    return out;
}

CliffordTableau &CliffordTableau::apply(const Gate &g) {
    if (g.arity() >= 1 && g.max_wire() >= num_qubits_) {
        throw std::out_of_range("gate " + g.str() + " out of range for " + std::to_string(num_qubits_) + " qubits");
    }
    for (std::size_t q = 0; q < num_qubits_; q++) {
        conjugate_by_gate(x_images_[q], g);
        conjugate_by_gate(z_images_[q], g);
    }
    return *this;
}

CliffordTableau &CliffordTableau::apply(const Circuit &c) {
    if (c.num_qubits != num_qubits_) {
        throw DimensionError("circuit and tableau act on different qubit counts");
    }
    for (const Gate &g : c.gates) {
        apply(g);
    }
    return *this;
}

CliffordTableau CliffordTableau::operator*(const CliffordTableau &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw DimensionError("composing tableaux of different sizes");
    }
    CliffordTableau out(num_qubits_);
    for (std::size_t q = 0; q < num_qubits_; q++) {
        out.x_images_[q] = (*this)(other.x_images_[q]);
        out.z_images_[q] = (*this)(other.z_images_[q]);
    }
    return out;
}

CliffordTableau CliffordTableau::inverse() const {
    std::size_t n = num_qubits_;
    CliffordTableau out(n);
    // The inverse image of X_q anticommutes with Z_r iff X_q anticommutes with
    // the image of Z_r, and similarly for the other three combinations.
    for (std::size_t q = 0; q < n; q++) {
        PauliOperator rx(n), rz(n);
        for (std::size_t r = 0; r < n; r++) {
            rx.set(r, z_images_[r].z(q), x_images_[r].z(q));
            rz.set(r, z_images_[r].x(q), x_images_[r].x(q));
        }
        PauliOperator target_x = basis_pauli(n, PauliAxis::X, q);
        PauliOperator target_z = basis_pauli(n, PauliAxis::Z, q);
        if ((*this)(rx) != target_x) {
            rx.negate();
        }
        if ((*this)(rz) != target_z) {
            rz.negate();
        }
        if ((*this)(rx) != target_x || (*this)(rz) != target_z) {
            throw InvariantError("tableau is not invertible; it is not a valid automorphism");
        }
        out.x_images_[q] = rx;
        out.z_images_[q] = rz;
    }
    return out;
}

CliffordTableau CliffordTableau::prefix(std::size_t k) const {
    if (k > num_qubits_) {
        throw DimensionError("prefix longer than tableau");
    }
    CliffordTableau out(k);
    for (std::size_t q = 0; q < k; q++) {
        out.x_images_[q] = x_images_[q].prefix(k);
        out.z_images_[q] = z_images_[q].prefix(k);
    }
    return out;
}

bool CliffordTableau::is_tensor_identity_tail(std::size_t k) const {
    for (std::size_t q = 0; q < num_qubits_; q++) {
        if (q >= k) {
            if (x_images_[q] != basis_pauli(num_qubits_, PauliAxis::X, q) ||
                z_images_[q] != basis_pauli(num_qubits_, PauliAxis::Z, q)) {
                return false;
            }
            continue;
        }
        for (std::size_t r = k; r < num_qubits_; r++) {
            if (x_images_[q].x(r) || x_images_[q].z(r) || z_images_[q].x(r) || z_images_[q].z(r)) {
                return false;
            }
        }
    }
    return true;
}

bool CliffordTableau::is_valid() const {
    for (std::size_t q = 0; q < num_qubits_; q++) {
        if (!x_images_[q].is_hermitian() || !z_images_[q].is_hermitian()) {
            return false;
        }
        for (std::size_t r = 0; r < num_qubits_; r++) {
            if (x_images_[q].commutes_with(z_images_[r]) != (q != r)) {
                return false;
            }
            if (!x_images_[q].commutes_with(x_images_[r]) || !z_images_[q].commutes_with(z_images_[r])) {
                return false;
            }
        }
    }
    return true;
}

bool CliffordTableau::operator==(const CliffordTableau &other) const {
    return num_qubits_ == other.num_qubits_ && x_images_ == other.x_images_ && z_images_ == other.z_images_;
}

std::size_t CliffordTableau::hash() const {
    std::size_t h = num_qubits_;
    for (std::size_t q = 0; q < num_qubits_; q++) {
        h = (h ^ x_images_[q].hash()) * 0x100000001B3ull;
        h = (h ^ z_images_[q].hash()) * 0x100000001B3ull;
    }
    return h;
}

std::string CliffordTableau::str() const {
    auto row = [](const char *axis, std::size_t q, const PauliOperator &p) {
        PauliOperator unsigned_p = p;
        unsigned_p.set_phase_exp(0);
        std::string body = p.num_qubits() == 0 ? "" : unsigned_p.str();
        return std::string(axis) + "_" + std::to_string(q) + " \xE2\x86\xA6 " + (p.phase_exp() == 2 ? "-" : "+") +
               body + "\n";
    };
    std::string out;
    for (std::size_t q = 0; q < num_qubits_; q++) {
        out += row("X", q, x_images_[q]);
    }
    for (std::size_t q = 0; q < num_qubits_; q++) {
        out += row("Z", q, z_images_[q]);
    }
    return out;
}

PauliOperator tableau_action(const CliffordTableau &t, const PauliOperator &p) {
    return t(p);
}

CliffordTableau tableau_apply_gate(const CliffordTableau &t, const Gate &g) {
    CliffordTableau out = t;
    out.apply(g);
    return out;
}

CliffordTableau tableau_compose(const CliffordTableau &a, const CliffordTableau &b) {
    return a * b;
}

CliffordTableau tableau_inverse(const CliffordTableau &a) {
    return a.inverse();
}

}  // namespace cliffnf
