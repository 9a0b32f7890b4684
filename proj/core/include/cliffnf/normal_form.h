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

#ifndef CLIFFNF_NORMAL_FORM_H
#define CLIFFNF_NORMAL_FORM_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliffnf/circuit.h"
#include "cliffnf/gate_library.h"
#include "cliffnf/oracle.h"
#include "cliffnf/pauli.h"
#include "cliffnf/ring.h"
#include "cliffnf/tableau.h"

namespace cliffnf {

/// A_i on wire m-1, then B_{j_1} .. B_{j_{m-1}} walking the carrier up to
/// wire 0, then C_c on wire 0. Maps its Pauli to Z on wire 0.
struct ZLayer {
    std::size_t width = 0;
    int m = 1;
    int i = 1;
    std::vector<int> j;
    int c = 1;

    bool operator==(const ZLayer &o) const = default;
};

/// D_{l_1} .. D_{l_{k-1}} walking the carrier from wire 0 down to wire k-1,
/// then E_h on wire k-1. Maps its Pauli to X on wire k-1.
struct XLayer {
    std::size_t width = 0;
    std::vector<int> l;
    int h = 1;

    bool operator==(const XLayer &o) const = default;
};

struct NormalFormLevel {
    ZLayer z;
    XLayer x;
    bool operator==(const NormalFormLevel &o) const = default;
};

/// Levels of width n, n-1, ..., 1 followed by omega^p.
struct NormalForm {
    std::size_t num_qubits = 0;
    std::vector<NormalFormLevel> levels;
    int p = 0;
    /// False when synthesized without a phase source; p is then meaningless.
    bool phase_known = true;

    /// Throws std::invalid_argument on structural violations.
    void validate() const;
    /// Text form, one line per layer: "L k : m=.. i=.. j=[..] c=..",
    /// "X k : l=[..] h=..", then "p=.." ("p=?" when the phase is unknown).
    std::string str() const;

    bool operator==(const NormalForm &o) const = default;
};

NormalForm parse_normal_form(std::string_view text);

/// Circuit of a single layer on a register of `width` wires.
Circuit z_layer_circuit(const ZLayer &z);
Circuit x_layer_circuit(const XLayer &x);

/// Layer-by-layer library-gate circuit, with p omega gates at the end. With
/// `expand`, library gates are replaced by their realizations.
Circuit nf_to_circuit(const NormalForm &nf, bool expand = false, const GateLibrary &lib = GateLibrary::standard());

/// The unique Z-layer mapping P to Z on wire 0. P must be Hermitian and not +-I.
ZLayer synthesize_z_layer(const PauliOperator &p, const GateLibrary &lib = GateLibrary::standard());
/// The unique X-layer mapping Q to X on the last wire. Q must be Hermitian and
/// anticommute with Z on wire 0.
XLayer synthesize_x_layer(const PauliOperator &q, const GateLibrary &lib = GateLibrary::standard());

/// Normal form of a tableau. When `phase_source` is given, p is fixed exactly
/// by comparing its unitary against the normal form's; otherwise p = 0 and the
/// result is marked phase-free.
NormalForm synthesize(const CliffordTableau &t, const Circuit *phase_source = nullptr,
                      const OracleOptions &opts = {}, const GateLibrary &lib = GateLibrary::standard());

/// Tableau and (if `exact_phase`) phase of a circuit in one call.
NormalForm synthesize_circuit(const Circuit &c, bool exact_phase = true, const OracleOptions &opts = {},
                              const GateLibrary &lib = GateLibrary::standard());

/// All-trivial normal form of the identity: m = k, every index 1, p = 0.
NormalForm identity_normal_form(std::size_t num_qubits);

/// 8 * prod_{i=1..n} 2 (4^i - 1) 4^i.
Integer clifford_order(std::size_t num_qubits);

/// Deterministic stream of all normal forms of width n: levels outer to inner,
/// each level in (m, i, j, c, l, h) lexicographic order, p varying fastest.
class NormalFormEnumerator {
   public:
    explicit NormalFormEnumerator(std::size_t num_qubits);
    std::optional<NormalForm> next();
    /// Number of distinct level choices of the given width: 2 (4^k - 1) 4^k.
    static std::uint64_t level_count(std::size_t width);

   private:
    std::size_t n_;
    std::vector<std::vector<NormalFormLevel>> options_;  // per level, outermost first
    std::vector<std::size_t> cursor_;
    int p_ = 0;
    bool done_ = false;
};

/// Calls `visit` for every normal form in enumeration order; stops early when
/// `visit` returns false. Returns the number visited.
std::uint64_t enumerate_normal_forms(std::size_t num_qubits, const std::function<bool(const NormalForm &)> &visit);

}  // namespace cliffnf

#endif
