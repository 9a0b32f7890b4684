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


// Shared helpers for the unit and acceptance tests.

#ifndef CLIFFNF_TESTS_TEST_SUPPORT_H_
#define CLIFFNF_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "cliffnf/circuit.h"
#include "cliffnf/pauli.h"

namespace cliffnf::testing {

struct RandomCircuitOptions {
    bool use_x = true;
    bool use_omega = true;
};

/// Uniformly chosen gates from {H, S, X, CZ(q, q+1), omega}; CZ is skipped on one wire.
inline Circuit random_circuit(std::mt19937_64 &rng, std::size_t n, std::size_t len,
                              RandomCircuitOptions opts = {}) {
    Circuit c(n);
    while (c.gates.size() < len) {
        auto q = static_cast<std::uint32_t>(rng() % n);
        switch (rng() % 5) {
            case 0:
                c += Gate::h(q);
                break;
            case 1:
                c += Gate::s(q);
                break;
            case 2:
                if (opts.use_x) c += Gate::x(q);
                break;
            case 3:
                if (n > 1) {
                    auto a = static_cast<std::uint32_t>(rng() % (n - 1));
                    c += Gate::cz(a, a + 1);
                }
                break;
            default:
                if (opts.use_omega) c += Gate::omega();
                break;
        }
    }
    return c;
}

/// Random Hermitian Pauli operator with a random sign; may be the identity.
inline PauliOperator random_hermitian_pauli(std::mt19937_64 &rng, std::size_t n) {
    PauliOperator p(n);
    for (std::size_t q = 0; q < n; q++) {
        p.set_letter(q, "IXYZ"[rng() % 4]);
    }
    p.set_phase_exp(rng() % 2 == 0 ? 0 : 2);
    return p;
}

inline std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace cliffnf::testing

#endif
