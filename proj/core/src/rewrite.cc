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

#include "cliffnf/rewrite.h"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "cliffnf/circuit_io.h"
#include "cliffnf/errors.h"
#include "cliffnf/oracle.h"
#include "packed_tableau.h"

namespace cliffnf {

namespace {

bool is_dirty(const Gate &g) {
    return g.kind == GateKind::H || g.kind == GateKind::S || g.kind == GateKind::X || g.kind == GateKind::CZ;
}

bool shares_wire(const Gate &a, const Gate &b) {
    if (a.arity() == 0 || b.arity() == 0) {
        return false;
    }
    if (b.touches(a.q0)) {
        return true;
    }
    return a.arity() == 2 && b.touches(a.q1);
}

Gate shift(Gate g, std::int64_t offset) {
    if (g.arity() >= 1) {
        g.q0 = static_cast<std::uint32_t>(g.q0 + offset);
    }
    if (g.arity() == 2) {
        g.q1 = static_cast<std::uint32_t>(g.q1 + offset);
    }
    return g;
}

std::string join_gates(const std::vector<Gate> &gates) {
    std::string out;
    for (const Gate &g : gates) {
        if (!out.empty()) {
            out += "; ";
        }
        out += g.str();
    }
    return out;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// ---------------------------------------------------------------------------
// Rule generation.

struct Slot {
    GateKind kind;
    std::uint32_t wire;
};

/// One configuration of a dirty gate immediately before clean gate(s), in
/// local coordinates, with the clean shapes allowed on the right-hand side and
/// the dirty gates that the wire labels admit right after them.
struct CaseSpec {
    std::size_t n;
    std::vector<Gate> dirty;
    std::vector<Slot> window;
    std::vector<std::vector<Slot>> replacements;
    std::vector<Gate> suffix_gens;
};

std::vector<CaseSpec> case_specs() {
    const Gate h0 = Gate::h(0), h1 = Gate::h(1), h2 = Gate::h(2);
    const Gate s0 = Gate::s(0), s1 = Gate::s(1), s2 = Gate::s(2);
    const Gate x0 = Gate::x(0), x1 = Gate::x(1);
    const Gate cz01 = Gate::cz(0, 1), cz12 = Gate::cz(1, 2);
    using K = GateKind;
    // After A or a B's upper output the wire is labelled 2 (S, X allowed);
    // a B's lower output and untouched wires are labelled 1 (H, S).
    const std::vector<Gate> carrier2 = {s0, x0, h1, s1, cz01};
    const std::vector<Gate> carrier3 = {s0, x0, h1, s1, h2, s2, cz01, cz12};
    const std::vector<Slot> a0 = {{K::A, 0}};
    const std::vector<Slot> a1b0 = {{K::A, 1}, {K::B, 0}};
    return {
        {1, {h0, s0}, a0, {a0}, {s0, x0}},
        {2, {cz01}, a0, {a0, a1b0}, carrier2},
        {2, {cz01}, a1b0, {a1b0, a0}, carrier2},
        {2, {h0, s0, s1, x1}, {{K::B, 0}}, {{{K::B, 0}}}, carrier2},
        {3, {cz12}, {{K::B, 0}}, {{{K::B, 0}}}, carrier3},
        {3, {cz01}, {{K::B, 1}, {K::B, 0}}, {{{K::B, 1}, {K::B, 0}}}, carrier3},
        {1, {s0, x0}, {{K::C, 0}}, {{{K::C, 0}}}, {s0}},
        {2, {cz01}, {{K::C, 0}}, {{{K::C, 0}}}, {s0, h1, s1, cz01}},
        // D's upper output starts the next level (label 1), the lower one is labelled 4 (S only).
        {2, {s0, h1, s1, cz01}, {{K::D, 0}}, {{{K::D, 0}}}, {h0, s0, s1}},
        {3, {cz12}, {{K::D, 0}, {K::D, 1}}, {{{K::D, 0}, {K::D, 1}}}, {h0, s0, h1, s1, cz01, s2}},
        {1, {s0}, {{K::E, 0}}, {{{K::E, 0}}}, {}},
    };
}

std::vector<std::vector<Gate>> instantiate(const std::vector<Slot> &slots) {
    std::vector<std::vector<Gate>> out{{}};
    for (const Slot &s : slots) {
        std::vector<std::vector<Gate>> next;
        for (const auto &prefix : out) {
            for (int i = 1; i <= family_size(s.kind); i++) {
                next.push_back(prefix);
                next.back().push_back(Gate::library(s.kind, i, s.wire));
            }
        }
        out = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Driver helpers.

using Bits = std::vector<std::uint64_t>;

std::vector<std::uint32_t> measure_of(const std::vector<Gate> &gates, std::size_t n) {
    std::size_t dirty = 0;
    for (const Gate &g : gates) {
        dirty += is_dirty(g);
    }
    std::size_t words = (dirty + 63) / 64;
    std::vector<Bits> wire(n, Bits(words, 0));
    std::vector<std::uint32_t> v;
    std::size_t next_dirty = 0;
    Bits acc(words);
    for (const Gate &g : gates) {
        if (g.arity() == 0) {
            continue;
        }
        acc = wire[g.q0];
        if (g.arity() == 2) {
            for (std::size_t w = 0; w < words; w++) {
                acc[w] |= wire[g.q1][w];
            }
        }
        if (is_dirty(g)) {
            acc[next_dirty / 64] |= std::uint64_t{1} << (next_dirty % 64);
            next_dirty++;
        } else {
            std::uint32_t count = 0;
            for (auto w : acc) {
                count += static_cast<std::uint32_t>(std::popcount(w));
            }
            v.push_back(count);
        }
        wire[g.q0] = acc;
        if (g.arity() == 2) {
            wire[g.q1] = acc;
        }
    }
    return v;
}

/// Attempts one rule application for the dirty gate at `gi`. Gates on other
/// wires are commuted out of the way first. Returns false when the gate is not
/// immediately before clean gates matching some rule.
bool try_apply(DirtyNormalForm &d, std::size_t gi, const RuleSet &rules) {
    auto &gates = d.gates;
    const Gate g = gates[gi];
    std::size_t pos = gi;
    while (pos + 1 < gates.size() && !shares_wire(gates[pos + 1], g)) {
        std::swap(gates[pos], gates[pos + 1]);
        pos++;
    }
    if (pos + 1 == gates.size()) {
        throw InvariantError("dirty gate " + g.str() + " is not before any clean gate");
    }
    const Gate w1 = gates[pos + 1];
    if (is_dirty(w1)) {
        return false;
    }
    // A second clean gate joins the window when it is the next gate on a wire
    // of g that w1 does not cover, and can be brought next to w1.
    bool have_w2 = false;
    for (std::uint32_t u : {g.q0, g.q1}) {
        if (have_w2 || (u == g.q1 && g.arity() < 2) || w1.touches(u)) {
            continue;
        }
        std::size_t j = pos + 2;
        while (j < gates.size() && !gates[j].touches(u)) {
            j++;
        }
        if (j == gates.size() || is_dirty(gates[j])) {
            continue;
        }
        bool blocked = false;
        for (std::size_t t = pos + 2; t < j; t++) {
            if (shares_wire(gates[t], gates[j])) {
                blocked = true;
                break;
            }
        }
        if (blocked) {
            continue;
        }
        Gate moved = gates[j];
        gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
        gates.insert(gates.begin() + static_cast<std::ptrdiff_t>(pos + 2), moved);
        have_w2 = true;
    }

    for (std::size_t len = have_w2 ? 3 : 2; len >= 2; len--) {
        std::vector<Gate> pattern(gates.begin() + static_cast<std::ptrdiff_t>(pos),
                                  gates.begin() + static_cast<std::ptrdiff_t>(pos + len));
        std::uint32_t lo = UINT32_MAX, hi = 0;
        for (const Gate &p : pattern) {
            lo = std::min(lo, p.min_wire());
            hi = std::max(hi, p.max_wire());
        }
        Circuit local(hi - lo + 1);
        for (const Gate &p : pattern) {
            local += shift(p, -static_cast<std::int64_t>(lo));
        }
        const RewriteRule *rule = rules.find(pattern_key(local));
        if (rule == nullptr) {
            continue;
        }
        std::vector<Gate> replacement;
        for (const Gate &r : rule->rhs.gates) {
            if (r.kind == GateKind::Omega) {
                d.omega_count = (d.omega_count + 1) % 8;
            } else {
                replacement.push_back(shift(r, lo));
            }
        }
        gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(pos),
                    gates.begin() + static_cast<std::ptrdiff_t>(pos + len));
        gates.insert(gates.begin() + static_cast<std::ptrdiff_t>(pos), replacement.begin(), replacement.end());
        return true;
    }
    return false;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string pattern_key(const Circuit &local) {
    return std::to_string(local.num_qubits) + ": " + join_gates(local.gates);
}

std::string RewriteRule::key() const {
    return pattern_key(lhs);
}

void RuleSet::add(RewriteRule rule) {
    std::string k = rule.key();
    if (index_.count(k) != 0) {
        throw std::invalid_argument("duplicate rule for " + k);
    }
    index_.emplace(std::move(k), rules_.size());
    rules_.push_back(std::move(rule));
}

const RewriteRule *RuleSet::find(const std::string &key) const {
    auto it = index_.find(key);
    return it == index_.end() ? nullptr : &rules_[it->second];
}

bool RuleSet::operator==(const RuleSet &o) const {
    if (rules_.size() != o.rules_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < rules_.size(); i++) {
        if (!(rules_[i].lhs == o.rules_[i].lhs) || !(rules_[i].rhs == o.rules_[i].rhs)) {
            return false;
        }
    }
    return true;
}

std::string RuleSet::serialize() const {
    std::string body;
    for (const auto &r : rules_) {
        body += std::to_string(r.lhs.num_qubits) + ": " + join_gates(r.lhs.gates) + " => " + join_gates(r.rhs.gates) +
                "\n";
    }
    return body + "# hash " + hex64(fnv1a64(body)) + "\n";
}

std::uint64_t RuleSet::content_hash() const {
    std::string s = serialize();
    return std::stoull(s.substr(s.rfind("# hash ") + 7, 16), nullptr, 16);
}

RuleSet RuleSet::parse(std::string_view text) {
    RuleSet out;
    std::istringstream in{std::string(text)};
    std::string line, body;
    std::size_t lineno = 0;
    auto gates_of = [&](std::string side) {
        std::vector<Gate> gates;
        std::size_t start = 0;
        while (start < side.size()) {
            std::size_t semi = side.find(';', start);
            std::string tok = side.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
            if (tok.find_first_not_of(" \t") != std::string::npos) {
                gates.push_back(parse_gate(tok, lineno));
            }
            if (semi == std::string::npos) {
                break;
            }
            start = semi + 1;
        }
        return gates;
    };
    while (std::getline(in, line)) {
        lineno++;
        if (line.rfind("# hash ", 0) == 0) {
            if (line.substr(7) != hex64(fnv1a64(body))) {
                throw ParseError(lineno, "rule file hash mismatch");
            }
            continue;
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        body += line + "\n";
        std::size_t colon = line.find(':');
        std::size_t arrow = line.find("=>");
        if (colon == std::string::npos || arrow == std::string::npos || arrow < colon) {
            throw ParseError(lineno, "expected '<n>: <lhs> => <rhs>'");
        }
        std::size_t n = 0;
        try {
            n = std::stoul(line.substr(0, colon));
        } catch (const std::exception &) {
            throw ParseError(lineno, "bad register size");
        }
        RewriteRule r{Circuit(n, gates_of(line.substr(colon + 1, arrow - colon - 1))),
                      Circuit(n, gates_of(line.substr(arrow + 2)))};
        try {
            r.lhs.validate();
            r.rhs.validate();
            out.add(std::move(r));
        } catch (const std::exception &e) {
            throw ParseError(lineno, e.what());
        }
    }
    return out;
}

bool verify_rule(const RewriteRule &rule, const GateLibrary &lib) {
    return rule.lhs.num_qubits == rule.rhs.num_qubits &&
           circuit_unitary(rule.lhs, {}, lib) == circuit_unitary(rule.rhs, {}, lib);
}

RuleSet generate_rules(const GateLibrary &lib, const RuleGenOptions &opts) {
    RuleSet out;
    std::map<std::string, std::unique_ptr<detail::WordSearch>> searches;
    for (const CaseSpec &spec : case_specs()) {
        std::string gens_key = std::to_string(spec.n) + ":" + join_gates(spec.suffix_gens);
        auto &search = searches[gens_key];
        if (!search) {
            search = std::make_unique<detail::WordSearch>(spec.n, spec.suffix_gens, opts.max_rhs_gates);
        }
        struct Candidate {
            std::vector<Gate> window;
            CliffordTableau inverse;
        };
        std::vector<Candidate> candidates;
        for (const auto &shape : spec.replacements) {
            for (auto &w : instantiate(shape)) {
                candidates.push_back({w, lib.tableau(Circuit(spec.n, w)).inverse()});
            }
        }
        for (const Gate &dirty : spec.dirty) {
            for (const auto &window : instantiate(spec.window)) {
                Circuit lhs(spec.n, {dirty});
                lhs.gates.insert(lhs.gates.end(), window.begin(), window.end());
                CliffordTableau t_lhs = lib.tableau(lhs);
                const Candidate *best = nullptr;
                std::optional<Circuit> best_suffix;
                for (const auto &cand : candidates) {
                    auto suffix = search->find(detail::PackedTableau::from(t_lhs * cand.inverse));
                    if (suffix && (!best_suffix || suffix->gates.size() < best_suffix->gates.size())) {
                        best = &cand;
                        best_suffix = std::move(suffix);
                    }
                }
                if (best == nullptr) {
                    throw SearchExhaustedError("no right-hand side within " + std::to_string(opts.max_rhs_gates) +
                                               " dirty gates for " + pattern_key(lhs));
                }
                Circuit rhs(spec.n, best->window);
                rhs.append(*best_suffix);
                auto p = global_phase_ratio(circuit_unitary(lhs, {}, lib), circuit_unitary(rhs, {}, lib));
                if (!p) {
                    throw InvariantError("rule sides differ by more than a phase: " + pattern_key(lhs));
                }
                for (int i = 0; i < *p; i++) {
                    rhs += Gate::omega();
                }
                out.add({std::move(lhs), std::move(rhs)});
            }
        }
    }
    out.add({Circuit(0, std::vector<Gate>(8, Gate::omega())), Circuit(0)});
    return out;
}

const RuleSet &standard_rules() {
    static const RuleSet rules = generate_rules();
    return rules;
}

// ---------------------------------------------------------------------------

DirtyNormalForm DirtyNormalForm::from_circuit(const Circuit &c) {
    c.validate();
    Circuit flat = c.has_library_gates() ? GateLibrary::standard().expand(c) : c;
    DirtyNormalForm d;
    d.num_qubits = c.num_qubits;
    for (const Gate &g : flat.gates) {
        switch (g.kind) {
            case GateKind::Omega:
                d.omega_count = (d.omega_count + 1) % 8;
                break;
            case GateKind::X:
                for (Gate r : {Gate::h(g.q0), Gate::s(g.q0), Gate::s(g.q0), Gate::h(g.q0)}) {
                    d.gates.push_back(r);
                }
                break;
            default:
                d.gates.push_back(g);
        }
    }
    NormalForm id = identity_normal_form(c.num_qubits);
    id.phase_known = false;
    for (const Gate &g : nf_to_circuit(id).gates) {
        d.gates.push_back(g);
    }
    return d;
}

std::size_t DirtyNormalForm::dirty_count() const {
    return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), is_dirty));
}

Circuit DirtyNormalForm::circuit() const {
    Circuit c(num_qubits, gates);
    for (int i = 0; i < omega_count; i++) {
        c += Gate::omega();
    }
    return c;
}

void DirtyNormalForm::validate() const {
    // Wire labels 1..4 as in the definition of dirty normal forms; 0 = closed.
    std::vector<int> label(num_qubits, 1);
    Circuit clean(num_qubits);
    for (const Gate &g : gates) {
        if (g.arity() >= 1 && g.max_wire() >= num_qubits) {
            throw InvariantError("gate " + g.str() + " out of range");
        }
        bool ok = true;
        switch (g.kind) {
            case GateKind::H:
                ok = label[g.q0] == 1;
                break;
            case GateKind::S:
                ok = label[g.q0] >= 1;
                break;
            case GateKind::X:
                ok = label[g.q0] == 2;
                break;
            case GateKind::CZ:
                ok = g.max_wire() == g.min_wire() + 1 && label[g.min_wire()] >= 1 && label[g.min_wire()] <= 3 &&
                     label[g.max_wire()] == 1;
                break;
            case GateKind::A:
                label[g.q0] = 2;
                break;
            case GateKind::B:
                label[g.q0] = 2;
                label[g.q1] = 1;
                break;
            case GateKind::C:
                label[g.q0] = 3;
                break;
            case GateKind::D:
                label[g.q0] = 1;
                label[g.q1] = 4;
                break;
            case GateKind::E:
                label[g.q0] = 0;
                break;
            case GateKind::Omega:
                ok = false;
                break;
        }
        if (!ok) {
            throw InvariantError("dirty gate " + g.str() + " placed on a wire whose label forbids it");
        }
        if (g.is_library()) {
            clean += g;
        }
    }
    parse_clean_circuit(clean, omega_count);
}

std::vector<std::uint32_t> termination_measure(const DirtyNormalForm &d) {
    return measure_of(d.gates, d.num_qubits);
}

bool measure_less(const std::vector<std::uint32_t> &a, const std::vector<std::uint32_t> &b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

NormalForm parse_clean_circuit(const Circuit &c, int p) {
    NormalForm nf;
    nf.num_qubits = c.num_qubits;
    nf.p = ((p % 8) + 8) % 8;
    std::size_t idx = 0;
    auto expect = [&](GateKind kind, std::size_t wire) -> int {
        if (idx >= c.gates.size()) {
            throw InvariantError("clean circuit ends early; expected " + std::string(kind_name(kind)));
        }
        const Gate &g = c.gates[idx++];
        if (g.kind != kind || g.q0 != wire) {
            throw InvariantError("clean circuit has " + g.str() + " where " + kind_name(kind) + " on wire " +
                                 std::to_string(wire) + " belongs");
        }
        return g.index;
    };
    for (std::size_t k = c.num_qubits; k >= 1; k--) {
        if (idx >= c.gates.size() || c.gates[idx].kind != GateKind::A || c.gates[idx].q0 >= k) {
            throw InvariantError("clean circuit: expected an A gate on one of the first " + std::to_string(k) +
                                 " wires");
        }
        ZLayer z;
        z.width = k;
        z.m = static_cast<int>(c.gates[idx].q0) + 1;
        z.i = expect(GateKind::A, static_cast<std::size_t>(z.m - 1));
        for (int s = 1; s < z.m; s++) {
            z.j.push_back(expect(GateKind::B, static_cast<std::size_t>(z.m - 1 - s)));
        }
        z.c = expect(GateKind::C, 0);
        XLayer x;
        x.width = k;
        for (std::size_t s = 1; s < k; s++) {
            x.l.push_back(expect(GateKind::D, s - 1));
        }
        x.h = expect(GateKind::E, k - 1);
        nf.levels.push_back({std::move(z), std::move(x)});
    }
    if (idx != c.gates.size()) {
        throw InvariantError("clean circuit has trailing gates");
    }
    return nf;
}

NormalForm rewrite_normalize(const Circuit &c, const RuleSet &rules, const RewriteOptions &opts,
                             RewriteStats *stats) {
    DirtyNormalForm d = DirtyNormalForm::from_circuit(c);
    std::mt19937_64 rng(opts.seed);
    std::vector<std::uint32_t> v = opts.check_measure ? termination_measure(d) : std::vector<std::uint32_t>{};
    RewriteStats local;
    std::vector<std::size_t> dirty;
    while (true) {
        dirty.clear();
        for (std::size_t i = 0; i < d.gates.size(); i++) {
            if (is_dirty(d.gates[i])) {
                dirty.push_back(i);
            }
        }
        local.max_dirty = std::max(local.max_dirty, dirty.size());
        local.max_length = std::max(local.max_length, d.gates.size());
        if (dirty.empty()) {
            break;
        }
        if (local.steps >= opts.max_steps) {
            throw InvariantError("rewriting exceeded " + std::to_string(opts.max_steps) + " steps");
        }
        bool applied = false;
        if (opts.strategy == RewriteStrategy::Rightmost) {
            applied = try_apply(d, dirty.back(), rules);
        } else {
            std::shuffle(dirty.begin(), dirty.end(), rng);
            // A failed attempt may commute gates around, so indices can go stale;
            // any dirty gate is still a fair candidate, and the rightmost one always works.
            for (std::size_t i : dirty) {
                if (is_dirty(d.gates[i]) && try_apply(d, i, rules)) {
                    applied = true;
                    break;
                }
            }
            if (!applied) {
                for (std::size_t i = d.gates.size(); i-- > 0;) {
                    if (is_dirty(d.gates[i])) {
                        applied = try_apply(d, i, rules);
                        break;
                    }
                }
            }
        }
        if (!applied) {
            throw InvariantError("no rewrite rule applies; dirty normal form:\n" + print_circuit(d.circuit()));
        }
        local.steps++;
        if (opts.validate_steps) {
            d.validate();
        }
        if (opts.check_measure) {
            auto next = termination_measure(d);
            if (!measure_less(next, v)) {
                throw InvariantError("termination measure did not decrease at step " + std::to_string(local.steps));
            }
            v = std::move(next);
        }
    }
    if (stats != nullptr) {
        *stats = local;
    }
    return parse_clean_circuit(Circuit(d.num_qubits, d.gates), d.omega_count);
}

}  // namespace cliffnf
