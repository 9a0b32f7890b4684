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

#include "cliffnf/normal_form.h"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "cliffnf/errors.h"

namespace cliffnf {

namespace {

/// Index of a Pauli letter in the order (I, X, Y, Z), 1-based.
int pauli_index(char letter) {
    switch (letter) {
        case 'I':
            return 1;
        case 'X':
            return 2;
        case 'Y':
            return 3;
        default:
            return 4;
    }
}

std::string int_list(const std::vector<int> &v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); i++) {
        if (i) {
            out += ',';
        }
        out += std::to_string(v[i]);
    }
    return out + "]";
}

void check_range(int v, int lo, int hi, const char *what) {
    if (v < lo || v > hi) {
        throw std::invalid_argument(std::string("normal form ") + what + "=" + std::to_string(v) + " out of range");
    }
}

}  // namespace

void NormalForm::validate() const {
    if (levels.size() != num_qubits) {
        throw std::invalid_argument("normal form must have one level per qubit");
    }
    check_range(p, 0, 7, "p");
    for (std::size_t li = 0; li < levels.size(); li++) {
        const auto &[z, x] = levels[li];
        std::size_t k = num_qubits - li;
        if (z.width != k || x.width != k) {
            throw std::invalid_argument("normal form level widths must run n, n-1, ..., 1");
        }
        check_range(z.m, 1, static_cast<int>(k), "m");
        check_range(z.i, 1, 3, "i");
        check_range(z.c, 1, 2, "c");
        check_range(x.h, 1, 4, "h");
        if (z.j.size() != static_cast<std::size_t>(z.m - 1) || x.l.size() != k - 1) {
            throw std::invalid_argument("normal form index list has the wrong length");
        }
        for (int v : z.j) {
            check_range(v, 1, 4, "j");
        }
        for (int v : x.l) {
            check_range(v, 1, 4, "l");
        }
    }
}

std::string NormalForm::str() const {
    std::string out;
    for (const auto &[z, x] : levels) {
        out += "L " + std::to_string(z.width) + " : m=" + std::to_string(z.m) + " i=" + std::to_string(z.i) +
               " j=" + int_list(z.j) + " c=" + std::to_string(z.c) + "\n";
        out += "X " + std::to_string(x.width) + " : l=" + int_list(x.l) + " h=" + std::to_string(x.h) + "\n";
    }
    out += phase_known ? "p=" + std::to_string(p) + "\n" : "p=?\n";
    return out;
}

NormalForm parse_normal_form(std::string_view text) {
    NormalForm nf;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool have_p = false;
    std::optional<ZLayer> pending;

    auto field = [&](std::istringstream &ls, const std::string &key) {
        std::string tok;
        if (!(ls >> tok) || tok.rfind(key + "=", 0) != 0) {
            throw ParseError(lineno, "expected '" + key + "='");
        }
        return tok.substr(key.size() + 1);
    };
    auto number = [&](const std::string &s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw ParseError(lineno, "bad integer '" + s + "'");
        }
        return v;
    };
    auto list = [&](const std::string &s) {
        if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
            throw ParseError(lineno, "bad list '" + s + "'");
        }
        std::vector<int> out;
        std::string body = s.substr(1, s.size() - 2);
        std::size_t pos = 0;
        while (!body.empty() && pos <= body.size()) {
            std::size_t comma = body.find(',', pos);
            out.push_back(number(body.substr(pos, comma - pos)));
            if (comma == std::string::npos) {
                break;
            }
            pos = comma + 1;
        }
        return out;
    };

    while (std::getline(in, line)) {
        lineno++;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (have_p) {
            throw ParseError(lineno, "content after the phase line");
        }
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag.rfind("p=", 0) == 0) {
            if (pending) {
                throw ParseError(lineno, "Z layer without X layer");
            }
            if (tag == "p=?") {
                nf.phase_known = false;
                nf.p = 0;
            } else {
                nf.p = number(tag.substr(2));
            }
            have_p = true;
            continue;
        }
        std::size_t width = 0;
        std::string colon;
        if (!(ls >> width >> colon) || colon != ":") {
            throw ParseError(lineno, "expected '<L|X> <width> :'");
        }
        if (tag == "L") {
            if (pending) {
                throw ParseError(lineno, "two Z layers in a row");
            }
            ZLayer z;
            z.width = width;
            z.m = number(field(ls, "m"));
            z.i = number(field(ls, "i"));
            z.j = list(field(ls, "j"));
            z.c = number(field(ls, "c"));
            pending = z;
        } else if (tag == "X") {
            if (!pending || pending->width != width) {
                throw ParseError(lineno, "X layer without matching Z layer");
            }
            XLayer x;
            x.width = width;
            x.l = list(field(ls, "l"));
            x.h = number(field(ls, "h"));
            nf.levels.push_back({*pending, x});
            pending.reset();
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (!have_p) {
        throw ParseError(0, "missing phase line 'p=..'");
    }
    nf.num_qubits = nf.levels.empty() ? 0 : nf.levels.front().z.width;
    try {
        nf.validate();
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, e.what());
    }
    return nf;
}

Circuit z_layer_circuit(const ZLayer &z) {
    Circuit c(z.width);
    auto m = static_cast<std::uint32_t>(z.m);
    c += Gate::library(GateKind::A, z.i, m - 1);
    for (std::uint32_t p = 1; p < m; p++) {
        c += Gate::library(GateKind::B, z.j[p - 1], m - 1 - p);
    }
    c += Gate::library(GateKind::C, z.c, 0);
    return c;
}

Circuit x_layer_circuit(const XLayer &x) {
    Circuit c(x.width);
    for (std::uint32_t p = 1; p < x.width; p++) {
        c += Gate::library(GateKind::D, x.l[p - 1], p - 1);
    }
    c += Gate::library(GateKind::E, x.h, static_cast<std::uint32_t>(x.width - 1));
    return c;
}

Circuit nf_to_circuit(const NormalForm &nf, bool expand, const GateLibrary &lib) {
    nf.validate();
    Circuit c(nf.num_qubits);
    for (const auto &[z, x] : nf.levels) {
        for (Circuit part : {z_layer_circuit(z), x_layer_circuit(x)}) {
            part.num_qubits = nf.num_qubits;
            c.append(part);
        }
    }
    if (nf.phase_known) {
        for (int i = 0; i < nf.p; i++) {
            c += Gate::omega();
        }
    }
    return expand ? lib.expand(c) : c;
}

ZLayer synthesize_z_layer(const PauliOperator &p, const GateLibrary &lib) {
    std::size_t k = p.num_qubits();
    if (!p.is_hermitian() || p.is_scalar()) {
        throw std::invalid_argument("Z-layer synthesis needs a Hermitian non-scalar Pauli, got " + p.compact());
    }
    ZLayer z;
    z.width = k;
    std::size_t top = k;
    while (p.letter(top - 1) == 'I') {
        top--;
    }
    z.m = static_cast<int>(top);
    char lead = p.letter(top - 1);
    z.i = lead == 'Z' ? 1 : lead == 'X' ? 2 : 3;

    PauliOperator cur = p;
    lib.conjugate(cur, Gate::library(GateKind::A, z.i, static_cast<std::uint32_t>(top - 1)));
    for (std::size_t s = 1; s < top; s++) {
        auto w = static_cast<std::uint32_t>(top - 1 - s);
        int j = pauli_index(cur.letter(w));
        z.j.push_back(j);
        lib.conjugate(cur, Gate::library(GateKind::B, j, w));
    }
    z.c = cur.phase_exp() == 0 ? 1 : 2;
    lib.conjugate(cur, Gate::library(GateKind::C, z.c, 0));
    if (cur != basis_pauli(k, PauliAxis::Z, 0)) {
        throw InvariantError("Z-layer for " + p.compact() + " ends at " + cur.compact());
    }
    return z;
}

XLayer synthesize_x_layer(const PauliOperator &q, const GateLibrary &lib) {
    std::size_t k = q.num_qubits();
    if (k == 0 || !q.is_hermitian()) {
        throw std::invalid_argument("X-layer synthesis needs a Hermitian Pauli on at least one wire, got " +
                                    q.compact());
    }
    if (q.commutes_with(basis_pauli(k, PauliAxis::Z, 0))) {
        throw std::invalid_argument("X-layer synthesis needs a Pauli anticommuting with Z on wire 0, but " +
                                    q.compact() + " commutes with it");
    }
    XLayer x;
    x.width = k;
    PauliOperator cur = q;
    for (std::size_t s = 1; s < k; s++) {
        int l = pauli_index(cur.letter(s));
        x.l.push_back(l);
        lib.conjugate(cur, Gate::library(GateKind::D, l, static_cast<std::uint32_t>(s - 1)));
    }
    bool minus = cur.phase_exp() == 2;
    x.h = cur.letter(k - 1) == 'X' ? (minus ? 2 : 1) : (minus ? 4 : 3);
    lib.conjugate(cur, Gate::library(GateKind::E, x.h, static_cast<std::uint32_t>(k - 1)));
    if (cur != basis_pauli(k, PauliAxis::X, k - 1)) {
        throw InvariantError("X-layer for " + q.compact() + " ends at " + cur.compact());
    }
    return x;
}

NormalForm synthesize(const CliffordTableau &t, const Circuit *phase_source, const OracleOptions &opts,
                      const GateLibrary &lib) {
    if (!t.is_valid()) {
        throw std::invalid_argument("tableau is not a valid Clifford automorphism");
    }
    std::size_t n = t.num_qubits();
    if (phase_source != nullptr && n > opts.max_qubits) {
        throw OracleLimitError("exact phase requested for " + std::to_string(n) + " qubits; oracle limit is " +
                               std::to_string(opts.max_qubits));
    }
    NormalForm nf;
    nf.num_qubits = n;
    CliffordTableau phi = t;
    for (std::size_t k = n; k >= 1; k--) {
        CliffordTableau inv = phi.inverse();
        PauliOperator p = inv.z_image(k - 1);
        PauliOperator q = inv.x_image(k - 1);
        ZLayer z = synthesize_z_layer(p, lib);
        Circuit layer = z_layer_circuit(z);
        for (const Gate &g : layer.gates) {
            lib.conjugate(q, g);
        }
        XLayer x = synthesize_x_layer(q, lib);
        layer.append(x_layer_circuit(x));
        CliffordTableau residual = phi * lib.tableau(layer).inverse();
        if (!residual.is_tensor_identity_tail(k - 1)) {
            throw InvariantError("residual automorphism does not fix the last wire");
        }
        phi = residual.prefix(k - 1);
        nf.levels.push_back({std::move(z), std::move(x)});
    }
    if (phase_source == nullptr) {
        nf.phase_known = false;
        return nf;
    }
    OracleOptions o = opts;
    o.allow_nonadjacent = true;
    ExactMatrix source = circuit_unitary(*phase_source, o, lib);
    ExactMatrix body = circuit_unitary(nf_to_circuit(nf, false, lib), o, lib);
    std::optional<int> ratio = global_phase_ratio(source, body);
    if (!ratio) {
        throw InvariantError("normal form is not proportional to its source circuit");
    }
    nf.p = *ratio;
    return nf;
}

NormalForm synthesize_circuit(const Circuit &c, bool exact_phase, const OracleOptions &opts,
                              const GateLibrary &lib) {
    CliffordTableau t = lib.tableau(c);
    return synthesize(t, exact_phase ? &c : nullptr, opts, lib);
}

NormalForm identity_normal_form(std::size_t num_qubits) {
    NormalForm nf;
    nf.num_qubits = num_qubits;
    for (std::size_t k = num_qubits; k >= 1; k--) {
        ZLayer z{k, static_cast<int>(k), 1, std::vector<int>(k - 1, 1), 1};
        XLayer x{k, std::vector<int>(k - 1, 1), 1};
        nf.levels.push_back({z, x});
    }
    return nf;
}

Integer clifford_order(std::size_t num_qubits) {
    Integer order = 8;
    Integer four_i = 1;
    for (std::size_t i = 1; i <= num_qubits; i++) {
        four_i *= 4;
        order *= 2 * (four_i - 1) * four_i;
    }
    return order;
}

std::uint64_t NormalFormEnumerator::level_count(std::size_t width) {
    std::uint64_t four_k = std::uint64_t{1} << (2 * width);
    return 2 * (four_k - 1) * four_k;
}

namespace {

/// All tuples in {1..4}^len, lexicographic.
std::vector<std::vector<int>> index_tuples(std::size_t len) {
    std::vector<std::vector<int>> out{{}};
    for (std::size_t d = 0; d < len; d++) {
        std::vector<std::vector<int>> next;
        for (const auto &prefix : out) {
            for (int v = 1; v <= 4; v++) {
                next.push_back(prefix);
                next.back().push_back(v);
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<NormalFormLevel> level_options(std::size_t k) {
    std::vector<NormalFormLevel> out;
    out.reserve(NormalFormEnumerator::level_count(k));
    auto ls = index_tuples(k - 1);
    for (int m = 1; m <= static_cast<int>(k); m++) {
        auto js = index_tuples(static_cast<std::size_t>(m - 1));
        for (int i = 1; i <= 3; i++) {
            for (const auto &j : js) {
                for (int c = 1; c <= 2; c++) {
                    for (const auto &l : ls) {
                        for (int h = 1; h <= 4; h++) {
                            out.push_back({ZLayer{k, m, i, j, c}, XLayer{k, l, h}});
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace

NormalFormEnumerator::NormalFormEnumerator(std::size_t num_qubits) : n_(num_qubits) {
    if (num_qubits > 6) {
        throw std::invalid_argument("enumeration is limited to at most 6 qubits");
    }
    for (std::size_t k = num_qubits; k >= 1; k--) {
        options_.push_back(level_options(k));
    }
    cursor_.assign(options_.size(), 0);
}

std::optional<NormalForm> NormalFormEnumerator::next() {
    if (done_) {
        return std::nullopt;
    }
    NormalForm nf;
    nf.num_qubits = n_;
    for (std::size_t li = 0; li < options_.size(); li++) {
        nf.levels.push_back(options_[li][cursor_[li]]);
    }
    nf.p = p_;
    // Advance the odometer: p fastest, then innermost level outward.
    if (++p_ == 8) {
        p_ = 0;
        std::size_t li = options_.size();
        while (true) {
            if (li == 0) {
                done_ = true;
                break;
            }
            li--;
            if (++cursor_[li] < options_[li].size()) {
                break;
            }
            cursor_[li] = 0;
        }
    }
    return nf;
}

std::uint64_t enumerate_normal_forms(std::size_t num_qubits, const std::function<bool(const NormalForm &)> &visit) {
    NormalFormEnumerator e(num_qubits);
    std::uint64_t count = 0;
    while (auto nf = e.next()) {
        count++;
        if (!visit(*nf)) {
            break;
        }
    }
    return count;
}

}  // namespace cliffnf
