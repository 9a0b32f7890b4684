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


#include "cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cliffnf/circuit_io.h"
#include "cliffnf/errors.h"
#include "cliffnf/exact_matrix.h"
#include "cliffnf/gate_library.h"
#include "cliffnf/normal_form.h"
#include "cliffnf/oracle.h"
#include "cliffnf/relations.h"
#include "cliffnf/rewrite.h"
#include "cliffnf/tableau.h"

namespace cliffnf::cli {
namespace {

/// Raised for problems with the user's input rather than the library.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) {
        throw UsageError("cannot write " + path);
    }
}

struct Globals {
    bool expand_nonadjacent = false;
};

Circuit load_circuit(const std::string &path, const Globals &g) {
    CircuitParseOptions opts;
    opts.expand_nonadjacent = g.expand_nonadjacent;
    try {
        return parse_circuit(read_file(path), opts);
    } catch (const ParseError &e) {
        throw UsageError(path + ": " + e.what());
    }
}

NormalForm normalize(const Circuit &c, const std::string &engine, bool up_to_phase) {
    if (engine == "rewrite") {
        NormalForm nf = rewrite_normalize(c);
        if (up_to_phase) {
            nf.p = 0;
            nf.phase_known = false;
        }
        return nf;
    }
    return synthesize_circuit(c, !up_to_phase);
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Canonical forms for Clifford circuits over {H, S, CZ, omega}", "cliffnf"};
    app.require_subcommand(1);
    Globals globals;
    app.add_flag("--expand-nonadjacent", globals.expand_nonadjacent,
                 "Rewrite CZ on non-neighbouring wires into adjacent gates");

    // normalize
    auto *normalize_cmd = app.add_subcommand("normalize", "Print the normal form of a circuit");
    std::string nf_file, engine = "semantic", emit = "layers";
    bool nf_expand = false, nf_up_to_phase = false;
    normalize_cmd->add_option("file", nf_file, "Circuit file")->required();
    normalize_cmd->add_option("--engine", engine, "semantic (tableau synthesis) or rewrite (rule driven)")
        ->check(CLI::IsMember({"semantic", "rewrite"}));
    normalize_cmd->add_option("--emit", emit, "layers (normal form text) or gates (circuit)")
        ->check(CLI::IsMember({"layers", "gates"}));
    normalize_cmd->add_flag("--expand", nf_expand, "With --emit=gates, spell library gates as H/S/CZ");
    normalize_cmd->add_flag("--up-to-phase", nf_up_to_phase, "Skip the exact phase (works beyond the oracle limit)");

    // equiv
    auto *equiv_cmd = app.add_subcommand("equiv", "Decide whether two circuits are the same operator");
    std::string eq_a, eq_b;
    bool eq_up_to_phase = false;
    equiv_cmd->add_option("a", eq_a, "First circuit file")->required();
    equiv_cmd->add_option("b", eq_b, "Second circuit file")->required();
    equiv_cmd->add_flag("--up-to-phase", eq_up_to_phase, "Ignore a global phase omega^k");

    // count
    auto *count_cmd = app.add_subcommand("count", "Order of the n-qubit Clifford group");
    std::size_t count_n = 0;
    count_cmd->add_option("n", count_n, "Number of qubits")->required()->check(CLI::NonNegativeNumber);

    // enumerate
    auto *enum_cmd = app.add_subcommand("enumerate", "Stream every normal form on n qubits");
    std::size_t enum_n = 0;
    std::uint64_t enum_limit = 0;
    enum_cmd->add_option("n", enum_n, "Number of qubits (1..6)")->required()->check(CLI::Range(1, 6));
    enum_cmd->add_option("--limit", enum_limit, "Stop after this many (0 = all)");

    // check-relations
    auto *rel_cmd = app.add_subcommand("check-relations", "Verify the defining relations exactly");

    // gen-rules
    auto *rules_cmd = app.add_subcommand("gen-rules", "Generate the rewrite rule set");
    std::string rules_out;
    RuleGenOptions rule_opts;
    rules_cmd->add_option("--out", rules_out, "Output file (default stdout)");
    rules_cmd->add_option("--max-rhs", rule_opts.max_rhs_gates, "Longest right-hand side searched")
        ->check(CLI::Range(1, 24));

    // derive-gates
    auto *gates_cmd = app.add_subcommand("derive-gates", "Derive the library gate realizations");
    std::string gates_out;
    int depth = 12;
    gates_cmd->add_option("--out", gates_out, "Output file (default stdout)");
    gates_cmd->add_option("--depth", depth, "Search depth")->check(CLI::Range(1, 24));

    // matrix
    auto *matrix_cmd = app.add_subcommand("matrix", "Dump the exact unitary of a circuit");
    std::string matrix_file;
    bool decimal = false;
    matrix_cmd->add_option("file", matrix_file, "Circuit file")->required();
    matrix_cmd->add_flag("--decimal", decimal, "Print complex decimals instead of exact entries");

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*normalize_cmd) {
            Circuit c = load_circuit(nf_file, globals);
            NormalForm nf = normalize(c, engine, nf_up_to_phase);
            if (emit == "layers") {
                out << nf.str();
            } else {
                out << print_circuit(nf_to_circuit(nf, nf_expand));
            }
            return kOk;
        }
        if (*equiv_cmd) {
            Circuit a = load_circuit(eq_a, globals);
            Circuit b = load_circuit(eq_b, globals);
            if (a.num_qubits != b.num_qubits) {
                throw UsageError("circuits act on " + std::to_string(a.num_qubits) + " and " +
                                 std::to_string(b.num_qubits) + " qubits");
            }
            if (!(circuit_tableau(a) == circuit_tableau(b))) {
                out << "different\n";
                return kDifferent;
            }
            std::optional<int> p;
            if (a.num_qubits <= kDefaultOracleLimit) {
                p = global_phase_ratio(circuit_unitary(a), circuit_unitary(b));
                if (!p) {
                    throw InvariantError("equal tableaux but unitaries differ by more than a phase");
                }
            } else if (!eq_up_to_phase) {
                throw OracleLimitError("phase-exact comparison above " + std::to_string(kDefaultOracleLimit) +
                                       " qubits; use --up-to-phase");
            }
            if (!eq_up_to_phase && *p != 0) {
                out << "different (equal up to p=" << *p << ")\n";
                return kDifferent;
            }
            out << "equal (p=" << (p ? std::to_string(*p) : std::string("?")) << ")\n";
            return kOk;
        }
        if (*count_cmd) {
            out << clifford_order(count_n).str() << "\n";
            return kOk;
        }
        if (*enum_cmd) {
            bool first = true;
            enumerate_normal_forms(enum_n, [&](const NormalForm &nf) {
                if (!first) {
                    out << "\n";
                }
                first = false;
                out << nf.str();
                return enum_limit == 0 || --enum_limit > 0;
            });
            return kOk;
        }
        if (*rel_cmd) {
            auto checks = verify_relations(builtin_relations());
            out << format_relation_report(checks);
            for (const auto &c : checks) {
                if (!c.passed) {
                    return kDifferent;
                }
            }
            return kOk;
        }
        if (*rules_cmd) {
            write_output(rules_out, generate_rules(GateLibrary::standard(), rule_opts).serialize(), out);
            return kOk;
        }
        if (*gates_cmd) {
            write_output(gates_out, derive_realizations(depth).serialize(), out);
            return kOk;
        }
        if (*matrix_cmd) {
            ExactMatrix u = circuit_unitary(load_circuit(matrix_file, globals));
            out << (decimal ? u.decimal_str() : u.str());
            return kOk;
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const OracleLimitError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SearchExhaustedError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvariantError &e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}

}  // namespace cliffnf::cli
