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

#ifndef CLIFFNF_REWRITE_H
#define CLIFFNF_REWRITE_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cliffnf/circuit.h"
#include "cliffnf/gate_library.h"
#include "cliffnf/normal_form.h"

namespace cliffnf {

/// lhs: one dirty gate followed by one or two clean gates, on a local register
/// starting at wire 0. rhs: replacement clean gates, then dirty gates, then
/// omega gates. Both sides denote the same unitary.
struct RewriteRule {
    Circuit lhs;
    Circuit rhs;

    /// Lookup key of the left-hand side.
    std::string key() const;
};

/// Lookup key for a local pattern: gate strings joined by "; ", plus the register size.
std::string pattern_key(const Circuit &local);

class RuleSet {
   public:
    void add(RewriteRule rule);
    const RewriteRule *find(const std::string &key) const;
    const std::vector<RewriteRule> &rules() const {
        return rules_;
    }
    std::size_t size() const {
        return rules_.size();
    }

    /// "n: lhs => rhs" lines in the circuit-file gate syntax, "; " separated,
    /// followed by a "# hash " line over the preceding text.
    std::string serialize() const;
    static RuleSet parse(std::string_view text);
    std::uint64_t content_hash() const;

    bool operator==(const RuleSet &o) const;

   private:
    std::vector<RewriteRule> rules_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct RuleGenOptions {
    /// Longest dirty suffix considered on a right-hand side.
    std::size_t max_rhs_gates = 12;
};

/// Builds one rule for every way a dirty gate can sit immediately before a
/// clean gate in a dirty normal form. Throws SearchExhaustedError when some
/// pattern has no admissible right-hand side.
RuleSet generate_rules(const GateLibrary &lib = GateLibrary::standard(), const RuleGenOptions &opts = {});

/// The rule set used by default, generated once per process.
const RuleSet &standard_rules();

/// Exact-oracle check that both sides of a rule are equal.
bool verify_rule(const RewriteRule &rule, const GateLibrary &lib = GateLibrary::standard());

/// A normal form's clean gates, in order, interleaved with dirty gates
/// (H, S, X, CZ); omega gates are tracked as a count.
struct DirtyNormalForm {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;
    int omega_count = 0;

    /// Circuit `c` (generators only) followed by the identity normal form.
    /// X gates are written as H S S H, omegas are counted.
    static DirtyNormalForm from_circuit(const Circuit &c);

    /// Throws InvariantError unless the clean gates form a normal form and
    /// every dirty gate sits on wires whose labels permit it.
    void validate() const;
    std::size_t dirty_count() const;
    Circuit circuit() const;
};

/// v_i = number of dirty gates before (causally) the i-th clean gate.
std::vector<std::uint32_t> termination_measure(const DirtyNormalForm &d);

/// Lexicographic comparison of measures, a proper prefix being smaller.
bool measure_less(const std::vector<std::uint32_t> &a, const std::vector<std::uint32_t> &b);

/// Reads the clean gates of a circuit as a normal form with phase p.
NormalForm parse_clean_circuit(const Circuit &c, int p);

enum class RewriteStrategy { Rightmost, Random };

struct RewriteOptions {
    RewriteStrategy strategy = RewriteStrategy::Rightmost;
    std::uint64_t seed = 0;
    /// Assert strict decrease of the termination measure on every step.
    bool check_measure = true;
    /// Validate the dirty normal form after every step (slow).
    bool validate_steps = false;
    std::size_t max_steps = 10'000'000;
};

struct RewriteStats {
    std::size_t steps = 0;
    std::size_t max_dirty = 0;
    std::size_t max_length = 0;
};

/// Normalizes a circuit over {H, S, X, CZ, omega} using only the rules.
NormalForm rewrite_normalize(const Circuit &c, const RuleSet &rules = standard_rules(),
                             const RewriteOptions &opts = {}, RewriteStats *stats = nullptr);

}  // namespace cliffnf

#endif
