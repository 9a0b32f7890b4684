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

#include <gtest/gtest.h>

#include <random>

#include "cliffnf/errors.h"
#include "cliffnf/normal_form.h"
#include "test_support.h"

namespace cliffnf {
namespace {

TEST(RewriteTest, PatternKeys) {
    EXPECT_EQ(pattern_key(Circuit(2, {Gate::h(1), Gate::library(GateKind::B, 2, 0)})), "2: H 1; B2 0 1");
    RewriteRule r{Circuit(1, {Gate::s(0), Gate::library(GateKind::E, 4, 0)}), Circuit(1)};
    EXPECT_EQ(r.key(), "1: S 0; E4 0");
}

TEST(RewriteTest, RuleSetBookkeeping) {
    RuleSet rs;
    RewriteRule r{Circuit(1, {Gate::s(0), Gate::library(GateKind::E, 4, 0)}),
                  Circuit(1, {Gate::library(GateKind::E, 2, 0)})};
    rs.add(r);
    EXPECT_THROW(rs.add(r), std::invalid_argument);
    ASSERT_NE(rs.find("1: S 0; E4 0"), nullptr);
    EXPECT_EQ(rs.find("1: H 0; E4 0"), nullptr);
    EXPECT_EQ(rs.serialize().substr(0, 23), "1: S 0; E4 0 => E2 0\n# ");
    EXPECT_EQ(RuleSet::parse(rs.serialize()), rs);
}

TEST(RewriteTest, StandardRulesShapeAndSoundness) {
    const RuleSet &rs = standard_rules();
    EXPECT_EQ(rs.size(), 100u);
    for (const auto &r : rs.rules()) {
        ASSERT_TRUE(verify_rule(r)) << r.key();
        if (r.lhs.num_qubits > 0) {
            ASSERT_LE(r.lhs.gates.size(), 3u);
        }
    }
    std::string text = rs.serialize();
    EXPECT_EQ(RuleSet::parse(text), rs);
    EXPECT_EQ(RuleSet::parse(text).content_hash(), rs.content_hash());
    std::string tampered = text;
    tampered[tampered.find("=>") + 3] = tampered[tampered.find("=>") + 3] == 'H' ? 'S' : 'H';
    EXPECT_THROW(RuleSet::parse(tampered), ParseError);
}

TEST(RewriteTest, SmallBoundIsExhausted) {
    RuleGenOptions opts;
    opts.max_rhs_gates = 10;
    EXPECT_THROW(generate_rules(GateLibrary::standard(), opts), SearchExhaustedError);
}

TEST(RewriteTest, DirtyNormalFormConstruction) {
    Circuit c(2, {Gate::x(0), Gate::omega(), Gate::cz(0, 1), Gate::omega()});
    auto d = DirtyNormalForm::from_circuit(c);
    EXPECT_EQ(d.omega_count, 2);
    EXPECT_EQ(d.dirty_count(), 5u);  // X becomes H S S H
    EXPECT_NO_THROW(d.validate());
    EXPECT_EQ(termination_measure(d).size(), d.gates.size() - d.dirty_count());
    EXPECT_EQ(parse_clean_circuit(nf_to_circuit(identity_normal_form(2)), 3).p, 3);
    EXPECT_THROW(parse_clean_circuit(Circuit(1, {Gate::library(GateKind::A, 1, 0)}), 0), InvariantError);
}

TEST(RewriteTest, ForbiddenDirtyPlacementDetected) {
    auto d = DirtyNormalForm::from_circuit(Circuit(1));
    // After E the wire is closed; nothing may follow.
    d.gates.push_back(Gate::s(0));
    EXPECT_THROW(d.validate(), InvariantError);
}

TEST(RewriteTest, MeasureOrder) {
    EXPECT_TRUE(measure_less({0, 1}, {0, 2}));
    EXPECT_TRUE(measure_less({0, 1}, {0, 1, 0}));
    EXPECT_FALSE(measure_less({0, 1}, {0, 1}));
    EXPECT_FALSE(measure_less({1}, {0, 5}));
}

// Both strategies agree with semantic synthesis, phase included.
TEST(RewriteTest, AgreesWithSynthesis) {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 100; it++) {
        std::size_t n = 1 + rng() % 3;
        auto c = testing::random_circuit(rng, n, rng() % 40);
        auto expect = synthesize_circuit(c);
        RewriteStats stats;
        ASSERT_EQ(rewrite_normalize(c, standard_rules(), {}, &stats), expect);
        ASSERT_LE(stats.max_dirty, stats.max_length);
        RewriteOptions random;
        random.strategy = RewriteStrategy::Random;
        random.seed = static_cast<std::uint64_t>(it);
        random.validate_steps = true;
        ASSERT_EQ(rewrite_normalize(c, standard_rules(), random), expect);
    }
}

TEST(RewriteTest, StepBudget) {
    RewriteOptions tight;
    tight.max_steps = 1;
    Circuit c(2, {Gate::h(0), Gate::cz(0, 1), Gate::h(1), Gate::s(0)});
    EXPECT_THROW(rewrite_normalize(c, standard_rules(), tight), InvariantError);
}

}  // namespace
}  // namespace cliffnf
