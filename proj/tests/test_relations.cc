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


#include "cliffnf/relations.h"

#include <gtest/gtest.h>

#include "cliffnf/exact_matrix.h"
#include "cliffnf/gate_library.h"
#include "cliffnf/oracle.h"

namespace cliffnf {
namespace {

TEST(RelationsTest, AllHoldExactly) {
    auto rels = builtin_relations();
    ASSERT_EQ(rels.size(), 17u);
    auto checks = verify_relations(rels);
    for (const auto &c : checks) {
        EXPECT_TRUE(c.passed) << c.name;
        EXPECT_LE(c.num_qubits, 3u);
    }
    std::string report = format_relation_report(checks);
    EXPECT_NE(report.find("C4 (1 qubit): ok"), std::string::npos);
    EXPECT_NE(report.find("relations 15/15, identities 2/2"), std::string::npos);
}

TEST(RelationsTest, GeneratorOnlyCoreRelations) {
    for (const auto &r : builtin_relations()) {
        if (r.name[0] != 'C') continue;
        EXPECT_FALSE(r.lhs.has_library_gates()) << r.name;
        EXPECT_FALSE(r.rhs.has_library_gates()) << r.name;
    }
}

TEST(RelationsTest, BrokenRelationIsReported) {
    Relation bad{"bogus", Circuit(1, {Gate::h(0)}), Circuit(1)};
    auto checks = verify_relations({bad});
    ASSERT_EQ(checks.size(), 1u);
    EXPECT_FALSE(checks[0].passed);
    EXPECT_NE(format_relation_report(checks).find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace cliffnf
