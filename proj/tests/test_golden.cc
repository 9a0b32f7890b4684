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


// Frozen artifacts: regenerating them must reproduce the checked-in files.

#include <gtest/gtest.h>

#include <string>

#include "cliffnf/circuit_io.h"
#include "cliffnf/gate_library.h"
#include "cliffnf/normal_form.h"
#include "cliffnf/rewrite.h"
#include "test_support.h"

namespace cliffnf {
namespace {

std::string data(const std::string &name) {
    return testing::read_text(std::string(CLIFFNF_DATA_DIR) + "/" + name);
}

TEST(GoldenTest, GateRealizations) {
    std::string golden = data("gate_realizations.txt");
    ASSERT_FALSE(golden.empty());
    EXPECT_EQ(GateLibrary::standard().serialize(), golden);
    EXPECT_EQ(GateLibrary::parse(golden), GateLibrary::standard());
}

TEST(GoldenTest, RewriteRules) {
    std::string golden = data("rules.txt");
    ASSERT_FALSE(golden.empty());
    EXPECT_EQ(standard_rules().serialize(), golden);
    EXPECT_EQ(RuleSet::parse(golden), standard_rules());
}

TEST(GoldenTest, ExampleNormalForms) {
    for (const char *name : {"ghz3", "shshsh", "hh"}) {
        std::string nf = data(std::string("examples/") + name + ".nf");
        ASSERT_FALSE(nf.empty()) << name;
        Circuit c = parse_circuit(data(std::string("examples/") + name + ".qc"));
        EXPECT_EQ(synthesize_circuit(c).str(), nf) << name;
    }
}

TEST(GoldenTest, SingleQubitEnumeration) {
    std::string all;
    enumerate_normal_forms(1, [&](const NormalForm &nf) {
        all += nf.str();
        return true;
    });
    EXPECT_EQ(fnv1a64(all), fnv1a64(data("enumerate_1.txt")));
}

}  // namespace
}  // namespace cliffnf
