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


#ifndef CLIFFNF_TOOLS_CLI_H_
#define CLIFFNF_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffnf::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kDifferent = 1,  // equiv: operators differ; check-relations: a relation failed
    kUsage = 2,      // bad arguments, unreadable or malformed input, oracle limit
    kInternal = 3,   // invariant violation inside the library
};

/// Runs the tool with `args` (args[0] is the program name). Never throws.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace cliffnf::cli

#endif
