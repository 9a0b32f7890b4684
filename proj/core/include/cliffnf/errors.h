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

#ifndef CLIFFNF_ERRORS_H
#define CLIFFNF_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffnf {

/// Operand sizes (qubit counts, matrix dimensions) do not agree.
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A phase-exact computation was requested above the dense-matrix oracle limit.
class OracleLimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive search (gate realizations, rewrite right-hand sides) ran out
/// of candidates before finding an answer.
class SearchExhaustedError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. These indicate bugs, not bad input.
class InvariantError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// Malformed text input. `line()` is 1-based, or 0 when not applicable.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, const std::string &message)
        : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {
    }
    std::size_t line() const {
        return line_;
    }

   private:
    std::size_t line_;
};

}  // namespace cliffnf

#endif
