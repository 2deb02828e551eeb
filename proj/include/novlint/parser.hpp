// Copyright 2026 The novice-lint Authors.
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

#ifndef NOVLINT_PARSER_HPP
#define NOVLINT_PARSER_HPP

#include <memory>
#include <vector>

#include "novlint/ast.hpp"
#include "novlint/token.hpp"

namespace novlint {

struct ParseResult {
  std::unique_ptr<CompilationUnit> root;
  std::vector<RecoveryEvent> events;
};

// Parses a token list into a compilation unit. Total: never throws, never
// returns a null root. Malformed input takes one of the targeted recoveries
// (recorded as RecoveryEvents) when it matches an enumerated error shape;
// everything else skips to the next synchronization token and continues with
// error nodes in place of the skipped region.
ParseResult parse(const std::vector<Token>& tokens);

}  // namespace novlint

#endif  // NOVLINT_PARSER_HPP
