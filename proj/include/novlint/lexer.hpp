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

#ifndef NOVLINT_LEXER_HPP
#define NOVLINT_LEXER_HPP

#include <vector>

#include "novlint/source.hpp"
#include "novlint/token.hpp"

namespace novlint {

// Tokenizes a file. Total: any byte sequence yields a token list ending in an
// Eof token. Unknown bytes become Error tokens. Comments and whitespace are
// preserved as leading trivia, so concatenating every token's trivia + text
// reproduces the input byte for byte.
std::vector<Token> lex(const SourceFile& file);

// Stack-based matching over ()[]{} plus the lexer's quote pairing. Returns
// one UnbalancedBracket event per unmatched opener/closer; a pair closed by
// the wrong kind (e.g. `(` closed by `]`) is reported at the closer.
std::vector<RecoveryEvent> check_bracket_balance(const std::vector<Token>& tokens);

}  // namespace novlint

#endif  // NOVLINT_LEXER_HPP
