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

#ifndef NOVLINT_SYNTAX_RULES_HPP
#define NOVLINT_SYNTAX_RULES_HPP

#include <vector>

#include "novlint/concepts.hpp"
#include "novlint/diagnostics.hpp"
#include "novlint/token.hpp"

namespace novlint {

// Which rule letter a recovery event reports under.
char rule_letter_for(RecoveryKind kind);

// Turns parse-repair events into pedagogical diagnostics, one per event,
// ordered by source position. Each diagnostic's span equals its event's span.
std::vector<Diagnostic> diagnose_syntax(const std::vector<RecoveryEvent>& events,
                                        const ConceptMap& concepts);

}  // namespace novlint

#endif  // NOVLINT_SYNTAX_RULES_HPP
