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

#include "novlint/syntax_rules.hpp"

#include <algorithm>

#include "novlint/reporting.hpp"

namespace novlint {

char rule_letter_for(RecoveryKind kind) {
  switch (kind) {
    case RecoveryKind::UnbalancedBracket: return 'C';
    case RecoveryKind::CommaInForHeader: return 'F';
    case RecoveryKind::BraceCondition: return 'G';
    case RecoveryKind::KeywordAsIdentifier: return 'H';
    case RecoveryKind::SemicolonAfterMethodHeader: return 'K';
    case RecoveryKind::ArrowComparator: return 'L';
  }
  return '?';
}

std::vector<Diagnostic> diagnose_syntax(const std::vector<RecoveryEvent>& events,
                                        const ConceptMap& concepts) {
  std::vector<Diagnostic> diagnostics;
  diagnostics.reserve(events.size());
  for (const RecoveryEvent& event : events) {
    RuleFiring firing;
    firing.letter = rule_letter_for(event.kind);
    firing.span = event.span;
    firing.confidence = Confidence::High;  // the parser proved the shape
    switch (event.kind) {
      case RecoveryKind::UnbalancedBracket:
        firing.captures = {{"expected", event.expected},
                           {"found", event.found}};
        break;
      case RecoveryKind::CommaInForHeader:
        break;
      case RecoveryKind::BraceCondition:
        firing.captures = {{"keyword", event.subject}};
        break;
      case RecoveryKind::KeywordAsIdentifier:
        firing.captures = {{"word", event.subject},
                           {"expected", event.expected}};
        break;
      case RecoveryKind::SemicolonAfterMethodHeader:
        firing.captures = {{"name", event.subject.empty() ? "this method"
                                                          : event.subject}};
        break;
      case RecoveryKind::ArrowComparator:
        break;
    }
    diagnostics.push_back(compose(firing, concepts));
  }
  sort_diagnostics(diagnostics);
  return diagnostics;
}

}  // namespace novlint
