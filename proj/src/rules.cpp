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

#include "novlint/rules.hpp"

#include <algorithm>
#include <cctype>

namespace novlint {

namespace {

constexpr std::array<RuleDescriptor, 19> kRegistry = {{
    {'A', "assignment-in-condition",
     "assignment operator (=) used where a comparison (==) belongs",
     "assignment-vs-comparison", true, false},
    {'B', "string-identity",
     "strings compared with == or != instead of .equals",
     "string-equality", true, false},
    {'C', "unbalanced-brackets",
     "unbalanced parentheses, curly brackets, square brackets or quotes",
     "bracket-matching", true, true},
    {'D', "non-short-circuit-logic",
     "boolean conditions combined with & or | instead of && or ||",
     "short-circuit-operators", true, false},
    {'E', "stray-semicolon",
     "semicolon right after an if, while or for header",
     "empty-statement", true, false},
    {'F', "for-comma-separators",
     "commas used where a for header needs semicolons",
     "for-loop-structure", true, true},
    {'G', "braced-condition",
     "condition written in curly brackets instead of parentheses",
     "condition-parentheses", true, true},
    {'H', "keyword-identifier",
     "reserved word used as a class, method or variable name",
     "reserved-words", true, true},
    {'J', "method-without-call",
     "method name used without parentheses, so it is never called",
     "method-invocation", true, false},
    {'K', "method-header-semicolon",
     "semicolon at the end of a method header",
     "method-bodies", true, true},
    {'L', "arrow-comparison",
     "=> written in place of the comparison operator >=",
     "relational-operators", true, true},
    {'N', "discarded-return",
     "non-void method called and its return value discarded",
     "return-values", true, false},
    {'S', "uninitialized-char-comparison",
     "never-assigned char variable compared as if it were a literal",
     "literals-vs-variables", true, false},
    {'T', "null-guard-short-circuit",
     "null check joined to a dereference with the wrong short-circuit operator",
     "null-guards", true, false},
    {'U', "repeated-equality-chain",
     "long if/else chain testing the same variable for equality",
     "selection-statements", true, false},
    {'V', "single-method-field",
     "instance field used in one method only, or never used at all",
     "variable-scope", true, false},
    {'W', "switch-fallthrough",
     "switch case falls through into the next case without a break",
     "switch-breaks", true, false},
    {'X', "switch-missing-default",
     "switch statement without a default case",
     "switch-default", true, false},
    {'Y', "inclusive-length-bound",
     "loop bound uses <= with a length, indexing one past the end",
     "array-bounds", true, false},
}};

int letter_index(char letter) {
  for (size_t i = 0; i < kRegistry.size(); ++i) {
    if (kRegistry[i].letter == letter) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

const std::array<RuleDescriptor, 19>& rule_registry() { return kRegistry; }

const RuleDescriptor* find_rule(char letter) {
  int i = letter_index(letter);
  return i < 0 ? nullptr : &kRegistry[static_cast<size_t>(i)];
}

RuleSet RuleSet::all() {
  RuleSet set;
  for (const RuleDescriptor& rule : kRegistry) set.enable(rule.letter);
  return set;
}

RuleSet RuleSet::novice() {
  RuleSet set;
  for (const RuleDescriptor& rule : kRegistry) {
    if (!rule.syntax_rule) set.enable(rule.letter);
  }
  return set;
}

RuleSet RuleSet::syntax() {
  RuleSet set;
  for (const RuleDescriptor& rule : kRegistry) {
    if (rule.syntax_rule) set.enable(rule.letter);
  }
  return set;
}

RuleSet RuleSet::none() { return RuleSet{}; }

std::optional<RuleSet> RuleSet::parse(std::string_view text,
                                      std::string* error) {
  if (text == "all") return all();
  if (text == "novice") return novice();
  if (text == "syntax") return syntax();
  RuleSet set;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (letter_index(letter) < 0) {
      if (error != nullptr) {
        *error = std::string("unknown rule letter '") + c +
                 "' (implemented rules: A B C D E F G H J K L N S T U V W X Y)";
      }
      return std::nullopt;
    }
    set.enable(letter);
  }
  return set;
}

bool RuleSet::enabled(char letter) const {
  int i = letter_index(letter);
  return i >= 0 && (mask_ & (1u << i)) != 0;
}

void RuleSet::enable(char letter) {
  int i = letter_index(letter);
  if (i >= 0) mask_ |= 1u << i;
}

std::vector<char> RuleSet::letters() const {
  std::vector<char> out;
  for (const RuleDescriptor& rule : kRegistry) {
    if (enabled(rule.letter)) out.push_back(rule.letter);
  }
  return out;
}

size_t RuleSet::count() const { return letters().size(); }

}  // namespace novlint
