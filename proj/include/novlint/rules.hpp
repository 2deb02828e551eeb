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

#ifndef NOVLINT_RULES_HPP
#define NOVLINT_RULES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace novlint {

// One catalogue entry per implemented rule letter.
struct RuleDescriptor {
  char letter;
  std::string_view name;         // short slug, stable across releases
  std::string_view description;  // what the rule catches
  std::string_view concept_key;  // entry in the concept map
  bool default_enabled;
  bool syntax_rule;  // fed by parse recovery rather than AST checks
};

// All nineteen implemented rules, in letter order.
const std::array<RuleDescriptor, 19>& rule_registry();

const RuleDescriptor* find_rule(char letter);

// A validated set of enabled rule letters.
class RuleSet {
 public:
  static RuleSet all();
  static RuleSet novice();  // the thirteen AST+semantic rules
  static RuleSet syntax();  // C F G H K L
  static RuleSet none();

  // Accepts "all", "novice", "syntax", or a list of letters such as "ABS"
  // or "A,B,S". Unknown letters are a configuration error: returns nullopt
  // and fills `error`.
  static std::optional<RuleSet> parse(std::string_view text,
                                      std::string* error);

  bool enabled(char letter) const;
  void enable(char letter);
  std::vector<char> letters() const;
  size_t count() const;

  bool operator==(const RuleSet&) const = default;

 private:
  uint32_t mask_ = 0;
};

}  // namespace novlint

#endif  // NOVLINT_RULES_HPP
