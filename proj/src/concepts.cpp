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

#include "novlint/concepts.hpp"

#include <fstream>
#include <sstream>

#include "novlint/rules.hpp"

namespace novlint {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

struct DefaultConcept {
  std::string_view key;
  std::string_view display_name;
};

// Display names only; reading references are course-specific, so the shipped
// defaults leave them out and a course overlay supplies them.
constexpr DefaultConcept kDefaults[] = {
    {"assignment-vs-comparison", "Assignment (=) versus comparison (==)"},
    {"string-equality", "Comparing string contents with equals"},
    {"bracket-matching", "Matching brackets and quotes"},
    {"short-circuit-operators", "Short-circuit evaluation of && and ||"},
    {"empty-statement", "Semicolons and loop or if bodies"},
    {"for-loop-structure", "The three parts of a for header"},
    {"condition-parentheses", "Writing conditions in parentheses"},
    {"reserved-words", "Reserved words and identifiers"},
    {"method-invocation", "Calling methods with parentheses"},
    {"method-bodies", "Method headers and their bodies"},
    {"relational-operators", "The relational operators <, <=, > and >="},
    {"return-values", "Using the value a method returns"},
    {"literals-vs-variables", "Character literals versus variables"},
    {"null-guards", "Guarding against null with && and ||"},
    {"selection-statements", "Choosing between if/else chains and switch"},
    {"variable-scope", "Choosing the scope of a variable"},
    {"switch-breaks", "How control flows between switch cases"},
    {"switch-default", "Handling unexpected values in a switch"},
    {"array-bounds", "Array indices and loop bounds"},
};

}  // namespace

ConceptMap ConceptMap::defaults() {
  ConceptMap map;
  for (const DefaultConcept& entry : kDefaults) {
    ConceptRef ref;
    ref.concept_key = std::string(entry.key);
    ref.display_name = std::string(entry.display_name);
    map.entries_.emplace(ref.concept_key, std::move(ref));
  }
  return map;
}

std::optional<ConceptMap> ConceptMap::parse(std::string_view text,
                                            std::string* error) {
  ConceptMap map;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    std::string_view trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    size_t colon = trimmed.find(':');
    if (colon == std::string_view::npos) {
      if (error != nullptr) {
        *error = "line " + std::to_string(line_no) +
                 ": expected '<key>: <display name>'";
      }
      return std::nullopt;
    }
    ConceptRef ref;
    ref.concept_key = std::string(trim(trimmed.substr(0, colon)));
    std::string_view rest = trim(trimmed.substr(colon + 1));
    // The reading reference comes after the last ` | `; the spaces keep
    // display names containing `||` unambiguous.
    size_t bar = rest.rfind(" | ");
    if (bar == std::string_view::npos) {
      ref.display_name = std::string(rest);
    } else {
      ref.display_name = std::string(trim(rest.substr(0, bar)));
      std::string_view reading = trim(rest.substr(bar + 3));
      if (!reading.empty()) ref.reading_reference = std::string(reading);
    }
    if (ref.concept_key.empty() || ref.display_name.empty()) {
      if (error != nullptr) {
        *error = "line " + std::to_string(line_no) +
                 ": key and display name must be non-empty";
      }
      return std::nullopt;
    }
    map.entries_[ref.concept_key] = std::move(ref);
  }
  return map;
}

std::optional<ConceptMap> ConceptMap::load(const std::string& path,
                                           std::string* error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (error != nullptr) *error = "cannot open concept map file: " + path;
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), error);
}

const ConceptRef* ConceptMap::find(std::string_view key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

void ConceptMap::overlay(const ConceptMap& other) {
  for (const auto& [key, ref] : other.entries_) {
    entries_[key] = ref;
  }
}

bool ConceptMap::covers_all_rules(std::string* missing_key) const {
  for (const RuleDescriptor& rule : rule_registry()) {
    if (find(rule.concept_key) == nullptr) {
      if (missing_key != nullptr) *missing_key = std::string(rule.concept_key);
      return false;
    }
  }
  return true;
}

}  // namespace novlint
