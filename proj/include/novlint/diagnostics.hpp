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

#ifndef NOVLINT_DIAGNOSTICS_HPP
#define NOVLINT_DIAGNOSTICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novlint/source.hpp"

namespace novlint {

enum class Confidence : uint8_t { Low, High };

const char* confidence_name(Confidence c);

// Which misunderstood idea a warning points back to.
struct ConceptRef {
  std::string concept_key;
  std::string display_name;
  std::optional<std::string> reading_reference;

  bool operator==(const ConceptRef&) const = default;
};

// One warning: where it is, what went wrong, how to fix it, and what to read.
struct Diagnostic {
  char rule_letter = '?';
  std::string rule_name;
  Span span;
  std::string message;
  std::vector<std::string> suggestions;
  ConceptRef concept_ref;
  Confidence confidence = Confidence::High;

  bool operator==(const Diagnostic&) const = default;
};

// A raw rule firing before message composition: the letter, the place, the
// captured names the templates need, and a message variant selector.
struct RuleFiring {
  char letter = '?';
  std::string variant = "default";
  Span span;
  std::vector<std::pair<std::string, std::string>> captures;
  Confidence confidence = Confidence::High;
};

// Stable output order: file, then position, then letter.
void sort_diagnostics(std::vector<Diagnostic>& diagnostics);

}  // namespace novlint

#endif  // NOVLINT_DIAGNOSTICS_HPP
