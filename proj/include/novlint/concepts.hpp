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

#ifndef NOVLINT_CONCEPTS_HPP
#define NOVLINT_CONCEPTS_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "novlint/diagnostics.hpp"

namespace novlint {

// Maps concept keys to display names and optional reading references. Ships
// with built-in defaults; a course can overlay its own file so references
// point at its own textbook.
//
// File format, one entry per line:
//   <concept-key>: <display name>
//   <concept-key>: <display name> | <reading reference>
// The reference separator is ' | ' with surrounding spaces. Blank lines and
// lines starting with '#' are ignored.
class ConceptMap {
 public:
  static ConceptMap defaults();

  // Parses the file format. On malformed input returns nullopt and sets
  // `error` to a line-numbered description.
  static std::optional<ConceptMap> parse(std::string_view text,
                                         std::string* error);

  // Reads and parses a file; I/O failures land in `error` too.
  static std::optional<ConceptMap> load(const std::string& path,
                                        std::string* error);

  const ConceptRef* find(std::string_view key) const;

  // Entries from `other` replace same-key entries here.
  void overlay(const ConceptMap& other);

  // Every implemented rule letter must have its concept key present.
  // Returns false and names the first missing key otherwise.
  bool covers_all_rules(std::string* missing_key) const;

  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, ConceptRef, std::less<>> entries_;
};

}  // namespace novlint

#endif  // NOVLINT_CONCEPTS_HPP
