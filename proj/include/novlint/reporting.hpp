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

#ifndef NOVLINT_REPORTING_HPP
#define NOVLINT_REPORTING_HPP

#include <string>
#include <vector>

#include "novlint/concepts.hpp"
#include "novlint/diagnostics.hpp"
#include "novlint/source.hpp"

namespace novlint {

// Fills the rule's message and suggestion templates with the firing's
// captures and attaches the concept reference. A placeholder without a
// matching capture is an internal invariant violation and throws
// std::logic_error; it can only be reached by a defective rule.
Diagnostic compose(const RuleFiring& firing, const ConceptMap& concepts);

// Plain-text report: one block per diagnostic with the offending line and a
// caret underline, grouped by file in path order. Files that cannot be
// excerpted degrade to location-only output.
std::string render_text(const std::vector<Diagnostic>& diagnostics,
                        const std::vector<const SourceFile*>& files);

// Machine-readable report. Schema (documented in the README):
//   {"version": 1, "files": [...], "diagnostics": [...]}
// Every Diagnostic field serializes under snake_case keys; round-trips
// losslessly through parse_diagnostics_json.
std::string render_json(const std::vector<Diagnostic>& diagnostics,
                        const std::vector<const SourceFile*>& files);

// Inverse of render_json for the diagnostics array. Throws on malformed
// input (nlohmann::json exceptions propagate).
std::vector<Diagnostic> parse_diagnostics_json(const std::string& json_text);

// CSV rows: file,line,col,rule,confidence,message (message quoted).
std::string render_csv(const std::vector<Diagnostic>& diagnostics,
                       const std::vector<const SourceFile*>& files);

}  // namespace novlint

#endif  // NOVLINT_REPORTING_HPP
