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

#ifndef NOVLINT_NOVICE_RULES_HPP
#define NOVLINT_NOVICE_RULES_HPP

#include <vector>

#include "novlint/ast.hpp"
#include "novlint/concepts.hpp"
#include "novlint/diagnostics.hpp"
#include "novlint/rules.hpp"
#include "novlint/semantic_model.hpp"
#include "novlint/source.hpp"

namespace novlint {

// Everything a check needs: the file (for excerpting names into messages),
// the tree, the model, the concept map, and the configurable knobs.
struct CheckContext {
  const SourceFile& file;
  const CompilationUnit& root;
  const SemanticModel& model;
  const ConceptMap& concepts;
  int u_threshold = 3;  // minimum equality branches before U fires
};

// The thirteen AST+semantic checks. All are total: any tree and model in,
// diagnostics out, never an error.
std::vector<Diagnostic> check_condition_assignment(const CheckContext& ctx);   // A
std::vector<Diagnostic> check_string_identity(const CheckContext& ctx);        // B
std::vector<Diagnostic> check_non_short_circuit(const CheckContext& ctx);      // D
std::vector<Diagnostic> check_stray_semicolon(const CheckContext& ctx);        // E
std::vector<Diagnostic> check_method_as_field(const CheckContext& ctx);        // J
std::vector<Diagnostic> check_discarded_return(const CheckContext& ctx);       // N
std::vector<Diagnostic> check_char_literal_confusion(const CheckContext& ctx); // S
std::vector<Diagnostic> check_null_guard_or(const CheckContext& ctx);          // T
std::vector<Diagnostic> check_ifelse_chain(const CheckContext& ctx);           // U
std::vector<Diagnostic> check_field_scope(const CheckContext& ctx);            // V
std::vector<Diagnostic> check_switch_fallthrough(const CheckContext& ctx);     // W
std::vector<Diagnostic> check_switch_default(const CheckContext& ctx);         // X
std::vector<Diagnostic> check_off_by_one_bound(const CheckContext& ctx);       // Y

// Runs the enabled checks and returns their union sorted by (file, position,
// rule letter). Letters outside the registry never reach this point: RuleSet
// construction validates them.
std::vector<Diagnostic> run_ruleset(const CheckContext& ctx,
                                    const RuleSet& enabled);

}  // namespace novlint

#endif  // NOVLINT_NOVICE_RULES_HPP
