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

#include "novlint/analyzer.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "novlint/corpus.hpp"
#include "novlint/lexer.hpp"
#include "novlint/novice_rules.hpp"
#include "novlint/parser.hpp"
#include "novlint/semantic_model.hpp"
#include "novlint/syntax_rules.hpp"

namespace novlint {

FileAnalysis analyze_source(std::string path, std::string text,
                            const AnalyzerOptions& options, uint32_t file_id) {
  FileAnalysis analysis;
  analysis.file = std::make_shared<SourceFile>(file_id, std::move(path),
                                               std::move(text));
  analysis.loc = count_loc(analysis.file->text());

  std::vector<Token> tokens = lex(*analysis.file);
  std::vector<RecoveryEvent> events = check_bracket_balance(tokens);
  ParseResult parsed = parse(tokens);
  events.insert(events.end(),
                std::make_move_iterator(parsed.events.begin()),
                std::make_move_iterator(parsed.events.end()));
  std::stable_sort(events.begin(), events.end(),
                   [](const RecoveryEvent& a, const RecoveryEvent& b) {
                     return a.span.byte_start < b.span.byte_start;
                   });

  std::vector<RecoveryEvent> enabled_events;
  for (const RecoveryEvent& event : events) {
    if (options.rules.enabled(rule_letter_for(event.kind))) {
      enabled_events.push_back(event);
    }
  }
  std::vector<Diagnostic> diagnostics =
      diagnose_syntax(enabled_events, options.concepts);

  SemanticModel model = build_model(*parsed.root);
  CheckContext ctx{*analysis.file, *parsed.root, model, options.concepts,
                   options.u_threshold};
  std::vector<Diagnostic> semantic = run_ruleset(ctx, options.rules);
  diagnostics.insert(diagnostics.end(),
                     std::make_move_iterator(semantic.begin()),
                     std::make_move_iterator(semantic.end()));

  if (options.min_confidence == Confidence::High) {
    std::erase_if(diagnostics, [](const Diagnostic& d) {
      return d.confidence == Confidence::Low;
    });
  }
  sort_diagnostics(diagnostics);

  analysis.events = std::move(events);
  analysis.diagnostics = std::move(diagnostics);
  return analysis;
}

std::optional<FileAnalysis> analyze_file(const std::string& path,
                                         const AnalyzerOptions& options,
                                         uint32_t file_id, std::string* error) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (error != nullptr) *error = "cannot read file: " + path;
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    if (error != nullptr) *error = "read failure on file: " + path;
    return std::nullopt;
  }
  return analyze_source(path, buffer.str(), options, file_id);
}

}  // namespace novlint
