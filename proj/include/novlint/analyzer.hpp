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

#ifndef NOVLINT_ANALYZER_HPP
#define NOVLINT_ANALYZER_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "novlint/concepts.hpp"
#include "novlint/diagnostics.hpp"
#include "novlint/rules.hpp"
#include "novlint/source.hpp"
#include "novlint/token.hpp"

namespace novlint {

struct AnalyzerOptions {
  RuleSet rules = RuleSet::all();
  int u_threshold = 3;
  Confidence min_confidence = Confidence::Low;
  ConceptMap concepts = ConceptMap::defaults();
};

// Everything one file's analysis produced. Diagnostics are position-sorted
// and already filtered by the confidence floor.
struct FileAnalysis {
  std::shared_ptr<SourceFile> file;
  std::vector<RecoveryEvent> events;  // bracket-balance + parse repairs
  std::vector<Diagnostic> diagnostics;
  size_t loc = 0;
};

// Lex + balance check + parse + model + rules over one in-memory source.
FileAnalysis analyze_source(std::string path, std::string text,
                            const AnalyzerOptions& options,
                            uint32_t file_id = 0);

// Reads the file first; I/O failure yields nullopt and an explanation.
std::optional<FileAnalysis> analyze_file(const std::string& path,
                                         const AnalyzerOptions& options,
                                         uint32_t file_id, std::string* error);

}  // namespace novlint

#endif  // NOVLINT_ANALYZER_HPP
