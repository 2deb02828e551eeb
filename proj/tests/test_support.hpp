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

#ifndef NOVLINT_TESTS_TEST_SUPPORT_HPP
#define NOVLINT_TESTS_TEST_SUPPORT_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "novlint/analyzer.hpp"
#include "novlint/ast.hpp"
#include "novlint/lexer.hpp"
#include "novlint/parser.hpp"

namespace novlint::test {

inline FileAnalysis analyze(std::string_view source,
                            const AnalyzerOptions& options = {}) {
  return analyze_source("test.java", std::string(source), options);
}

inline std::string letters_of(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const Diagnostic& d : diagnostics) out.push_back(d.rule_letter);
  return out;
}

inline size_t count_letter(const std::vector<Diagnostic>& diagnostics,
                           char letter) {
  size_t n = 0;
  for (const Diagnostic& d : diagnostics) {
    if (d.rule_letter == letter) ++n;
  }
  return n;
}

inline std::string fixture_dir() { return NOVLINT_FIXTURE_DIR; }

inline std::string fixture_path(const std::string& relative) {
  return fixture_dir() + "/" + relative;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(static_cast<bool>(in), "cannot open " << path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Lex + parse of an in-memory snippet; the SourceFile must stay alive, so
// everything is bundled together.
struct Parsed {
  SourceFile file;
  std::vector<Token> tokens;
  ParseResult result;

  explicit Parsed(std::string_view source)
      : file(0, "test.java", std::string(source)), tokens(lex(file)),
        result(parse(tokens)) {}
};

// Checks the span invariants over a whole tree: in file bounds, start before
// end, children nested inside parents.
inline void require_sound_spans(const Node& root, size_t file_size) {
  REQUIRE(root.span.byte_start <= root.span.byte_end);
  REQUIRE(root.span.byte_end <= file_size);
  for_each_child(root, [&](const Node& child) {
    REQUIRE_MESSAGE(root.span.contains(child.span),
                    node_kind_name(root.kind)
                        << " [" << root.span.byte_start << ","
                        << root.span.byte_end << ") does not contain "
                        << node_kind_name(child.kind) << " ["
                        << child.span.byte_start << "," << child.span.byte_end
                        << ")");
    require_sound_spans(child, file_size);
  });
}

}  // namespace novlint::test

#endif  // NOVLINT_TESTS_TEST_SUPPORT_HPP
