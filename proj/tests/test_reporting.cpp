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

#include <random>
#include <stdexcept>

#include "doctest.h"
#include "novlint/reporting.hpp"
#include "novlint/rules.hpp"
#include "test_support.hpp"

using namespace novlint;
using novlint::test::analyze;

namespace {

constexpr const char* kPromptLoop =
    "class Quiz {\n"
    "  void run() {\n"
    "    char reply;\n"
    "    char Y;\n"
    "    do {\n"
    "      System.out.println(\"Do you want to continue?\");\n"
    "      reply = (char) System.in.read();\n"
    "    } while (reply != Y);\n"
    "  }\n"
    "}\n";

}  // namespace

TEST_CASE("compose substitutes captures and attaches the concept") {
  RuleFiring firing;
  firing.letter = 'S';
  firing.variant = "literal";
  firing.captures = {{"name", "Y"}};
  firing.span = Span{0, 8, 22, 8, 23, 120, 121};
  Diagnostic diag = compose(firing, ConceptMap::defaults());
  CHECK(diag.rule_letter == 'S');
  CHECK(diag.rule_name == "uninitialized-char-comparison");
  CHECK(diag.message.find("'Y'") != std::string::npos);
  REQUIRE(diag.suggestions.size() == 1);
  CHECK(diag.suggestions[0].find("'Y'") != std::string::npos);
  CHECK(diag.concept_ref.concept_key == "literals-vs-variables");
  CHECK_FALSE(diag.concept_ref.reading_reference.has_value());
}

TEST_CASE("compose rejects a firing missing a template capture") {
  RuleFiring firing;
  firing.letter = 'S';
  firing.variant = "literal";  // template needs {name}
  CHECK_THROWS_AS(compose(firing, ConceptMap::defaults()), std::logic_error);
}

TEST_CASE("the default concept map covers every implemented rule") {
  std::string missing;
  CHECK(ConceptMap::defaults().covers_all_rules(&missing));
  CHECK(missing.empty());
}

TEST_CASE("concept files parse, overlay, and carry reading references") {
  std::string error;
  auto parsed = ConceptMap::parse(
      "# course overrides\n"
      "\n"
      "literals-vs-variables: Chars and their literals | Course book ch. 2.3\n"
      "custom-extra: Something else\n",
      &error);
  REQUIRE(parsed.has_value());
  ConceptMap map = ConceptMap::defaults();
  map.overlay(*parsed);
  const ConceptRef* ref = map.find("literals-vs-variables");
  REQUIRE(ref != nullptr);
  CHECK(ref->display_name == "Chars and their literals");
  REQUIRE(ref->reading_reference.has_value());
  CHECK(*ref->reading_reference == "Course book ch. 2.3");
  // Untouched defaults survive the overlay.
  CHECK(map.find("array-bounds") != nullptr);
  CHECK(map.covers_all_rules(nullptr));
}

TEST_CASE("malformed concept files are rejected with a line number") {
  std::string error;
  CHECK_FALSE(ConceptMap::parse("no colon here\n", &error).has_value());
  CHECK(error.find("line 1") != std::string::npos);
}

TEST_CASE("text rendering shows the offending line with a caret") {
  auto a = analyze(kPromptLoop);
  REQUIRE(a.diagnostics.size() == 1);
  std::string text = render_text(a.diagnostics, {a.file.get()});
  CHECK(text.find("test.java:8:") != std::string::npos);
  CHECK(text.find("[S]") != std::string::npos);
  CHECK(text.find("} while (reply != Y);") != std::string::npos);
  CHECK(text.find("concept: ") != std::string::npos);

  // The caret sits under the Y, mirroring the offending column.
  size_t line_pos = text.find("} while (reply != Y);");
  REQUIRE(line_pos != std::string::npos);
  size_t caret_line_start = text.find('\n', line_pos) + 1;
  size_t caret_pos = text.find('^', caret_line_start);
  REQUIRE(caret_pos != std::string::npos);
  size_t caret_bar = text.find(" | ", caret_line_start);
  REQUIRE(caret_bar != std::string::npos);
  size_t col_of_y = a.diagnostics[0].span.start_col - 1;
  CHECK(caret_pos - (caret_bar + 3) == col_of_y);
}

TEST_CASE("text rendering degrades to location-only without the source") {
  auto a = analyze(kPromptLoop);
  std::string text = render_text(a.diagnostics, {});
  CHECK(text.find("[S]") != std::string::npos);
  CHECK(text.find('^') == std::string::npos);
}

TEST_CASE("empty diagnostics render to empty text") {
  CHECK(render_text({}, {}).empty());
}

TEST_CASE("json round-trips every diagnostic field") {
  auto a = analyze(
      "class Demo {\n"
      "  int limit = 10;\n"
      "  void run(String s, String t) {\n"
      "    if (s == t) { use(limit); }\n"
      "  }\n"
      "  void other() { }\n"
      "  void use(int x) { }\n"
      "}\n");
  REQUIRE(a.diagnostics.size() == 2);  // B and V
  std::string json_text = render_json(a.diagnostics, {a.file.get()});
  std::vector<Diagnostic> round = parse_diagnostics_json(json_text);
  REQUIRE(round.size() == a.diagnostics.size());
  for (size_t i = 0; i < round.size(); ++i) {
    CHECK(round[i] == a.diagnostics[i]);
  }
}

TEST_CASE("json serializes confidence as a string and version as a number") {
  auto a = analyze(kPromptLoop);
  std::string json_text = render_json(a.diagnostics, {a.file.get()});
  CHECK(json_text.find("\"confidence\": \"high\"") != std::string::npos);
  CHECK(json_text.find("\"version\": 1") != std::string::npos);
  CHECK(json_text.find("\"rule_letter\": \"S\"") != std::string::npos);
}

TEST_CASE("empty run serializes an empty diagnostics array") {
  std::string json_text = render_json({}, {});
  CHECK(json_text.find("\"diagnostics\": []") != std::string::npos);
  CHECK(parse_diagnostics_json(json_text).empty());
}

TEST_CASE("csv quotes messages and counts one row per diagnostic") {
  auto a = analyze(kPromptLoop);
  std::string csv = render_csv(a.diagnostics, {a.file.get()});
  size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == 2);  // header + one diagnostic
  CHECK(csv.find("test.java,8,") != std::string::npos);
  CHECK(csv.find(",S,") != std::string::npos);
}

TEST_CASE("every rule letter maps to a registry entry with a concept") {
  for (const RuleDescriptor& rule : rule_registry()) {
    CHECK(find_rule(rule.letter) == &rule);
    CHECK_FALSE(rule.name.empty());
    CHECK_FALSE(rule.description.empty());
    CHECK(ConceptMap::defaults().find(rule.concept_key) != nullptr);
  }
  CHECK(find_rule('Z') == nullptr);
  CHECK(find_rule('I') == nullptr);
}

TEST_CASE("the shipped concept file stays in sync with the built-in defaults") {
  std::string error;
  auto parsed = ConceptMap::load(std::string(NOVLINT_DATA_DIR) + "/concepts.txt",
                                 &error);
  REQUIRE_MESSAGE(parsed.has_value(), error);
  ConceptMap defaults = ConceptMap::defaults();
  CHECK(parsed->size() == defaults.size());
  for (const RuleDescriptor& rule : rule_registry()) {
    const ConceptRef* from_file = parsed->find(rule.concept_key);
    const ConceptRef* built_in = defaults.find(rule.concept_key);
    REQUIRE(from_file != nullptr);
    REQUIRE(built_in != nullptr);
    CHECK(from_file->display_name == built_in->display_name);
  }
}

TEST_CASE("text blocks group by file in path order and render identically") {
  auto first = analyze(kPromptLoop);  // test.java, id 0
  FileAnalysis second =
      analyze_source("z_last.java",
                     "class A { void m(String x, String y) {\n"
                     "  if (x == y) { return; }\n"
                     "} }\n",
                     {}, 1);
  // Merge as the CLI does: files in path order carry ascending ids.
  std::vector<Diagnostic> merged = second.diagnostics;
  merged.insert(merged.end(), first.diagnostics.begin(),
                first.diagnostics.end());
  std::vector<Diagnostic> shuffled(merged.rbegin(), merged.rend());
  sort_diagnostics(shuffled);
  std::vector<const SourceFile*> files{first.file.get(), second.file.get()};
  std::string text = render_text(shuffled, files);
  size_t block_a = text.find("test.java");
  size_t block_b = text.find("z_last.java");
  REQUIRE(block_a != std::string::npos);
  REQUIRE(block_b != std::string::npos);
  CHECK(block_a < block_b);
  CHECK(render_text(shuffled, files) == text);
}

TEST_CASE("json rendering survives invalid UTF-8 in flagged source text") {
  // The string literal carries raw non-UTF-8 bytes; the B diagnostic quotes
  // it into the message, and serialization must replace rather than throw.
  std::string source =
      "class A { boolean m(String s) { return \"\xFF\xFE\" == s; } }";
  auto a = analyze(source);
  REQUIRE(novlint::test::letters_of(a.diagnostics) == "B");
  std::string json_text;
  REQUIRE_NOTHROW(json_text = render_json(a.diagnostics, {a.file.get()}));
  auto round = parse_diagnostics_json(json_text);
  REQUIRE(round.size() == 1);
  CHECK(round[0].rule_letter == 'B');
  REQUIRE_NOTHROW(render_text(a.diagnostics, {a.file.get()}));
  REQUIRE_NOTHROW(render_csv(a.diagnostics, {a.file.get()}));
}

TEST_CASE("full pipeline fuzz: analysis plus rendering never fail") {
  std::mt19937 rng(0xbead);
  std::uniform_int_distribution<int> byte_dist(0, 255);
  std::uniform_int_distribution<int> len_dist(0, 400);
  const std::string seed =
      "class Demo {\n"
      "  int limit = 10;\n"
      "  void run(String s, char c, int[] xs) {\n"
      "    if (s == \"x\") { use(limit); }\n"
      "    for (int i = 0; i <= xs.length; i++) { use(xs[i]); }\n"
      "    switch (c) { case 'a': use(1); case 'b': break; }\n"
      "  }\n"
      "  void use(int x) { }\n"
      "}\n";
  for (int round = 0; round < 1500; ++round) {
    std::string text;
    if (round % 2 == 0) {
      int len = len_dist(rng);
      for (int i = 0; i < len; ++i) {
        text.push_back(static_cast<char>(byte_dist(rng)));
      }
    } else {
      text = seed;
      std::uniform_int_distribution<size_t> pos(0, text.size() - 1);
      for (int m = 0; m < 5; ++m) {
        text[pos(rng)] = static_cast<char>(byte_dist(rng));
      }
    }
    auto a = analyze(text);
    for (const Diagnostic& d : a.diagnostics) {
      REQUIRE(d.span.byte_end <= a.file->size());
      REQUIRE_FALSE(d.message.empty());
    }
    std::string json_text = render_json(a.diagnostics, {a.file.get()});
    REQUIRE(parse_diagnostics_json(json_text).size() == a.diagnostics.size());
    render_text(a.diagnostics, {a.file.get()});
  }
}
