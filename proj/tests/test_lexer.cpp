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

#include "doctest.h"
#include "novlint/lexer.hpp"
#include "test_support.hpp"

using namespace novlint;

namespace {

std::vector<Token> lex_string(const SourceFile& file) { return lex(file); }

std::string reconstruct(const std::vector<Token>& tokens) {
  std::string out;
  for (const Token& tok : tokens) {
    out.append(tok.leading_trivia);
    out.append(tok.text);
  }
  return out;
}

}  // namespace

TEST_CASE("lexing the smallest operator case") {
  SourceFile file(0, "t.java", "a == b");
  auto tokens = lex_string(file);
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0].kind == TokenKind::Identifier);
  CHECK(tokens[0].text == "a");
  CHECK(tokens[1].kind == TokenKind::Eq);
  CHECK(tokens[2].kind == TokenKind::Identifier);
  CHECK(tokens[2].text == "b");
  CHECK(tokens[3].kind == TokenKind::Eof);
}

TEST_CASE("'=>' lexes as a single candidate token") {
  SourceFile file(0, "t.java", "if (a => b)");
  auto tokens = lex_string(file);
  size_t arrows = 0;
  for (const Token& tok : tokens) {
    if (tok.kind == TokenKind::FatArrow) ++arrows;
    CHECK(tok.kind != TokenKind::GtEq);
  }
  CHECK(arrows == 1);
}

TEST_CASE("char declaration token kinds") {
  SourceFile file(0, "t.java", "char Y;");
  auto tokens = lex_string(file);
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0].kind == TokenKind::Keyword);
  CHECK(tokens[0].text == "char");
  CHECK(tokens[1].kind == TokenKind::Identifier);
  CHECK(tokens[1].text == "Y");
  CHECK(tokens[2].kind == TokenKind::Semicolon);
  CHECK(tokens[3].kind == TokenKind::Eof);
}

TEST_CASE("operator disambiguation") {
  SourceFile file(0, "t.java", "a >= b >>> 2 >>>= c <= d != e");
  auto tokens = lex_string(file);
  std::vector<TokenKind> kinds;
  for (const Token& tok : tokens) kinds.push_back(tok.kind);
  CHECK(kinds == std::vector<TokenKind>{
                     TokenKind::Identifier, TokenKind::GtEq,
                     TokenKind::Identifier, TokenKind::UShr,
                     TokenKind::IntLiteral, TokenKind::UShrAssign,
                     TokenKind::Identifier, TokenKind::LtEq,
                     TokenKind::Identifier, TokenKind::NotEq,
                     TokenKind::Identifier, TokenKind::Eof});
}

TEST_CASE("literals and keywords") {
  SourceFile file(0, "t.java",
                  "int x = 0x1F; double d = 1.5e3; char c = '\\n'; "
                  "String s = \"hi\"; boolean t = true; Object o = null;");
  auto tokens = lex_string(file);
  size_t ints = 0, floats = 0, chars = 0, strings = 0, keywords = 0;
  for (const Token& tok : tokens) {
    switch (tok.kind) {
      case TokenKind::IntLiteral: ++ints; break;
      case TokenKind::FloatLiteral: ++floats; break;
      case TokenKind::CharLiteral: ++chars; break;
      case TokenKind::StringLiteral: ++strings; break;
      case TokenKind::Keyword: ++keywords; break;
      default: break;
    }
  }
  CHECK(ints == 1);
  CHECK(floats == 1);
  CHECK(chars == 1);
  CHECK(strings == 1);
  // int, double, char, boolean, true, null
  CHECK(keywords == 6);
}

TEST_CASE("unterminated literals are flagged, not fatal") {
  SourceFile file(0, "t.java", "String s = \"oops;\nint x = 1;");
  auto tokens = lex_string(file);
  bool found = false;
  for (const Token& tok : tokens) {
    if (tok.kind == TokenKind::StringLiteral) {
      CHECK(tok.unterminated);
      found = true;
    }
  }
  CHECK(found);
  CHECK(tokens.back().kind == TokenKind::Eof);
}

TEST_CASE("unknown bytes become error tokens") {
  SourceFile file(0, "t.java", "int x = 1 # 2;");
  auto tokens = lex_string(file);
  size_t errors = 0;
  for (const Token& tok : tokens) {
    if (tok.kind == TokenKind::Error) ++errors;
  }
  CHECK(errors == 1);
}

TEST_CASE("lossless reconstruction over assorted inputs") {
  const char* samples[] = {
      "",
      "   ",
      "// only a comment\n",
      "/* block\ncomment */ class A {}\n",
      "class A { /* unterminated",
      "String s = \"esc\\\"aped\"; char c = '\\'';",
      "int x=1;\r\nint y=2;\r\n",
      "\xEF\xBB\xBF" "class A {}",       // BOM bytes
      "String caf\xC3\xA9 = \"caf\xC3\xA9\";",  // UTF-8 identifier
      "int a = b[2);",
      "if (a => b) {}",
      "\xFF\xFE garbage \x01\x02",
  };
  for (const char* sample : samples) {
    SourceFile file(0, "t.java", sample);
    auto tokens = lex_string(file);
    CHECK(reconstruct(tokens) == file.text());
    CHECK(tokens.back().kind == TokenKind::Eof);
  }
}

TEST_CASE("lossless reconstruction over random byte strings") {
  std::mt19937 rng(20260808);
  std::uniform_int_distribution<int> len_dist(0, 160);
  std::uniform_int_distribution<int> byte_dist(0, 255);
  for (int round = 0; round < 500; ++round) {
    std::string text;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) {
      text.push_back(static_cast<char>(byte_dist(rng)));
    }
    SourceFile file(0, "t.java", text);
    auto tokens = lex_string(file);
    REQUIRE(reconstruct(tokens) == file.text());
    for (const Token& tok : tokens) {
      REQUIRE(tok.span.byte_start <= tok.span.byte_end);
      REQUIRE(tok.span.byte_end <= file.size());
    }
  }
}

TEST_CASE("token spans carry 1-based positions") {
  SourceFile file(0, "t.java", "int a;\nint bb;\n");
  auto tokens = lex_string(file);
  REQUIRE(tokens.size() >= 6);
  const Token& bb = tokens[4];
  CHECK(bb.text == "bb");
  CHECK(bb.span.start_line == 2);
  CHECK(bb.span.start_col == 5);
  CHECK(bb.span.end_line == 2);
  CHECK(bb.span.end_col == 7);
  CHECK(bb.span.byte_start == 11);
  CHECK(bb.span.byte_end == 13);
}
