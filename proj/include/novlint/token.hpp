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

#ifndef NOVLINT_TOKEN_HPP
#define NOVLINT_TOKEN_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "novlint/source.hpp"

namespace novlint {

enum class TokenKind : uint8_t {
  Eof,
  Error,  // bytes no rule matched; never a lex failure

  Identifier,
  Keyword,

  IntLiteral,
  FloatLiteral,
  CharLiteral,
  StringLiteral,

  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Semicolon,
  Comma,
  Dot,
  Ellipsis,
  At,
  Colon,
  Question,

  Assign,
  PlusAssign,
  MinusAssign,
  StarAssign,
  SlashAssign,
  PercentAssign,
  AmpAssign,
  PipeAssign,
  CaretAssign,
  ShlAssign,
  ShrAssign,
  UShrAssign,

  Eq,
  NotEq,
  Lt,
  Gt,
  LtEq,
  GtEq,
  FatArrow,  // `=>`, kept whole so the arrow-comparator repair can see it

  Plus,
  Minus,
  Star,
  Slash,
  Percent,
  PlusPlus,
  MinusMinus,

  Bang,
  Tilde,
  Amp,
  AmpAmp,
  Pipe,
  PipePipe,
  Caret,
  Shl,
  Shr,
  UShr,
};

const char* token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::Eof;
  std::string_view text;            // slice of the source, empty only for Eof
  std::string_view leading_trivia;  // whitespace/comments before this token
  Span span;                        // covers text, not trivia
  bool unterminated = false;        // string/char literal missing its close

  bool is(TokenKind k) const { return kind == k; }
  bool is_keyword(std::string_view kw) const {
    return kind == TokenKind::Keyword && text == kw;
  }
};

// The reserved words of the analyzed language, in one fixed table.
// `true`, `false` and `null` are included: they cannot name anything either.
bool is_reserved_word(std::string_view word);

// Reserved words that denote primitive types (`int`, `char`, ...).
bool is_primitive_type_word(std::string_view word);

// Reserved words that modify a declaration (`public`, `static`, `final`, ...).
bool is_modifier_word(std::string_view word);

// A structured record of one parse repair: what was expected, what was found,
// and what the parser (or bracket checker) did about it.
enum class RecoveryKind : uint8_t {
  UnbalancedBracket,
  CommaInForHeader,
  BraceCondition,
  KeywordAsIdentifier,
  SemicolonAfterMethodHeader,
  ArrowComparator,
};

const char* recovery_kind_name(RecoveryKind kind);

struct RecoveryEvent {
  RecoveryKind kind;
  Span span;
  std::string expected;  // token description, e.g. "';'" or "an identifier"
  std::string found;     // token description, e.g. "','" or "end of file"
  std::string repair;    // human-readable description of the applied repair
  std::string subject;   // the token or name the event is about, e.g. "class"
};

}  // namespace novlint

#endif  // NOVLINT_TOKEN_HPP
