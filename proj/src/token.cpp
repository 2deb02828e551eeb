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

#include "novlint/token.hpp"

#include <array>
#include <algorithm>

namespace novlint {

namespace {

// Reserved words of the analyzed language, `true`/`false`/`null` included.
constexpr std::array<std::string_view, 53> kReservedWords = {
    "abstract",   "assert",       "boolean",  "break",      "byte",
    "case",       "catch",        "char",     "class",      "const",
    "continue",   "default",      "do",       "double",     "else",
    "enum",       "extends",      "false",    "final",      "finally",
    "float",      "for",          "goto",     "if",         "implements",
    "import",     "instanceof",   "int",      "interface",  "long",
    "native",     "new",          "null",     "package",    "private",
    "protected",  "public",       "return",   "short",      "static",
    "strictfp",   "super",        "switch",   "synchronized", "this",
    "throw",      "throws",       "transient", "true",      "try",
    "void",       "volatile",     "while",
};

constexpr std::array<std::string_view, 9> kPrimitiveWords = {
    "boolean", "byte", "char", "double", "float",
    "int",     "long", "short", "void",
};

constexpr std::array<std::string_view, 11> kModifierWords = {
    "abstract", "final",  "native",    "private",   "protected", "public",
    "static",   "strictfp", "synchronized", "transient", "volatile",
};

}  // namespace

bool is_reserved_word(std::string_view word) {
  return std::find(kReservedWords.begin(), kReservedWords.end(), word) !=
         kReservedWords.end();
}

bool is_primitive_type_word(std::string_view word) {
  return std::find(kPrimitiveWords.begin(), kPrimitiveWords.end(), word) !=
         kPrimitiveWords.end();
}

bool is_modifier_word(std::string_view word) {
  return std::find(kModifierWords.begin(), kModifierWords.end(), word) !=
         kModifierWords.end();
}

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Eof: return "eof";
    case TokenKind::Error: return "error";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::IntLiteral: return "int-literal";
    case TokenKind::FloatLiteral: return "float-literal";
    case TokenKind::CharLiteral: return "char-literal";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBracket: return "'['";
    case TokenKind::RBracket: return "']'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Ellipsis: return "'...'";
    case TokenKind::At: return "'@'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Question: return "'?'";
    case TokenKind::Assign: return "'='";
    case TokenKind::PlusAssign: return "'+='";
    case TokenKind::MinusAssign: return "'-='";
    case TokenKind::StarAssign: return "'*='";
    case TokenKind::SlashAssign: return "'/='";
    case TokenKind::PercentAssign: return "'%='";
    case TokenKind::AmpAssign: return "'&='";
    case TokenKind::PipeAssign: return "'|='";
    case TokenKind::CaretAssign: return "'^='";
    case TokenKind::ShlAssign: return "'<<='";
    case TokenKind::ShrAssign: return "'>>='";
    case TokenKind::UShrAssign: return "'>>>='";
    case TokenKind::Eq: return "'=='";
    case TokenKind::NotEq: return "'!='";
    case TokenKind::Lt: return "'<'";
    case TokenKind::Gt: return "'>'";
    case TokenKind::LtEq: return "'<='";
    case TokenKind::GtEq: return "'>='";
    case TokenKind::FatArrow: return "'=>'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Percent: return "'%'";
    case TokenKind::PlusPlus: return "'++'";
    case TokenKind::MinusMinus: return "'--'";
    case TokenKind::Bang: return "'!'";
    case TokenKind::Tilde: return "'~'";
    case TokenKind::Amp: return "'&'";
    case TokenKind::AmpAmp: return "'&&'";
    case TokenKind::Pipe: return "'|'";
    case TokenKind::PipePipe: return "'||'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::Shl: return "'<<'";
    case TokenKind::Shr: return "'>>'";
    case TokenKind::UShr: return "'>>>'";
  }
  return "token";
}

const char* recovery_kind_name(RecoveryKind kind) {
  switch (kind) {
    case RecoveryKind::UnbalancedBracket: return "unbalanced_bracket";
    case RecoveryKind::CommaInForHeader: return "comma_in_for_header";
    case RecoveryKind::BraceCondition: return "brace_condition";
    case RecoveryKind::KeywordAsIdentifier: return "keyword_as_identifier";
    case RecoveryKind::SemicolonAfterMethodHeader:
      return "semicolon_after_method_header";
    case RecoveryKind::ArrowComparator: return "arrow_comparator";
  }
  return "recovery";
}

}  // namespace novlint
