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

#include "novlint/lexer.hpp"

#include <cctype>

namespace novlint {

namespace {

bool is_ident_start(unsigned char c) {
  return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_continue(unsigned char c) {
  return is_ident_start(c) || std::isdigit(c);
}

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

class Lexer {
 public:
  explicit Lexer(const SourceFile& file)
      : file_(file), text_(file.text()) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      size_t trivia_start = pos_;
      skip_trivia();
      size_t tok_start = pos_;
      uint32_t tok_line = line_, tok_col = col_;

      Token tok;
      tok.leading_trivia = view(trivia_start, tok_start);
      if (pos_ >= text_.size()) {
        tok.kind = TokenKind::Eof;
        tok.text = view(pos_, pos_);
        tok.span = make_span(tok_start, tok_line, tok_col);
        tokens.push_back(tok);
        break;
      }
      scan_token(tok);
      tok.text = view(tok_start, pos_);
      tok.span = make_span(tok_start, tok_line, tok_col);
      tokens.push_back(tok);
    }
    return tokens;
  }

 private:
  std::string_view view(size_t from, size_t to) const {
    return text_.substr(from, to - from);
  }

  char peek(size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Span make_span(size_t start_byte, uint32_t start_line,
                 uint32_t start_col) const {
    Span s;
    s.file_id = file_.id();
    s.byte_start = static_cast<uint32_t>(start_byte);
    s.byte_end = static_cast<uint32_t>(pos_);
    s.start_line = start_line;
    s.start_col = start_col;
    s.end_line = line_;
    s.end_col = col_;
    return s;
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = peek();
      if (is_space(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < text_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        advance();
        advance();
        while (pos_ < text_.size() && !(peek() == '*' && peek(1) == '/')) {
          advance();
        }
        if (pos_ < text_.size()) {
          advance();
          advance();
        }
      } else {
        break;
      }
    }
  }

  void scan_token(Token& tok) {
    char c = peek();
    if (is_ident_start(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             is_ident_continue(static_cast<unsigned char>(peek()))) {
        advance();
      }
      tok.kind = is_reserved_word(view(start, pos_)) ? TokenKind::Keyword
                                                     : TokenKind::Identifier;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      scan_number(tok);
      return;
    }
    if (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      scan_number(tok);
      return;
    }
    if (c == '\'' || c == '"') {
      scan_quoted(tok, c);
      return;
    }
    scan_operator(tok);
  }

  void scan_number(Token& tok) {
    bool is_float = false;
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' ||
                          peek(1) == 'B')) {
      advance();
      advance();
      while (std::isxdigit(static_cast<unsigned char>(peek())) ||
             peek() == '_') {
        advance();
      }
    } else {
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') {
        advance();
      }
      char after_dot = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
      if (peek() == '.' &&
          (std::isdigit(static_cast<unsigned char>(after_dot)) ||
           after_dot == 'f' || after_dot == 'F' || after_dot == 'd' ||
           after_dot == 'D' || after_dot == 'e' || after_dot == 'E')) {
        is_float = true;
        advance();
        while (std::isdigit(static_cast<unsigned char>(peek())) ||
               peek() == '_') {
          advance();
        }
      }
      if (peek() == 'e' || peek() == 'E') {
        char sign = peek(1);
        size_t digit_at = (sign == '+' || sign == '-') ? 2 : 1;
        if (std::isdigit(static_cast<unsigned char>(peek(digit_at)))) {
          is_float = true;
          advance();
          if (sign == '+' || sign == '-') advance();
          while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
        }
      }
    }
    if (peek() == 'f' || peek() == 'F' || peek() == 'd' || peek() == 'D') {
      is_float = true;
      advance();
    } else if (peek() == 'l' || peek() == 'L') {
      advance();
    }
    tok.kind = is_float ? TokenKind::FloatLiteral : TokenKind::IntLiteral;
  }

  // Quote pairing happens here: a literal either finds its closing quote on
  // the same line or is marked unterminated for the bracket checker.
  void scan_quoted(Token& tok, char quote) {
    tok.kind = quote == '"' ? TokenKind::StringLiteral : TokenKind::CharLiteral;
    advance();  // opening quote
    while (pos_ < text_.size()) {
      char c = peek();
      if (c == '\\' && pos_ + 1 < text_.size()) {
        advance();
        advance();
        continue;
      }
      if (c == quote) {
        advance();
        return;
      }
      if (c == '\n') break;
      advance();
    }
    tok.unterminated = true;
  }

  void scan_operator(Token& tok) {
    struct OpRule {
      std::string_view text;
      TokenKind kind;
    };
    // Longest match first.
    static constexpr OpRule kOps[] = {
        {">>>=", TokenKind::UShrAssign},
        {">>>", TokenKind::UShr},
        {">>=", TokenKind::ShrAssign},
        {"<<=", TokenKind::ShlAssign},
        {">>", TokenKind::Shr},
        {"<<", TokenKind::Shl},
        {">=", TokenKind::GtEq},
        {"<=", TokenKind::LtEq},
        {"==", TokenKind::Eq},
        {"=>", TokenKind::FatArrow},
        {"!=", TokenKind::NotEq},
        {"&&", TokenKind::AmpAmp},
        {"||", TokenKind::PipePipe},
        {"++", TokenKind::PlusPlus},
        {"--", TokenKind::MinusMinus},
        {"+=", TokenKind::PlusAssign},
        {"-=", TokenKind::MinusAssign},
        {"*=", TokenKind::StarAssign},
        {"/=", TokenKind::SlashAssign},
        {"%=", TokenKind::PercentAssign},
        {"&=", TokenKind::AmpAssign},
        {"|=", TokenKind::PipeAssign},
        {"^=", TokenKind::CaretAssign},
        {"...", TokenKind::Ellipsis},
        {"(", TokenKind::LParen},
        {")", TokenKind::RParen},
        {"[", TokenKind::LBracket},
        {"]", TokenKind::RBracket},
        {"{", TokenKind::LBrace},
        {"}", TokenKind::RBrace},
        {";", TokenKind::Semicolon},
        {",", TokenKind::Comma},
        {".", TokenKind::Dot},
        {"@", TokenKind::At},
        {":", TokenKind::Colon},
        {"?", TokenKind::Question},
        {"=", TokenKind::Assign},
        {">", TokenKind::Gt},
        {"<", TokenKind::Lt},
        {"+", TokenKind::Plus},
        {"-", TokenKind::Minus},
        {"*", TokenKind::Star},
        {"/", TokenKind::Slash},
        {"%", TokenKind::Percent},
        {"!", TokenKind::Bang},
        {"~", TokenKind::Tilde},
        {"&", TokenKind::Amp},
        {"|", TokenKind::Pipe},
        {"^", TokenKind::Caret},
    };
    std::string_view rest = text_.substr(pos_);
    for (const OpRule& rule : kOps) {
      if (rest.starts_with(rule.text)) {
        tok.kind = rule.kind;
        for (size_t i = 0; i < rule.text.size(); ++i) advance();
        return;
      }
    }
    tok.kind = TokenKind::Error;
    advance();
  }

  const SourceFile& file_;
  std::string_view text_;
  size_t pos_ = 0;
  uint32_t line_ = 1;
  uint32_t col_ = 1;
};

char opener_for(TokenKind closer) {
  switch (closer) {
    case TokenKind::RParen: return '(';
    case TokenKind::RBracket: return '[';
    case TokenKind::RBrace: return '{';
    default: return '\0';
  }
}

char closer_for(TokenKind opener) {
  switch (opener) {
    case TokenKind::LParen: return ')';
    case TokenKind::LBracket: return ']';
    case TokenKind::LBrace: return '}';
    default: return '\0';
  }
}

std::string quoted(char c) { return std::string("'") + c + "'"; }

}  // namespace

std::vector<Token> lex(const SourceFile& file) {
  return Lexer(file).run();
}

std::vector<RecoveryEvent> check_bracket_balance(
    const std::vector<Token>& tokens) {
  std::vector<RecoveryEvent> events;
  std::vector<const Token*> stack;

  auto event_at = [](const Token& tok, std::string expected, std::string found,
                     std::string repair, std::string subject) {
    RecoveryEvent e;
    e.kind = RecoveryKind::UnbalancedBracket;
    e.span = tok.span;
    e.expected = std::move(expected);
    e.found = std::move(found);
    e.repair = std::move(repair);
    e.subject = std::move(subject);
    return e;
  };

  for (const Token& tok : tokens) {
    switch (tok.kind) {
      case TokenKind::LParen:
      case TokenKind::LBracket:
      case TokenKind::LBrace:
        stack.push_back(&tok);
        break;
      case TokenKind::RParen:
      case TokenKind::RBracket:
      case TokenKind::RBrace: {
        if (stack.empty()) {
          events.push_back(event_at(
              tok, "a matching opening " + quoted(opener_for(tok.kind)),
              quoted(tok.text.empty() ? '?' : tok.text[0]),
              "ignored the extra closing bracket", std::string(tok.text)));
          break;
        }
        const Token* open = stack.back();
        char want = closer_for(open->kind);
        char got = tok.text.empty() ? '?' : tok.text[0];
        if (want != got) {
          events.push_back(event_at(
              tok, quoted(want) + " to close the " + quoted(open->text[0]) +
                       " opened at line " + std::to_string(open->span.start_line),
              quoted(got), "treated it as closing that bracket",
              std::string(tok.text)));
        }
        stack.pop_back();
        break;
      }
      case TokenKind::CharLiteral:
      case TokenKind::StringLiteral:
        if (tok.unterminated) {
          char q = tok.kind == TokenKind::StringLiteral ? '"' : '\'';
          events.push_back(event_at(
              tok, "a closing " + quoted(q), "end of the line",
              "treated the rest of the line as the literal", std::string(1, q)));
        }
        break;
      default:
        break;
    }
  }
  for (const Token* open : stack) {
    events.push_back(RecoveryEvent{
        RecoveryKind::UnbalancedBracket, open->span,
        quoted(closer_for(open->kind)) + " before the end of the file",
        "end of file", "closed it at end of file", std::string(open->text)});
  }
  return events;
}

}  // namespace novlint
