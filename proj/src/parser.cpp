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

#include "novlint/parser.hpp"

#include <algorithm>
#include <string>

namespace novlint {

namespace {

// Binding powers, tighter binds higher.
int binary_precedence(TokenKind kind) {
  switch (kind) {
    case TokenKind::Star:
    case TokenKind::Slash:
    case TokenKind::Percent: return 10;
    case TokenKind::Plus:
    case TokenKind::Minus: return 9;
    case TokenKind::Shl:
    case TokenKind::Shr:
    case TokenKind::UShr: return 8;
    case TokenKind::Lt:
    case TokenKind::Gt:
    case TokenKind::LtEq:
    case TokenKind::GtEq:
    case TokenKind::FatArrow: return 7;  // repaired to `>=`
    case TokenKind::Eq:
    case TokenKind::NotEq: return 6;
    case TokenKind::Amp: return 5;
    case TokenKind::Caret: return 4;
    case TokenKind::Pipe: return 3;
    case TokenKind::AmpAmp: return 2;
    case TokenKind::PipePipe: return 1;
    default: return -1;
  }
}

BinaryOp binary_op_for(TokenKind kind) {
  switch (kind) {
    case TokenKind::Star: return BinaryOp::Mul;
    case TokenKind::Slash: return BinaryOp::Div;
    case TokenKind::Percent: return BinaryOp::Mod;
    case TokenKind::Plus: return BinaryOp::Add;
    case TokenKind::Minus: return BinaryOp::Sub;
    case TokenKind::Shl: return BinaryOp::Shl;
    case TokenKind::Shr: return BinaryOp::Shr;
    case TokenKind::UShr: return BinaryOp::UShr;
    case TokenKind::Lt: return BinaryOp::Lt;
    case TokenKind::Gt: return BinaryOp::Gt;
    case TokenKind::LtEq: return BinaryOp::LtEq;
    case TokenKind::GtEq:
    case TokenKind::FatArrow: return BinaryOp::GtEq;
    case TokenKind::Eq: return BinaryOp::Eq;
    case TokenKind::NotEq: return BinaryOp::NotEq;
    case TokenKind::Amp: return BinaryOp::BitAnd;
    case TokenKind::Caret: return BinaryOp::BitXor;
    case TokenKind::Pipe: return BinaryOp::BitOr;
    case TokenKind::AmpAmp: return BinaryOp::LogAnd;
    case TokenKind::PipePipe: return BinaryOp::LogOr;
    default: return BinaryOp::Add;
  }
}

bool is_assign_op(TokenKind kind) {
  switch (kind) {
    case TokenKind::Assign:
    case TokenKind::PlusAssign:
    case TokenKind::MinusAssign:
    case TokenKind::StarAssign:
    case TokenKind::SlashAssign:
    case TokenKind::PercentAssign:
    case TokenKind::AmpAssign:
    case TokenKind::PipeAssign:
    case TokenKind::CaretAssign:
    case TokenKind::ShlAssign:
    case TokenKind::ShrAssign:
    case TokenKind::UShrAssign: return true;
    default: return false;
  }
}

// Keywords that start an expression rather than a declaration name.
bool is_expression_keyword(std::string_view kw) {
  return kw == "this" || kw == "super" || kw == "new" || kw == "true" ||
         kw == "false" || kw == "null" || kw == "instanceof";
}

bool is_statement_keyword(std::string_view kw) {
  return kw == "if" || kw == "while" || kw == "do" || kw == "for" ||
         kw == "switch" || kw == "return" || kw == "break" ||
         kw == "continue" || kw == "throw";
}

// Zero-width error markers can sit one token past the region their parent
// consumed; widen ancestors so child spans always nest.
void widen_spans(Node& node) {
  for_each_child(node, [&node](const Node& child_const) {
    Node& child = const_cast<Node&>(child_const);
    widen_spans(child);
    node.span = Span::join(node.span, child.span);
  });
}

// Nesting and chain caps keep tree depth bounded on adversarial input, so
// every recursive consumer of the tree is safe from stack exhaustion. No
// human-written file comes anywhere near them; past the caps the parser
// degrades to flat error nodes and keeps going.
constexpr int kMaxNestingDepth = 350;
constexpr size_t kWrapBudgetPerStatement = 4000;

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  ParseResult run() {
    ParseResult result;
    result.root = parse_unit();
    widen_spans(*result.root);
    result.events = std::move(events_);
    return result;
  }

 private:
  // ---- cursor -------------------------------------------------------------

  const Token& cur() const { return tokens_[pos_]; }

  const Token& tok_at(size_t i) const {
    return tokens_[std::min(i, tokens_.size() - 1)];
  }

  const Token& peek_tok(size_t ahead = 1) const { return tok_at(pos_ + ahead); }

  bool at(TokenKind kind) const { return cur().kind == kind; }
  bool at_eof() const { return at(TokenKind::Eof); }
  bool at_keyword(std::string_view kw) const { return cur().is_keyword(kw); }

  void advance() {
    if (pos_ + 1 < tokens_.size()) ++pos_;
  }

  bool accept(TokenKind kind) {
    if (!at(kind)) return false;
    advance();
    return true;
  }

  bool accept_keyword(std::string_view kw) {
    if (!at_keyword(kw)) return false;
    advance();
    return true;
  }

  // Span of everything consumed since `start`; zero-width when nothing was.
  Span span_from(size_t start) const {
    if (pos_ > start) {
      return Span::join(tok_at(start).span, tok_at(pos_ - 1).span);
    }
    Span s = tok_at(start).span;
    s.byte_end = s.byte_start;
    s.end_line = s.start_line;
    s.end_col = s.start_col;
    return s;
  }

  Span here() const { return span_from(pos_); }

  void finish(Node& node, size_t start) { node.span = span_from(start); }

  void emit(RecoveryKind kind, Span span, std::string expected,
            std::string found, std::string repair, std::string subject) {
    events_.push_back(RecoveryEvent{kind, span, std::move(expected),
                                    std::move(found), std::move(repair),
                                    std::move(subject)});
  }

  struct DepthGuard {
    Parser& parser;
    bool ok;
    explicit DepthGuard(Parser& p)
        : parser(p), ok(p.depth_ < kMaxNestingDepth) {
      ++p.depth_;
    }
    ~DepthGuard() { --parser.depth_; }
  };

  // Swallows one non-delimiter token into an error expression so the caller
  // always makes progress; delimiters stay for the enclosing construct.
  std::unique_ptr<Expr> error_expr_here() {
    size_t start = pos_;
    auto err = std::make_unique<ErrorExpr>();
    switch (cur().kind) {
      case TokenKind::RParen:
      case TokenKind::RBracket:
      case TokenKind::RBrace:
      case TokenKind::Semicolon:
      case TokenKind::Comma:
      case TokenKind::Eof:
        err->span = here();
        break;
      default:
        advance();
        finish(*err, start);
        break;
    }
    return err;
  }

  bool take_wrap_budget() {
    if (wrap_budget_ == 0) return false;
    --wrap_budget_;
    return true;
  }

  std::string found_description() const {
    const Token& t = cur();
    if (t.kind == TokenKind::Eof) return "end of file";
    if (t.kind == TokenKind::Keyword)
      return "the reserved word '" + std::string(t.text) + "'";
    return "'" + std::string(t.text) + "'";
  }

  // ---- speculative scans ---------------------------------------------------

  // Skips a balanced generic argument group starting at `i` (a `<`). Returns
  // the index just past the group, or 0 when the tokens do not form one.
  size_t scan_generic_group(size_t i) const {
    int depth = 0;
    size_t guard = 0;
    while (i < tokens_.size() && guard++ < 256) {
      switch (tok_at(i).kind) {
        case TokenKind::Lt: depth += 1; break;
        case TokenKind::Gt: depth -= 1; break;
        case TokenKind::Shr: depth -= 2; break;
        case TokenKind::UShr: depth -= 3; break;
        case TokenKind::Identifier:
        case TokenKind::Dot:
        case TokenKind::Comma:
        case TokenKind::Question:
        case TokenKind::LBracket:
        case TokenKind::RBracket:
          break;
        case TokenKind::Keyword:
          if (tok_at(i).text != "extends" && tok_at(i).text != "super" &&
              !is_primitive_type_word(tok_at(i).text)) {
            return 0;
          }
          break;
        default:
          return 0;
      }
      ++i;
      if (depth == 0) return i;
      if (depth < 0) return 0;
    }
    return 0;
  }

  // Whether tokens at `i` look like a type (name, dots, generics, []s).
  // On success sets `end` to the index just past the type.
  bool scan_type_shape(size_t i, size_t* end) const {
    if (tok_at(i).kind == TokenKind::Keyword &&
        is_primitive_type_word(tok_at(i).text)) {
      ++i;
    } else if (tok_at(i).kind == TokenKind::Identifier) {
      ++i;
      while (tok_at(i).kind == TokenKind::Dot &&
             tok_at(i + 1).kind == TokenKind::Identifier) {
        i += 2;
      }
      if (tok_at(i).kind == TokenKind::Lt) {
        size_t past = scan_generic_group(i);
        if (past != 0) i = past;
      }
    } else {
      return false;
    }
    while (tok_at(i).kind == TokenKind::LBracket &&
           tok_at(i + 1).kind == TokenKind::RBracket) {
      i += 2;
    }
    *end = i;
    return true;
  }

  bool is_local_decl_start() const {
    if (at_keyword("final")) return true;
    size_t end = 0;
    if (!scan_type_shape(pos_, &end)) return false;
    const Token& next = tok_at(end);
    if (next.kind == TokenKind::Identifier) return true;
    // `int class = 5;` — a reserved word in the name slot is still a
    // declaration; the name recovery will flag it.
    if (next.kind == TokenKind::Keyword && !is_expression_keyword(next.text) &&
        !is_modifier_word(next.text) && !is_primitive_type_word(next.text)) {
      return true;
    }
    return false;
  }

  // ---- names, types, modifiers ----------------------------------------------

  // Reads a declaration name; a reserved word here is the enumerated
  // keyword-as-identifier shape.
  std::string parse_decl_name(const char* what, Span* name_span,
                              bool* was_keyword) {
    *was_keyword = false;
    if (at(TokenKind::Identifier)) {
      std::string name(cur().text);
      *name_span = cur().span;
      advance();
      return name;
    }
    if (at(TokenKind::Keyword)) {
      std::string name(cur().text);
      *name_span = cur().span;
      emit(RecoveryKind::KeywordAsIdentifier, cur().span,
           std::string(what), "the reserved word '" + name + "'",
           "used the reserved word as the name", name);
      *was_keyword = true;
      advance();
      return name;
    }
    *name_span = here();
    return "";
  }

  TypeRef parse_type() {
    TypeRef type;
    size_t start = pos_;
    if (at(TokenKind::Keyword) && is_primitive_type_word(cur().text)) {
      type.name = std::string(cur().text);
      type.qualified = type.name;
      type.primitive = true;
      advance();
    } else if (at(TokenKind::Identifier)) {
      type.name = std::string(cur().text);
      type.qualified = type.name;
      advance();
      while (at(TokenKind::Dot) && peek_tok().kind == TokenKind::Identifier) {
        advance();
        type.name = std::string(cur().text);
        type.qualified += "." + type.name;
        advance();
      }
      if (at(TokenKind::Lt)) {
        size_t past = scan_generic_group(pos_);
        if (past != 0) {
          while (pos_ < past) advance();
        }
      }
    } else {
      type.valid = false;
      type.span = here();
      return type;
    }
    while (at(TokenKind::LBracket) && peek_tok().kind == TokenKind::RBracket) {
      ++type.array_dims;
      advance();
      advance();
    }
    type.span = span_from(start);
    return type;
  }

  void skip_annotation() {
    advance();  // '@'
    if (at(TokenKind::Identifier)) {
      advance();
      while (at(TokenKind::Dot) && peek_tok().kind == TokenKind::Identifier) {
        advance();
        advance();
      }
      if (at(TokenKind::LParen)) skip_balanced(TokenKind::LParen, TokenKind::RParen);
    }
  }

  void skip_balanced(TokenKind open, TokenKind close) {
    int depth = 0;
    while (!at_eof()) {
      if (at(open)) ++depth;
      if (at(close)) {
        --depth;
        advance();
        if (depth <= 0) return;
        continue;
      }
      advance();
    }
  }

  Modifiers parse_modifiers() {
    Modifiers mods;
    while (true) {
      if (at(TokenKind::At)) {
        mods.has_annotation = true;
        skip_annotation();
        continue;
      }
      if (at(TokenKind::Keyword) && is_modifier_word(cur().text)) {
        std::string_view kw = cur().text;
        if (kw == "public") mods.is_public = true;
        else if (kw == "private") mods.is_private = true;
        else if (kw == "protected") mods.is_protected = true;
        else if (kw == "static") mods.is_static = true;
        else if (kw == "final") mods.is_final = true;
        else if (kw == "abstract") mods.is_abstract = true;
        else if (kw == "native") mods.is_native = true;
        advance();
        continue;
      }
      return mods;
    }
  }

  // ---- compilation unit ------------------------------------------------------

  std::unique_ptr<CompilationUnit> parse_unit() {
    auto unit = std::make_unique<CompilationUnit>();
    size_t unit_start = pos_;
    while (!at_eof()) {
      size_t before = pos_;
      if (at_keyword("package") || at_keyword("import")) {
        while (!at_eof() && !accept(TokenKind::Semicolon) &&
               !at(TokenKind::LBrace)) {
          advance();
        }
        continue;
      }
      if (at(TokenKind::Semicolon)) {
        advance();
        continue;
      }
      size_t start = pos_;
      Modifiers mods = parse_modifiers();
      if (at_keyword("class") || at_keyword("interface")) {
        unit->types.push_back(parse_type_decl(mods, start));
      } else {
        sync_top_level(start, *unit);
      }
      if (pos_ == before) advance();
    }
    finish(*unit, unit_start);
    return unit;
  }

  void sync_top_level(size_t start, CompilationUnit& unit) {
    while (!at_eof() && !at_keyword("class") && !at_keyword("interface")) {
      advance();
    }
    if (pos_ > start) {
      auto err = std::make_unique<ErrorStmt>();
      finish(*err, start);
      unit.types.push_back(std::move(err));
      unit.error = true;
    }
  }

  NodePtr parse_type_decl(Modifiers mods, size_t start) {
    DepthGuard guard(*this);
    if (!guard.ok) {
      advance();
      auto err = std::make_unique<ErrorStmt>();
      finish(*err, start);
      return err;
    }
    auto cls = std::make_unique<ClassDecl>();
    cls->mods = mods;
    cls->is_interface = at_keyword("interface");
    advance();  // class / interface
    bool name_was_keyword = false;
    cls->name =
        parse_decl_name("a class name", &cls->name_span, &name_was_keyword);
    if (cls->name.empty()) cls->error = true;
    if (at(TokenKind::Lt)) {
      size_t past = scan_generic_group(pos_);
      if (past != 0) {
        while (pos_ < past) advance();
      }
    }
    while (at_keyword("extends") || at_keyword("implements")) {
      advance();
      parse_type();
      while (accept(TokenKind::Comma)) parse_type();
    }
    class_stack_.push_back({cls->is_interface, mods.is_abstract});
    if (accept(TokenKind::LBrace)) {
      while (!at_eof() && !at(TokenKind::RBrace)) {
        size_t before = pos_;
        parse_member(*cls);
        if (pos_ == before) advance();
      }
      if (!accept(TokenKind::RBrace)) cls->error = true;
    } else {
      cls->error = true;
    }
    class_stack_.pop_back();
    finish(*cls, start);
    return cls;
  }

  // ---- class members --------------------------------------------------------

  void parse_member(ClassDecl& cls) {
    if (accept(TokenKind::Semicolon)) return;
    wrap_budget_ = kWrapBudgetPerStatement;
    size_t start = pos_;
    Modifiers mods = parse_modifiers();

    if (at_keyword("class") || at_keyword("interface")) {
      cls.members.push_back(parse_type_decl(mods, start));
      return;
    }
    if (at(TokenKind::LBrace)) {
      auto init = std::make_unique<InitializerBlock>();
      init->is_static = mods.is_static;
      init->body = parse_block();
      finish(*init, start);
      cls.members.push_back(std::move(init));
      return;
    }
    // Constructor: a bare name directly followed by its parameter list.
    if (at(TokenKind::Identifier) && peek_tok().kind == TokenKind::LParen) {
      auto method = std::make_unique<MethodDecl>();
      method->mods = mods;
      method->is_constructor = true;
      method->name = std::string(cur().text);
      method->name_span = cur().span;
      method->return_type.name = "void";
      method->return_type.qualified = "void";
      method->return_type.primitive = true;
      advance();
      parse_method_rest(*method, start);
      cls.members.push_back(std::move(method));
      return;
    }

    TypeRef type = parse_type();
    if (!type.valid) {
      sync_member(start, cls);
      return;
    }
    Span name_span;
    bool name_was_keyword = false;
    std::string name =
        parse_decl_name("a member name", &name_span, &name_was_keyword);
    if (name.empty()) {
      sync_member(start, cls);
      return;
    }
    if (at(TokenKind::LParen)) {
      auto method = std::make_unique<MethodDecl>();
      method->mods = mods;
      method->return_type = type;
      method->name = std::move(name);
      method->name_span = name_span;
      parse_method_rest(*method, start);
      cls.members.push_back(std::move(method));
      return;
    }
    auto field = std::make_unique<FieldDecl>();
    field->mods = mods;
    field->type = type;
    parse_declarators(field->declarators, std::move(name), name_span,
                      name_was_keyword);
    if (!accept(TokenKind::Semicolon)) field->error = true;
    finish(*field, start);
    cls.members.push_back(std::move(field));
  }

  void sync_member(size_t start, ClassDecl& cls) {
    while (!at_eof() && !at(TokenKind::RBrace)) {
      if (accept(TokenKind::Semicolon)) break;
      if (at(TokenKind::Keyword) &&
          (is_modifier_word(cur().text) || is_primitive_type_word(cur().text) ||
           cur().text == "class" || cur().text == "interface") &&
          pos_ > start) {
        break;
      }
      advance();
    }
    if (pos_ > start) {
      auto err = std::make_unique<ErrorStmt>();
      finish(*err, start);
      cls.members.push_back(std::move(err));
      cls.error = true;
    }
  }

  void parse_method_rest(MethodDecl& method, size_t start) {
    accept(TokenKind::LParen);
    while (!at_eof() && !at(TokenKind::RParen)) {
      size_t before = pos_;
      auto param = std::make_unique<Parameter>();
      size_t param_start = pos_;
      param->mods = parse_modifiers();
      param->type = parse_type();
      accept(TokenKind::Ellipsis);
      bool was_keyword = false;
      param->name =
          parse_decl_name("a parameter name", &param->name_span, &was_keyword);
      while (at(TokenKind::LBracket) &&
             peek_tok().kind == TokenKind::RBracket) {
        advance();
        advance();
      }
      finish(*param, param_start);
      if (!param->type.valid && param->name.empty()) {
        param->error = true;
        method.error = true;
        if (!accept(TokenKind::Comma)) {
          if (pos_ == before) advance();
        }
        continue;
      }
      method.params.push_back(std::move(param));
      if (!accept(TokenKind::Comma)) break;
      if (pos_ == before) advance();
    }
    if (!accept(TokenKind::RParen)) method.error = true;
    if (accept_keyword("throws")) {
      parse_type();
      while (accept(TokenKind::Comma)) parse_type();
    }
    if (at(TokenKind::LBrace)) {
      method.body = parse_block();
    } else if (at(TokenKind::Semicolon)) {
      Span semi_span = cur().span;
      advance();
      if (at(TokenKind::LBrace)) {
        emit(RecoveryKind::SemicolonAfterMethodHeader, semi_span,
             "the method body '{'", "';'",
             "dropped the ';' and attached the block as the body",
             method.name);
        method.body = parse_block();
      } else {
        bool allows_bodyless = method.mods.is_native ||
                               (!class_stack_.empty() &&
                                (class_stack_.back().is_interface ||
                                 class_stack_.back().is_abstract));
        if (!allows_bodyless) {
          emit(RecoveryKind::SemicolonAfterMethodHeader, semi_span,
               "a method body '{ ... }'", "';'",
               "kept the declaration without a body", method.name);
        }
      }
    } else {
      method.error = true;
    }
    finish(method, start);
  }

  void parse_declarators(std::vector<Declarator>& out, std::string first_name,
                         Span first_span, bool first_was_keyword) {
    Declarator first;
    first.name = std::move(first_name);
    first.name_span = first_span;
    first.name_was_keyword = first_was_keyword;
    parse_declarator_rest(first);
    out.push_back(std::move(first));
    while (at(TokenKind::Comma) && !for_semi_marked(pos_)) {
      advance();
      Declarator d;
      bool was_keyword = false;
      d.name = parse_decl_name("a variable name", &d.name_span, &was_keyword);
      d.name_was_keyword = was_keyword;
      if (d.name.empty()) {
        out.push_back(std::move(d));
        break;
      }
      parse_declarator_rest(d);
      out.push_back(std::move(d));
    }
  }

  void parse_declarator_rest(Declarator& d) {
    while (at(TokenKind::LBracket) && peek_tok().kind == TokenKind::RBracket) {
      ++d.extra_dims;
      advance();
      advance();
    }
    if (accept(TokenKind::Assign)) {
      d.init = parse_expression();
    }
  }

  // ---- statements -------------------------------------------------------------

  std::unique_ptr<Block> parse_block() {
    auto block = std::make_unique<Block>();
    size_t start = pos_;
    accept(TokenKind::LBrace);
    while (!at_eof() && !at(TokenKind::RBrace)) {
      size_t before = pos_;
      block->statements.push_back(parse_statement());
      if (pos_ == before) advance();
    }
    if (!accept(TokenKind::RBrace)) block->error = true;
    finish(*block, start);
    return block;
  }

  std::unique_ptr<Stmt> parse_statement() {
    DepthGuard guard(*this);
    if (!guard.ok) return error_sync_statement();
    wrap_budget_ = kWrapBudgetPerStatement;
    size_t start = pos_;
    switch (cur().kind) {
      case TokenKind::Semicolon: {
        auto stmt = std::make_unique<EmptyStmt>();
        advance();
        finish(*stmt, start);
        return stmt;
      }
      case TokenKind::LBrace:
        return parse_block();
      case TokenKind::Keyword: {
        std::string_view kw = cur().text;
        if (kw == "if") return parse_if();
        if (kw == "while") return parse_while();
        if (kw == "do") return parse_do_while();
        if (kw == "for") return parse_for();
        if (kw == "switch") return parse_switch();
        if (kw == "return") return parse_return();
        if (kw == "break" || kw == "continue") return parse_break_continue();
        if (kw == "throw") return parse_throw();
        if (kw == "final" || is_primitive_type_word(kw)) {
          return parse_local_decl_statement();
        }
        if (is_expression_keyword(kw)) break;  // expression statement
        return error_sync_statement();
      }
      case TokenKind::At:
        return parse_local_decl_statement();
      default:
        break;
    }
    if (is_local_decl_start()) return parse_local_decl_statement();
    return parse_expression_statement();
  }

  std::unique_ptr<Stmt> parse_expression_statement() {
    size_t start = pos_;
    auto expr = parse_expression();
    if (pos_ == start) return error_sync_statement();
    auto stmt = std::make_unique<ExprStmt>();
    stmt->expr = std::move(expr);
    if (!accept(TokenKind::Semicolon)) stmt->error = true;
    finish(*stmt, start);
    return stmt;
  }

  std::unique_ptr<Stmt> parse_local_decl_statement() {
    size_t start = pos_;
    auto decl = std::make_unique<LocalVarDecl>();
    decl->mods = parse_modifiers();
    decl->type = parse_type();
    if (!decl->type.valid) return error_sync_statement();
    bool was_keyword = false;
    Span name_span;
    std::string name =
        parse_decl_name("a variable name", &name_span, &was_keyword);
    if (name.empty()) {
      decl->error = true;
      finish(*decl, start);
      return decl;
    }
    parse_declarators(decl->declarators, std::move(name), name_span,
                      was_keyword);
    if (!accept(TokenKind::Semicolon)) decl->error = true;
    finish(*decl, start);
    return decl;
  }

  // Skip-to-sync for statements the subset does not model. Consumes at least
  // one token, stops before `{`/`}` and after `;`.
  std::unique_ptr<Stmt> error_sync_statement() {
    size_t start = pos_;
    auto err = std::make_unique<ErrorStmt>();
    if (!at_eof() && !at(TokenKind::RBrace)) advance();
    while (!at_eof()) {
      if (accept(TokenKind::Semicolon)) break;
      if (at(TokenKind::RBrace) || at(TokenKind::LBrace)) break;
      if (at(TokenKind::Keyword) && is_statement_keyword(cur().text)) break;
      advance();
    }
    finish(*err, start);
    return err;
  }

  // Condition after if/while: normally parenthesized; a `{` here is the
  // enumerated braced-condition shape.
  std::unique_ptr<Expr> parse_condition(std::string_view keyword) {
    if (at(TokenKind::LParen)) {
      advance();
      auto cond = parse_expression();
      accept(TokenKind::RParen);
      return cond;
    }
    if (at(TokenKind::LBrace)) {
      size_t brace_start = pos_;
      Span open_span = cur().span;
      advance();
      auto cond = parse_expression();
      accept(TokenKind::RBrace);
      emit(RecoveryKind::BraceCondition, span_from(brace_start), "'('", "'{'",
           "read the braces as parentheses around the condition",
           std::string(keyword));
      (void)open_span;
      return cond;
    }
    return parse_expression();
  }

  std::unique_ptr<Stmt> parse_if() {
    size_t start = pos_;
    auto stmt = std::make_unique<IfStmt>();
    advance();  // if
    stmt->condition = parse_condition("if");
    stmt->then_branch = parse_statement();
    if (accept_keyword("else")) {
      stmt->else_branch = parse_statement();
    }
    finish(*stmt, start);
    return stmt;
  }

  std::unique_ptr<Stmt> parse_while() {
    size_t start = pos_;
    auto stmt = std::make_unique<WhileStmt>();
    advance();  // while
    stmt->condition = parse_condition("while");
    stmt->body = parse_statement();
    finish(*stmt, start);
    return stmt;
  }

  std::unique_ptr<Stmt> parse_do_while() {
    size_t start = pos_;
    auto stmt = std::make_unique<DoWhileStmt>();
    advance();  // do
    stmt->body = parse_statement();
    if (accept_keyword("while")) {
      stmt->condition = parse_condition("while");
      if (!accept(TokenKind::Semicolon)) stmt->error = true;
    } else {
      stmt->error = true;
    }
    finish(*stmt, start);
    return stmt;
  }

  std::unique_ptr<Stmt> parse_return() {
    size_t start = pos_;
    auto stmt = std::make_unique<ReturnStmt>();
    advance();
    if (!at(TokenKind::Semicolon) && !at(TokenKind::RBrace) && !at_eof()) {
      stmt->value = parse_expression();
    }
    if (!accept(TokenKind::Semicolon)) stmt->error = true;
    finish(*stmt, start);
    return stmt;
  }

  std::unique_ptr<Stmt> parse_break_continue() {
    size_t start = pos_;
    bool is_break = at_keyword("break");
    advance();
    std::string label;
    if (at(TokenKind::Identifier)) {
      label = std::string(cur().text);
      advance();
    }
    std::unique_ptr<Stmt> stmt;
    if (is_break) {
      auto s = std::make_unique<BreakStmt>();
      s->label = std::move(label);
      stmt = std::move(s);
    } else {
      auto s = std::make_unique<ContinueStmt>();
      s->label = std::move(label);
      stmt = std::move(s);
    }
    if (!accept(TokenKind::Semicolon)) stmt->error = true;
    finish(*stmt, start);
    return stmt;
  }

  std::unique_ptr<Stmt> parse_throw() {
    size_t start = pos_;
    auto stmt = std::make_unique<ThrowStmt>();
    advance();
    stmt->value = parse_expression();
    if (!accept(TokenKind::Semicolon)) stmt->error = true;
    finish(*stmt, start);
    return stmt;
  }

  // ---- for headers ------------------------------------------------------------

  bool for_semi_marked(size_t index) const {
    return std::find(for_semi_marks_.begin(), for_semi_marks_.end(), index) !=
           for_semi_marks_.end();
  }

  bool at_for_separator() const {
    return at(TokenKind::Semicolon) || for_semi_marked(pos_);
  }

  // Consumes `;` — or a comma that the header prescan marked as standing in
  // for one, recording the comma-in-for-header event.
  void expect_for_separator() {
    if (accept(TokenKind::Semicolon)) return;
    if (at(TokenKind::Comma) && for_semi_marked(pos_)) {
      emit(RecoveryKind::CommaInForHeader, cur().span, "';'", "','",
           "treated the ',' as ';'", ",");
      advance();
    }
  }

  std::unique_ptr<Stmt> parse_for() {
    size_t start = pos_;
    auto stmt = std::make_unique<ForStmt>();
    advance();  // for
    if (!accept(TokenKind::LParen)) {
      stmt->error = true;
      stmt->body = parse_statement();
      finish(*stmt, start);
      return stmt;
    }

    // Prescan to the matching ')': find top-level separators, decide whether
    // the enumerated comma-for-semicolon repair applies, spot foreach.
    std::vector<size_t> semis;
    std::vector<size_t> commas;
    bool has_colon = false;
    {
      int paren = 1, bracket = 0, brace = 0;
      size_t i = pos_;
      while (i < tokens_.size()) {
        TokenKind k = tok_at(i).kind;
        if (k == TokenKind::Eof) break;
        if (k == TokenKind::LParen) ++paren;
        else if (k == TokenKind::RParen) {
          --paren;
          if (paren == 0) break;
        }
        else if (k == TokenKind::LBracket) ++bracket;
        else if (k == TokenKind::RBracket) --bracket;
        else if (k == TokenKind::LBrace) {
          if (paren == 1) break;  // runaway header
          ++brace;
        }
        else if (k == TokenKind::RBrace) {
          if (paren == 1 && brace == 0) break;
          --brace;
        }
        else if (paren == 1 && bracket == 0 && brace == 0) {
          if (k == TokenKind::Semicolon) semis.push_back(i);
          else if (k == TokenKind::Comma) commas.push_back(i);
          else if (k == TokenKind::Colon) has_colon = true;
        }
        ++i;
      }
    }

    if (has_colon && semis.empty()) {
      // Enhanced for: `for (Type name : iterable) body`.
      stmt->is_foreach = true;
      auto decl = std::make_unique<LocalVarDecl>();
      size_t decl_start = pos_;
      decl->mods = parse_modifiers();
      decl->type = parse_type();
      Declarator d;
      bool was_keyword = false;
      d.name = parse_decl_name("a variable name", &d.name_span, &was_keyword);
      d.name_was_keyword = was_keyword;
      if (d.name.empty()) decl->error = true;
      decl->declarators.push_back(std::move(d));
      finish(*decl, decl_start);
      stmt->init_decl = std::move(decl);
      if (accept(TokenKind::Colon)) {
        stmt->iterable = parse_expression();
      } else {
        stmt->error = true;
      }
      if (!accept(TokenKind::RParen)) stmt->error = true;
      stmt->body = parse_statement();
      finish(*stmt, start);
      return stmt;
    }

    // The comma-for-semicolon repair applies to the two unambiguous novice
    // shapes; everything else parses as written.
    if (semis.empty() && commas.size() == 2) {
      for_semi_marks_.insert(for_semi_marks_.end(), commas.begin(),
                             commas.end());
    } else if (semis.size() == 1 && commas.size() == 1) {
      for_semi_marks_.push_back(commas.front());
    }

    // init
    if (!at_for_separator() && !at(TokenKind::RParen)) {
      if (at_keyword("final") || at(TokenKind::At) || is_local_decl_start()) {
        auto decl = std::make_unique<LocalVarDecl>();
        size_t decl_start = pos_;
        decl->mods = parse_modifiers();
        decl->type = parse_type();
        if (decl->type.valid) {
          bool was_keyword = false;
          Span name_span;
          std::string name =
              parse_decl_name("a variable name", &name_span, &was_keyword);
          if (!name.empty()) {
            parse_declarators(decl->declarators, std::move(name), name_span,
                              was_keyword);
          } else {
            decl->error = true;
          }
        } else {
          decl->error = true;
        }
        finish(*decl, decl_start);
        stmt->init_decl = std::move(decl);
      } else {
        stmt->init_exprs.push_back(parse_expression());
        while (at(TokenKind::Comma) && !for_semi_marked(pos_)) {
          advance();
          stmt->init_exprs.push_back(parse_expression());
        }
      }
    }
    expect_for_separator();

    // condition
    if (!at_for_separator() && !at(TokenKind::RParen)) {
      stmt->condition = parse_expression();
    }
    expect_for_separator();

    // updates
    if (!at(TokenKind::RParen) && !at_eof()) {
      size_t guard = pos_;
      stmt->updates.push_back(parse_expression());
      while (accept(TokenKind::Comma)) {
        stmt->updates.push_back(parse_expression());
      }
      if (pos_ == guard) advance();
    }
    if (!accept(TokenKind::RParen)) stmt->error = true;
    stmt->body = parse_statement();
    finish(*stmt, start);

    // Marks are per-header; clear the ones inside the range we consumed.
    std::erase_if(for_semi_marks_, [&](size_t i) { return i < pos_; });
    return stmt;
  }

  // ---- switch ----------------------------------------------------------------

  std::unique_ptr<Stmt> parse_switch() {
    size_t start = pos_;
    auto stmt = std::make_unique<SwitchStmt>();
    advance();  // switch
    if (at(TokenKind::LParen)) {
      advance();
      stmt->selector = parse_expression();
      if (!accept(TokenKind::RParen)) stmt->error = true;
    } else if (!at(TokenKind::LBrace)) {
      stmt->selector = parse_expression();
    } else {
      auto missing = std::make_unique<ErrorExpr>();
      missing->span = here();
      stmt->selector = std::move(missing);
      stmt->error = true;
    }
    if (!accept(TokenKind::LBrace)) {
      stmt->error = true;
      finish(*stmt, start);
      return stmt;
    }
    CaseGroup* current = nullptr;
    while (!at_eof() && !at(TokenKind::RBrace)) {
      size_t before = pos_;
      if (at_keyword("case") || at_keyword("default")) {
        bool is_default = at_keyword("default");
        size_t label_start = pos_;
        advance();
        std::unique_ptr<Expr> label;
        if (!is_default) label = parse_expression();
        if (!accept(TokenKind::Colon)) {
          if (current == nullptr || !current->statements.empty()) {
            stmt->error = true;
          }
        }
        Span label_span = span_from(label_start);
        if (current == nullptr || !current->statements.empty()) {
          auto group = std::make_unique<CaseGroup>();
          group->labels_span = label_span;
          current = group.get();
          stmt->groups.push_back(std::move(group));
        } else {
          current->labels_span = Span::join(current->labels_span, label_span);
        }
        if (is_default) current->has_default = true;
        if (label) current->labels.push_back(std::move(label));
      } else {
        if (current == nullptr) {
          auto group = std::make_unique<CaseGroup>();
          group->labels_span = here();
          current = group.get();
          stmt->groups.push_back(std::move(group));
          stmt->error = true;
        }
        current->statements.push_back(parse_statement());
      }
      if (pos_ == before) advance();
    }
    if (!accept(TokenKind::RBrace)) stmt->error = true;
    for (auto& group : stmt->groups) {
      Span s = group->labels_span;
      for (auto& st : group->statements) s = Span::join(s, st->span);
      group->span = s;
    }
    finish(*stmt, start);
    return stmt;
  }

  // ---- expressions ------------------------------------------------------------

  std::unique_ptr<Expr> parse_expression() { return parse_assignment(); }

  std::unique_ptr<Expr> parse_assignment() {
    DepthGuard guard(*this);
    if (!guard.ok) return error_expr_here();
    size_t start = pos_;
    auto lhs = parse_conditional();
    if (is_assign_op(cur().kind)) {
      auto assign = std::make_unique<AssignExpr>();
      assign->op = cur().kind;
      assign->op_span = cur().span;
      assign->target = std::move(lhs);
      advance();
      assign->value = parse_assignment();
      finish(*assign, start);
      return assign;
    }
    return lhs;
  }

  std::unique_ptr<Expr> parse_conditional() {
    size_t start = pos_;
    auto cond = parse_binary(1);
    if (at(TokenKind::Question)) {
      auto expr = std::make_unique<ConditionalExpr>();
      expr->condition = std::move(cond);
      advance();
      expr->then_value = parse_assignment();
      accept(TokenKind::Colon);
      expr->else_value = parse_assignment();
      finish(*expr, start);
      return expr;
    }
    return cond;
  }

  std::unique_ptr<Expr> parse_binary(int min_prec) {
    size_t start = pos_;
    auto lhs = parse_unary();
    while (true) {
      if (at_keyword("instanceof") && min_prec <= 7) {
        if (!take_wrap_budget()) break;
        auto expr = std::make_unique<BinaryExpr>();
        expr->op = BinaryOp::InstanceOf;
        expr->op_span = cur().span;
        advance();
        expr->lhs = std::move(lhs);
        TypeRef type = parse_type();
        auto rhs = std::make_unique<IdentifierExpr>();
        rhs->name = type.qualified;
        rhs->span = type.span;
        expr->rhs = std::move(rhs);
        finish(*expr, start);
        lhs = std::move(expr);
        continue;
      }
      int prec = binary_precedence(cur().kind);
      if (prec < min_prec) break;
      if (!take_wrap_budget()) break;
      TokenKind op_kind = cur().kind;
      Span op_span = cur().span;
      if (op_kind == TokenKind::FatArrow) {
        emit(RecoveryKind::ArrowComparator, op_span, "'>='", "'=>'",
             "treated '=>' as '>='", "=>");
      }
      advance();
      auto rhs = parse_binary(prec + 1);
      auto expr = std::make_unique<BinaryExpr>();
      expr->op = binary_op_for(op_kind);
      expr->op_span = op_span;
      expr->lhs = std::move(lhs);
      expr->rhs = std::move(rhs);
      finish(*expr, start);
      lhs = std::move(expr);
    }
    return lhs;
  }

  std::unique_ptr<Expr> parse_unary() {
    DepthGuard guard(*this);
    if (!guard.ok) return error_expr_here();
    size_t start = pos_;
    UnaryOp op;
    switch (cur().kind) {
      case TokenKind::Plus: op = UnaryOp::Plus; break;
      case TokenKind::Minus: op = UnaryOp::Minus; break;
      case TokenKind::Bang: op = UnaryOp::Not; break;
      case TokenKind::Tilde: op = UnaryOp::BitNot; break;
      case TokenKind::PlusPlus: op = UnaryOp::PreInc; break;
      case TokenKind::MinusMinus: op = UnaryOp::PreDec; break;
      case TokenKind::LParen: {
        if (auto cast = try_parse_cast()) return cast;
        return parse_postfix();
      }
      default:
        return parse_postfix();
    }
    advance();
    auto expr = std::make_unique<UnaryExpr>();
    expr->op = op;
    expr->operand = parse_unary();
    finish(*expr, start);
    return expr;
  }

  std::unique_ptr<Expr> try_parse_cast() {
    size_t type_end = 0;
    if (!scan_type_shape(pos_ + 1, &type_end)) return nullptr;
    if (tok_at(type_end).kind != TokenKind::RParen) return nullptr;
    const Token& first = tok_at(pos_ + 1);
    bool primitive =
        first.kind == TokenKind::Keyword && is_primitive_type_word(first.text);
    const Token& next = tok_at(type_end + 1);
    bool next_starts_operand = false;
    switch (next.kind) {
      case TokenKind::Identifier:
      case TokenKind::IntLiteral:
      case TokenKind::FloatLiteral:
      case TokenKind::CharLiteral:
      case TokenKind::StringLiteral:
      case TokenKind::LParen:
      case TokenKind::Bang:
      case TokenKind::Tilde:
        next_starts_operand = true;
        break;
      case TokenKind::Keyword:
        next_starts_operand = is_expression_keyword(next.text);
        break;
      case TokenKind::Plus:
      case TokenKind::Minus:
        next_starts_operand = primitive;  // `(int) -x` casts, `(a) - x` subtracts
        break;
      default:
        break;
    }
    if (!next_starts_operand) return nullptr;
    size_t start = pos_;
    advance();  // '('
    auto cast = std::make_unique<CastExpr>();
    cast->target = parse_type();
    accept(TokenKind::RParen);
    cast->operand = parse_unary();
    finish(*cast, start);
    return cast;
  }

  std::unique_ptr<Expr> parse_postfix() {
    size_t start = pos_;
    auto expr = parse_primary();
    while (true) {
      if (at(TokenKind::Dot)) {
        const Token& member = peek_tok();
        if (member.kind == TokenKind::Identifier ||
            member.kind == TokenKind::Keyword) {
          if (!take_wrap_budget()) break;
          advance();
          auto access = std::make_unique<FieldAccessExpr>();
          access->member = std::string(cur().text);
          access->member_span = cur().span;
          advance();
          access->object = std::move(expr);
          finish(*access, start);
          expr = std::move(access);
          continue;
        }
        break;
      }
      if (at(TokenKind::LParen)) {
        if (!take_wrap_budget()) break;
        auto call = std::make_unique<CallExpr>();
        call->callee = std::move(expr);
        advance();
        parse_args(call->args);
        accept(TokenKind::RParen);
        finish(*call, start);
        expr = std::move(call);
        continue;
      }
      if (at(TokenKind::LBracket)) {
        if (!take_wrap_budget()) break;
        auto access = std::make_unique<ArrayAccessExpr>();
        access->array = std::move(expr);
        advance();
        access->index = parse_expression();
        accept(TokenKind::RBracket);
        finish(*access, start);
        expr = std::move(access);
        continue;
      }
      if (at(TokenKind::PlusPlus) || at(TokenKind::MinusMinus)) {
        if (!take_wrap_budget()) break;
        auto unary = std::make_unique<UnaryExpr>();
        unary->op = at(TokenKind::PlusPlus) ? UnaryOp::PostInc : UnaryOp::PostDec;
        advance();
        unary->operand = std::move(expr);
        finish(*unary, start);
        expr = std::move(unary);
        continue;
      }
      break;
    }
    return expr;
  }

  void parse_args(std::vector<std::unique_ptr<Expr>>& args) {
    while (!at_eof() && !at(TokenKind::RParen)) {
      size_t before = pos_;
      args.push_back(parse_expression());
      if (!accept(TokenKind::Comma)) break;
      if (pos_ == before) advance();
    }
  }

  std::unique_ptr<Expr> parse_primary() {
    size_t start = pos_;
    switch (cur().kind) {
      case TokenKind::IntLiteral:
      case TokenKind::FloatLiteral:
      case TokenKind::CharLiteral:
      case TokenKind::StringLiteral: {
        auto lit = std::make_unique<LiteralExpr>();
        switch (cur().kind) {
          case TokenKind::IntLiteral: lit->type = LiteralType::Int; break;
          case TokenKind::FloatLiteral: lit->type = LiteralType::Float; break;
          case TokenKind::CharLiteral: lit->type = LiteralType::Char; break;
          default: lit->type = LiteralType::String; break;
        }
        lit->text = std::string(cur().text);
        advance();
        finish(*lit, start);
        return lit;
      }
      case TokenKind::Identifier: {
        auto ident = std::make_unique<IdentifierExpr>();
        ident->name = std::string(cur().text);
        advance();
        finish(*ident, start);
        return ident;
      }
      case TokenKind::Keyword: {
        std::string_view kw = cur().text;
        if (kw == "true" || kw == "false" || kw == "null") {
          auto lit = std::make_unique<LiteralExpr>();
          lit->type = kw == "null" ? LiteralType::Null : LiteralType::Bool;
          lit->text = std::string(kw);
          advance();
          finish(*lit, start);
          return lit;
        }
        if (kw == "this" || kw == "super") {
          auto ident = std::make_unique<IdentifierExpr>();
          ident->name = std::string(kw);
          advance();
          finish(*ident, start);
          return ident;
        }
        if (kw == "new") return parse_new();
        break;
      }
      case TokenKind::LParen: {
        advance();
        auto paren = std::make_unique<ParenExpr>();
        paren->inner = parse_expression();
        accept(TokenKind::RParen);
        finish(*paren, start);
        return paren;
      }
      case TokenKind::LBrace:
        return parse_array_init();
      default:
        break;
    }
    // Not the start of any expression. Leave delimiters for the caller;
    // consume anything else so parsing always makes progress.
    (void)start;
    return error_expr_here();
  }

  std::unique_ptr<Expr> parse_array_init() {
    size_t start = pos_;
    auto init = std::make_unique<ArrayInitExpr>();
    advance();  // '{'
    while (!at_eof() && !at(TokenKind::RBrace)) {
      size_t before = pos_;
      init->elements.push_back(parse_expression());
      if (!accept(TokenKind::Comma)) break;
      if (pos_ == before) advance();
    }
    if (!accept(TokenKind::RBrace)) init->error = true;
    finish(*init, start);
    return init;
  }

  std::unique_ptr<Expr> parse_new() {
    size_t start = pos_;
    auto expr = std::make_unique<NewExpr>();
    advance();  // new
    expr->type = parse_type();
    if (!expr->type.valid) expr->error = true;
    if (at(TokenKind::LParen)) {
      advance();
      parse_args(expr->args);
      accept(TokenKind::RParen);
      if (at(TokenKind::LBrace)) {
        // Anonymous class body: consumed, not modeled.
        skip_balanced(TokenKind::LBrace, TokenKind::RBrace);
      }
    } else if (at(TokenKind::LBracket) || expr->type.array_dims > 0) {
      expr->is_array = true;
      while (at(TokenKind::LBracket)) {
        advance();
        if (!at(TokenKind::RBracket)) {
          expr->dims.push_back(parse_expression());
        }
        if (!accept(TokenKind::RBracket)) {
          expr->error = true;
          break;
        }
      }
      if (at(TokenKind::LBrace)) expr->init = parse_array_init();
    } else if (at(TokenKind::LBrace)) {
      expr->is_array = expr->type.array_dims > 0;
      expr->init = parse_array_init();
    } else {
      expr->error = true;
    }
    finish(*expr, start);
    return expr;
  }

  struct ClassCtx {
    bool is_interface = false;
    bool is_abstract = false;
  };

  const std::vector<Token>& tokens_;
  size_t pos_ = 0;
  int depth_ = 0;
  size_t wrap_budget_ = kWrapBudgetPerStatement;
  std::vector<RecoveryEvent> events_;
  std::vector<size_t> for_semi_marks_;
  std::vector<ClassCtx> class_stack_;
};

}  // namespace

ParseResult parse(const std::vector<Token>& tokens) {
  if (tokens.empty()) {
    ParseResult result;
    result.root = std::make_unique<CompilationUnit>();
    return result;
  }
  return Parser(tokens).run();
}

}  // namespace novlint
