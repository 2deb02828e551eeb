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

#ifndef NOVLINT_AST_HPP
#define NOVLINT_AST_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "novlint/source.hpp"
#include "novlint/token.hpp"

namespace novlint {

enum class NodeKind : uint8_t {
  CompilationUnit,
  ClassDecl,
  FieldDecl,
  MethodDecl,
  Parameter,
  InitializerBlock,

  Block,
  IfStmt,
  WhileStmt,
  DoWhileStmt,
  ForStmt,
  SwitchStmt,
  CaseGroup,
  ExprStmt,
  EmptyStmt,
  LocalVarDecl,
  ReturnStmt,
  BreakStmt,
  ContinueStmt,
  ThrowStmt,
  ErrorStmt,

  AssignExpr,
  BinaryExpr,
  UnaryExpr,
  CallExpr,
  FieldAccessExpr,
  ArrayAccessExpr,
  IdentifierExpr,
  LiteralExpr,
  ConditionalExpr,
  ParenExpr,
  CastExpr,
  NewExpr,
  ArrayInitExpr,
  ErrorExpr,
};

const char* node_kind_name(NodeKind kind);

struct Node {
  NodeKind kind;
  Span span;
  bool error = false;  // content inside this node was skipped or repaired

  explicit Node(NodeKind k) : kind(k) {}
  virtual ~Node() = default;
  Node(const Node&) = delete;
  Node& operator=(const Node&) = delete;

  template <typename T>
  T* as() {
    return kind == T::kKind ? static_cast<T*>(this) : nullptr;
  }
  template <typename T>
  const T* as() const {
    return kind == T::kKind ? static_cast<const T*>(this) : nullptr;
  }
};

using NodePtr = std::unique_ptr<Node>;

struct Stmt : Node {
  using Node::Node;
};

struct Expr : Node {
  using Node::Node;
};

bool is_expr_kind(NodeKind kind);
bool is_stmt_kind(NodeKind kind);

// A declared type as written: base name, primitive flag, array depth.
// Generic arguments are consumed during parsing and not represented.
struct TypeRef {
  std::string name;       // last segment of the written name, "" when missing
  std::string qualified;  // full dotted name as written
  bool primitive = false;
  int array_dims = 0;
  Span span;
  bool valid = true;
};

struct Modifiers {
  bool is_public = false;
  bool is_private = false;
  bool is_protected = false;
  bool is_static = false;
  bool is_final = false;
  bool is_abstract = false;
  bool is_native = false;
  bool has_annotation = false;
};

struct Declarator {
  std::string name;
  Span name_span;
  int extra_dims = 0;  // trailing [] on the declarator itself
  std::unique_ptr<Expr> init;
  bool name_was_keyword = false;
};

struct CompilationUnit final : Node {
  static constexpr NodeKind kKind = NodeKind::CompilationUnit;
  CompilationUnit() : Node(kKind) {}
  std::vector<NodePtr> types;  // ClassDecl plus ErrorStmt for skipped regions
};

struct Block;

struct ClassDecl final : Node {
  static constexpr NodeKind kKind = NodeKind::ClassDecl;
  ClassDecl() : Node(kKind) {}
  std::string name;
  Span name_span;
  Modifiers mods;
  bool is_interface = false;
  std::vector<NodePtr> members;
};

struct FieldDecl final : Node {
  static constexpr NodeKind kKind = NodeKind::FieldDecl;
  FieldDecl() : Node(kKind) {}
  TypeRef type;
  Modifiers mods;
  std::vector<Declarator> declarators;
};

struct Parameter final : Node {
  static constexpr NodeKind kKind = NodeKind::Parameter;
  Parameter() : Node(kKind) {}
  TypeRef type;
  std::string name;
  Span name_span;
  Modifiers mods;
};

struct MethodDecl final : Node {
  static constexpr NodeKind kKind = NodeKind::MethodDecl;
  MethodDecl() : Node(kKind) {}
  std::string name;
  Span name_span;
  Modifiers mods;
  TypeRef return_type;  // void for constructors
  bool is_constructor = false;
  std::vector<std::unique_ptr<Parameter>> params;
  std::unique_ptr<Block> body;  // null for a body-less declaration
};

struct InitializerBlock final : Node {
  static constexpr NodeKind kKind = NodeKind::InitializerBlock;
  InitializerBlock() : Node(kKind) {}
  bool is_static = false;
  std::unique_ptr<Block> body;
};

struct Block final : Stmt {
  static constexpr NodeKind kKind = NodeKind::Block;
  Block() : Stmt(kKind) {}
  std::vector<std::unique_ptr<Stmt>> statements;
};

struct IfStmt final : Stmt {
  static constexpr NodeKind kKind = NodeKind::IfStmt;
  IfStmt() : Stmt(kKind) {}
  std::unique_ptr<Expr> condition;
  std::unique_ptr<Stmt> then_branch;
  std::unique_ptr<Stmt> else_branch;  // may be null
};

struct WhileStmt final : Stmt {
  static constexpr NodeKind kKind = NodeKind::WhileStmt;
  WhileStmt() : Stmt(kKind) {}
  std::unique_ptr<Expr> condition;
  std::unique_ptr<Stmt> body;
};

struct DoWhileStmt final : Stmt {
  static constexpr NodeKind kKind = NodeKind::DoWhileStmt;
  DoWhileStmt() : Stmt(kKind) {}
  std::unique_ptr<Stmt> body;
  std::unique_ptr<Expr> condition;
};

struct LocalVarDecl;

struct ForStmt final : Stmt {
  static constexpr NodeKind kKind = NodeKind::ForStmt;
  ForStmt() : Stmt(kKind) {}
  // Classic header: init is either one declaration or an expression list.
  std::unique_ptr<LocalVarDecl> init_decl;
  std::vector<std::unique_ptr<Expr>> init_exprs;
  std::unique_ptr<Expr> condition;  // may be null
  std::vector<std::unique_ptr<Expr>> updates;
  // Enhanced form `for (T x : e)` reuses init_decl for the variable.
  bool is_foreach = false;
  std::unique_ptr<Expr> iterable;
  std::unique_ptr<Stmt> body;
};

struct CaseGroup final : Node {
  static constexpr NodeKind kKind = NodeKind::CaseGroup;
  CaseGroup() : Node(kKind) {}
  std::vector<std::unique_ptr<Expr>> labels;  // one per `case` label
  bool has_default = false;
  Span labels_span;  // covers the labels only, for diagnostics
  std::vector<std::unique_ptr<Stmt>> statements;
};

struct SwitchStmt final : Stmt {
  static constexpr NodeKind kKind = NodeKind::SwitchStmt;
  SwitchStmt() : Stmt(kKind) {}
  std::unique_ptr<Expr> selector;
  std::vector<std::unique_ptr<CaseGroup>> groups;
};

struct ExprStmt final : Stmt {
  static constexpr NodeKind kKind = NodeKind::ExprStmt;
  ExprStmt() : Stmt(kKind) {}
  std::unique_ptr<Expr> expr;
};

struct EmptyStmt final : Stmt {
  static constexpr NodeKind kKind = NodeKind::EmptyStmt;
  EmptyStmt() : Stmt(kKind) {}
};

struct LocalVarDecl final : Stmt {
  static constexpr NodeKind kKind = NodeKind::LocalVarDecl;
  LocalVarDecl() : Stmt(kKind) {}
  TypeRef type;
  Modifiers mods;
  std::vector<Declarator> declarators;
};

struct ReturnStmt final : Stmt {
  static constexpr NodeKind kKind = NodeKind::ReturnStmt;
  ReturnStmt() : Stmt(kKind) {}
  std::unique_ptr<Expr> value;  // may be null
};

struct BreakStmt final : Stmt {
  static constexpr NodeKind kKind = NodeKind::BreakStmt;
  BreakStmt() : Stmt(kKind) {}
  std::string label;
};

struct ContinueStmt final : Stmt {
  static constexpr NodeKind kKind = NodeKind::ContinueStmt;
  ContinueStmt() : Stmt(kKind) {}
  std::string label;
};

struct ThrowStmt final : Stmt {
  static constexpr NodeKind kKind = NodeKind::ThrowStmt;
  ThrowStmt() : Stmt(kKind) {}
  std::unique_ptr<Expr> value;
};

struct ErrorStmt final : Stmt {
  static constexpr NodeKind kKind = NodeKind::ErrorStmt;
  ErrorStmt() : Stmt(kKind) { error = true; }
};

struct AssignExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::AssignExpr;
  AssignExpr() : Expr(kKind) {}
  std::unique_ptr<Expr> target;
  TokenKind op = TokenKind::Assign;  // Assign or a compound-assignment kind
  Span op_span;
  std::unique_ptr<Expr> value;
};

enum class BinaryOp : uint8_t {
  Mul,
  Div,
  Mod,
  Add,
  Sub,
  Shl,
  Shr,
  UShr,
  Lt,
  Gt,
  LtEq,
  GtEq,
  InstanceOf,
  Eq,
  NotEq,
  BitAnd,
  BitXor,
  BitOr,
  LogAnd,
  LogOr,
};

const char* binary_op_spelling(BinaryOp op);

struct BinaryExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::BinaryExpr;
  BinaryExpr() : Expr(kKind) {}
  BinaryOp op = BinaryOp::Add;
  Span op_span;
  std::unique_ptr<Expr> lhs;
  std::unique_ptr<Expr> rhs;
};

enum class UnaryOp : uint8_t {
  Plus,
  Minus,
  Not,
  BitNot,
  PreInc,
  PreDec,
  PostInc,
  PostDec,
};

struct UnaryExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::UnaryExpr;
  UnaryExpr() : Expr(kKind) {}
  UnaryOp op = UnaryOp::Plus;
  std::unique_ptr<Expr> operand;
};

struct CallExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::CallExpr;
  CallExpr() : Expr(kKind) {}
  std::unique_ptr<Expr> callee;  // IdentifierExpr or FieldAccessExpr
  std::vector<std::unique_ptr<Expr>> args;
};

struct FieldAccessExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::FieldAccessExpr;
  FieldAccessExpr() : Expr(kKind) {}
  std::unique_ptr<Expr> object;
  std::string member;
  Span member_span;
};

struct ArrayAccessExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::ArrayAccessExpr;
  ArrayAccessExpr() : Expr(kKind) {}
  std::unique_ptr<Expr> array;
  std::unique_ptr<Expr> index;
};

struct IdentifierExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::IdentifierExpr;
  IdentifierExpr() : Expr(kKind) {}
  std::string name;  // includes `this` and `super`
};

enum class LiteralType : uint8_t { Int, Float, Char, String, Bool, Null };

struct LiteralExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::LiteralExpr;
  LiteralExpr() : Expr(kKind) {}
  LiteralType type = LiteralType::Int;
  std::string text;  // verbatim spelling, quotes included
};

struct ConditionalExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::ConditionalExpr;
  ConditionalExpr() : Expr(kKind) {}
  std::unique_ptr<Expr> condition;
  std::unique_ptr<Expr> then_value;
  std::unique_ptr<Expr> else_value;
};

struct ParenExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::ParenExpr;
  ParenExpr() : Expr(kKind) {}
  std::unique_ptr<Expr> inner;
};

struct CastExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::CastExpr;
  CastExpr() : Expr(kKind) {}
  TypeRef target;
  std::unique_ptr<Expr> operand;
};

struct NewExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::NewExpr;
  NewExpr() : Expr(kKind) {}
  TypeRef type;
  bool is_array = false;
  std::vector<std::unique_ptr<Expr>> args;  // constructor arguments
  std::vector<std::unique_ptr<Expr>> dims;  // array dimension sizes
  std::unique_ptr<Expr> init;               // array initializer, may be null
};

struct ArrayInitExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::ArrayInitExpr;
  ArrayInitExpr() : Expr(kKind) {}
  std::vector<std::unique_ptr<Expr>> elements;
};

struct ErrorExpr final : Expr {
  static constexpr NodeKind kKind = NodeKind::ErrorExpr;
  ErrorExpr() : Expr(kKind) { error = true; }
};

// Calls `fn` for each direct child of `node`, in source order.
void for_each_child(const Node& node, const std::function<void(const Node&)>& fn);

// Preorder walk of the whole subtree, `node` included.
void walk(const Node& node, const std::function<void(const Node&)>& fn);

// Strips ParenExpr wrappers.
const Expr* unwrap_parens(const Expr* expr);

}  // namespace novlint

#endif  // NOVLINT_AST_HPP
