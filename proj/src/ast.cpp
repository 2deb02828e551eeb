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

#include "novlint/ast.hpp"

namespace novlint {

const char* node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::CompilationUnit: return "compilation_unit";
    case NodeKind::ClassDecl: return "class_decl";
    case NodeKind::FieldDecl: return "field_decl";
    case NodeKind::MethodDecl: return "method_decl";
    case NodeKind::Parameter: return "parameter";
    case NodeKind::InitializerBlock: return "initializer_block";
    case NodeKind::Block: return "block";
    case NodeKind::IfStmt: return "if_stmt";
    case NodeKind::WhileStmt: return "while_stmt";
    case NodeKind::DoWhileStmt: return "do_while_stmt";
    case NodeKind::ForStmt: return "for_stmt";
    case NodeKind::SwitchStmt: return "switch_stmt";
    case NodeKind::CaseGroup: return "case_group";
    case NodeKind::ExprStmt: return "expr_stmt";
    case NodeKind::EmptyStmt: return "empty_stmt";
    case NodeKind::LocalVarDecl: return "local_var_decl";
    case NodeKind::ReturnStmt: return "return_stmt";
    case NodeKind::BreakStmt: return "break_stmt";
    case NodeKind::ContinueStmt: return "continue_stmt";
    case NodeKind::ThrowStmt: return "throw_stmt";
    case NodeKind::ErrorStmt: return "error_stmt";
    case NodeKind::AssignExpr: return "assign_expr";
    case NodeKind::BinaryExpr: return "binary_expr";
    case NodeKind::UnaryExpr: return "unary_expr";
    case NodeKind::CallExpr: return "call_expr";
    case NodeKind::FieldAccessExpr: return "field_access_expr";
    case NodeKind::ArrayAccessExpr: return "array_access_expr";
    case NodeKind::IdentifierExpr: return "identifier_expr";
    case NodeKind::LiteralExpr: return "literal_expr";
    case NodeKind::ConditionalExpr: return "conditional_expr";
    case NodeKind::ParenExpr: return "paren_expr";
    case NodeKind::CastExpr: return "cast_expr";
    case NodeKind::NewExpr: return "new_expr";
    case NodeKind::ArrayInitExpr: return "array_init_expr";
    case NodeKind::ErrorExpr: return "error_expr";
  }
  return "node";
}

const char* binary_op_spelling(BinaryOp op) {
  switch (op) {
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Shl: return "<<";
    case BinaryOp::Shr: return ">>";
    case BinaryOp::UShr: return ">>>";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Gt: return ">";
    case BinaryOp::LtEq: return "<=";
    case BinaryOp::GtEq: return ">=";
    case BinaryOp::InstanceOf: return "instanceof";
    case BinaryOp::Eq: return "==";
    case BinaryOp::NotEq: return "!=";
    case BinaryOp::BitAnd: return "&";
    case BinaryOp::BitXor: return "^";
    case BinaryOp::BitOr: return "|";
    case BinaryOp::LogAnd: return "&&";
    case BinaryOp::LogOr: return "||";
  }
  return "?";
}

bool is_expr_kind(NodeKind kind) {
  switch (kind) {
    case NodeKind::AssignExpr:
    case NodeKind::BinaryExpr:
    case NodeKind::UnaryExpr:
    case NodeKind::CallExpr:
    case NodeKind::FieldAccessExpr:
    case NodeKind::ArrayAccessExpr:
    case NodeKind::IdentifierExpr:
    case NodeKind::LiteralExpr:
    case NodeKind::ConditionalExpr:
    case NodeKind::ParenExpr:
    case NodeKind::CastExpr:
    case NodeKind::NewExpr:
    case NodeKind::ArrayInitExpr:
    case NodeKind::ErrorExpr:
      return true;
    default:
      return false;
  }
}

bool is_stmt_kind(NodeKind kind) {
  switch (kind) {
    case NodeKind::Block:
    case NodeKind::IfStmt:
    case NodeKind::WhileStmt:
    case NodeKind::DoWhileStmt:
    case NodeKind::ForStmt:
    case NodeKind::SwitchStmt:
    case NodeKind::ExprStmt:
    case NodeKind::EmptyStmt:
    case NodeKind::LocalVarDecl:
    case NodeKind::ReturnStmt:
    case NodeKind::BreakStmt:
    case NodeKind::ContinueStmt:
    case NodeKind::ThrowStmt:
    case NodeKind::ErrorStmt:
      return true;
    default:
      return false;
  }
}

namespace {

template <typename T>
void visit_if(const std::unique_ptr<T>& child,
              const std::function<void(const Node&)>& fn) {
  if (child) fn(*child);
}

template <typename T>
void visit_all(const std::vector<std::unique_ptr<T>>& children,
               const std::function<void(const Node&)>& fn) {
  for (const auto& child : children) {
    if (child) fn(*child);
  }
}

void visit_declarators(const std::vector<Declarator>& declarators,
                       const std::function<void(const Node&)>& fn) {
  for (const Declarator& d : declarators) {
    if (d.init) fn(*d.init);
  }
}

}  // namespace

void for_each_child(const Node& node,
                    const std::function<void(const Node&)>& fn) {
  switch (node.kind) {
    case NodeKind::CompilationUnit:
      visit_all(static_cast<const CompilationUnit&>(node).types, fn);
      break;
    case NodeKind::ClassDecl:
      visit_all(static_cast<const ClassDecl&>(node).members, fn);
      break;
    case NodeKind::FieldDecl:
      visit_declarators(static_cast<const FieldDecl&>(node).declarators, fn);
      break;
    case NodeKind::MethodDecl: {
      const auto& m = static_cast<const MethodDecl&>(node);
      visit_all(m.params, fn);
      visit_if(m.body, fn);
      break;
    }
    case NodeKind::Parameter:
      break;
    case NodeKind::InitializerBlock:
      visit_if(static_cast<const InitializerBlock&>(node).body, fn);
      break;
    case NodeKind::Block:
      visit_all(static_cast<const Block&>(node).statements, fn);
      break;
    case NodeKind::IfStmt: {
      const auto& s = static_cast<const IfStmt&>(node);
      visit_if(s.condition, fn);
      visit_if(s.then_branch, fn);
      visit_if(s.else_branch, fn);
      break;
    }
    case NodeKind::WhileStmt: {
      const auto& s = static_cast<const WhileStmt&>(node);
      visit_if(s.condition, fn);
      visit_if(s.body, fn);
      break;
    }
    case NodeKind::DoWhileStmt: {
      const auto& s = static_cast<const DoWhileStmt&>(node);
      visit_if(s.body, fn);
      visit_if(s.condition, fn);
      break;
    }
    case NodeKind::ForStmt: {
      const auto& s = static_cast<const ForStmt&>(node);
      visit_if(s.init_decl, fn);
      visit_all(s.init_exprs, fn);
      visit_if(s.condition, fn);
      visit_all(s.updates, fn);
      visit_if(s.iterable, fn);
      visit_if(s.body, fn);
      break;
    }
    case NodeKind::SwitchStmt: {
      const auto& s = static_cast<const SwitchStmt&>(node);
      visit_if(s.selector, fn);
      visit_all(s.groups, fn);
      break;
    }
    case NodeKind::CaseGroup: {
      const auto& g = static_cast<const CaseGroup&>(node);
      visit_all(g.labels, fn);
      visit_all(g.statements, fn);
      break;
    }
    case NodeKind::ExprStmt:
      visit_if(static_cast<const ExprStmt&>(node).expr, fn);
      break;
    case NodeKind::EmptyStmt:
      break;
    case NodeKind::LocalVarDecl:
      visit_declarators(static_cast<const LocalVarDecl&>(node).declarators, fn);
      break;
    case NodeKind::ReturnStmt:
      visit_if(static_cast<const ReturnStmt&>(node).value, fn);
      break;
    case NodeKind::BreakStmt:
    case NodeKind::ContinueStmt:
      break;
    case NodeKind::ThrowStmt:
      visit_if(static_cast<const ThrowStmt&>(node).value, fn);
      break;
    case NodeKind::ErrorStmt:
      break;
    case NodeKind::AssignExpr: {
      const auto& e = static_cast<const AssignExpr&>(node);
      visit_if(e.target, fn);
      visit_if(e.value, fn);
      break;
    }
    case NodeKind::BinaryExpr: {
      const auto& e = static_cast<const BinaryExpr&>(node);
      visit_if(e.lhs, fn);
      visit_if(e.rhs, fn);
      break;
    }
    case NodeKind::UnaryExpr:
      visit_if(static_cast<const UnaryExpr&>(node).operand, fn);
      break;
    case NodeKind::CallExpr: {
      const auto& e = static_cast<const CallExpr&>(node);
      visit_if(e.callee, fn);
      visit_all(e.args, fn);
      break;
    }
    case NodeKind::FieldAccessExpr:
      visit_if(static_cast<const FieldAccessExpr&>(node).object, fn);
      break;
    case NodeKind::ArrayAccessExpr: {
      const auto& e = static_cast<const ArrayAccessExpr&>(node);
      visit_if(e.array, fn);
      visit_if(e.index, fn);
      break;
    }
    case NodeKind::IdentifierExpr:
    case NodeKind::LiteralExpr:
      break;
    case NodeKind::ConditionalExpr: {
      const auto& e = static_cast<const ConditionalExpr&>(node);
      visit_if(e.condition, fn);
      visit_if(e.then_value, fn);
      visit_if(e.else_value, fn);
      break;
    }
    case NodeKind::ParenExpr:
      visit_if(static_cast<const ParenExpr&>(node).inner, fn);
      break;
    case NodeKind::CastExpr:
      visit_if(static_cast<const CastExpr&>(node).operand, fn);
      break;
    case NodeKind::NewExpr: {
      const auto& e = static_cast<const NewExpr&>(node);
      visit_all(e.args, fn);
      visit_all(e.dims, fn);
      visit_if(e.init, fn);
      break;
    }
    case NodeKind::ArrayInitExpr:
      visit_all(static_cast<const ArrayInitExpr&>(node).elements, fn);
      break;
    case NodeKind::ErrorExpr:
      break;
  }
}

void walk(const Node& node, const std::function<void(const Node&)>& fn) {
  fn(node);
  for_each_child(node, [&fn](const Node& child) { walk(child, fn); });
}

const Expr* unwrap_parens(const Expr* expr) {
  while (expr != nullptr && expr->kind == NodeKind::ParenExpr) {
    expr = static_cast<const ParenExpr*>(expr)->inner.get();
  }
  return expr;
}

}  // namespace novlint
