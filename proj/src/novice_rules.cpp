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

#include "novlint/novice_rules.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_set>

#include "novlint/reporting.hpp"

namespace novlint {

namespace {

// Source slice with whitespace runs collapsed, for quoting code in messages.
std::string code_slice(const SourceFile& file, const Span& span) {
  std::string_view raw = file.slice(span);
  std::string out;
  out.reserve(raw.size());
  bool in_space = false;
  for (char c : raw) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      in_space = !out.empty();
      continue;
    }
    if (in_space) out.push_back(' ');
    in_space = false;
    out.push_back(c);
  }
  return out;
}

bool is_comparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::Lt:
    case BinaryOp::Gt:
    case BinaryOp::LtEq:
    case BinaryOp::GtEq:
    case BinaryOp::Eq:
    case BinaryOp::NotEq:
      return true;
    default:
      return false;
  }
}

bool is_null_literal(const Expr* expr) {
  expr = unwrap_parens(expr);
  if (expr == nullptr) return false;
  const auto* lit = expr->as<LiteralExpr>();
  return lit != nullptr && lit->type == LiteralType::Null;
}

bool is_constant(const Expr* expr) {
  expr = unwrap_parens(expr);
  if (expr == nullptr) return false;
  if (expr->kind == NodeKind::LiteralExpr) return true;
  if (const auto* unary = expr->as<UnaryExpr>()) {
    if (unary->op == UnaryOp::Minus || unary->op == UnaryOp::Plus) {
      return is_constant(unary->operand.get());
    }
  }
  return false;
}

// `x`, `this.x`, `a.b.c` — the syntactic identity the aliasing-free rules
// compare. Anything with calls or indexing inside has no key.
std::optional<std::string> chain_key(const Expr* expr) {
  expr = unwrap_parens(expr);
  if (expr == nullptr) return std::nullopt;
  if (const auto* ident = expr->as<IdentifierExpr>()) return ident->name;
  if (const auto* access = expr->as<FieldAccessExpr>()) {
    auto base = chain_key(access->object.get());
    if (!base.has_value()) return std::nullopt;
    return *base + "." + access->member;
  }
  return std::nullopt;
}

bool subtree_has_member_use_of(const Expr& root, const std::string& key) {
  bool found = false;
  walk(root, [&](const Node& node) {
    if (found) return;
    if (const auto* access = node.as<FieldAccessExpr>()) {
      auto base = chain_key(access->object.get());
      if (base.has_value() && *base == key) found = true;
    }
  });
  return found;
}

// Conditions of if/while/do-while/for, with the rule-A nesting flag.
template <typename Fn>
void visit_assignments_in(const Expr& expr, bool under_comparison, Fn&& fn) {
  if (const auto* binary = expr.as<BinaryExpr>()) {
    bool nested = under_comparison || is_comparison(binary->op);
    if (binary->lhs) visit_assignments_in(*binary->lhs, nested, fn);
    if (binary->rhs) visit_assignments_in(*binary->rhs, nested, fn);
    return;
  }
  if (const auto* assign = expr.as<AssignExpr>()) {
    if (assign->op == TokenKind::Assign) fn(*assign, under_comparison);
    if (assign->target) {
      visit_assignments_in(*assign->target, under_comparison, fn);
    }
    if (assign->value) visit_assignments_in(*assign->value, under_comparison, fn);
    return;
  }
  for_each_child(expr, [&](const Node& child) {
    if (is_expr_kind(child.kind)) {
      visit_assignments_in(static_cast<const Expr&>(child), under_comparison,
                           fn);
    }
  });
}

template <typename Fn>
void for_each_condition(const CompilationUnit& root, Fn&& fn) {
  walk(root, [&](const Node& node) {
    switch (node.kind) {
      case NodeKind::IfStmt: {
        const auto& s = static_cast<const IfStmt&>(node);
        if (s.condition) fn(*s.condition);
        break;
      }
      case NodeKind::WhileStmt: {
        const auto& s = static_cast<const WhileStmt&>(node);
        if (s.condition) fn(*s.condition);
        break;
      }
      case NodeKind::DoWhileStmt: {
        const auto& s = static_cast<const DoWhileStmt&>(node);
        if (s.condition) fn(*s.condition);
        break;
      }
      case NodeKind::ForStmt: {
        const auto& s = static_cast<const ForStmt&>(node);
        if (s.condition) fn(*s.condition);
        break;
      }
      default:
        break;
    }
  });
}

}  // namespace

// ---- A: assignment inside a condition ----------------------------------------

std::vector<Diagnostic> check_condition_assignment(const CheckContext& ctx) {
  std::vector<Diagnostic> out;
  for_each_condition(ctx.root, [&](const Expr& condition) {
    visit_assignments_in(
        condition, false, [&](const AssignExpr& assign, bool under_comparison) {
          RuleFiring firing;
          firing.letter = 'A';
          firing.span = assign.span;
          firing.captures = {{"code", code_slice(ctx.file, assign.span)}};
          firing.confidence =
              under_comparison ? Confidence::Low : Confidence::High;
          out.push_back(compose(firing, ctx.concepts));
        });
  });
  sort_diagnostics(out);
  return out;
}

// ---- B: string identity comparison --------------------------------------------

std::vector<Diagnostic> check_string_identity(const CheckContext& ctx) {
  std::vector<Diagnostic> out;
  walk(ctx.root, [&](const Node& node) {
    const auto* binary = node.as<BinaryExpr>();
    if (binary == nullptr ||
        (binary->op != BinaryOp::Eq && binary->op != BinaryOp::NotEq)) {
      return;
    }
    if (!binary->lhs || !binary->rhs) return;
    if (is_null_literal(binary->lhs.get()) || is_null_literal(binary->rhs.get()))
      return;
    TypeTag lhs_tag = infer_type(*binary->lhs, ctx.model);
    TypeTag rhs_tag = infer_type(*binary->rhs, ctx.model);
    if (!lhs_tag.is(TypeTag::Kind::String) && !rhs_tag.is(TypeTag::Kind::String))
      return;
    const Expr* lhs = unwrap_parens(binary->lhs.get());
    const Expr* rhs = unwrap_parens(binary->rhs.get());
    RuleFiring firing;
    firing.letter = 'B';
    firing.variant = binary->op == BinaryOp::Eq ? "eq" : "neq";
    firing.span = binary->span;
    firing.captures = {{"lhs", code_slice(ctx.file, lhs->span)},
                       {"rhs", code_slice(ctx.file, rhs->span)}};
    out.push_back(compose(firing, ctx.concepts));
  });
  sort_diagnostics(out);
  return out;
}

// ---- D: & and | on boolean operands --------------------------------------------

std::vector<Diagnostic> check_non_short_circuit(const CheckContext& ctx) {
  std::vector<Diagnostic> out;
  walk(ctx.root, [&](const Node& node) {
    const auto* binary = node.as<BinaryExpr>();
    if (binary == nullptr ||
        (binary->op != BinaryOp::BitAnd && binary->op != BinaryOp::BitOr)) {
      return;
    }
    if (!binary->lhs || !binary->rhs) return;
    if (!infer_type(*binary->lhs, ctx.model).is(TypeTag::Kind::Boolean)) return;
    if (!infer_type(*binary->rhs, ctx.model).is(TypeTag::Kind::Boolean)) return;
    bool is_and = binary->op == BinaryOp::BitAnd;
    RuleFiring firing;
    firing.letter = 'D';
    firing.span = binary->op_span;
    firing.captures = {{"op", is_and ? "&" : "|"}, {"fix", is_and ? "&&" : "||"}};
    out.push_back(compose(firing, ctx.concepts));
  });
  sort_diagnostics(out);
  return out;
}

// ---- E: semicolon as loop/if body ----------------------------------------------

std::vector<Diagnostic> check_stray_semicolon(const CheckContext& ctx) {
  std::vector<Diagnostic> out;
  auto fire = [&](const Stmt& empty, const char* keyword) {
    RuleFiring firing;
    firing.letter = 'E';
    firing.span = empty.span;
    firing.captures = {{"keyword", keyword}};
    out.push_back(compose(firing, ctx.concepts));
  };
  walk(ctx.root, [&](const Node& node) {
    if (const auto* s = node.as<IfStmt>()) {
      if (s->then_branch && s->then_branch->kind == NodeKind::EmptyStmt) {
        fire(*s->then_branch, "if");
      }
      return;
    }
    if (const auto* s = node.as<WhileStmt>()) {
      if (s->body && s->body->kind == NodeKind::EmptyStmt) {
        fire(*s->body, "while");
      }
      return;
    }
    if (const auto* s = node.as<ForStmt>()) {
      if (s->body && s->body->kind == NodeKind::EmptyStmt) {
        fire(*s->body, "for");
      }
    }
  });
  sort_diagnostics(out);
  return out;
}

// ---- J: method read as a field --------------------------------------------------

std::vector<Diagnostic> check_method_as_field(const CheckContext& ctx) {
  // Call receivers and assignment targets are legitimate member accesses.
  std::unordered_set<const Node*> excluded;
  walk(ctx.root, [&](const Node& node) {
    if (const auto* call = node.as<CallExpr>()) {
      if (const Expr* callee = unwrap_parens(call->callee.get())) {
        excluded.insert(callee);
      }
      return;
    }
    if (const auto* assign = node.as<AssignExpr>()) {
      if (const Expr* target = unwrap_parens(assign->target.get())) {
        excluded.insert(target);
      }
      return;
    }
    if (const auto* unary = node.as<UnaryExpr>()) {
      if (unary->op == UnaryOp::PreInc || unary->op == UnaryOp::PreDec ||
          unary->op == UnaryOp::PostInc || unary->op == UnaryOp::PostDec) {
        if (const Expr* target = unwrap_parens(unary->operand.get())) {
          excluded.insert(target);
        }
      }
    }
  });

  std::vector<Diagnostic> out;
  walk(ctx.root, [&](const Node& node) {
    const auto* access = node.as<FieldAccessExpr>();
    if (access == nullptr || excluded.contains(&node)) return;
    const Expr* receiver = unwrap_parens(access->object.get());
    if (receiver == nullptr) return;
    TypeTag tag = infer_type(*receiver, ctx.model);
    bool is_method_name = false;
    if (tag.is(TypeTag::Kind::Array)) {
      return;  // array length is a field
    } else if (tag.is(TypeTag::Kind::String)) {
      is_method_name = SemanticModel::is_builtin_string_method(access->member);
    } else if (tag.is(TypeTag::Kind::Class)) {
      const ClassModel* cls = ctx.model.class_named(tag.class_name);
      if (cls == nullptr) return;
      is_method_name = cls->has_method(access->member) &&
                       cls->find_field(access->member) == nullptr;
    }
    if (!is_method_name) return;
    RuleFiring firing;
    firing.letter = 'J';
    firing.span = access->span;
    firing.captures = {{"member", access->member},
                       {"receiver", code_slice(ctx.file, receiver->span)}};
    out.push_back(compose(firing, ctx.concepts));
  });
  sort_diagnostics(out);
  return out;
}

// ---- N: discarded non-void return ------------------------------------------------

std::vector<Diagnostic> check_discarded_return(const CheckContext& ctx) {
  std::vector<Diagnostic> out;
  walk(ctx.root, [&](const Node& node) {
    const auto* stmt = node.as<ExprStmt>();
    if (stmt == nullptr) return;
    const Expr* expr = unwrap_parens(stmt->expr.get());
    if (expr == nullptr) return;
    const auto* call = expr->as<CallExpr>();
    if (call == nullptr) return;
    TypeTag tag = infer_type(*call, ctx.model);
    if (tag.is(TypeTag::Kind::Void) || tag.is(TypeTag::Kind::Unknown)) return;

    RuleFiring firing;
    firing.letter = 'N';
    firing.span = call->span;
    std::string call_text = code_slice(ctx.file, call->span);
    const Expr* callee = unwrap_parens(call->callee.get());
    const FieldAccessExpr* qualified =
        callee != nullptr ? callee->as<FieldAccessExpr>() : nullptr;
    bool string_receiver =
        qualified != nullptr && qualified->object != nullptr &&
        infer_type(*qualified->object, ctx.model).is(TypeTag::Kind::String) &&
        SemanticModel::is_builtin_string_method(qualified->member);
    if (string_receiver) {
      firing.variant = "string";
      firing.captures = {
          {"call", call_text},
          {"receiver", code_slice(ctx.file, qualified->object->span)}};
    } else {
      firing.captures = {{"call", call_text}};
    }
    out.push_back(compose(firing, ctx.concepts));
  });
  sort_diagnostics(out);
  return out;
}

// ---- S: never-assigned char compared like a literal --------------------------------

std::vector<Diagnostic> check_char_literal_confusion(const CheckContext& ctx) {
  std::vector<Diagnostic> out;
  walk(ctx.root, [&](const Node& node) {
    const auto* binary = node.as<BinaryExpr>();
    if (binary == nullptr ||
        (binary->op != BinaryOp::Eq && binary->op != BinaryOp::NotEq)) {
      return;
    }
    if (!binary->lhs || !binary->rhs) return;
    auto try_side = [&](const Expr& side, const Expr& other) {
      const Expr* ident_expr = unwrap_parens(&side);
      if (ident_expr == nullptr) return;
      const auto* ident = ident_expr->as<IdentifierExpr>();
      if (ident == nullptr) return;
      const VariableInfo* var = ctx.model.binding_of(ident_expr);
      if (var == nullptr) return;
      if (!var->declared_type.is(TypeTag::Kind::Char)) return;
      if (!never_assigned(*var)) return;
      if (!infer_type(other, ctx.model).is(TypeTag::Kind::Char)) return;
      RuleFiring firing;
      firing.letter = 'S';
      firing.variant = var->name.size() == 1 ? "literal" : "default";
      firing.span = ident_expr->span;
      firing.captures = {{"name", var->name}};
      out.push_back(compose(firing, ctx.concepts));
    };
    try_side(*binary->lhs, *binary->rhs);
    try_side(*binary->rhs, *binary->lhs);
  });
  sort_diagnostics(out);
  return out;
}

// ---- T: null check joined with the wrong short-circuit operator ----------------------

namespace {

void flatten_chain(const Expr& expr, BinaryOp op,
                   std::vector<const Expr*>& out) {
  const Expr* unwrapped = unwrap_parens(&expr);
  if (unwrapped != nullptr) {
    if (const auto* binary = unwrapped->as<BinaryExpr>();
        binary != nullptr && binary->op == op) {
      if (binary->lhs) flatten_chain(*binary->lhs, op, out);
      if (binary->rhs) flatten_chain(*binary->rhs, op, out);
      return;
    }
  }
  out.push_back(&expr);
}

// `x != null` (or `x == null`): returns x's chain key.
std::optional<std::string> null_check_key(const Expr* expr, BinaryOp op) {
  expr = unwrap_parens(expr);
  if (expr == nullptr) return std::nullopt;
  const auto* binary = expr->as<BinaryExpr>();
  if (binary == nullptr || binary->op != op) return std::nullopt;
  if (is_null_literal(binary->rhs.get())) return chain_key(binary->lhs.get());
  if (is_null_literal(binary->lhs.get())) return chain_key(binary->rhs.get());
  return std::nullopt;
}

}  // namespace

std::vector<Diagnostic> check_null_guard_or(const CheckContext& ctx) {
  std::vector<Diagnostic> out;
  // Chains are processed at their topmost node only.
  std::unordered_set<const Node*> inner;
  walk(ctx.root, [&](const Node& node) {
    const auto* binary = node.as<BinaryExpr>();
    if (binary == nullptr ||
        (binary->op != BinaryOp::LogOr && binary->op != BinaryOp::LogAnd)) {
      return;
    }
    for (const auto* side : {binary->lhs.get(), binary->rhs.get()}) {
      const Expr* unwrapped = unwrap_parens(side);
      if (unwrapped == nullptr) continue;
      if (const auto* child = unwrapped->as<BinaryExpr>();
          child != nullptr && child->op == binary->op) {
        inner.insert(child);
      }
    }
  });

  walk(ctx.root, [&](const Node& node) {
    const auto* binary = node.as<BinaryExpr>();
    if (binary == nullptr || inner.contains(&node)) return;
    bool is_or = binary->op == BinaryOp::LogOr;
    if (!is_or && binary->op != BinaryOp::LogAnd) return;
    BinaryOp check_op = is_or ? BinaryOp::NotEq : BinaryOp::Eq;

    std::vector<const Expr*> operands;
    flatten_chain(*binary, binary->op, operands);
    for (size_t i = 0; i + 1 < operands.size(); ++i) {
      auto key = null_check_key(operands[i], check_op);
      if (!key.has_value()) continue;
      bool dereferenced = false;
      for (size_t j = i + 1; j < operands.size() && !dereferenced; ++j) {
        dereferenced = subtree_has_member_use_of(*operands[j], *key);
      }
      if (!dereferenced) continue;
      RuleFiring firing;
      firing.letter = 'T';
      firing.variant = is_or ? "or" : "and";
      firing.span = binary->span;
      firing.captures = {{"var", *key}};
      out.push_back(compose(firing, ctx.concepts));
      break;  // one diagnostic per chain
    }
  });
  sort_diagnostics(out);
  return out;
}

// ---- U: if/else chain testing one variable -------------------------------------------

namespace {

// The variable an equality condition tests, if any.
std::optional<std::string> equality_subject(const Expr* cond) {
  cond = unwrap_parens(cond);
  if (cond == nullptr) return std::nullopt;
  if (const auto* binary = cond->as<BinaryExpr>()) {
    if (binary->op != BinaryOp::Eq) return std::nullopt;
    if (is_constant(binary->rhs.get())) return chain_key(binary->lhs.get());
    if (is_constant(binary->lhs.get())) return chain_key(binary->rhs.get());
    return std::nullopt;
  }
  if (const auto* call = cond->as<CallExpr>()) {
    const Expr* callee = unwrap_parens(call->callee.get());
    if (callee == nullptr) return std::nullopt;
    const auto* access = callee->as<FieldAccessExpr>();
    if (access == nullptr || access->member != "equals" ||
        call->args.size() != 1) {
      return std::nullopt;
    }
    auto receiver = chain_key(access->object.get());
    if (receiver.has_value()) return receiver;
    if (is_constant(access->object.get())) return chain_key(call->args[0].get());
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Diagnostic> check_ifelse_chain(const CheckContext& ctx) {
  // Heads: if statements that are not themselves an else branch.
  std::unordered_set<const Node*> else_branches;
  walk(ctx.root, [&](const Node& node) {
    if (const auto* s = node.as<IfStmt>()) {
      if (s->else_branch && s->else_branch->kind == NodeKind::IfStmt) {
        else_branches.insert(s->else_branch.get());
      }
    }
  });

  std::vector<Diagnostic> out;
  walk(ctx.root, [&](const Node& node) {
    const auto* head = node.as<IfStmt>();
    if (head == nullptr || else_branches.contains(&node)) return;

    std::optional<std::string> subject;
    int branches = 0;
    const IfStmt* link = head;
    while (link != nullptr) {
      auto key = equality_subject(link->condition.get());
      if (!key.has_value()) return;  // a non-equality branch breaks the chain
      if (subject.has_value() && *subject != *key) return;  // mixed variables
      subject = key;
      ++branches;
      const Stmt* next = link->else_branch.get();
      link = next != nullptr && next->kind == NodeKind::IfStmt
                 ? static_cast<const IfStmt*>(next)
                 : nullptr;
    }
    if (branches < ctx.u_threshold || !subject.has_value()) return;
    RuleFiring firing;
    firing.letter = 'U';
    firing.span = head->condition ? head->condition->span : head->span;
    firing.captures = {{"count", std::to_string(branches)}, {"var", *subject}};
    out.push_back(compose(firing, ctx.concepts));
  });
  sort_diagnostics(out);
  return out;
}

// ---- V: field that one method uses (or none) --------------------------------------------

std::vector<Diagnostic> check_field_scope(const CheckContext& ctx) {
  std::vector<Diagnostic> out;
  for (const auto& cls : ctx.model.classes()) {
    for (const auto& [name, field] : cls->fields) {
      if (field->is_static || field->is_final || field->has_annotation) continue;
      size_t use_sites = field->read_sites.size() + field->assignment_sites.size();
      if (use_sites == 0) {
        RuleFiring firing;
        firing.letter = 'V';
        firing.variant = "unused";
        firing.span = field->decl_span;
        firing.captures = {{"name", field->name}};
        out.push_back(compose(firing, ctx.concepts));
        continue;
      }
      if (field->reading_methods.size() != 1) continue;
      const Node* user = *field->reading_methods.begin();
      std::string method_name = "the field initializers";
      if (const auto* method = user->as<MethodDecl>()) {
        method_name = method->name + "()";
      } else if (user->kind == NodeKind::InitializerBlock) {
        method_name = "the initializer block";
      }
      bool final_candidate =
          field->has_initializer && field->assignment_sites.empty();
      RuleFiring firing;
      firing.letter = 'V';
      firing.variant = final_candidate ? "single_final" : "single";
      firing.span = field->decl_span;
      firing.captures = {{"name", field->name}, {"method", method_name}};
      out.push_back(compose(firing, ctx.concepts));
    }
  }
  sort_diagnostics(out);
  return out;
}

// ---- W: switch fallthrough -------------------------------------------------------------

namespace {

bool terminates(const Stmt* stmt) {
  if (stmt == nullptr) return false;
  switch (stmt->kind) {
    case NodeKind::BreakStmt:
    case NodeKind::ContinueStmt:
    case NodeKind::ReturnStmt:
    case NodeKind::ThrowStmt:
      return true;
    case NodeKind::ErrorStmt:
      return true;  // malformed content never fires the rule
    case NodeKind::Block: {
      const auto& block = static_cast<const Block&>(*stmt);
      return !block.statements.empty() && terminates(block.statements.back().get());
    }
    case NodeKind::IfStmt: {
      const auto& s = static_cast<const IfStmt&>(*stmt);
      return s.else_branch != nullptr && terminates(s.then_branch.get()) &&
             terminates(s.else_branch.get());
    }
    default:
      return false;
  }
}

}  // namespace

std::vector<Diagnostic> check_switch_fallthrough(const CheckContext& ctx) {
  std::vector<Diagnostic> out;
  walk(ctx.root, [&](const Node& node) {
    const auto* stmt = node.as<SwitchStmt>();
    if (stmt == nullptr) return;
    for (size_t i = 0; i + 1 < stmt->groups.size(); ++i) {
      const CaseGroup& group = *stmt->groups[i];
      if (group.statements.empty()) continue;  // stacked labels share a body
      if (terminates(group.statements.back().get())) continue;
      RuleFiring firing;
      firing.letter = 'W';
      firing.span = group.labels_span;
      out.push_back(compose(firing, ctx.concepts));
    }
  });
  sort_diagnostics(out);
  return out;
}

// ---- X: switch without default ------------------------------------------------------------

std::vector<Diagnostic> check_switch_default(const CheckContext& ctx) {
  std::vector<Diagnostic> out;
  walk(ctx.root, [&](const Node& node) {
    const auto* stmt = node.as<SwitchStmt>();
    if (stmt == nullptr) return;
    if (stmt->error && stmt->groups.empty()) return;  // recovery noise
    bool has_default = std::any_of(
        stmt->groups.begin(), stmt->groups.end(),
        [](const auto& group) { return group->has_default; });
    if (has_default) return;
    RuleFiring firing;
    firing.letter = 'X';
    firing.span = stmt->selector != nullptr &&
                          stmt->selector->span.byte_end >
                              stmt->selector->span.byte_start
                      ? stmt->selector->span
                      : stmt->span;
    out.push_back(compose(firing, ctx.concepts));
  });
  sort_diagnostics(out);
  return out;
}

// ---- Y: inclusive bound over a length -----------------------------------------------------

namespace {

// Matches `E.length`, `E.length()`, `E.size()`; returns E's chain key.
std::optional<std::string> length_bound_key(const Expr* expr) {
  expr = unwrap_parens(expr);
  if (expr == nullptr) return std::nullopt;
  if (const auto* access = expr->as<FieldAccessExpr>()) {
    if (access->member == "length") return chain_key(access->object.get());
    return std::nullopt;
  }
  if (const auto* call = expr->as<CallExpr>()) {
    if (!call->args.empty()) return std::nullopt;
    const Expr* callee = unwrap_parens(call->callee.get());
    if (callee == nullptr) return std::nullopt;
    const auto* access = callee->as<FieldAccessExpr>();
    if (access == nullptr) return std::nullopt;
    if (access->member != "length" && access->member != "size") {
      return std::nullopt;
    }
    return chain_key(access->object.get());
  }
  return std::nullopt;
}

bool body_indexes_with(const Stmt& body, const std::string& container,
                       const std::string& index) {
  bool found = false;
  walk(body, [&](const Node& node) {
    if (found) return;
    if (const auto* access = node.as<ArrayAccessExpr>()) {
      auto arr = chain_key(access->array.get());
      auto idx = chain_key(access->index.get());
      if (arr.has_value() && idx.has_value() && *arr == container &&
          *idx == index) {
        found = true;
      }
      return;
    }
    if (const auto* call = node.as<CallExpr>()) {
      if (call->args.size() != 1) return;
      const Expr* callee = unwrap_parens(call->callee.get());
      if (callee == nullptr) return;
      const auto* access = callee->as<FieldAccessExpr>();
      if (access == nullptr || access->member != "get") return;
      auto recv = chain_key(access->object.get());
      auto idx = chain_key(call->args[0].get());
      if (recv.has_value() && idx.has_value() && *recv == container &&
          *idx == index) {
        found = true;
      }
    }
  });
  return found;
}

}  // namespace

std::vector<Diagnostic> check_off_by_one_bound(const CheckContext& ctx) {
  std::vector<Diagnostic> out;
  walk(ctx.root, [&](const Node& node) {
    const auto* loop = node.as<ForStmt>();
    if (loop == nullptr || loop->is_foreach || !loop->condition || !loop->body)
      return;
    const Expr* cond = unwrap_parens(loop->condition.get());
    if (cond == nullptr) return;
    const auto* binary = cond->as<BinaryExpr>();
    if (binary == nullptr || binary->op != BinaryOp::LtEq) return;
    auto index = chain_key(binary->lhs.get());
    if (!index.has_value()) return;
    auto container = length_bound_key(binary->rhs.get());
    if (!container.has_value()) return;
    if (!body_indexes_with(*loop->body, *container, *index)) return;
    RuleFiring firing;
    firing.letter = 'Y';
    firing.span = loop->condition->span;
    firing.captures = {
        {"var", *index},
        {"bound", code_slice(ctx.file, binary->rhs->span)}};
    out.push_back(compose(firing, ctx.concepts));
  });
  sort_diagnostics(out);
  return out;
}

// ---- dispatch ------------------------------------------------------------------------------

std::vector<Diagnostic> run_ruleset(const CheckContext& ctx,
                                    const RuleSet& enabled) {
  struct Entry {
    char letter;
    std::vector<Diagnostic> (*check)(const CheckContext&);
  };
  static constexpr Entry kChecks[] = {
      {'A', check_condition_assignment}, {'B', check_string_identity},
      {'D', check_non_short_circuit},    {'E', check_stray_semicolon},
      {'J', check_method_as_field},      {'N', check_discarded_return},
      {'S', check_char_literal_confusion}, {'T', check_null_guard_or},
      {'U', check_ifelse_chain},         {'V', check_field_scope},
      {'W', check_switch_fallthrough},   {'X', check_switch_default},
      {'Y', check_off_by_one_bound},
  };
  std::vector<Diagnostic> out;
  for (const Entry& entry : kChecks) {
    if (!enabled.enabled(entry.letter)) continue;
    std::vector<Diagnostic> found = entry.check(ctx);
    out.insert(out.end(), std::make_move_iterator(found.begin()),
               std::make_move_iterator(found.end()));
  }
  sort_diagnostics(out);
  return out;
}

}  // namespace novlint
