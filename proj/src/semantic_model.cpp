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

#include "novlint/semantic_model.hpp"

#include <algorithm>

namespace novlint {

TypeTag TypeTag::array_of(TypeTag element) {
  TypeTag tag;
  tag.kind = Kind::Array;
  if (element.kind == Kind::Void) element = unknown();
  tag.element = std::make_shared<TypeTag>(std::move(element));
  return tag;
}

bool TypeTag::operator==(const TypeTag& other) const {
  if (kind != other.kind) return false;
  if (kind == Kind::Class) return class_name == other.class_name;
  if (kind == Kind::Array) {
    if (!element || !other.element) return element == other.element;
    return *element == *other.element;
  }
  return true;
}

std::string TypeTag::to_string() const {
  switch (kind) {
    case Kind::Boolean: return "boolean";
    case Kind::Char: return "char";
    case Kind::Numeric: return "numeric";
    case Kind::String: return "string";
    case Kind::Array:
      return (element ? element->to_string() : std::string("unknown")) + "[]";
    case Kind::Class: return class_name;
    case Kind::Void: return "void";
    case Kind::Unknown: return "unknown";
  }
  return "unknown";
}

TypeTag type_tag_for(const TypeRef& type, int extra_dims) {
  if (!type.valid || type.name.empty()) return TypeTag::unknown();
  TypeTag base;
  if (type.primitive) {
    if (type.name == "boolean") base = TypeTag::boolean();
    else if (type.name == "char") base = TypeTag::character();
    else if (type.name == "void") base = TypeTag::void_type();
    else base = TypeTag::numeric();
  } else if (type.name == "String") {
    base = TypeTag::string();
  } else {
    base = TypeTag::of_class(type.name);
  }
  for (int i = 0; i < type.array_dims + extra_dims; ++i) {
    base = TypeTag::array_of(std::move(base));
  }
  return base;
}

const VariableInfo* ClassModel::find_field(std::string_view name) const {
  auto it = fields.find(std::string(name));
  return it == fields.end() ? nullptr : it->second;
}

const MethodInfo* ClassModel::find_method(std::string_view name,
                                          std::optional<size_t> argc) const {
  const MethodInfo* by_name = nullptr;
  bool ambiguous_return = false;
  for (const MethodInfo& m : methods) {
    if (m.name != name || m.is_constructor) continue;
    if (argc && m.param_types.size() == *argc) return &m;
    if (by_name == nullptr) {
      by_name = &m;
    } else if (!(by_name->return_type == m.return_type)) {
      ambiguous_return = true;
    }
  }
  if (by_name == nullptr || ambiguous_return) return nullptr;
  return by_name;
}

bool ClassModel::has_method(std::string_view name) const {
  return std::any_of(methods.begin(), methods.end(), [&](const MethodInfo& m) {
    return !m.is_constructor && m.name == name;
  });
}

const ClassModel* SemanticModel::class_named(std::string_view name) const {
  for (const auto& cls : classes_) {
    if (cls->name == name) return cls.get();
  }
  return nullptr;
}

const VariableInfo* SemanticModel::binding_of(const Node* identifier) const {
  auto it = uses_.find(identifier);
  return it == uses_.end() ? nullptr : it->second;
}

const ClassModel* SemanticModel::enclosing_class_of(const Node* node) const {
  auto it = owner_class_.find(node);
  return it == owner_class_.end() ? nullptr : it->second;
}

namespace {

struct BuiltinMethod {
  std::string_view name;
  TypeTag::Kind return_kind;
};

// The closed builtin table: well-known String members.
constexpr BuiltinMethod kStringMethods[] = {
    {"length", TypeTag::Kind::Numeric},  {"equals", TypeTag::Kind::Boolean},
    {"charAt", TypeTag::Kind::Char},     {"toUpperCase", TypeTag::Kind::String},
    {"toLowerCase", TypeTag::Kind::String}, {"trim", TypeTag::Kind::String},
    {"substring", TypeTag::Kind::String},
};

}  // namespace

const TypeTag* SemanticModel::builtin_string_method(std::string_view name) {
  static const auto* table = [] {
    auto* m = new std::map<std::string, TypeTag, std::less<>>();
    for (const BuiltinMethod& b : kStringMethods) {
      TypeTag tag;
      tag.kind = b.return_kind;
      m->emplace(std::string(b.name), std::move(tag));
    }
    return m;
  }();
  auto it = table->find(name);
  return it == table->end() ? nullptr : &it->second;
}

bool SemanticModel::is_builtin_string_method(std::string_view name) {
  return builtin_string_method(name) != nullptr;
}

bool never_assigned(const VariableInfo& var) {
  return !var.has_initializer && var.assignment_sites.empty() &&
         var.kind != VarKind::Parameter;
}

namespace {
enum class Access : uint8_t { Read, Write, ReadWrite };
}  // namespace

// One builder per compilation unit. Two passes per class: declarations first
// so members resolve regardless of order, then bodies for def-use facts.
class ModelBuilder {
 public:
  explicit ModelBuilder(SemanticModel& model) : model_(model) {}

  void build(const CompilationUnit& root) {
    for (const NodePtr& node : root.types) {
      if (const auto* cls = node->as<ClassDecl>()) collect_class(*cls);
    }
    for (const auto& cls_model : model_.classes_) {
      analyze_class(*cls_model);
    }
  }

 private:
  VariableInfo* new_variable(std::string name, VarKind kind, TypeTag type,
                             Span decl_span, bool has_init) {
    auto var = std::make_unique<VariableInfo>();
    var->name = std::move(name);
    var->kind = kind;
    var->declared_type = std::move(type);
    var->decl_span = decl_span;
    var->has_initializer = has_init;
    VariableInfo* raw = var.get();
    model_.variables_.push_back(std::move(var));
    return raw;
  }

  void collect_class(const ClassDecl& cls) {
    auto model = std::make_unique<ClassModel>();
    model->decl = &cls;
    model->name = cls.name;
    ClassModel* cm = model.get();
    model_.classes_.push_back(std::move(model));

    for (const NodePtr& member : cls.members) {
      if (const auto* nested = member->as<ClassDecl>()) {
        collect_class(*nested);
        continue;
      }
      if (const auto* field = member->as<FieldDecl>()) {
        for (const Declarator& d : field->declarators) {
          if (d.name.empty()) continue;
          VariableInfo* var = new_variable(
              d.name, VarKind::Field, type_tag_for(field->type, d.extra_dims),
              d.name_span, d.init != nullptr);
          var->is_static = field->mods.is_static;
          var->is_final = field->mods.is_final;
          var->has_annotation = field->mods.has_annotation;
          cm->fields.emplace(d.name, var);
        }
        continue;
      }
      if (const auto* method = member->as<MethodDecl>()) {
        MethodInfo info;
        info.name = method->name;
        info.return_type = method->is_constructor
                               ? TypeTag::void_type()
                               : type_tag_for(method->return_type);
        info.is_static = method->mods.is_static;
        info.is_constructor = method->is_constructor;
        info.decl_span = method->name_span;
        info.decl = method;
        for (const auto& param : method->params) {
          info.param_types.push_back(type_tag_for(param->type));
        }
        cm->methods.push_back(std::move(info));
      }
    }
  }

  void analyze_class(const ClassModel& cm) {
    current_class_ = &cm;
    scopes_.clear();
    // Class scope: fields, visible to every member body.
    scopes_.push_back({});
    for (const auto& [name, var] : cm.fields) scopes_.back().emplace(name, var);

    for (const NodePtr& member : cm.decl->members) {
      if (const auto* field = member->as<FieldDecl>()) {
        current_method_ = field;
        record_owner(field);
        for (const Declarator& d : field->declarators) {
          if (d.init) visit_expr(*d.init, Access::Read);
        }
        continue;
      }
      if (const auto* method = member->as<MethodDecl>()) {
        current_method_ = method;
        record_owner(method);
        scopes_.push_back({});
        for (const auto& param : method->params) {
          if (param->name.empty()) continue;
          VariableInfo* var =
              new_variable(param->name, VarKind::Parameter,
                           type_tag_for(param->type), param->name_span, false);
          scopes_.back().emplace(param->name, var);
        }
        if (method->body) visit_stmt(*method->body);
        scopes_.pop_back();
        continue;
      }
      if (const auto* init = member->as<InitializerBlock>()) {
        current_method_ = init;
        record_owner(init);
        scopes_.push_back({});
        if (init->body) visit_stmt(*init->body);
        scopes_.pop_back();
      }
    }
    current_method_ = nullptr;
    current_class_ = nullptr;
  }

  void record_owner(const Node* node) {
    model_.owner_class_[node] = current_class_;
  }

  VariableInfo* resolve(std::string_view name) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto found = it->find(std::string(name));
      if (found != it->end()) return found->second;
    }
    return nullptr;
  }

  void record_use(const Node& node, VariableInfo* var, Access access) {
    model_.uses_[&node] = var;
    if (access == Access::Read || access == Access::ReadWrite) {
      var->read_sites.push_back(node.span);
    }
    if (access == Access::Write || access == Access::ReadWrite) {
      var->assignment_sites.push_back(node.span);
    }
    if (current_method_ != nullptr) {
      var->reading_methods.insert(current_method_);
    }
  }

  void declare_locals(const LocalVarDecl& decl) {
    for (const Declarator& d : decl.declarators) {
      if (d.init) visit_expr(*d.init, Access::Read);
      if (d.name.empty() || d.name_was_keyword) continue;
      VariableInfo* var =
          new_variable(d.name, VarKind::Local,
                       type_tag_for(decl.type, d.extra_dims), d.name_span,
                       d.init != nullptr);
      var->is_final = decl.mods.is_final;
      scopes_.back().emplace(d.name, var);
    }
  }

  void visit_stmt(const Stmt& stmt) {
    record_owner(&stmt);
    switch (stmt.kind) {
      case NodeKind::Block: {
        scopes_.push_back({});
        for (const auto& s : static_cast<const Block&>(stmt).statements) {
          if (s) visit_stmt(*s);
        }
        scopes_.pop_back();
        return;
      }
      case NodeKind::LocalVarDecl:
        declare_locals(static_cast<const LocalVarDecl&>(stmt));
        return;
      case NodeKind::IfStmt: {
        const auto& s = static_cast<const IfStmt&>(stmt);
        if (s.condition) visit_expr(*s.condition, Access::Read);
        if (s.then_branch) visit_stmt(*s.then_branch);
        if (s.else_branch) visit_stmt(*s.else_branch);
        return;
      }
      case NodeKind::WhileStmt: {
        const auto& s = static_cast<const WhileStmt&>(stmt);
        if (s.condition) visit_expr(*s.condition, Access::Read);
        if (s.body) visit_stmt(*s.body);
        return;
      }
      case NodeKind::DoWhileStmt: {
        const auto& s = static_cast<const DoWhileStmt&>(stmt);
        if (s.body) visit_stmt(*s.body);
        if (s.condition) visit_expr(*s.condition, Access::Read);
        return;
      }
      case NodeKind::ForStmt: {
        const auto& s = static_cast<const ForStmt&>(stmt);
        scopes_.push_back({});
        if (s.init_decl) visit_stmt(*s.init_decl);
        for (const auto& e : s.init_exprs) {
          if (e) visit_expr(*e, Access::Read);
        }
        if (s.is_foreach && s.init_decl != nullptr &&
            !s.init_decl->declarators.empty()) {
          // The loop variable is written by the loop itself.
          for (const Declarator& d : s.init_decl->declarators) {
            if (VariableInfo* var = resolve(d.name)) {
              var->assignment_sites.push_back(d.name_span);
            }
          }
        }
        if (s.condition) visit_expr(*s.condition, Access::Read);
        for (const auto& e : s.updates) {
          if (e) visit_expr(*e, Access::Read);
        }
        if (s.iterable) visit_expr(*s.iterable, Access::Read);
        if (s.body) visit_stmt(*s.body);
        scopes_.pop_back();
        return;
      }
      case NodeKind::SwitchStmt: {
        const auto& s = static_cast<const SwitchStmt&>(stmt);
        if (s.selector) visit_expr(*s.selector, Access::Read);
        scopes_.push_back({});
        for (const auto& group : s.groups) {
          record_owner(group.get());
          for (const auto& label : group->labels) {
            if (label) visit_expr(*label, Access::Read);
          }
          for (const auto& st : group->statements) {
            if (st) visit_stmt(*st);
          }
        }
        scopes_.pop_back();
        return;
      }
      case NodeKind::ExprStmt: {
        const auto& s = static_cast<const ExprStmt&>(stmt);
        if (s.expr) visit_expr(*s.expr, Access::Read);
        return;
      }
      case NodeKind::ReturnStmt: {
        const auto& s = static_cast<const ReturnStmt&>(stmt);
        if (s.value) visit_expr(*s.value, Access::Read);
        return;
      }
      case NodeKind::ThrowStmt: {
        const auto& s = static_cast<const ThrowStmt&>(stmt);
        if (s.value) visit_expr(*s.value, Access::Read);
        return;
      }
      default:
        return;
    }
  }

  void visit_expr(const Expr& expr, Access access) {
    record_owner(&expr);
    switch (expr.kind) {
      case NodeKind::IdentifierExpr: {
        const auto& e = static_cast<const IdentifierExpr&>(expr);
        if (e.name == "this" || e.name == "super") return;
        if (VariableInfo* var = resolve(e.name)) {
          record_use(expr, var, access);
        }
        return;
      }
      case NodeKind::AssignExpr: {
        const auto& e = static_cast<const AssignExpr&>(expr);
        Access target_access = e.op == TokenKind::Assign ? Access::Write
                                                         : Access::ReadWrite;
        if (e.target) visit_assign_target(*e.target, target_access);
        if (e.value) visit_expr(*e.value, Access::Read);
        return;
      }
      case NodeKind::UnaryExpr: {
        const auto& e = static_cast<const UnaryExpr&>(expr);
        bool mutating = e.op == UnaryOp::PreInc || e.op == UnaryOp::PreDec ||
                        e.op == UnaryOp::PostInc || e.op == UnaryOp::PostDec;
        if (e.operand) {
          if (mutating) {
            visit_assign_target(*e.operand, Access::ReadWrite);
          } else {
            visit_expr(*e.operand, Access::Read);
          }
        }
        return;
      }
      case NodeKind::CallExpr: {
        const auto& e = static_cast<const CallExpr&>(expr);
        if (e.callee) {
          record_owner(e.callee.get());
          // A bare callee names a method, not a variable; only a qualified
          // callee's receiver is an expression.
          if (const auto* access_callee = e.callee->as<FieldAccessExpr>()) {
            if (access_callee->object) {
              visit_expr(*access_callee->object, Access::Read);
            }
          }
        }
        for (const auto& arg : e.args) {
          if (arg) visit_expr(*arg, Access::Read);
        }
        return;
      }
      case NodeKind::FieldAccessExpr: {
        const auto& e = static_cast<const FieldAccessExpr&>(expr);
        if (e.object) visit_expr(*e.object, Access::Read);
        // `this.f` touches the field f of the current class.
        const Expr* obj = unwrap_parens(e.object.get());
        if (obj != nullptr) {
          if (const auto* ident = obj->as<IdentifierExpr>();
              ident != nullptr && ident->name == "this" &&
              current_class_ != nullptr) {
            auto it = current_class_->fields.find(e.member);
            if (it != current_class_->fields.end()) {
              record_use(expr, it->second, access);
            }
          }
        }
        return;
      }
      default:
        break;
    }
    for_each_child(expr, [this, access](const Node& child) {
      if (is_expr_kind(child.kind)) {
        visit_expr(static_cast<const Expr&>(child), Access::Read);
      } else if (is_stmt_kind(child.kind)) {
        visit_stmt(static_cast<const Stmt&>(child));
      }
    });
    (void)access;
  }

  void visit_assign_target(const Expr& target, Access access) {
    record_owner(&target);
    switch (target.kind) {
      case NodeKind::IdentifierExpr: {
        const auto& e = static_cast<const IdentifierExpr&>(target);
        if (VariableInfo* var = resolve(e.name)) record_use(target, var, access);
        return;
      }
      case NodeKind::ParenExpr: {
        const auto& e = static_cast<const ParenExpr&>(target);
        if (e.inner) visit_assign_target(*e.inner, access);
        return;
      }
      case NodeKind::FieldAccessExpr:
        visit_expr(target, access);
        return;
      case NodeKind::ArrayAccessExpr: {
        // Writing an element reads the array reference and the index.
        const auto& e = static_cast<const ArrayAccessExpr&>(target);
        if (e.array) visit_expr(*e.array, Access::Read);
        if (e.index) visit_expr(*e.index, Access::Read);
        return;
      }
      default:
        visit_expr(target, Access::Read);
        return;
    }
  }

  SemanticModel& model_;
  const ClassModel* current_class_ = nullptr;
  const Node* current_method_ = nullptr;
  std::vector<std::map<std::string, VariableInfo*>> scopes_;
};

namespace {

TypeTag infer_call_type(const CallExpr& call, const SemanticModel& model);

TypeTag infer_type_impl(const Expr& expr, const SemanticModel& model) {
  switch (expr.kind) {
    case NodeKind::LiteralExpr: {
      switch (static_cast<const LiteralExpr&>(expr).type) {
        case LiteralType::Int:
        case LiteralType::Float: return TypeTag::numeric();
        case LiteralType::Char: return TypeTag::character();
        case LiteralType::String: return TypeTag::string();
        case LiteralType::Bool: return TypeTag::boolean();
        case LiteralType::Null: return TypeTag::unknown();
      }
      return TypeTag::unknown();
    }
    case NodeKind::IdentifierExpr: {
      const auto& e = static_cast<const IdentifierExpr&>(expr);
      if (e.name == "this") {
        const ClassModel* cls = model.enclosing_class_of(&expr);
        return cls ? TypeTag::of_class(cls->name) : TypeTag::unknown();
      }
      const VariableInfo* var = model.binding_of(&expr);
      return var ? var->declared_type : TypeTag::unknown();
    }
    case NodeKind::ParenExpr: {
      const auto& e = static_cast<const ParenExpr&>(expr);
      return e.inner ? infer_type(*e.inner, model) : TypeTag::unknown();
    }
    case NodeKind::BinaryExpr: {
      const auto& e = static_cast<const BinaryExpr&>(expr);
      switch (e.op) {
        case BinaryOp::Lt:
        case BinaryOp::Gt:
        case BinaryOp::LtEq:
        case BinaryOp::GtEq:
        case BinaryOp::Eq:
        case BinaryOp::NotEq:
        case BinaryOp::LogAnd:
        case BinaryOp::LogOr:
        case BinaryOp::InstanceOf:
          return TypeTag::boolean();
        case BinaryOp::Add: {
          TypeTag lhs = e.lhs ? infer_type(*e.lhs, model) : TypeTag::unknown();
          TypeTag rhs = e.rhs ? infer_type(*e.rhs, model) : TypeTag::unknown();
          if (lhs.is(TypeTag::Kind::String) || rhs.is(TypeTag::Kind::String)) {
            return TypeTag::string();
          }
          if (lhs.is(TypeTag::Kind::Numeric) && rhs.is(TypeTag::Kind::Numeric)) {
            return TypeTag::numeric();
          }
          if (lhs.is(TypeTag::Kind::Char) && rhs.is(TypeTag::Kind::Numeric)) {
            return TypeTag::numeric();
          }
          if (lhs.is(TypeTag::Kind::Numeric) && rhs.is(TypeTag::Kind::Char)) {
            return TypeTag::numeric();
          }
          return TypeTag::unknown();
        }
        case BinaryOp::BitAnd:
        case BinaryOp::BitOr:
        case BinaryOp::BitXor: {
          TypeTag lhs = e.lhs ? infer_type(*e.lhs, model) : TypeTag::unknown();
          TypeTag rhs = e.rhs ? infer_type(*e.rhs, model) : TypeTag::unknown();
          if (lhs.is(TypeTag::Kind::Boolean) && rhs.is(TypeTag::Kind::Boolean)) {
            return TypeTag::boolean();
          }
          if (lhs.is(TypeTag::Kind::Numeric) && rhs.is(TypeTag::Kind::Numeric)) {
            return TypeTag::numeric();
          }
          return TypeTag::unknown();
        }
        default:
          return TypeTag::numeric();
      }
    }
    case NodeKind::UnaryExpr: {
      const auto& e = static_cast<const UnaryExpr&>(expr);
      if (e.op == UnaryOp::Not) return TypeTag::boolean();
      if (e.op == UnaryOp::Minus || e.op == UnaryOp::Plus) {
        TypeTag t = e.operand ? infer_type(*e.operand, model) : TypeTag::unknown();
        if (t.is(TypeTag::Kind::Numeric) || t.is(TypeTag::Kind::Char)) {
          return TypeTag::numeric();
        }
        return TypeTag::unknown();
      }
      if (e.operand) return infer_type(*e.operand, model);
      return TypeTag::unknown();
    }
    case NodeKind::AssignExpr: {
      const auto& e = static_cast<const AssignExpr&>(expr);
      if (e.target) {
        TypeTag t = infer_type(*e.target, model);
        if (!t.is(TypeTag::Kind::Unknown)) return t;
      }
      return e.value ? infer_type(*e.value, model) : TypeTag::unknown();
    }
    case NodeKind::ConditionalExpr: {
      const auto& e = static_cast<const ConditionalExpr&>(expr);
      if (e.then_value && e.else_value) {
        TypeTag a = infer_type(*e.then_value, model);
        TypeTag b = infer_type(*e.else_value, model);
        if (a == b) return a;
      }
      return TypeTag::unknown();
    }
    case NodeKind::CastExpr:
      return type_tag_for(static_cast<const CastExpr&>(expr).target);
    case NodeKind::NewExpr: {
      const auto& e = static_cast<const NewExpr&>(expr);
      TypeTag base = type_tag_for(e.type);
      if (e.is_array || !e.dims.empty()) {
        size_t dims = std::max<size_t>(e.dims.size(), 1);
        if (e.type.array_dims > 0) return base;  // dims already in the type
        for (size_t i = 0; i < dims; ++i) base = TypeTag::array_of(base);
      }
      return base;
    }
    case NodeKind::ArrayAccessExpr: {
      const auto& e = static_cast<const ArrayAccessExpr&>(expr);
      TypeTag t = e.array ? infer_type(*e.array, model) : TypeTag::unknown();
      if (t.is(TypeTag::Kind::Array) && t.element) return *t.element;
      return TypeTag::unknown();
    }
    case NodeKind::FieldAccessExpr: {
      const auto& e = static_cast<const FieldAccessExpr&>(expr);
      TypeTag obj = e.object ? infer_type(*e.object, model) : TypeTag::unknown();
      if (obj.is(TypeTag::Kind::Array) && e.member == "length") {
        return TypeTag::numeric();
      }
      if (obj.is(TypeTag::Kind::Class)) {
        if (const ClassModel* cls = model.class_named(obj.class_name)) {
          if (const VariableInfo* field = cls->find_field(e.member)) {
            return field->declared_type;
          }
        }
      }
      return TypeTag::unknown();
    }
    case NodeKind::CallExpr:
      return infer_call_type(static_cast<const CallExpr&>(expr), model);
    default:
      return TypeTag::unknown();
  }
}

TypeTag infer_call_type(const CallExpr& call, const SemanticModel& model) {
  if (!call.callee) return TypeTag::unknown();
  const Expr* callee = unwrap_parens(call.callee.get());
  if (callee == nullptr) return TypeTag::unknown();

  if (const auto* ident = callee->as<IdentifierExpr>()) {
    const ClassModel* cls = model.enclosing_class_of(&call);
    if (cls == nullptr) cls = model.enclosing_class_of(callee);
    if (cls != nullptr) {
      if (const MethodInfo* m = cls->find_method(ident->name, call.args.size())) {
        return m->return_type;
      }
    }
    return TypeTag::unknown();
  }

  if (const auto* access = callee->as<FieldAccessExpr>()) {
    const Expr* obj = unwrap_parens(access->object.get());
    if (obj == nullptr) return TypeTag::unknown();
    TypeTag obj_tag = infer_type(*obj, model);
    if (obj_tag.is(TypeTag::Kind::String)) {
      if (const TypeTag* tag = SemanticModel::builtin_string_method(access->member)) {
        return *tag;
      }
      return TypeTag::unknown();
    }
    if (obj_tag.is(TypeTag::Kind::Class)) {
      if (const ClassModel* cls = model.class_named(obj_tag.class_name)) {
        if (const MethodInfo* m =
                cls->find_method(access->member, call.args.size())) {
          return m->return_type;
        }
      }
    }
    return TypeTag::unknown();
  }
  return TypeTag::unknown();
}

}  // namespace

SemanticModel build_model(const CompilationUnit& root) {
  SemanticModel model;
  ModelBuilder(model).build(root);
  return model;
}

TypeTag infer_type(const Expr& expr, const SemanticModel& model) {
  return infer_type_impl(expr, model);
}

}  // namespace novlint
