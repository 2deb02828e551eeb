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

#ifndef NOVLINT_SEMANTIC_MODEL_HPP
#define NOVLINT_SEMANTIC_MODEL_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "novlint/ast.hpp"

namespace novlint {

// Lightweight type classification: just enough structure for the checks.
// Unresolved names collapse to Unknown, never to an error.
struct TypeTag {
  enum class Kind : uint8_t {
    Boolean,
    Char,
    Numeric,
    String,
    Array,
    Class,
    Void,
    Unknown,
  };

  Kind kind = Kind::Unknown;
  std::string class_name;            // set for Kind::Class
  std::shared_ptr<TypeTag> element;  // set for Kind::Array, never Void

  static TypeTag boolean() { return {Kind::Boolean, {}, nullptr}; }
  static TypeTag character() { return {Kind::Char, {}, nullptr}; }
  static TypeTag numeric() { return {Kind::Numeric, {}, nullptr}; }
  static TypeTag string() { return {Kind::String, {}, nullptr}; }
  static TypeTag void_type() { return {Kind::Void, {}, nullptr}; }
  static TypeTag unknown() { return {Kind::Unknown, {}, nullptr}; }
  static TypeTag of_class(std::string name) {
    return {Kind::Class, std::move(name), nullptr};
  }
  static TypeTag array_of(TypeTag element);

  bool is(Kind k) const { return kind == k; }
  bool operator==(const TypeTag& other) const;
  std::string to_string() const;
};

enum class VarKind : uint8_t { Local, Parameter, Field };

struct VariableInfo {
  std::string name;
  VarKind kind = VarKind::Local;
  TypeTag declared_type;
  Span decl_span;
  bool has_initializer = false;
  // Field-only facts used by the scope checks.
  bool is_static = false;
  bool is_final = false;
  bool has_annotation = false;
  std::vector<Span> assignment_sites;
  std::vector<Span> read_sites;
  // Methods (constructors and initializer blocks included) containing any
  // read or assignment of the variable.
  std::set<const Node*> reading_methods;
};

struct MethodInfo {
  std::string name;
  std::vector<TypeTag> param_types;
  TypeTag return_type;
  bool is_static = false;
  bool is_constructor = false;
  Span decl_span;
  const MethodDecl* decl = nullptr;
};

struct ClassModel {
  const ClassDecl* decl = nullptr;
  std::string name;
  std::map<std::string, VariableInfo*> fields;
  std::vector<MethodInfo> methods;

  const VariableInfo* find_field(std::string_view name) const;
  // Name lookup, preferring an exact parameter-count match.
  const MethodInfo* find_method(std::string_view name,
                                std::optional<size_t> argc) const;
  bool has_method(std::string_view name) const;
};

// Whole-unit symbol and usage index. Built in one pass over the AST; immutable
// afterwards and safe to share across threads.
class SemanticModel {
 public:
  const std::vector<std::unique_ptr<ClassModel>>& classes() const {
    return classes_;
  }
  const ClassModel* class_named(std::string_view name) const;

  // Innermost binding of an IdentifierExpr, or null when unresolved.
  const VariableInfo* binding_of(const Node* identifier) const;

  // Class whose body lexically contains `node`; null outside any class.
  const ClassModel* enclosing_class_of(const Node* node) const;

  // All variables declared in the unit, in declaration order.
  const std::vector<std::unique_ptr<VariableInfo>>& variables() const {
    return variables_;
  }

  // Closed table of well-known members: String methods with their return
  // tags. Array `length` is a field, not a method, and is handled separately.
  static const TypeTag* builtin_string_method(std::string_view name);
  static bool is_builtin_string_method(std::string_view name);

 private:
  friend class ModelBuilder;

  std::vector<std::unique_ptr<ClassModel>> classes_;
  std::vector<std::unique_ptr<VariableInfo>> variables_;
  std::unordered_map<const Node*, VariableInfo*> uses_;
  std::unordered_map<const Node*, const ClassModel*> owner_class_;
};

SemanticModel build_model(const CompilationUnit& root);

// Expression type inference against the model: literals map to their literal
// tags, identifiers to declared tags, comparisons and logic to boolean, `+`
// with a string operand to string, calls to the resolved return tag, anything
// else to Unknown.
TypeTag infer_type(const Expr& expr, const SemanticModel& model);

// True for a variable that is declared without an initializer, is assigned
// nowhere, and is not a parameter.
bool never_assigned(const VariableInfo& var);

// Maps a written type to its tag ("int" -> numeric, "String" -> string, ...).
TypeTag type_tag_for(const TypeRef& type, int extra_dims = 0);

}  // namespace novlint

#endif  // NOVLINT_SEMANTIC_MODEL_HPP
