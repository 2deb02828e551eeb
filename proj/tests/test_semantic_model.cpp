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

#include "doctest.h"
#include "novlint/semantic_model.hpp"
#include "test_support.hpp"

using namespace novlint;
using novlint::test::Parsed;

namespace {

const VariableInfo* find_var(const SemanticModel& model,
                             std::string_view name) {
  for (const auto& var : model.variables()) {
    if (var->name == name) return var.get();
  }
  return nullptr;
}

const Expr* find_expr(const CompilationUnit& root, NodeKind kind,
                      size_t index = 0) {
  const Expr* found = nullptr;
  size_t seen = 0;
  walk(root, [&](const Node& node) {
    if (node.kind == kind && found == nullptr) {
      if (seen == index) {
        found = static_cast<const Expr*>(&node);
      }
      ++seen;
    }
  });
  return found;
}

constexpr const char* kPromptLoop =
    "class Quiz {\n"
    "  void run() {\n"
    "    char reply;\n"
    "    char Y;\n"
    "    do {\n"
    "      System.out.println(\"Do you want to continue?\");\n"
    "      reply = (char) System.in.read();\n"
    "    } while (reply != Y);\n"
    "  }\n"
    "}\n";

}  // namespace

TEST_CASE("never-assigned char local in the prompt loop") {
  Parsed p(kPromptLoop);
  REQUIRE(p.result.events.empty());
  SemanticModel model = build_model(*p.result.root);

  const VariableInfo* y = find_var(model, "Y");
  REQUIRE(y != nullptr);
  CHECK(y->kind == VarKind::Local);
  CHECK(y->declared_type.is(TypeTag::Kind::Char));
  CHECK_FALSE(y->has_initializer);
  CHECK(y->assignment_sites.empty());
  CHECK(y->read_sites.size() == 1);
  CHECK(never_assigned(*y));

  const VariableInfo* reply = find_var(model, "reply");
  REQUIRE(reply != nullptr);
  CHECK(reply->assignment_sites.size() == 1);
  CHECK(reply->read_sites.size() == 1);
  CHECK_FALSE(never_assigned(*reply));
}

TEST_CASE("empty class yields empty maps") {
  Parsed p("class Empty {}");
  SemanticModel model = build_model(*p.result.root);
  REQUIRE(model.classes().size() == 1);
  CHECK(model.classes()[0]->fields.empty());
  CHECK(model.classes()[0]->methods.empty());
}

TEST_CASE("field read in two methods has two reading methods") {
  Parsed p(
      "class A {\n"
      "  int counter = 0;\n"
      "  int get() { return counter; }\n"
      "  void bump() { counter = counter + 1; }\n"
      "}\n");
  SemanticModel model = build_model(*p.result.root);
  const VariableInfo* counter = find_var(model, "counter");
  REQUIRE(counter != nullptr);
  CHECK(counter->kind == VarKind::Field);
  CHECK(counter->reading_methods.size() == 2);
  CHECK(counter->read_sites.size() == 2);
  CHECK(counter->assignment_sites.size() == 1);
}

TEST_CASE("assignment through this counts for the field") {
  Parsed p(
      "class A {\n"
      "  int n;\n"
      "  A(int n) { this.n = n; }\n"
      "  int get() { return n; }\n"
      "}\n");
  SemanticModel model = build_model(*p.result.root);
  const VariableInfo* field = find_var(model, "n");
  REQUIRE(field != nullptr);
  REQUIRE(field->kind == VarKind::Field);
  CHECK(field->assignment_sites.size() == 1);
  // Constructor and get() both use it.
  CHECK(field->reading_methods.size() == 2);
}

TEST_CASE("type inference over literals, comparisons and builtins") {
  Parsed p(
      "class A {\n"
      "  int compute() { return 42; }\n"
      "  void log(String m) { }\n"
      "  void m(String s, String t, int[] arr, int a) {\n"
      "    String u = \"yes\";\n"
      "    boolean c1 = a > 0;\n"
      "    String up = s.toUpperCase();\n"
      "    int len = s.length();\n"
      "    boolean eq = s.equals(t);\n"
      "    char ch = s.charAt(0);\n"
      "    int n = arr.length;\n"
      "    int r = compute();\n"
      "    String cat = s + 1;\n"
      "    boolean both = c1 & eq;\n"
      "  }\n"
      "}\n");
  REQUIRE(p.result.events.empty());
  SemanticModel model = build_model(*p.result.root);

  auto type_of_init = [&](std::string_view var_name) {
    const Expr* init = nullptr;
    walk(*p.result.root, [&](const Node& node) {
      if (const auto* decl = node.as<LocalVarDecl>()) {
        for (const Declarator& d : decl->declarators) {
          if (d.name == var_name && d.init) init = d.init.get();
        }
      }
    });
    REQUIRE(init != nullptr);
    return infer_type(*init, model);
  };

  CHECK(type_of_init("u").is(TypeTag::Kind::String));
  CHECK(type_of_init("c1").is(TypeTag::Kind::Boolean));
  CHECK(type_of_init("up").is(TypeTag::Kind::String));
  CHECK(type_of_init("len").is(TypeTag::Kind::Numeric));
  CHECK(type_of_init("eq").is(TypeTag::Kind::Boolean));
  CHECK(type_of_init("ch").is(TypeTag::Kind::Char));
  CHECK(type_of_init("n").is(TypeTag::Kind::Numeric));
  CHECK(type_of_init("r").is(TypeTag::Kind::Numeric));
  CHECK(type_of_init("cat").is(TypeTag::Kind::String));
  CHECK(type_of_init("both").is(TypeTag::Kind::Boolean));
}

TEST_CASE("unresolved names infer to unknown, never error") {
  Parsed p(
      "class A { void m(Mystery q) {\n"
      "  int x = q.whatever();\n"
      "  int y = unknownCall();\n"
      "} }\n");
  SemanticModel model = build_model(*p.result.root);
  const Expr* call = find_expr(*p.result.root, NodeKind::CallExpr, 0);
  REQUIRE(call != nullptr);
  CHECK(infer_type(*call, model).is(TypeTag::Kind::Unknown));
}

TEST_CASE("never_assigned predicate") {
  Parsed p(
      "class A {\n"
      "  char read() { return 'x'; }\n"
      "  void m(char p) {\n"
      "    char c = 'Y';\n"
      "    char d;\n"
      "    d = read();\n"
      "    char e;\n"
      "    if (p == e) { }\n"
      "  }\n"
      "}\n");
  SemanticModel model = build_model(*p.result.root);
  CHECK_FALSE(never_assigned(*find_var(model, "c")));  // initializer present
  CHECK_FALSE(never_assigned(*find_var(model, "d")));  // assigned later
  CHECK(never_assigned(*find_var(model, "e")));
  CHECK_FALSE(never_assigned(*find_var(model, "p")));  // parameter
}

TEST_CASE("shadowing resolves innermost-first") {
  Parsed p(
      "class A {\n"
      "  int x;\n"
      "  void m() {\n"
      "    String x = \"local\";\n"
      "    use(x);\n"
      "  }\n"
      "}\n");
  SemanticModel model = build_model(*p.result.root);
  const Expr* use_arg = nullptr;
  walk(*p.result.root, [&](const Node& node) {
    if (const auto* call = node.as<CallExpr>()) {
      if (!call->args.empty()) use_arg = call->args[0].get();
    }
  });
  REQUIRE(use_arg != nullptr);
  CHECK(infer_type(*use_arg, model).is(TypeTag::Kind::String));
  const VariableInfo* binding = model.binding_of(use_arg);
  REQUIRE(binding != nullptr);
  CHECK(binding->kind == VarKind::Local);
}

TEST_CASE("model construction is deterministic") {
  Parsed p(kPromptLoop);
  SemanticModel first = build_model(*p.result.root);
  SemanticModel second = build_model(*p.result.root);
  REQUIRE(first.variables().size() == second.variables().size());
  for (size_t i = 0; i < first.variables().size(); ++i) {
    const VariableInfo& a = *first.variables()[i];
    const VariableInfo& b = *second.variables()[i];
    CHECK(a.name == b.name);
    CHECK(a.kind == b.kind);
    CHECK(a.read_sites.size() == b.read_sites.size());
    CHECK(a.assignment_sites.size() == b.assignment_sites.size());
    CHECK(a.reading_methods.size() == b.reading_methods.size());
  }
}

TEST_CASE("models survive recovered trees") {
  Parsed p("class A { int class = 5; void m( { int x = ; } }");
  SemanticModel model = build_model(*p.result.root);
  CHECK(model.classes().size() == 1);  // malformed regions become unknowns
}

TEST_CASE("compound assignment counts as read and write") {
  Parsed p(
      "class A { void m() { int total = 0; total += 5; total++; } }");
  SemanticModel model = build_model(*p.result.root);
  const VariableInfo* total = find_var(model, "total");
  REQUIRE(total != nullptr);
  CHECK(total->assignment_sites.size() == 2);
  CHECK(total->read_sites.size() == 2);
}
