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

#include <random>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"

using namespace novlint;
using novlint::test::Parsed;
using novlint::test::require_sound_spans;

namespace {

const MethodDecl* first_method(const CompilationUnit& unit) {
  for (const NodePtr& type : unit.types) {
    if (const auto* cls = type->as<ClassDecl>()) {
      for (const NodePtr& member : cls->members) {
        if (const auto* method = member->as<MethodDecl>()) return method;
      }
    }
  }
  return nullptr;
}

const Stmt* first_body_stmt(const CompilationUnit& unit) {
  const MethodDecl* method = first_method(unit);
  if (method == nullptr || method->body == nullptr ||
      method->body->statements.empty()) {
    return nullptr;
  }
  return method->body->statements.front().get();
}

size_t count_events(const ParseResult& result, RecoveryKind kind) {
  size_t n = 0;
  for (const RecoveryEvent& event : result.events) {
    if (event.kind == kind) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("well-formed class parses with zero events") {
  Parsed p("class A { void m() { int x = 1; } }");
  CHECK(p.result.events.empty());
  REQUIRE(p.result.root->types.size() == 1);
  const auto* cls = p.result.root->types[0]->as<ClassDecl>();
  REQUIRE(cls != nullptr);
  CHECK(cls->name == "A");
  REQUIRE(cls->members.size() == 1);
  const auto* method = cls->members[0]->as<MethodDecl>();
  REQUIRE(method != nullptr);
  CHECK(method->name == "m");
  REQUIRE(method->body != nullptr);
  REQUIRE(method->body->statements.size() == 1);
  CHECK(method->body->statements[0]->kind == NodeKind::LocalVarDecl);
  require_sound_spans(*p.result.root, p.file.size());
}

TEST_CASE("comma-separated for header repairs with one event per comma") {
  Parsed p("class A { void m(int n) { for (int i = 0, i < n, i++) {} } }");
  CHECK(count_events(p.result, RecoveryKind::CommaInForHeader) == 2);
  const Stmt* stmt = first_body_stmt(*p.result.root);
  REQUIRE(stmt != nullptr);
  const auto* loop = stmt->as<ForStmt>();
  REQUIRE(loop != nullptr);
  REQUIRE(loop->init_decl != nullptr);
  REQUIRE(loop->condition != nullptr);
  const auto* cond = loop->condition->as<BinaryExpr>();
  REQUIRE(cond != nullptr);
  CHECK(cond->op == BinaryOp::Lt);
  CHECK(loop->updates.size() == 1);
  require_sound_spans(*p.result.root, p.file.size());
}

TEST_CASE("legal multi-declarator for header parses without events") {
  Parsed p("class A { void m(int n) { for (int i = 0, j = 0; i < n; i++, j++) {} } }");
  CHECK(p.result.events.empty());
  const auto* loop = first_body_stmt(*p.result.root)->as<ForStmt>();
  REQUIRE(loop != nullptr);
  REQUIRE(loop->init_decl != nullptr);
  CHECK(loop->init_decl->declarators.size() == 2);
  CHECK(loop->updates.size() == 2);
}

TEST_CASE("single wrong comma after the condition repairs with one event") {
  Parsed p("class A { void m(int n) { for (int i = 0; i < n, i++) {} } }");
  CHECK(count_events(p.result, RecoveryKind::CommaInForHeader) == 1);
}

TEST_CASE("keyword in a declaration name slot") {
  Parsed p("class A { void m() { int class = 5; } }");
  REQUIRE(count_events(p.result, RecoveryKind::KeywordAsIdentifier) == 1);
  CHECK(p.result.events[0].subject == "class");
  const Stmt* stmt = first_body_stmt(*p.result.root);
  REQUIRE(stmt != nullptr);
  const auto* decl = stmt->as<LocalVarDecl>();
  REQUIRE(decl != nullptr);
  REQUIRE(decl->declarators.size() == 1);
  CHECK(decl->declarators[0].name == "class");
  CHECK(decl->declarators[0].name_was_keyword);
}

TEST_CASE("arrow comparator repairs to >=") {
  Parsed p("class A { void m(int a, int b) { if (a => b) { } } }");
  REQUIRE(count_events(p.result, RecoveryKind::ArrowComparator) == 1);
  const auto* stmt = first_body_stmt(*p.result.root)->as<IfStmt>();
  REQUIRE(stmt != nullptr);
  const auto* cond = stmt->condition->as<BinaryExpr>();
  REQUIRE(cond != nullptr);
  CHECK(cond->op == BinaryOp::GtEq);
}

TEST_CASE("braced condition repairs for if and while") {
  Parsed p("class A { void m(int x) { if { x > 0 } { x++; } while { x > 0 } { x--; } } }");
  CHECK(count_events(p.result, RecoveryKind::BraceCondition) == 2);
  const auto* stmt = first_body_stmt(*p.result.root)->as<IfStmt>();
  REQUIRE(stmt != nullptr);
  REQUIRE(stmt->condition != nullptr);
  const auto* cond = stmt->condition->as<BinaryExpr>();
  REQUIRE(cond != nullptr);
  CHECK(cond->op == BinaryOp::Gt);
  REQUIRE(stmt->then_branch != nullptr);
  CHECK(stmt->then_branch->kind == NodeKind::Block);
  require_sound_spans(*p.result.root, p.file.size());
}

TEST_CASE("semicolon between method header and body") {
  Parsed p("class A { void m(); { int x = 1; } }");
  REQUIRE(count_events(p.result, RecoveryKind::SemicolonAfterMethodHeader) == 1);
  const MethodDecl* method = first_method(*p.result.root);
  REQUIRE(method != nullptr);
  REQUIRE(method->body != nullptr);
  CHECK(method->body->statements.size() == 1);
}

TEST_CASE("body-less method flagged only in concrete classes") {
  Parsed concrete("class A { void m(); }");
  CHECK(count_events(concrete.result,
                     RecoveryKind::SemicolonAfterMethodHeader) == 1);

  Parsed abstract_class("abstract class A { abstract void m(); }");
  CHECK(abstract_class.result.events.empty());

  Parsed iface("interface I { void m(); int n(); }");
  CHECK(iface.result.events.empty());

  Parsed native_method("class A { public native void m(); }");
  CHECK(native_method.result.events.empty());
}

TEST_CASE("well-formed language surface parses with zero events") {
  const char* samples[] = {
      "package com.example.app;\nimport java.util.List;\n"
      "public class A { private int count; }",
      "class A { int[] xs = new int[10]; int[][] grid = new int[2][3]; }",
      "class A { java.util.List<String> names; Map<String, List<Integer>> m; }",
      "class A { void m() { for (String s : names) { use(s); } } }",
      "class A { void m(int x) { switch (x) { case 1: break; default: break; } } }",
      "class A { void m() { do { tick(); } while (alive()); } }",
      "class A { char c = (char) read(); double d = (double) 4; }",
      "class A { boolean b = x instanceof String; }",
      "class A { String s = \"a\" + 1 + 'c'; }",
      "class A { int pick(int x) { return x > 0 ? x : -x; } }",
      "class A { A() { this.n = 0; } int n; }",
      "class A { static { setup(); } { tick(); } }",
      "class A { void m(int... xs) { } }",
      "@Deprecated class A { @Override public String toString() { return \"\"; } }",
      "class A { void m() { int[] a = {1, 2, 3}; } }",
      "class A<T> { T first(java.util.List<T> xs) { return xs.get(0); } }",
      "abstract class Shape { abstract double area(); }",
      "class A { void m() { label: while (true) { break; } } }",
      "class Outer { class Inner { int x; } }",
      "class A { void m(long n) { long y = n << 2 >> 1 >>> 3; } }",
  };
  for (const char* sample : samples) {
    Parsed p(sample);
    INFO("sample: " << sample);
    CHECK(p.result.events.empty());
    require_sound_spans(*p.result.root, p.file.size());
  }
}

TEST_CASE("garbage input never kills the parser") {
  const char* samples[] = {
      "%%% @@@ )))",
      "class {{{{",
      "int x = ;;;",
      "class A { void m() { if (x > ) y(); } }",
      "} } } class B { }",
      "class A { try { x(); } catch (E e) { y(); } }",
      "\x01\x02\x03\xff\xfe",
      "class A { void m( { }",
      "for for for (((",
      "class A { int x = 5",
  };
  for (const char* sample : samples) {
    Parsed p(sample);
    INFO("sample: " << sample);
    REQUIRE(p.result.root != nullptr);
    require_sound_spans(*p.result.root, p.file.size());
  }
}

TEST_CASE("skip-to-sync produces error nodes, not events") {
  Parsed p("class A { void m() { try { x(); } finally { y(); } } }");
  CHECK(p.result.events.empty());
  bool has_error_node = false;
  walk(*p.result.root, [&](const Node& node) {
    if (node.kind == NodeKind::ErrorStmt) has_error_node = true;
  });
  CHECK(has_error_node);
}

TEST_CASE("switch case groups collect stacked labels") {
  Parsed p("class A { void m(int x) { switch (x) { case 1: case 2: f(); break; "
           "default: g(); } } }");
  const auto* stmt = first_body_stmt(*p.result.root)->as<SwitchStmt>();
  REQUIRE(stmt != nullptr);
  REQUIRE(stmt->groups.size() == 2);
  CHECK(stmt->groups[0]->labels.size() == 2);
  CHECK_FALSE(stmt->groups[0]->has_default);
  CHECK(stmt->groups[0]->statements.size() == 2);
  CHECK(stmt->groups[1]->has_default);
}

TEST_CASE("parser totality on random mutations of a fixture") {
  std::string base =
      "class Demo {\n"
      "  int total;\n"
      "  void add(int[] values) {\n"
      "    for (int i = 0; i < values.length; i++) {\n"
      "      total += values[i];\n"
      "    }\n"
      "  }\n"
      "}\n";
  std::mt19937 rng(987654);
  std::uniform_int_distribution<size_t> pos_dist(0, base.size() - 1);
  std::uniform_int_distribution<int> byte_dist(0, 255);
  std::uniform_int_distribution<int> op_dist(0, 2);
  for (int round = 0; round < 600; ++round) {
    std::string text = base;
    int mutations = 1 + round % 4;
    for (int m = 0; m < mutations; ++m) {
      size_t at = pos_dist(rng) % text.size();
      switch (op_dist(rng)) {
        case 0: text[at] = static_cast<char>(byte_dist(rng)); break;
        case 1: text.erase(at, 1); break;
        default: text.insert(at, 1, static_cast<char>(byte_dist(rng))); break;
      }
      if (text.empty()) text = "x";
    }
    Parsed p(text);
    REQUIRE(p.result.root != nullptr);
    require_sound_spans(*p.result.root, p.file.size());
    for (const RecoveryEvent& event : p.result.events) {
      REQUIRE(event.span.byte_end <= p.file.size());
      REQUIRE(event.span.byte_start <= event.span.byte_end);
    }
  }
}

TEST_CASE("pathological nesting and operator chains stay bounded") {
  // Each of these would exhaust the stack without the parser's nesting
  // and chain caps; the whole pipeline must complete on all of them.
  std::vector<std::string> monsters;
  monsters.push_back("class A { void m() { int x = " +
                     std::string(100000, '(') + "; } }");
  monsters.push_back("class A { void m() { int x = " +
                     std::string(100000, ')') + "; } }");
  {
    std::string chain = "class A { int m() { return 0";
    for (int i = 0; i < 50000; ++i) chain += "+1";
    chain += "; } }";
    monsters.push_back(std::move(chain));
  }
  monsters.push_back("class A { void m(boolean x) { boolean y = " +
                     std::string(50000, '!') + "x; } }");
  {
    std::string calls = "class A { void m() { f";
    for (int i = 0; i < 50000; ++i) calls += "()";
    calls += "; } }";
    monsters.push_back(std::move(calls));
  }
  {
    std::string idx = "class A { void m(int[] a) { a";
    for (int i = 0; i < 50000; ++i) idx += "[0]";
    idx += " = 1; } }";
    monsters.push_back(std::move(idx));
  }
  {
    std::string ifs = "class A { void m(boolean x) { ";
    for (int i = 0; i < 20000; ++i) ifs += "if (x) ";
    ifs += "; } }";
    monsters.push_back(std::move(ifs));
  }
  {
    std::string classes;
    for (int i = 0; i < 5000; ++i) classes += "class C" + std::to_string(i) + " { ";
    monsters.push_back(std::move(classes));
  }
  {
    std::string members = "class A { ";
    for (int i = 0; i < 3000; ++i) {
      members += "int f" + std::to_string(i) + "; ";
    }
    members += "}";
    monsters.push_back(std::move(members));
  }
  for (const std::string& monster : monsters) {
    INFO("input size: " << monster.size());
    auto analysis = analyze_source("monster.java", monster, {});
    REQUIRE(analysis.file != nullptr);
    for (const Diagnostic& d : analysis.diagnostics) {
      REQUIRE(d.span.byte_end <= analysis.file->size());
    }
  }
}
