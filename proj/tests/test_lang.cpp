#include "doctest.h"

#include "mj/checker.hpp"
#include "mj/parser.hpp"
#include "mj/printer.hpp"
#include "mj/scope.hpp"

using namespace mj;

namespace {

Ast parse_ok(const std::string& src) {
    auto r = parse(src);
    REQUIRE(std::holds_alternative<Ast>(r));
    return std::move(std::get<Ast>(r));
}

ParseError parse_err(const std::string& src) {
    auto r = parse(src);
    REQUIRE(std::holds_alternative<ParseError>(r));
    return std::get<ParseError>(r);
}

} // namespace

TEST_CASE("minimal program parses to one class, one method, one return") {
    Ast ast = parse_ok("class A { int f(){ return 1; } }");
    CHECK(ast.classes.size() == 1);
    CHECK(ast.classes[0].methods.size() == 1);
    const auto& body = *ast.classes[0].methods[0].body;
    REQUIRE(body.stmts.size() == 1);
    CHECK(body.stmts[0]->kind == StmtKind::Return);
}

TEST_CASE("missing return expression is a parse error at the brace") {
    ParseError e = parse_err("class A { int f(){ return } }");
    CHECK(e.message.find("expected") != std::string::npos);
    CHECK(e.message.find("'}'") != std::string::npos);
}

TEST_CASE("unterminated string literal is a parse error with position") {
    ParseError e = parse_err("class A { void f(){ string s = \"abc; } }");
    CHECK(e.message.find("unterminated") != std::string::npos);
    CHECK(e.span.line == 1);
}

TEST_CASE("pretty print is a fixed point over parse") {
    const std::string src = R"(class Point {
  int x;
  int y;
  Point(int ax, int ay) { x = ax; y = ay; }
  int manhattan() { int ax = x; if (ax < 0) { ax = -ax; } int ay = y;
    if (ay < 0) { ay = -ay; } return ax + ay; }
  void test_manhattan() { Point p = new Point(-2, 3); assertEquals(5, p.manhattan()); }
}
)";
    Ast a = parse_ok(src);
    std::string p1 = pretty_print(a);
    Ast b = parse_ok(p1);
    CHECK(equal(a, b));
    std::string p2 = pretty_print(b);
    CHECK(p1 == p2);
}

TEST_CASE("else-if chains survive the round trip") {
    const std::string src =
        "class A { int sign(int v){ if (v > 0) { return 1; } else if (v < 0) { return -1; } "
        "else { return 0; } } }";
    Ast a = parse_ok(src);
    std::string p1 = pretty_print(a);
    CHECK(p1.find("} else if (v < 0) {") != std::string::npos);
    Ast b = parse_ok(p1);
    CHECK(equal(a, b));
    CHECK(pretty_print(b) == p1);
}

TEST_CASE("re-parsing the same text yields the same NodeId assignment") {
    const std::string src =
        "class A { int f(int n){ int s = 0; for (int i = 0; i < n; i = i + 1) { s = s + i; } "
        "return s; } }";
    Ast a = parse_ok(src);
    Ast b = parse_ok(src);
    std::vector<NodeId> ids_a, ids_b;
    for_each_stmt(a, [&](const Stmt& s) { ids_a.push_back(s.id); });
    for_each_stmt(b, [&](const Stmt& s) { ids_b.push_back(s.id); });
    CHECK(ids_a == ids_b);
    CHECK(a.next_id == b.next_id);
}

TEST_CASE("operators and precedence round trip") {
    const std::string src =
        "class A { bool f(int a, int b, int c){ return a + b * c - a / (b + 1) % 2 >= c || "
        "!(a < b) && a != c; } }";
    Ast a = parse_ok(src);
    std::string p1 = pretty_print(a);
    Ast b = parse_ok(p1);
    CHECK(equal(a, b));
    CHECK(pretty_print(b) == p1);
}

TEST_CASE("string escapes round trip") {
    const std::string src =
        "class A { string f(){ return \"a\\n\\t\\\"q\\\\z\"; } }";
    Ast a = parse_ok(src);
    std::string p1 = pretty_print(a);
    Ast b = parse_ok(p1);
    CHECK(equal(a, b));
    CHECK(pretty_print(b) == p1);
}

TEST_CASE("scope of a parameter is visible inside the method") {
    Ast ast = parse_ok("class A { int f(int a){ int b = a + 1; return b; } }");
    const Stmt* ret = nullptr;
    for_each_stmt(ast, [&](const Stmt& s) {
        if (s.kind == StmtKind::Return) ret = &s;
    });
    REQUIRE(ret);
    auto info = resolve_scope(ast, ret->id);
    REQUIRE(info.has_value());
    CHECK(info->method_name == "f");
    bool has_a = false, has_b = false;
    for (const auto& v : info->variables) {
        if (v.name == "a" && v.type == MjType::int_t()) has_a = true;
        if (v.name == "b" && v.type == MjType::int_t()) has_b = true;
    }
    CHECK(has_a);
    CHECK(has_b);
}

TEST_CASE("for-body scope includes the loop variable") {
    Ast ast = parse_ok(
        "class A { int f(int n){ int s = 0; for (int i = 0; i < n; i = i + 1) { s = s + i; } "
        "return s; } }");
    const Stmt* inner = nullptr;
    for_each_stmt(ast, [&](const Stmt& s) {
        if (s.kind == StmtKind::Assign && !inner) inner = &s; // s = s + i
    });
    REQUIRE(inner);
    auto info = resolve_scope(ast, inner->id);
    REQUIRE(info.has_value());
    bool has_i = false;
    for (const auto& v : info->variables)
        if (v.name == "i") has_i = true;
    CHECK(has_i);
}

TEST_CASE("scope never reports variables declared after the query point") {
    Ast ast = parse_ok("class A { int f(){ int a = 1; int b = 2; return a; } }");
    const Stmt* first = ast.classes[0].methods[0].body->stmts[0].get();
    auto info = resolve_scope(ast, first->id);
    REQUIRE(info.has_value());
    for (const auto& v : info->variables) {
        CHECK(v.name != "a");
        CHECK(v.name != "b");
    }
}

TEST_CASE("unknown node id resolves to nothing") {
    Ast ast = parse_ok("class A { int f(){ return 1; } }");
    CHECK(!resolve_scope(ast, 999999).has_value());
}

// Independent scope oracle: collect visible variables by brute force from the
// source structure, ignoring the production resolver.
namespace {

void oracle_walk(const Block& b, const Stmt* target, std::vector<std::string> acc,
                 std::optional<std::vector<std::string>>& out) {
    for (std::size_t i = 0; i < b.stmts.size(); ++i) {
        const Stmt& s = *b.stmts[i];
        if (&s == target) {
            out = acc;
            return;
        }
        std::vector<std::string> inner = acc;
        if (s.kind == StmtKind::For && s.for_init && s.for_init->kind == StmtKind::VarDecl)
            inner.push_back(s.for_init->name);
        if (s.body) oracle_walk(*s.body, target, inner, out);
        if (s.else_body) oracle_walk(*s.else_body, target, inner, out);
        if (out) return;
        if (s.kind == StmtKind::VarDecl) acc.push_back(s.name);
    }
}

} // namespace

TEST_CASE("resolve_scope matches a brute-force walk over a nested program") {
    const std::string src = R"(class M {
  int total;
  int accumulate(int[] xs, int lo) {
    int s = 0;
    for (int i = 0; i < xs.length; i = i + 1) {
      int v = xs[i];
      if (v > lo) {
        int w = v * 2;
        s = s + w;
      } else {
        s = s + v;
      }
    }
    total = s;
    return s;
  }
}
)";
    Ast ast = parse_ok(src);
    for_each_stmt(ast, [&](const Stmt& target) {
        auto info = resolve_scope(ast, target.id);
        REQUIRE(info.has_value());
        std::optional<std::vector<std::string>> expected_locals;
        oracle_walk(*ast.classes[0].methods[0].body, &target, {}, expected_locals);
        REQUIRE(expected_locals.has_value());
        // fields + params are always visible
        std::vector<std::string> expected = {"total", "xs", "lo"};
        expected.insert(expected.end(), expected_locals->begin(), expected_locals->end());
        std::vector<std::string> actual;
        for (const auto& v : info->variables) actual.push_back(v.name);
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        CHECK(actual == expected);
    });
}
