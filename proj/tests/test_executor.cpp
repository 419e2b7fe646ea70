#include "doctest.h"

#include "mj/checker.hpp"
#include "mj/interp.hpp"
#include "mj/parser.hpp"

using namespace mj;

namespace {

Ast parse_ok(const std::string& src) {
    auto r = parse(src);
    REQUIRE(std::holds_alternative<Ast>(r));
    return std::move(std::get<Ast>(r));
}

} // namespace

TEST_CASE("assigning a string to an int is IncompatibleTypes") {
    Ast ast = parse_ok("class A { void f(){ int a = 0; a = \"x\"; } }");
    auto errors = check(ast);
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].code == ErrorCode::IncompatibleTypes);
    CHECK(errors[0].message == "incompatible types: string cannot be converted to int");
}

TEST_CASE("undeclared reference is CannotFindSymbol with exact message") {
    Ast ast = parse_ok("class A { int f(){ return b; } }");
    auto errors = check(ast);
    REQUIRE(!errors.empty());
    CHECK(errors[0].code == ErrorCode::CannotFindSymbol);
    CHECK(errors[0].message == "cannot find symbol: b");
}

TEST_CASE("errors are ordered by source position and the first is stable") {
    Ast ast = parse_ok("class A { void f(){ int a = \"x\"; bool b = 3; } }");
    auto errors = check(ast);
    REQUIRE(errors.size() == 2);
    CHECK(errors[0].message == "incompatible types: string cannot be converted to int");
    CHECK(errors[1].message == "incompatible types: int cannot be converted to bool");
    CHECK(errors[0].span.byte_begin < errors[1].span.byte_begin);
}

TEST_CASE("message templates match the catalog exactly") {
    struct Case {
        const char* src;
        ErrorCode code;
        const char* message;
    };
    const Case cases[] = {
        {"class A { void f(){ g(); } }", ErrorCode::CannotFindSymbol, "cannot find symbol: g"},
        {"class A { long g(){ return 1L; } void f(){ int a = 0; a = g(); } }",
         ErrorCode::IncompatibleTypes, "incompatible types: long cannot be converted to int"},
        {"class A { int f(){ int a = 0; } }", ErrorCode::MissingReturn,
         "missing return statement"},
        {"class A { int g(int x){ return x; } void f(){ int a = g(1, 2); } }",
         ErrorCode::WrongArity, "method g expects 1 arguments but got 2"},
        {"class A { int g; void f(){ int a = g(); } }", ErrorCode::NotAFunction,
         "g is not a method"},
        {"class A { void f(){ int a = 0; int a = 1; } }", ErrorCode::DuplicateDeclaration,
         "duplicate declaration: a"},
        {"class A { void f(){ bool b = 1 < 2 && 3; } }", ErrorCode::BadOperandType,
         "bad operand type int for operator &&"},
    };
    for (const auto& c : cases) {
        CAPTURE(c.src);
        Ast ast = parse_ok(c.src);
        auto errors = check(ast);
        REQUIRE(!errors.empty());
        CHECK(errors[0].code == c.code);
        CHECK(errors[0].message == c.message);
    }
}

TEST_CASE("no implicit narrowing or int-to-float widening") {
    auto errs1 = check(parse_ok("class A { void f(){ long a = 1L; int b = 0; b = a; } }"));
    REQUIRE(!errs1.empty());
    CHECK(errs1[0].code == ErrorCode::IncompatibleTypes);

    auto errs2 = check(parse_ok("class A { void f(){ float x = 1.0f; x = 1; } }"));
    REQUIRE(!errs2.empty());
    CHECK(errs2[0].code == ErrorCode::IncompatibleTypes);
    CHECK(errs2[0].message == "incompatible types: int cannot be converted to float");

    // the two legal widenings
    CHECK(check(parse_ok("class A { void f(){ long a = 1; double d = 1.0f; } }")).empty());
}

TEST_CASE("null assigns to references but not to primitives") {
    CHECK(check(parse_ok("class A { void f(){ string s = null; int[] xs = null; A a = null; } }"))
              .empty());
    auto errs = check(parse_ok("class A { void f(){ int x = null; } }"));
    REQUIRE(!errs.empty());
    CHECK(errs[0].message == "incompatible types: null cannot be converted to int");
}

TEST_CASE("comparison failure message matches the template") {
    Ast ast = parse_ok(R"(class A {
  int invc() { return 0; }
  void test_invc() { A a = new A(); assertEquals(1, a.invc()); }
}
)");
    auto outcomes = run_tests(ast);
    REQUIRE(outcomes.size() == 1);
    CHECK(!outcomes[0].passed);
    CHECK(outcomes[0].error_type == RuntimeErrorType::ComparisonFailure);
    CHECK(outcomes[0].error_message == "expected:1 but was:0");
    CHECK(outcomes[0].failing_assertion == "assertEquals(1, a.invc());");
}

TEST_CASE("null field dereference fails with NullDereference") {
    Ast ast = parse_ok(R"(class Node {
  Node next;
  int value;
  int nextValue() { return next.value; }
  void test_next() { Node n = new Node(); assertEquals(0, n.nextValue()); }
}
)");
    auto outcomes = run_tests(ast);
    REQUIRE(outcomes.size() == 1);
    CHECK(!outcomes[0].passed);
    CHECK(outcomes[0].error_type == RuntimeErrorType::NullDereference);
    CHECK(outcomes[0].error_message == "null dereference");
}

TEST_CASE("runaway loop hits the step budget") {
    Ast ast = parse_ok("class A { void test_spin(){ while (true) { } assertTrue(true); } }");
    ExecLimits limits;
    limits.step_budget = 1000000;
    auto outcomes = run_tests(ast, limits);
    REQUIRE(outcomes.size() == 1);
    CHECK(!outcomes[0].passed);
    CHECK(outcomes[0].error_type == RuntimeErrorType::StepLimitExceeded);
    CHECK(outcomes[0].error_message == "step limit exceeded");
}

TEST_CASE("index and division faults carry exact messages") {
    Ast ast = parse_ok(R"(class A {
  void test_index() { int[] xs = new int[3]; assertEquals(0, xs[5]); }
  void test_div() { int z = 0; assertEquals(0, 1 / z); }
}
)");
    auto outcomes = run_tests(ast);
    REQUIRE(outcomes.size() == 2);
    CHECK(outcomes[0].error_type == RuntimeErrorType::IndexOutOfBounds);
    CHECK(outcomes[0].error_message == "index 5 out of bounds for length 3");
    CHECK(outcomes[1].error_type == RuntimeErrorType::DivisionByZero);
    CHECK(outcomes[1].error_message == "division by zero");
}

TEST_CASE("assertTrue failure uses the assertion failed template") {
    Ast ast = parse_ok("class A { void test_t(){ assertTrue(1 > 2); } }");
    auto outcomes = run_tests(ast);
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].error_type == RuntimeErrorType::AssertionFailure);
    CHECK(outcomes[0].error_message == "assertion failed");
    CHECK(outcomes[0].failing_assertion == "assertTrue(1 > 2);");
}

TEST_CASE("failures outside assertion evaluation leave the assertion empty") {
    Ast ast = parse_ok(R"(class A {
  int half(int v) { return 100 / v; }
  void test_h() { int x = half(0); assertEquals(0, x); }
}
)");
    auto outcomes = run_tests(ast);
    REQUIRE(outcomes.size() == 1);
    CHECK(outcomes[0].error_type == RuntimeErrorType::DivisionByZero);
    CHECK(outcomes[0].failing_assertion.empty());
}

TEST_CASE("run_tests on an unchecked program throws NotChecked") {
    Ast ast = parse_ok("class A { void test_t(){ assertTrue(q); } }");
    CHECK_THROWS_AS(run_tests(ast), NotChecked);
}

TEST_CASE("first_failure picks the first failing test in declaration order") {
    Ast ast = parse_ok(R"(class A {
  void test_a() { assertTrue(true); }
  void test_b() { Node n = null; }
  void test_c() { int[] xs = new int[1]; assertEquals(0, xs[2]); }
}
class Node { int v; }
)");
    // test_b: declaring a Node and never using it passes; make it fail via null deref
    Ast ast2 = parse_ok(R"(class A {
  void test_a() { assertTrue(true); }
  void test_b() { Node n = null; assertEquals(0, n.v); }
  void test_c() { int[] xs = new int[1]; assertEquals(0, xs[2]); }
}
class Node { int v; }
)");
    (void)ast;
    auto outcomes = run_tests(ast2);
    REQUIRE(outcomes.size() == 3);
    auto ff = first_failure(outcomes);
    REQUIRE(ff.has_value());
    CHECK(ff->test_name == "test_b");
    CHECK(ff->error_type == RuntimeErrorType::NullDereference);

    // all passing -> none
    Ast ok = parse_ok("class A { void test_a(){ assertTrue(true); } void test_b(){ assertEquals(1, 1); } }");
    CHECK(!first_failure(run_tests(ok)).has_value());
}

TEST_CASE("determinism: identical program and limits give identical outcomes") {
    const std::string src = R"(class A {
  int fib(int n) { if (n < 2) { return n; } return fib(n - 1) + fib(n - 2); }
  void test_fib() { assertEquals(55, fib(10)); }
  void test_fail() { assertEquals(1, fib(3)); }
}
)";
    Ast a = parse_ok(src);
    Ast b = parse_ok(src);
    auto o1 = run_tests(a);
    auto o2 = run_tests(b);
    REQUIRE(o1.size() == o2.size());
    for (std::size_t i = 0; i < o1.size(); ++i) {
        CHECK(o1[i].passed == o2[i].passed);
        CHECK(o1[i].error_message == o2[i].error_message);
        CHECK(o1[i].failing_assertion == o2[i].failing_assertion);
    }
}

TEST_CASE("string semantics: value equality, concat, length, indexing") {
    Ast ast = parse_ok(R"(class S {
  void test_eq() { string a = "ab"; string b = "a" + "b"; assertTrue(a == b); }
  void test_len() { assertEquals(3, "abc".length); }
  void test_idx() { string s = "xyz"; assertEquals("y", s[1]); }
}
)");
    auto outcomes = run_tests(ast);
    for (const auto& o : outcomes) {
        CAPTURE(o.test_name);
        CHECK(o.passed);
    }
}

TEST_CASE("deep recursion is cut off as a resource fault, not a crash") {
    Ast ast = parse_ok(R"(class A {
  int down(int n) { return down(n + 1); }
  void test_rec() { assertEquals(0, down(0)); }
}
)");
    auto outcomes = run_tests(ast);
    REQUIRE(outcomes.size() == 1);
    CHECK(!outcomes[0].passed);
    CHECK(outcomes[0].error_type == RuntimeErrorType::StepLimitExceeded);
}
