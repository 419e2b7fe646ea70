#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mj/ast.hpp"

namespace mj {

struct ExecLimits {
    long long step_budget = 1'000'000; // interpreter steps per test
    int max_call_depth = 256;
};

enum class RuntimeErrorType {
    AssertionFailure,
    ComparisonFailure,
    NullDereference,
    IndexOutOfBounds,
    DivisionByZero,
    StepLimitExceeded,
};

const char* runtime_error_str(RuntimeErrorType t);

struct TestOutcome {
    std::string test_name;
    bool passed = false;
    RuntimeErrorType error_type = RuntimeErrorType::AssertionFailure;
    std::string error_message;
    std::string failing_assertion; // inline text of the assert, empty when the
                                   // failure did not occur while evaluating one
};

// Thrown when run_tests is called on a program with check errors.
struct NotChecked : std::runtime_error {
    NotChecked() : std::runtime_error("program has check errors") {}
};

// Runs every `test_*` method (void, zero parameters) in declaration order.
// Each test runs on a fresh instance of its declaring class; a test stops at
// its first failure. Checks the program first and throws NotChecked if it
// does not pass the static checker.
std::vector<TestOutcome> run_tests(const Ast& ast, const ExecLimits& limits = {});

// Same, for callers that already ran the checker.
std::vector<TestOutcome> run_tests_unchecked(const Ast& ast, const ExecLimits& limits = {});

// First failing outcome in declaration order, or nullopt when all pass.
std::optional<TestOutcome> first_failure(const std::vector<TestOutcome>& outcomes);

} // namespace mj
