#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "mj/ast.hpp"

namespace mj {

enum class ErrorCode {
    CannotFindSymbol,
    IncompatibleTypes,
    MissingReturn,
    WrongArity,
    NotAFunction,
    DuplicateDeclaration,
    BadOperandType,
};

const char* error_code_str(ErrorCode code);

struct CheckError {
    ErrorCode code;
    std::string message; // produced from the mj::msg catalog
    Span span;
};

struct CheckResult {
    std::vector<CheckError> errors; // ordered by source position
    // Static type of every expression that typed successfully. Valid only
    // when errors is empty for the nodes involved.
    std::unordered_map<NodeId, MjType> expr_types;
};

// Full static check: name resolution, typing, arity, definite return.
CheckResult check_full(const Ast& ast);

// Convenience wrapper; empty result means the program is well-typed.
std::vector<CheckError> check(const Ast& ast);

} // namespace mj
