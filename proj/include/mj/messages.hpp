#pragma once

#include <string>

namespace mj::msg {

// The single catalog of diagnostic message templates. Every message the
// checker or interpreter emits goes through one of these; golden tests pin
// the exact text.

inline std::string cannot_find_symbol(const std::string& name) {
    return "cannot find symbol: " + name;
}
inline std::string incompatible_types(const std::string& found, const std::string& expected) {
    return "incompatible types: " + found + " cannot be converted to " + expected;
}
inline std::string missing_return() {
    return "missing return statement";
}
inline std::string wrong_arity(const std::string& name, std::size_t expected, std::size_t got) {
    return "method " + name + " expects " + std::to_string(expected) + " arguments but got " +
           std::to_string(got);
}
inline std::string not_a_function(const std::string& name) {
    return name + " is not a method";
}
inline std::string duplicate_declaration(const std::string& name) {
    return "duplicate declaration: " + name;
}
inline std::string bad_operand_type(const std::string& type, const std::string& op) {
    return "bad operand type " + type + " for operator " + op;
}

inline std::string comparison_failure(const std::string& expected, const std::string& actual) {
    return "expected:" + expected + " but was:" + actual;
}
inline std::string assertion_failed() {
    return "assertion failed";
}
inline std::string null_dereference() {
    return "null dereference";
}
inline std::string index_out_of_bounds(long long i, long long n) {
    return "index " + std::to_string(i) + " out of bounds for length " + std::to_string(n);
}
inline std::string division_by_zero() {
    return "division by zero";
}
inline std::string step_limit_exceeded() {
    return "step limit exceeded";
}

} // namespace mj::msg
