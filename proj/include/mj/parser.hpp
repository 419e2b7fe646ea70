#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "mj/ast.hpp"

namespace mj {

struct ParseError {
    Span span;
    std::string message;
};

// Parses MJ source into an Ast. NodeIds are assigned in preorder starting
// at 1, so parsing the same text twice yields identical numbering.
std::variant<Ast, ParseError> parse(std::string_view source);

// Parses a sequence of statements (as they would appear inside a method
// body). Used to splice candidate patches back into a program.
std::variant<std::vector<StmtPtr>, ParseError> parse_statements(std::string_view source);

} // namespace mj
