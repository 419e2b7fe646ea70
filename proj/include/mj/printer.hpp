#pragma once

#include <string>

#include "mj/ast.hpp"

namespace mj {

// Canonical multi-line formatting. parse(pretty_print(a)) is structurally
// equal to a, and pretty_print is a fixed point over parse.
std::string pretty_print(const Ast& ast);

// Single-line renderings, used for sample text and diagnostics
// (e.g. "if (x > 0) { return x; }").
std::string print_stmt_inline(const Stmt& s);
std::string print_stmts_inline(const std::vector<const Stmt*>& stmts);
std::string print_block_inline(const Block& b);
std::string print_expr(const Expr& e);
std::string print_type(const MjType& t);

// Literal rendering shared with the interpreter's value formatting.
std::string format_double(double v);

} // namespace mj
