#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mj/span.hpp"
#include "mj/types.hpp"

namespace mj {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class BinOp { Eq, Ne, Lt, Le, Gt, Ge, And, Or, Add, Sub, Mul, Div, Mod };
enum class UnOp { Neg, Not };

const char* bin_op_str(BinOp op);
const char* un_op_str(UnOp op);

enum class ExprKind {
    IntLit,     // int_val (suffix-free integer literal)
    LongLit,    // int_val, printed with L suffix
    FloatLit,   // float_val, printed with f suffix
    DoubleLit,  // float_val
    BoolLit,    // bool_val
    StringLit,  // str_val (unescaped bytes)
    NullLit,
    This,
    VarRef,      // name
    Unary,       // uop, lhs
    Binary,      // op, lhs, rhs
    FieldAccess, // recv, name (covers array/string .length)
    Index,       // lhs [ rhs ]
    Call,        // recv (null for implicit this), name, args
    New,         // name (class), args
    NewArray     // decl_type (element type), lhs (size)
};

struct Expr {
    NodeId id = kNoNode;
    Span span;
    ExprKind kind;

    long long int_val = 0;
    double float_val = 0.0;
    bool bool_val = false;
    std::string str_val;
    std::string name;
    BinOp op = BinOp::Add;
    UnOp uop = UnOp::Neg;
    MjType decl_type;

    ExprPtr lhs, rhs, recv;
    std::vector<ExprPtr> args;
};

enum class StmtKind { VarDecl, Assign, If, While, For, Return, ExprStmt, Assert };
enum class AssertKind { True, Equals };

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Block {
    NodeId id = kNoNode;
    Span span;
    std::vector<StmtPtr> stmts;
};
using BlockPtr = std::unique_ptr<Block>;

struct Stmt {
    NodeId id = kNoNode;
    Span span;
    StmtKind kind;

    MjType decl_type;        // VarDecl declared type
    std::string name;        // VarDecl name
    ExprPtr init;            // VarDecl initializer / Assign rhs / Return expr / ExprStmt expr
    ExprPtr lvalue;          // Assign target
    ExprPtr cond;            // If/While/For condition
    StmtPtr for_init;        // For header (VarDecl or Assign), optional
    StmtPtr for_update;      // For header (Assign), optional
    BlockPtr body;           // If then / While / For body
    BlockPtr else_body;      // If else (a single nested If models "else if")
    AssertKind assert_kind = AssertKind::True;
    std::vector<ExprPtr> args; // Assert arguments
};

struct Param {
    NodeId id = kNoNode;
    Span span;
    MjType type;
    std::string name;
};

struct FieldDecl {
    NodeId id = kNoNode;
    Span span;
    MjType type;
    std::string name;
};

struct CtorDecl {
    NodeId id = kNoNode;
    Span span;
    std::vector<Param> params;
    BlockPtr body;
};

struct MethodDecl {
    NodeId id = kNoNode;
    Span span;
    std::string name;
    std::optional<MjType> return_type; // nullopt = void
    std::vector<Param> params;
    BlockPtr body;

    bool is_test() const { return name.rfind("test_", 0) == 0; }
};

struct ClassDecl {
    NodeId id = kNoNode;
    Span span;
    std::string name;
    std::vector<FieldDecl> fields;
    std::optional<CtorDecl> ctor; // at most one constructor per class
    std::vector<MethodDecl> methods;
};

struct Ast {
    std::vector<ClassDecl> classes;
    NodeId next_id = 1; // ids are assigned in preorder starting at 1

    NodeId fresh_id() { return next_id++; }
};

// Deep copies. clone_expr/clone_stmt keep the original ids; the *_fresh
// variants renumber from ast.next_id (used when duplicating donor code).
ExprPtr clone_expr(const Expr& e);
StmtPtr clone_stmt(const Stmt& s);
BlockPtr clone_block(const Block& b);
Ast clone_ast(const Ast& a);
StmtPtr clone_stmt_fresh(const Stmt& s, Ast& ast);
ExprPtr clone_expr_fresh(const Expr& e, Ast& ast);

// Structural equality, ignoring NodeIds and Spans.
bool equal(const Expr& a, const Expr& b);
bool equal(const Stmt& a, const Stmt& b);
bool equal(const Block& a, const Block& b);
bool equal(const Ast& a, const Ast& b);

// Preorder visit over every statement in the program (including nested ones
// and statements of For headers are not visited separately; the For counts
// as one statement and its body statements are visited).
void for_each_stmt(const Ast& ast, const std::function<void(const Stmt&)>& fn);
void for_each_stmt(const Block& block, const std::function<void(const Stmt&)>& fn);

std::size_t count_statements(const Ast& ast);

// Lookup helpers.
const ClassDecl* find_class(const Ast& ast, const std::string& name);
const MethodDecl* find_method(const ClassDecl& cls, const std::string& name);

} // namespace mj
