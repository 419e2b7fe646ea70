#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mj/ast.hpp"

namespace mj {

struct VarInfo {
    std::string name;
    MjType type;
    enum class Where { Field, Param, Local } where;
};

struct MethodSig {
    std::string declaring_class;
    std::string name;
    std::vector<MjType> param_types;
    std::optional<MjType> return_type;
};

// Everything visible from one statement: the raw material for context
// assembly and for typed perturbation candidates.
struct ScopeInfo {
    std::string class_name;
    std::string method_name; // constructor bodies report the class name
    bool in_test_method = false;
    std::vector<VarInfo> variables;      // fields, then params, then locals in
                                         // declaration order; shadowed names
                                         // keep the innermost type
    std::vector<MethodSig> methods;      // methods of the enclosing class
    std::vector<const Stmt*> block_stmts; // statements of the target's block
    std::size_t index_in_block = 0;       // position of the target among them
};

// Resolves the scope around the statement that is (or contains) `at`.
// Returns nullopt when the node id does not exist.
std::optional<ScopeInfo> resolve_scope(const Ast& ast, NodeId at);

// Structural address of a block: survives pretty-print/re-parse round trips,
// unlike NodeIds.
struct BlockPath {
    int class_idx = 0;
    int member = 0; // -1 = constructor, otherwise method index
    std::vector<std::pair<int, int>> descent; // (stmt index, 0=body 1=else)

    std::vector<int> flatten() const;
    static std::optional<BlockPath> unflatten(const std::vector<int>& v);
    bool operator==(const BlockPath&) const = default;
};

Block* get_block(Ast& ast, const BlockPath& path);
const Block* get_block(const Ast& ast, const BlockPath& path);

// Locates the block and index holding the statement with the given id.
struct StmtLocation {
    BlockPath path;
    std::size_t index = 0;
};
std::optional<StmtLocation> find_stmt(const Ast& ast, NodeId stmt_id);

// First statement that starts on `line` (1-based); used by the repair CLI.
const Stmt* find_stmt_on_line(const Ast& ast, std::uint32_t line);

// The method (or constructor) whose body contains the statement.
struct EnclosingMember {
    const ClassDecl* cls = nullptr;
    const MethodDecl* method = nullptr; // null for constructor bodies
    bool is_ctor = false;
};
std::optional<EnclosingMember> enclosing_member(const Ast& ast, NodeId stmt_id);

} // namespace mj
