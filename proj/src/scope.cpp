#include "mj/scope.hpp"

#include <functional>

namespace mj {

namespace {

bool expr_contains(const Expr& e, NodeId id);

bool exprptr_contains(const ExprPtr& e, NodeId id) {
    return e && expr_contains(*e, id);
}

bool expr_contains(const Expr& e, NodeId id) {
    if (e.id == id) return true;
    if (exprptr_contains(e.lhs, id) || exprptr_contains(e.rhs, id) || exprptr_contains(e.recv, id))
        return true;
    for (const auto& a : e.args)
        if (expr_contains(*a, id)) return true;
    return false;
}

// True when `id` names the statement itself or any node inside it,
// excluding statements of nested blocks (those are found on their own).
bool stmt_owns(const Stmt& s, NodeId id) {
    if (s.id == id) return true;
    if (exprptr_contains(s.init, id) || exprptr_contains(s.lvalue, id) ||
        exprptr_contains(s.cond, id))
        return true;
    if (s.for_init && stmt_owns(*s.for_init, id)) return true;
    if (s.for_update && stmt_owns(*s.for_update, id)) return true;
    for (const auto& a : s.args)
        if (expr_contains(*a, id)) return true;
    return false;
}

struct Frame {
    const Block* block;
    std::size_t index; // statement position currently being examined
    const Stmt* stmt;
};

// Depth-first search for the innermost statement owning `id`; records the
// chain of (block, index) frames from the method body down to it.
bool find_in_block(const Block& b, NodeId id, std::vector<Frame>& chain) {
    for (std::size_t i = 0; i < b.stmts.size(); ++i) {
        const Stmt& s = *b.stmts[i];
        if (s.body && find_in_block(*s.body, id, chain)) {
            chain.insert(chain.begin(), Frame{&b, i, &s});
            return true;
        }
        if (s.else_body && find_in_block(*s.else_body, id, chain)) {
            chain.insert(chain.begin(), Frame{&b, i, &s});
            return true;
        }
        if (stmt_owns(s, id) || b.id == id) {
            chain.insert(chain.begin(), Frame{&b, i, &s});
            return true;
        }
    }
    if (b.id == id && !b.stmts.empty()) {
        chain.insert(chain.begin(), Frame{&b, 0, b.stmts[0].get()});
        return true;
    }
    return false;
}

void add_var(std::vector<VarInfo>& vars, VarInfo v) {
    for (auto& existing : vars) {
        if (existing.name == v.name) {
            existing = std::move(v); // innermost declaration wins
            return;
        }
    }
    vars.push_back(std::move(v));
}

} // namespace

std::optional<ScopeInfo> resolve_scope(const Ast& ast, NodeId at) {
    for (const auto& cls : ast.classes) {
        auto build = [&](const Block& body, const std::string& method_name,
                         const std::vector<Param>& params,
                         bool is_test) -> std::optional<ScopeInfo> {
            std::vector<Frame> chain;
            if (!find_in_block(body, at, chain)) return std::nullopt;

            ScopeInfo info;
            info.class_name = cls.name;
            info.method_name = method_name;
            info.in_test_method = is_test;
            for (const auto& f : cls.fields)
                add_var(info.variables, VarInfo{f.name, f.type, VarInfo::Where::Field});
            for (const auto& p : params)
                add_var(info.variables, VarInfo{p.name, p.type, VarInfo::Where::Param});

            // Locals: declarations strictly before the statement at each
            // level of the chain, plus loop variables of enclosing fors.
            for (std::size_t level = 0; level < chain.size(); ++level) {
                const Frame& fr = chain[level];
                for (std::size_t i = 0; i < fr.index; ++i) {
                    const Stmt& s = *fr.block->stmts[i];
                    if (s.kind == StmtKind::VarDecl)
                        add_var(info.variables, VarInfo{s.name, s.decl_type, VarInfo::Where::Local});
                }
                bool innermost = level + 1 == chain.size();
                const Stmt& s = *fr.block->stmts[fr.index];
                if (s.kind == StmtKind::For && s.for_init &&
                    s.for_init->kind == StmtKind::VarDecl && !innermost) {
                    add_var(info.variables,
                            VarInfo{s.for_init->name, s.for_init->decl_type, VarInfo::Where::Local});
                }
            }

            for (const auto& m : cls.methods) {
                MethodSig sig;
                sig.declaring_class = cls.name;
                sig.name = m.name;
                for (const auto& p : m.params) sig.param_types.push_back(p.type);
                sig.return_type = m.return_type;
                info.methods.push_back(std::move(sig));
            }

            const Frame& leaf = chain.back();
            for (const auto& s : leaf.block->stmts) info.block_stmts.push_back(s.get());
            info.index_in_block = leaf.index;
            return info;
        };

        if (cls.ctor) {
            auto r = build(*cls.ctor->body, cls.name, cls.ctor->params, false);
            if (r) return r;
        }
        for (const auto& m : cls.methods) {
            auto r = build(*m.body, m.name, m.params, m.is_test());
            if (r) return r;
        }
    }
    return std::nullopt;
}

std::vector<int> BlockPath::flatten() const {
    std::vector<int> v{class_idx, member};
    for (auto [i, sel] : descent) {
        v.push_back(i);
        v.push_back(sel);
    }
    return v;
}

std::optional<BlockPath> BlockPath::unflatten(const std::vector<int>& v) {
    if (v.size() < 2 || v.size() % 2 != 0) return std::nullopt;
    BlockPath p;
    p.class_idx = v[0];
    p.member = v[1];
    for (std::size_t i = 2; i + 1 < v.size(); i += 2)
        p.descent.emplace_back(v[i], v[i + 1]);
    return p;
}

namespace {

template <typename AstT, typename BlockT>
BlockT* get_block_impl(AstT& ast, const BlockPath& path) {
    if (path.class_idx < 0 || path.class_idx >= static_cast<int>(ast.classes.size()))
        return nullptr;
    auto& cls = ast.classes[path.class_idx];
    BlockT* b = nullptr;
    if (path.member == -1) {
        if (!cls.ctor) return nullptr;
        b = cls.ctor->body.get();
    } else {
        if (path.member < 0 || path.member >= static_cast<int>(cls.methods.size())) return nullptr;
        b = cls.methods[path.member].body.get();
    }
    for (auto [idx, sel] : path.descent) {
        if (idx < 0 || idx >= static_cast<int>(b->stmts.size())) return nullptr;
        auto& s = *b->stmts[idx];
        b = (sel == 0 ? s.body : s.else_body).get();
        if (!b) return nullptr;
    }
    return b;
}

} // namespace

Block* get_block(Ast& ast, const BlockPath& path) {
    return get_block_impl<Ast, Block>(ast, path);
}
const Block* get_block(const Ast& ast, const BlockPath& path) {
    return get_block_impl<const Ast, const Block>(ast, path);
}

namespace {

bool find_stmt_in_block(const Block& b, NodeId stmt_id, BlockPath& path, std::size_t& index) {
    for (std::size_t i = 0; i < b.stmts.size(); ++i) {
        const Stmt& s = *b.stmts[i];
        if (s.id == stmt_id) {
            index = i;
            return true;
        }
        if (s.body) {
            path.descent.emplace_back(static_cast<int>(i), 0);
            if (find_stmt_in_block(*s.body, stmt_id, path, index)) return true;
            path.descent.pop_back();
        }
        if (s.else_body) {
            path.descent.emplace_back(static_cast<int>(i), 1);
            if (find_stmt_in_block(*s.else_body, stmt_id, path, index)) return true;
            path.descent.pop_back();
        }
    }
    return false;
}

} // namespace

std::optional<StmtLocation> find_stmt(const Ast& ast, NodeId stmt_id) {
    for (std::size_t c = 0; c < ast.classes.size(); ++c) {
        const auto& cls = ast.classes[c];
        auto probe = [&](const Block& body, int member) -> std::optional<StmtLocation> {
            StmtLocation loc;
            loc.path.class_idx = static_cast<int>(c);
            loc.path.member = member;
            if (find_stmt_in_block(body, stmt_id, loc.path, loc.index)) return loc;
            return std::nullopt;
        };
        if (cls.ctor) {
            if (auto r = probe(*cls.ctor->body, -1)) return r;
        }
        for (std::size_t m = 0; m < cls.methods.size(); ++m) {
            if (auto r = probe(*cls.methods[m].body, static_cast<int>(m))) return r;
        }
    }
    return std::nullopt;
}

const Stmt* find_stmt_on_line(const Ast& ast, std::uint32_t line) {
    const Stmt* found = nullptr;
    for_each_stmt(ast, [&](const Stmt& s) {
        if (!found && s.span.line == line) found = &s;
    });
    return found;
}

std::optional<EnclosingMember> enclosing_member(const Ast& ast, NodeId stmt_id) {
    auto loc = find_stmt(ast, stmt_id);
    if (!loc) return std::nullopt;
    EnclosingMember em;
    em.cls = &ast.classes[loc->path.class_idx];
    if (loc->path.member == -1) {
        em.is_ctor = true;
    } else {
        em.method = &em.cls->methods[loc->path.member];
    }
    return em;
}

} // namespace mj
