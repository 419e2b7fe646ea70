#include "mj/ast.hpp"

namespace mj {

const char* bin_op_str(BinOp op) {
    switch (op) {
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::And: return "&&";
    case BinOp::Or: return "||";
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Mod: return "%";
    }
    return "?";
}

const char* un_op_str(UnOp op) {
    return op == UnOp::Neg ? "-" : "!";
}

namespace {

ExprPtr clone_expr_impl(const Expr& e, Ast* renumber) {
    auto c = std::make_unique<Expr>();
    c->id = renumber ? renumber->fresh_id() : e.id;
    c->span = e.span;
    c->kind = e.kind;
    c->int_val = e.int_val;
    c->float_val = e.float_val;
    c->bool_val = e.bool_val;
    c->str_val = e.str_val;
    c->name = e.name;
    c->op = e.op;
    c->uop = e.uop;
    c->decl_type = e.decl_type;
    if (e.lhs) c->lhs = clone_expr_impl(*e.lhs, renumber);
    if (e.rhs) c->rhs = clone_expr_impl(*e.rhs, renumber);
    if (e.recv) c->recv = clone_expr_impl(*e.recv, renumber);
    for (const auto& a : e.args) c->args.push_back(clone_expr_impl(*a, renumber));
    return c;
}

StmtPtr clone_stmt_impl(const Stmt& s, Ast* renumber);

BlockPtr clone_block_impl(const Block& b, Ast* renumber) {
    auto c = std::make_unique<Block>();
    c->id = renumber ? renumber->fresh_id() : b.id;
    c->span = b.span;
    for (const auto& st : b.stmts) c->stmts.push_back(clone_stmt_impl(*st, renumber));
    return c;
}

StmtPtr clone_stmt_impl(const Stmt& s, Ast* renumber) {
    auto c = std::make_unique<Stmt>();
    c->id = renumber ? renumber->fresh_id() : s.id;
    c->span = s.span;
    c->kind = s.kind;
    c->decl_type = s.decl_type;
    c->name = s.name;
    c->assert_kind = s.assert_kind;
    if (s.init) c->init = clone_expr_impl(*s.init, renumber);
    if (s.lvalue) c->lvalue = clone_expr_impl(*s.lvalue, renumber);
    if (s.cond) c->cond = clone_expr_impl(*s.cond, renumber);
    if (s.for_init) c->for_init = clone_stmt_impl(*s.for_init, renumber);
    if (s.for_update) c->for_update = clone_stmt_impl(*s.for_update, renumber);
    if (s.body) c->body = clone_block_impl(*s.body, renumber);
    if (s.else_body) c->else_body = clone_block_impl(*s.else_body, renumber);
    for (const auto& a : s.args) c->args.push_back(clone_expr_impl(*a, renumber));
    return c;
}

} // namespace

ExprPtr clone_expr(const Expr& e) { return clone_expr_impl(e, nullptr); }
StmtPtr clone_stmt(const Stmt& s) { return clone_stmt_impl(s, nullptr); }
BlockPtr clone_block(const Block& b) { return clone_block_impl(b, nullptr); }
StmtPtr clone_stmt_fresh(const Stmt& s, Ast& ast) { return clone_stmt_impl(s, &ast); }
ExprPtr clone_expr_fresh(const Expr& e, Ast& ast) { return clone_expr_impl(e, &ast); }

Ast clone_ast(const Ast& a) {
    Ast c;
    c.next_id = a.next_id;
    for (const auto& cls : a.classes) {
        ClassDecl cc;
        cc.id = cls.id;
        cc.span = cls.span;
        cc.name = cls.name;
        cc.fields = cls.fields;
        if (cls.ctor) {
            CtorDecl ct;
            ct.id = cls.ctor->id;
            ct.span = cls.ctor->span;
            ct.params = cls.ctor->params;
            ct.body = clone_block(*cls.ctor->body);
            cc.ctor = std::move(ct);
        }
        for (const auto& m : cls.methods) {
            MethodDecl mm;
            mm.id = m.id;
            mm.span = m.span;
            mm.name = m.name;
            mm.return_type = m.return_type;
            mm.params = m.params;
            mm.body = clone_block(*m.body);
            cc.methods.push_back(std::move(mm));
        }
        c.classes.push_back(std::move(cc));
    }
    return c;
}

namespace {

bool eq_opt(const ExprPtr& a, const ExprPtr& b) {
    if (!a != !b) return false;
    return !a || equal(*a, *b);
}
bool eq_opt(const StmtPtr& a, const StmtPtr& b) {
    if (!a != !b) return false;
    return !a || equal(*a, *b);
}
bool eq_opt(const BlockPtr& a, const BlockPtr& b) {
    if (!a != !b) return false;
    return !a || equal(*a, *b);
}

} // namespace

bool equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    if (a.int_val != b.int_val || a.float_val != b.float_val || a.bool_val != b.bool_val)
        return false;
    if (a.str_val != b.str_val || a.name != b.name) return false;
    if (a.op != b.op || a.uop != b.uop) return false;
    if (a.decl_type != b.decl_type) return false;
    if (!eq_opt(a.lhs, b.lhs) || !eq_opt(a.rhs, b.rhs) || !eq_opt(a.recv, b.recv)) return false;
    if (a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!equal(*a.args[i], *b.args[i])) return false;
    return true;
}

bool equal(const Stmt& a, const Stmt& b) {
    if (a.kind != b.kind) return false;
    if (a.decl_type != b.decl_type || a.name != b.name) return false;
    if (a.assert_kind != b.assert_kind) return false;
    if (!eq_opt(a.init, b.init) || !eq_opt(a.lvalue, b.lvalue) || !eq_opt(a.cond, b.cond))
        return false;
    if (!eq_opt(a.for_init, b.for_init) || !eq_opt(a.for_update, b.for_update)) return false;
    if (!eq_opt(a.body, b.body) || !eq_opt(a.else_body, b.else_body)) return false;
    if (a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!equal(*a.args[i], *b.args[i])) return false;
    return true;
}

bool equal(const Block& a, const Block& b) {
    if (a.stmts.size() != b.stmts.size()) return false;
    for (std::size_t i = 0; i < a.stmts.size(); ++i)
        if (!equal(*a.stmts[i], *b.stmts[i])) return false;
    return true;
}

bool equal(const Ast& a, const Ast& b) {
    if (a.classes.size() != b.classes.size()) return false;
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        const auto& ca = a.classes[i];
        const auto& cb = b.classes[i];
        if (ca.name != cb.name) return false;
        if (ca.fields.size() != cb.fields.size()) return false;
        for (std::size_t j = 0; j < ca.fields.size(); ++j) {
            if (ca.fields[j].name != cb.fields[j].name) return false;
            if (ca.fields[j].type != cb.fields[j].type) return false;
        }
        if (ca.ctor.has_value() != cb.ctor.has_value()) return false;
        if (ca.ctor) {
            if (ca.ctor->params.size() != cb.ctor->params.size()) return false;
            for (std::size_t j = 0; j < ca.ctor->params.size(); ++j) {
                if (ca.ctor->params[j].name != cb.ctor->params[j].name) return false;
                if (ca.ctor->params[j].type != cb.ctor->params[j].type) return false;
            }
            if (!equal(*ca.ctor->body, *cb.ctor->body)) return false;
        }
        if (ca.methods.size() != cb.methods.size()) return false;
        for (std::size_t j = 0; j < ca.methods.size(); ++j) {
            const auto& ma = ca.methods[j];
            const auto& mb = cb.methods[j];
            if (ma.name != mb.name || ma.return_type != mb.return_type) return false;
            if (ma.params.size() != mb.params.size()) return false;
            for (std::size_t k = 0; k < ma.params.size(); ++k) {
                if (ma.params[k].name != mb.params[k].name) return false;
                if (ma.params[k].type != mb.params[k].type) return false;
            }
            if (!equal(*ma.body, *mb.body)) return false;
        }
    }
    return true;
}

void for_each_stmt(const Block& block, const std::function<void(const Stmt&)>& fn) {
    for (const auto& s : block.stmts) {
        fn(*s);
        if (s->body) for_each_stmt(*s->body, fn);
        if (s->else_body) for_each_stmt(*s->else_body, fn);
    }
}

void for_each_stmt(const Ast& ast, const std::function<void(const Stmt&)>& fn) {
    for (const auto& cls : ast.classes) {
        if (cls.ctor) for_each_stmt(*cls.ctor->body, fn);
        for (const auto& m : cls.methods) for_each_stmt(*m.body, fn);
    }
}

std::size_t count_statements(const Ast& ast) {
    std::size_t n = 0;
    for_each_stmt(ast, [&](const Stmt&) { ++n; });
    return n;
}

const ClassDecl* find_class(const Ast& ast, const std::string& name) {
    for (const auto& c : ast.classes)
        if (c.name == name) return &c;
    return nullptr;
}

const MethodDecl* find_method(const ClassDecl& cls, const std::string& name) {
    for (const auto& m : cls.methods)
        if (m.name == name) return &m;
    return nullptr;
}

} // namespace mj
