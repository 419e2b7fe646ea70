#include "mj/checker.hpp"

#include <algorithm>

#include "mj/messages.hpp"
#include "mj/printer.hpp"

namespace mj {

const char* error_code_str(ErrorCode code) {
    switch (code) {
    case ErrorCode::CannotFindSymbol: return "CannotFindSymbol";
    case ErrorCode::IncompatibleTypes: return "IncompatibleTypes";
    case ErrorCode::MissingReturn: return "MissingReturn";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::NotAFunction: return "NotAFunction";
    case ErrorCode::DuplicateDeclaration: return "DuplicateDeclaration";
    case ErrorCode::BadOperandType: return "BadOperandType";
    }
    return "?";
}

namespace {

// Type of an expression: a proper MjType, "void" (method call with no
// result), or an error sentinel that suppresses cascading reports.
struct ExprType {
    enum class Tag { Ok, Void, Error } tag = Tag::Error;
    MjType type;

    static ExprType ok(MjType t) { return {Tag::Ok, std::move(t)}; }
    static ExprType void_t() { return {Tag::Void, {}}; }
    static ExprType error() { return {Tag::Error, {}}; }
    bool is_ok() const { return tag == Tag::Ok; }
    bool is_error() const { return tag == Tag::Error; }
};

class Checker {
public:
    explicit Checker(const Ast& ast) : ast_(ast) {}

    CheckResult run() {
        collect_classes();
        for (const auto& cls : ast_.classes) check_class(cls);
        std::stable_sort(result_.errors.begin(), result_.errors.end(),
                         [](const CheckError& a, const CheckError& b) {
                             return a.span.byte_begin < b.span.byte_begin;
                         });
        return std::move(result_);
    }

private:
    const Ast& ast_;
    CheckResult result_;
    const ClassDecl* current_class_ = nullptr;
    std::vector<std::vector<std::pair<std::string, MjType>>> scopes_;

    void report(ErrorCode code, std::string message, Span span) {
        result_.errors.push_back(CheckError{code, std::move(message), span});
    }

    void collect_classes() {
        for (std::size_t i = 0; i < ast_.classes.size(); ++i) {
            const auto& cls = ast_.classes[i];
            for (std::size_t j = 0; j < i; ++j) {
                if (ast_.classes[j].name == cls.name) {
                    report(ErrorCode::DuplicateDeclaration,
                           msg::duplicate_declaration(cls.name), cls.span);
                    break;
                }
            }
        }
    }

    bool class_exists(const std::string& name) const {
        return find_class(ast_, name) != nullptr;
    }

    // Declared types must name existing classes (arrays checked through
    // their element type).
    bool check_type(const MjType& t, Span span) {
        const MjType* cur = &t;
        while (cur->is_array()) cur = &cur->elem();
        if (cur->is_class() && !class_exists(cur->class_name())) {
            report(ErrorCode::CannotFindSymbol, msg::cannot_find_symbol(cur->class_name()), span);
            return false;
        }
        return true;
    }

    void check_class(const ClassDecl& cls) {
        current_class_ = &cls;
        for (std::size_t i = 0; i < cls.fields.size(); ++i) {
            const auto& f = cls.fields[i];
            check_type(f.type, f.span);
            for (std::size_t j = 0; j < i; ++j)
                if (cls.fields[j].name == f.name) {
                    report(ErrorCode::DuplicateDeclaration, msg::duplicate_declaration(f.name),
                           f.span);
                    break;
                }
        }
        for (std::size_t i = 0; i < cls.methods.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j)
                if (cls.methods[j].name == cls.methods[i].name) {
                    report(ErrorCode::DuplicateDeclaration,
                           msg::duplicate_declaration(cls.methods[i].name), cls.methods[i].span);
                    break;
                }
        }
        if (cls.ctor) check_callable(cls.ctor->params, std::nullopt, *cls.ctor->body, cls.ctor->span);
        for (const auto& m : cls.methods) {
            check_callable(m.params, m.return_type, *m.body, m.span);
            if (m.return_type && !block_returns(*m.body))
                report(ErrorCode::MissingReturn, msg::missing_return(), m.span);
        }
        current_class_ = nullptr;
    }

    void check_callable(const std::vector<Param>& params, const std::optional<MjType>& ret,
                        const Block& body, Span span) {
        scopes_.clear();
        scopes_.emplace_back();
        for (const auto& p : params) {
            check_type(p.type, p.span);
            if (lookup_scope(p.name))
                report(ErrorCode::DuplicateDeclaration, msg::duplicate_declaration(p.name), p.span);
            else
                scopes_.back().emplace_back(p.name, p.type);
        }
        (void)span;
        check_block(body, ret);
        scopes_.clear();
    }

    const MjType* lookup_scope(const std::string& name) const {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it)
            for (const auto& [n, t] : *it)
                if (n == name) return &t;
        return nullptr;
    }

    const FieldDecl* lookup_field(const ClassDecl& cls, const std::string& name) const {
        for (const auto& f : cls.fields)
            if (f.name == name) return &f;
        return nullptr;
    }

    void check_block(const Block& b, const std::optional<MjType>& ret) {
        scopes_.emplace_back();
        for (const auto& s : b.stmts) check_stmt(*s, ret);
        scopes_.pop_back();
    }

    void check_stmt(const Stmt& s, const std::optional<MjType>& ret) {
        switch (s.kind) {
        case StmtKind::VarDecl: {
            check_type(s.decl_type, s.span);
            if (lookup_scope(s.name)) {
                report(ErrorCode::DuplicateDeclaration, msg::duplicate_declaration(s.name), s.span);
            } else {
                scopes_.back().emplace_back(s.name, s.decl_type);
            }
            if (s.init) {
                ExprType t = type_expr(*s.init);
                require_assignable(t, s.decl_type, s.init->span);
            }
            break;
        }
        case StmtKind::Assign: {
            ExprType lv = type_lvalue(*s.lvalue);
            ExprType rv = type_expr(*s.init);
            if (lv.is_ok()) require_assignable(rv, lv.type, s.init->span);
            break;
        }
        case StmtKind::If:
        case StmtKind::While: {
            ExprType c = type_expr(*s.cond);
            require_assignable(c, MjType::bool_t(), s.cond->span);
            check_block(*s.body, ret);
            if (s.else_body) check_block(*s.else_body, ret);
            break;
        }
        case StmtKind::For: {
            scopes_.emplace_back(); // loop variable scope
            if (s.for_init) check_stmt(*s.for_init, ret);
            if (s.cond) {
                ExprType c = type_expr(*s.cond);
                require_assignable(c, MjType::bool_t(), s.cond->span);
            }
            if (s.for_update) check_stmt(*s.for_update, ret);
            check_block(*s.body, ret);
            scopes_.pop_back();
            break;
        }
        case StmtKind::Return: {
            if (s.init) {
                ExprType t = type_expr(*s.init);
                if (!ret) {
                    if (!t.is_error())
                        report(ErrorCode::IncompatibleTypes,
                               msg::incompatible_types(type_name(t), "void"), s.span);
                } else {
                    require_assignable(t, *ret, s.init->span);
                }
            } else if (ret) {
                report(ErrorCode::IncompatibleTypes,
                       msg::incompatible_types("void", ret->str()), s.span);
            }
            break;
        }
        case StmtKind::ExprStmt:
            type_expr(*s.init);
            break;
        case StmtKind::Assert: {
            if (s.assert_kind == AssertKind::True) {
                ExprType t = type_expr(*s.args[0]);
                require_assignable(t, MjType::bool_t(), s.args[0]->span);
            } else {
                ExprType a = type_expr(*s.args[0]);
                ExprType b = type_expr(*s.args[1]);
                if (a.is_ok() && b.is_ok() && !comparable(a.type, b.type))
                    report(ErrorCode::IncompatibleTypes,
                           msg::incompatible_types(b.type.str(), a.type.str()), s.args[1]->span);
                else if (a.tag == ExprType::Tag::Void || b.tag == ExprType::Tag::Void)
                    report(ErrorCode::IncompatibleTypes, msg::incompatible_types("void", "value"),
                           s.span);
            }
            break;
        }
        }
    }

    static std::string type_name(const ExprType& t) {
        return t.tag == ExprType::Tag::Void ? "void" : t.type.str();
    }

    void require_assignable(const ExprType& from, const MjType& to, Span span) {
        if (from.is_error()) return;
        if (from.tag == ExprType::Tag::Void) {
            report(ErrorCode::IncompatibleTypes, msg::incompatible_types("void", to.str()), span);
            return;
        }
        if (!MjType::assignable(from.type, to))
            report(ErrorCode::IncompatibleTypes, msg::incompatible_types(from.type.str(), to.str()),
                   span);
    }

    // Two types may be compared with == / != / assertEquals when one is
    // assignable to the other.
    static bool comparable(const MjType& a, const MjType& b) {
        return MjType::assignable(a, b) || MjType::assignable(b, a);
    }

    static std::optional<MjType> unify_numeric(const MjType& a, const MjType& b) {
        if (a.is_integer() && b.is_integer())
            return (a.base() == MjType::Base::Long || b.base() == MjType::Base::Long)
                       ? MjType::long_t()
                       : MjType::int_t();
        if (a.is_floating() && b.is_floating())
            return (a.base() == MjType::Base::Double || b.base() == MjType::Base::Double)
                       ? MjType::double_t()
                       : MjType::float_t();
        return std::nullopt;
    }

    ExprType record(const Expr& e, ExprType t) {
        if (t.is_ok()) result_.expr_types.emplace(e.id, t.type);
        return t;
    }

    ExprType type_lvalue(const Expr& e) {
        if (e.kind == ExprKind::FieldAccess) {
            ExprType recv = type_expr(*e.recv);
            if (!recv.is_ok()) return ExprType::error();
            if ((recv.type.is_array() || recv.type.base() == MjType::Base::String) &&
                e.name == "length") {
                report(ErrorCode::BadOperandType, msg::bad_operand_type(recv.type.str(), "="),
                       e.span);
                return ExprType::error();
            }
        }
        return type_expr(e);
    }

    ExprType type_expr(const Expr& e) {
        switch (e.kind) {
        case ExprKind::IntLit: return record(e, ExprType::ok(MjType::int_t()));
        case ExprKind::LongLit: return record(e, ExprType::ok(MjType::long_t()));
        case ExprKind::FloatLit: return record(e, ExprType::ok(MjType::float_t()));
        case ExprKind::DoubleLit: return record(e, ExprType::ok(MjType::double_t()));
        case ExprKind::BoolLit: return record(e, ExprType::ok(MjType::bool_t()));
        case ExprKind::StringLit: return record(e, ExprType::ok(MjType::string_t()));
        case ExprKind::NullLit: return record(e, ExprType::ok(MjType::null_t()));
        case ExprKind::This:
            return record(e, ExprType::ok(MjType::class_t(current_class_->name)));
        case ExprKind::VarRef: {
            if (const MjType* t = lookup_scope(e.name)) return record(e, ExprType::ok(*t));
            if (const FieldDecl* f = lookup_field(*current_class_, e.name))
                return record(e, ExprType::ok(f->type));
            report(ErrorCode::CannotFindSymbol, msg::cannot_find_symbol(e.name), e.span);
            return ExprType::error();
        }
        case ExprKind::Unary: {
            ExprType v = type_expr(*e.lhs);
            if (!v.is_ok()) {
                if (v.tag == ExprType::Tag::Void)
                    report(ErrorCode::BadOperandType, msg::bad_operand_type("void", un_op_str(e.uop)),
                           e.span);
                return ExprType::error();
            }
            if (e.uop == UnOp::Neg) {
                if (v.type.is_numeric()) return record(e, ExprType::ok(v.type));
            } else {
                if (v.type.base() == MjType::Base::Bool)
                    return record(e, ExprType::ok(MjType::bool_t()));
            }
            report(ErrorCode::BadOperandType, msg::bad_operand_type(v.type.str(), un_op_str(e.uop)),
                   e.span);
            return ExprType::error();
        }
        case ExprKind::Binary: return type_binary(e);
        case ExprKind::FieldAccess: {
            ExprType recv = type_expr(*e.recv);
            if (!recv.is_ok()) return ExprType::error();
            const MjType& t = recv.type;
            if ((t.is_array() || t.base() == MjType::Base::String) && e.name == "length")
                return record(e, ExprType::ok(MjType::int_t()));
            if (t.is_class()) {
                const ClassDecl* cls = find_class(ast_, t.class_name());
                if (cls) {
                    if (const FieldDecl* f = lookup_field(*cls, e.name))
                        return record(e, ExprType::ok(f->type));
                }
            }
            report(ErrorCode::CannotFindSymbol, msg::cannot_find_symbol(e.name), e.span);
            return ExprType::error();
        }
        case ExprKind::Index: {
            ExprType arr = type_expr(*e.lhs);
            ExprType idx = type_expr(*e.rhs);
            if (idx.is_ok() && idx.type.base() != MjType::Base::Int)
                report(ErrorCode::IncompatibleTypes, msg::incompatible_types(idx.type.str(), "int"),
                       e.rhs->span);
            else if (idx.tag == ExprType::Tag::Void)
                report(ErrorCode::IncompatibleTypes, msg::incompatible_types("void", "int"),
                       e.rhs->span);
            if (!arr.is_ok()) return ExprType::error();
            if (arr.type.is_array()) return record(e, ExprType::ok(arr.type.elem()));
            if (arr.type.base() == MjType::Base::String)
                return record(e, ExprType::ok(MjType::string_t()));
            report(ErrorCode::BadOperandType, msg::bad_operand_type(arr.type.str(), "[]"), e.span);
            return ExprType::error();
        }
        case ExprKind::Call: return type_call(e);
        case ExprKind::New: {
            const ClassDecl* cls = find_class(ast_, e.name);
            if (!cls) {
                for (const auto& a : e.args) type_expr(*a);
                report(ErrorCode::CannotFindSymbol, msg::cannot_find_symbol(e.name), e.span);
                return ExprType::error();
            }
            std::vector<MjType> params;
            if (cls->ctor)
                for (const auto& p : cls->ctor->params) params.push_back(p.type);
            check_args(e, e.name, params);
            return record(e, ExprType::ok(MjType::class_t(e.name)));
        }
        case ExprKind::NewArray: {
            check_type(e.decl_type, e.span);
            ExprType n = type_expr(*e.lhs);
            if (n.is_ok() && n.type.base() != MjType::Base::Int)
                report(ErrorCode::IncompatibleTypes, msg::incompatible_types(n.type.str(), "int"),
                       e.lhs->span);
            return record(e, ExprType::ok(MjType::array_of(e.decl_type)));
        }
        }
        return ExprType::error();
    }

    ExprType type_binary(const Expr& e) {
        ExprType l = type_expr(*e.lhs);
        ExprType r = type_expr(*e.rhs);
        const char* op = bin_op_str(e.op);
        auto bad = [&](const ExprType& side, Span span) {
            if (!side.is_error())
                report(ErrorCode::BadOperandType, msg::bad_operand_type(type_name(side), op), span);
            return ExprType::error();
        };
        if (l.is_error() || r.is_error()) return ExprType::error();

        switch (e.op) {
        case BinOp::And:
        case BinOp::Or:
            if (!l.is_ok() || l.type.base() != MjType::Base::Bool) return bad(l, e.lhs->span);
            if (!r.is_ok() || r.type.base() != MjType::Base::Bool) return bad(r, e.rhs->span);
            return record(e, ExprType::ok(MjType::bool_t()));
        case BinOp::Eq:
        case BinOp::Ne:
            if (!l.is_ok()) return bad(l, e.lhs->span);
            if (!r.is_ok()) return bad(r, e.rhs->span);
            if (!comparable(l.type, r.type)) return bad(r, e.rhs->span);
            return record(e, ExprType::ok(MjType::bool_t()));
        case BinOp::Lt:
        case BinOp::Le:
        case BinOp::Gt:
        case BinOp::Ge: {
            if (!l.is_ok() || !l.type.is_numeric()) return bad(l, e.lhs->span);
            if (!r.is_ok() || !r.type.is_numeric()) return bad(r, e.rhs->span);
            if (!unify_numeric(l.type, r.type)) return bad(r, e.rhs->span);
            return record(e, ExprType::ok(MjType::bool_t()));
        }
        case BinOp::Add:
            if (l.is_ok() && l.type.base() == MjType::Base::String) {
                if (r.is_ok() && r.type.base() == MjType::Base::String)
                    return record(e, ExprType::ok(MjType::string_t()));
                return bad(r, e.rhs->span);
            }
            [[fallthrough]];
        case BinOp::Sub:
        case BinOp::Mul:
        case BinOp::Div: {
            if (!l.is_ok() || !l.type.is_numeric()) return bad(l, e.lhs->span);
            if (!r.is_ok() || !r.type.is_numeric()) return bad(r, e.rhs->span);
            auto u = unify_numeric(l.type, r.type);
            if (!u) return bad(r, e.rhs->span);
            return record(e, ExprType::ok(*u));
        }
        case BinOp::Mod: {
            if (!l.is_ok() || !l.type.is_integer()) return bad(l, e.lhs->span);
            if (!r.is_ok() || !r.type.is_integer()) return bad(r, e.rhs->span);
            return record(e, ExprType::ok(*unify_numeric(l.type, r.type)));
        }
        }
        return ExprType::error();
    }

    ExprType type_call(const Expr& e) {
        const ClassDecl* target_class = nullptr;
        if (e.recv) {
            ExprType recv = type_expr(*e.recv);
            if (!recv.is_ok()) return ExprType::error();
            if (!recv.type.is_class()) {
                report(ErrorCode::NotAFunction, msg::not_a_function(e.name), e.span);
                for (const auto& a : e.args) type_expr(*a);
                return ExprType::error();
            }
            target_class = find_class(ast_, recv.type.class_name());
            if (!target_class) return ExprType::error();
        } else {
            target_class = current_class_;
        }
        const MethodDecl* m = find_method(*target_class, e.name);
        if (!m) {
            for (const auto& a : e.args) type_expr(*a);
            if (lookup_field(*target_class, e.name) ||
                (!e.recv && lookup_scope(e.name)))
                report(ErrorCode::NotAFunction, msg::not_a_function(e.name), e.span);
            else
                report(ErrorCode::CannotFindSymbol, msg::cannot_find_symbol(e.name), e.span);
            return ExprType::error();
        }
        std::vector<MjType> params;
        for (const auto& p : m->params) params.push_back(p.type);
        check_args(e, e.name, params);
        if (!m->return_type) return ExprType::void_t();
        return record(e, ExprType::ok(*m->return_type));
    }

    void check_args(const Expr& call, const std::string& name, const std::vector<MjType>& params) {
        std::vector<ExprType> arg_types;
        for (const auto& a : call.args) arg_types.push_back(type_expr(*a));
        if (call.args.size() != params.size()) {
            report(ErrorCode::WrongArity, msg::wrong_arity(name, params.size(), call.args.size()),
                   call.span);
            return;
        }
        for (std::size_t i = 0; i < params.size(); ++i)
            require_assignable(arg_types[i], params[i], call.args[i]->span);
    }

    // Definite-return analysis: a block returns when any of its statements
    // definitely returns; loops never count.
    static bool block_returns(const Block& b) {
        for (const auto& s : b.stmts) {
            if (s->kind == StmtKind::Return) return true;
            if (s->kind == StmtKind::If && s->else_body && block_returns(*s->body) &&
                block_returns(*s->else_body))
                return true;
        }
        return false;
    }
};

} // namespace

CheckResult check_full(const Ast& ast) {
    Checker c(ast);
    return c.run();
}

std::vector<CheckError> check(const Ast& ast) {
    return check_full(ast).errors;
}

} // namespace mj
