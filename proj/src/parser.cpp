#include "mj/parser.hpp"

#include "mj/lexer.hpp"

namespace mj {

namespace {

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Ast parse_program() {
        Ast ast;
        while (!at(Tok::Eof)) {
            ast.classes.push_back(parse_class());
        }
        renumber(ast);
        return ast;
    }

    std::vector<StmtPtr> parse_stmt_list() {
        std::vector<StmtPtr> stmts;
        while (!at(Tok::Eof)) stmts.push_back(parse_statement());
        return stmts;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& cur() const { return toks_[pos_]; }
    const Token& prev() const { return toks_[pos_ - 1]; }
    bool at(Tok k) const { return cur().kind == k; }

    const Token& advance() { return toks_[pos_++]; }

    bool accept(Tok k) {
        if (at(k)) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token& expect(Tok k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what);
        return advance();
    }

    [[noreturn]] void fail(std::string msg) {
        std::string shown = cur().kind == Tok::Eof ? "end of input" : "'" + cur().text + "'";
        throw ParseError{cur().span, msg + ", found " + shown};
    }

    Span close_span(Span start) const {
        start.byte_end = prev().span.byte_end;
        return start;
    }

    bool at_base_type() const {
        switch (cur().kind) {
        case Tok::KwInt: case Tok::KwLong: case Tok::KwFloat: case Tok::KwDouble:
        case Tok::KwBool: case Tok::KwString:
            return true;
        default:
            return false;
        }
    }

    MjType parse_base_type() {
        switch (cur().kind) {
        case Tok::KwInt: advance(); return MjType::int_t();
        case Tok::KwLong: advance(); return MjType::long_t();
        case Tok::KwFloat: advance(); return MjType::float_t();
        case Tok::KwDouble: advance(); return MjType::double_t();
        case Tok::KwBool: advance(); return MjType::bool_t();
        case Tok::KwString: advance(); return MjType::string_t();
        case Tok::Ident: return MjType::class_t(advance().text);
        default: fail("expected type");
        }
    }

    MjType parse_type() {
        MjType t = parse_base_type();
        while (at(Tok::LBracket) && toks_[pos_ + 1].kind == Tok::RBracket) {
            advance();
            advance();
            t = MjType::array_of(std::move(t));
        }
        return t;
    }

    ClassDecl parse_class() {
        ClassDecl cls;
        cls.span = cur().span;
        expect(Tok::KwClass, "'class'");
        cls.name = expect(Tok::Ident, "class name").text;
        expect(Tok::LBrace, "'{'");
        while (!accept(Tok::RBrace)) {
            if (at(Tok::Eof)) fail("unterminated class body");
            parse_member(cls);
        }
        cls.span = close_span(cls.span);
        return cls;
    }

    // member := type ident ';'              (field)
    //         | type ident '(' ... ')' blk  (method)
    //         | 'void' ident '(' ... ')' blk
    //         | ClassName '(' ... ')' blk   (constructor)
    void parse_member(ClassDecl& cls) {
        Span start = cur().span;
        if (accept(Tok::KwVoid)) {
            MethodDecl m;
            m.span = start;
            m.name = expect(Tok::Ident, "method name").text;
            m.params = parse_params();
            m.body = parse_block();
            m.span = close_span(start);
            cls.methods.push_back(std::move(m));
            return;
        }
        // Constructor: Ident matching the class name followed by '('.
        if (at(Tok::Ident) && cur().text == cls.name && toks_[pos_ + 1].kind == Tok::LParen) {
            if (cls.ctor) fail("class already has a constructor");
            CtorDecl ct;
            ct.span = start;
            advance();
            ct.params = parse_params();
            ct.body = parse_block();
            ct.span = close_span(start);
            cls.ctor = std::move(ct);
            return;
        }
        MjType t = parse_type();
        std::string name = expect(Tok::Ident, "member name").text;
        if (accept(Tok::Semi)) {
            FieldDecl f;
            f.span = close_span(start);
            f.type = std::move(t);
            f.name = std::move(name);
            cls.fields.push_back(std::move(f));
            return;
        }
        MethodDecl m;
        m.span = start;
        m.name = std::move(name);
        m.return_type = std::move(t);
        m.params = parse_params();
        m.body = parse_block();
        m.span = close_span(start);
        cls.methods.push_back(std::move(m));
    }

    std::vector<Param> parse_params() {
        expect(Tok::LParen, "'('");
        std::vector<Param> params;
        if (!at(Tok::RParen)) {
            do {
                Param p;
                p.span = cur().span;
                p.type = parse_type();
                p.name = expect(Tok::Ident, "parameter name").text;
                p.span = close_span(p.span);
                params.push_back(std::move(p));
            } while (accept(Tok::Comma));
        }
        expect(Tok::RParen, "')'");
        return params;
    }

    BlockPtr parse_block() {
        auto b = std::make_unique<Block>();
        b->span = cur().span;
        expect(Tok::LBrace, "'{'");
        while (!accept(Tok::RBrace)) {
            if (at(Tok::Eof)) fail("unterminated block");
            b->stmts.push_back(parse_statement());
        }
        b->span = close_span(b->span);
        return b;
    }

    StmtPtr parse_statement() {
        Span start = cur().span;
        switch (cur().kind) {
        case Tok::KwIf: return parse_if();
        case Tok::KwWhile: {
            advance();
            auto s = std::make_unique<Stmt>();
            s->kind = StmtKind::While;
            expect(Tok::LParen, "'('");
            s->cond = parse_expr();
            expect(Tok::RParen, "')'");
            s->body = parse_block();
            s->span = close_span(start);
            return s;
        }
        case Tok::KwFor: return parse_for();
        case Tok::KwReturn: {
            advance();
            auto s = std::make_unique<Stmt>();
            s->kind = StmtKind::Return;
            if (!at(Tok::Semi)) s->init = parse_expr();
            expect(Tok::Semi, "';'");
            s->span = close_span(start);
            return s;
        }
        case Tok::KwAssertTrue:
        case Tok::KwAssertEquals: {
            bool eq = cur().kind == Tok::KwAssertEquals;
            advance();
            auto s = std::make_unique<Stmt>();
            s->kind = StmtKind::Assert;
            s->assert_kind = eq ? AssertKind::Equals : AssertKind::True;
            expect(Tok::LParen, "'('");
            s->args.push_back(parse_expr());
            if (eq) {
                expect(Tok::Comma, "','");
                s->args.push_back(parse_expr());
            }
            expect(Tok::RParen, "')'");
            expect(Tok::Semi, "';'");
            s->span = close_span(start);
            return s;
        }
        default: {
            auto s = parse_simple_statement();
            expect(Tok::Semi, "';'");
            s->span = close_span(start);
            return s;
        }
        }
    }

    // VarDecl / Assign / ExprStmt without the trailing ';' (shared with the
    // for-statement header).
    StmtPtr parse_simple_statement() {
        Span start = cur().span;
        bool is_decl = at_base_type();
        if (at(Tok::Ident)) {
            // ClassName x  or  ClassName[] x
            if (toks_[pos_ + 1].kind == Tok::Ident) is_decl = true;
            if (toks_[pos_ + 1].kind == Tok::LBracket && toks_[pos_ + 2].kind == Tok::RBracket)
                is_decl = true;
        }
        if (is_decl) {
            auto s = std::make_unique<Stmt>();
            s->kind = StmtKind::VarDecl;
            s->decl_type = parse_type();
            s->name = expect(Tok::Ident, "variable name").text;
            if (accept(Tok::Assign)) s->init = parse_expr();
            s->span = close_span(start);
            return s;
        }
        ExprPtr e = parse_expr();
        if (accept(Tok::Assign)) {
            if (e->kind != ExprKind::VarRef && e->kind != ExprKind::FieldAccess &&
                e->kind != ExprKind::Index)
                throw ParseError{e->span, "left side of '=' is not assignable"};
            auto s = std::make_unique<Stmt>();
            s->kind = StmtKind::Assign;
            s->lvalue = std::move(e);
            s->init = parse_expr();
            s->span = close_span(start);
            return s;
        }
        if (e->kind != ExprKind::Call && e->kind != ExprKind::New)
            throw ParseError{e->span, "expression is not a statement"};
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::ExprStmt;
        s->init = std::move(e);
        s->span = close_span(start);
        return s;
    }

    StmtPtr parse_if() {
        Span start = cur().span;
        expect(Tok::KwIf, "'if'");
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::If;
        expect(Tok::LParen, "'('");
        s->cond = parse_expr();
        expect(Tok::RParen, "')'");
        s->body = parse_block();
        if (accept(Tok::KwElse)) {
            if (at(Tok::KwIf)) {
                // "else if" sugar: the else block holds a single If.
                auto blk = std::make_unique<Block>();
                blk->span = cur().span;
                blk->stmts.push_back(parse_if());
                blk->span.byte_end = prev().span.byte_end;
                s->else_body = std::move(blk);
            } else {
                s->else_body = parse_block();
            }
        }
        s->span = close_span(start);
        return s;
    }

    StmtPtr parse_for() {
        Span start = cur().span;
        expect(Tok::KwFor, "'for'");
        auto s = std::make_unique<Stmt>();
        s->kind = StmtKind::For;
        expect(Tok::LParen, "'('");
        if (!at(Tok::Semi)) s->for_init = parse_simple_statement();
        expect(Tok::Semi, "';'");
        if (!at(Tok::Semi)) s->cond = parse_expr();
        expect(Tok::Semi, "';'");
        if (!at(Tok::RParen)) s->for_update = parse_simple_statement();
        expect(Tok::RParen, "')'");
        s->body = parse_block();
        s->span = close_span(start);
        return s;
    }

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
        auto e = std::make_unique<Expr>();
        e->kind = ExprKind::Binary;
        e->op = op;
        e->span = lhs->span;
        e->span.byte_end = rhs->span.byte_end;
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        return e;
    }

    ExprPtr parse_or() {
        ExprPtr e = parse_and();
        while (accept(Tok::OrOr)) e = make_binary(BinOp::Or, std::move(e), parse_and());
        return e;
    }

    ExprPtr parse_and() {
        ExprPtr e = parse_equality();
        while (accept(Tok::AndAnd)) e = make_binary(BinOp::And, std::move(e), parse_equality());
        return e;
    }

    ExprPtr parse_equality() {
        ExprPtr e = parse_relational();
        while (true) {
            if (accept(Tok::EqEq)) e = make_binary(BinOp::Eq, std::move(e), parse_relational());
            else if (accept(Tok::NotEq)) e = make_binary(BinOp::Ne, std::move(e), parse_relational());
            else return e;
        }
    }

    ExprPtr parse_relational() {
        ExprPtr e = parse_additive();
        while (true) {
            if (accept(Tok::Lt)) e = make_binary(BinOp::Lt, std::move(e), parse_additive());
            else if (accept(Tok::Le)) e = make_binary(BinOp::Le, std::move(e), parse_additive());
            else if (accept(Tok::Gt)) e = make_binary(BinOp::Gt, std::move(e), parse_additive());
            else if (accept(Tok::Ge)) e = make_binary(BinOp::Ge, std::move(e), parse_additive());
            else return e;
        }
    }

    ExprPtr parse_additive() {
        ExprPtr e = parse_multiplicative();
        while (true) {
            if (accept(Tok::Plus)) e = make_binary(BinOp::Add, std::move(e), parse_multiplicative());
            else if (accept(Tok::Minus)) e = make_binary(BinOp::Sub, std::move(e), parse_multiplicative());
            else return e;
        }
    }

    ExprPtr parse_multiplicative() {
        ExprPtr e = parse_unary();
        while (true) {
            if (accept(Tok::Star)) e = make_binary(BinOp::Mul, std::move(e), parse_unary());
            else if (accept(Tok::Slash)) e = make_binary(BinOp::Div, std::move(e), parse_unary());
            else if (accept(Tok::Percent)) e = make_binary(BinOp::Mod, std::move(e), parse_unary());
            else return e;
        }
    }

    ExprPtr parse_unary() {
        Span start = cur().span;
        if (accept(Tok::Minus)) {
            auto e = std::make_unique<Expr>();
            e->kind = ExprKind::Unary;
            e->uop = UnOp::Neg;
            e->lhs = parse_unary();
            e->span = start;
            e->span.byte_end = e->lhs->span.byte_end;
            return e;
        }
        if (accept(Tok::Bang)) {
            auto e = std::make_unique<Expr>();
            e->kind = ExprKind::Unary;
            e->uop = UnOp::Not;
            e->lhs = parse_unary();
            e->span = start;
            e->span.byte_end = e->lhs->span.byte_end;
            return e;
        }
        return parse_postfix();
    }

    ExprPtr parse_postfix() {
        ExprPtr e = parse_primary();
        while (true) {
            if (at(Tok::Dot)) {
                Span start = e->span;
                advance();
                std::string name = expect(Tok::Ident, "member name").text;
                if (at(Tok::LParen)) {
                    auto call = std::make_unique<Expr>();
                    call->kind = ExprKind::Call;
                    call->name = std::move(name);
                    call->recv = std::move(e);
                    call->args = parse_args();
                    call->span = close_span(start);
                    e = std::move(call);
                } else {
                    auto fa = std::make_unique<Expr>();
                    fa->kind = ExprKind::FieldAccess;
                    fa->name = std::move(name);
                    fa->recv = std::move(e);
                    fa->span = close_span(start);
                    e = std::move(fa);
                }
            } else if (at(Tok::LBracket)) {
                Span start = e->span;
                advance();
                auto ix = std::make_unique<Expr>();
                ix->kind = ExprKind::Index;
                ix->lhs = std::move(e);
                ix->rhs = parse_expr();
                expect(Tok::RBracket, "']'");
                ix->span = close_span(start);
                e = std::move(ix);
            } else {
                return e;
            }
        }
    }

    std::vector<ExprPtr> parse_args() {
        expect(Tok::LParen, "'('");
        std::vector<ExprPtr> args;
        if (!at(Tok::RParen)) {
            do {
                args.push_back(parse_expr());
            } while (accept(Tok::Comma));
        }
        expect(Tok::RParen, "')'");
        return args;
    }

    ExprPtr parse_primary() {
        Span start = cur().span;
        auto lit = [&](ExprKind k) {
            auto e = std::make_unique<Expr>();
            e->kind = k;
            e->span = start;
            return e;
        };
        switch (cur().kind) {
        case Tok::IntLit: {
            auto e = lit(ExprKind::IntLit);
            e->int_val = advance().int_val;
            e->span = close_span(start);
            return e;
        }
        case Tok::LongLit: {
            auto e = lit(ExprKind::LongLit);
            e->int_val = advance().int_val;
            e->span = close_span(start);
            return e;
        }
        case Tok::FloatLit: {
            auto e = lit(ExprKind::FloatLit);
            e->float_val = advance().float_val;
            e->span = close_span(start);
            return e;
        }
        case Tok::DoubleLit: {
            auto e = lit(ExprKind::DoubleLit);
            e->float_val = advance().float_val;
            e->span = close_span(start);
            return e;
        }
        case Tok::StringLit: {
            auto e = lit(ExprKind::StringLit);
            e->str_val = advance().str_val;
            e->span = close_span(start);
            return e;
        }
        case Tok::KwTrue:
        case Tok::KwFalse: {
            auto e = lit(ExprKind::BoolLit);
            e->bool_val = advance().kind == Tok::KwTrue;
            e->span = close_span(start);
            return e;
        }
        case Tok::KwNull: {
            advance();
            auto e = lit(ExprKind::NullLit);
            e->span = close_span(start);
            return e;
        }
        case Tok::KwThis: {
            advance();
            auto e = lit(ExprKind::This);
            e->span = close_span(start);
            return e;
        }
        case Tok::KwNew: {
            advance();
            if (at_base_type() ||
                (at(Tok::Ident) && toks_[pos_ + 1].kind == Tok::LBracket)) {
                auto e = std::make_unique<Expr>();
                e->kind = ExprKind::NewArray;
                e->decl_type = parse_base_type();
                expect(Tok::LBracket, "'['");
                e->lhs = parse_expr();
                expect(Tok::RBracket, "']'");
                e->span = close_span(start);
                return e;
            }
            auto e = std::make_unique<Expr>();
            e->kind = ExprKind::New;
            e->name = expect(Tok::Ident, "class name").text;
            e->args = parse_args();
            e->span = close_span(start);
            return e;
        }
        case Tok::Ident: {
            std::string name = advance().text;
            if (at(Tok::LParen)) {
                auto e = std::make_unique<Expr>();
                e->kind = ExprKind::Call;
                e->name = std::move(name);
                e->args = parse_args();
                e->span = close_span(start);
                return e;
            }
            auto e = lit(ExprKind::VarRef);
            e->name = std::move(name);
            e->span = close_span(start);
            return e;
        }
        case Tok::LParen: {
            advance();
            ExprPtr e = parse_expr();
            expect(Tok::RParen, "')'");
            return e;
        }
        default:
            fail("expected expression");
        }
    }

    // --- preorder renumbering -------------------------------------------

    NodeId counter_ = 0;
    NodeId next() { return ++counter_; }

    void renumber(Expr& e) {
        e.id = next();
        switch (e.kind) {
        case ExprKind::Unary: renumber(*e.lhs); break;
        case ExprKind::Binary: renumber(*e.lhs); renumber(*e.rhs); break;
        case ExprKind::FieldAccess: renumber(*e.recv); break;
        case ExprKind::Index: renumber(*e.lhs); renumber(*e.rhs); break;
        case ExprKind::Call:
            if (e.recv) renumber(*e.recv);
            for (auto& a : e.args) renumber(*a);
            break;
        case ExprKind::New:
            for (auto& a : e.args) renumber(*a);
            break;
        case ExprKind::NewArray: renumber(*e.lhs); break;
        default: break;
        }
    }

    void renumber(Stmt& s) {
        s.id = next();
        if (s.lvalue) renumber(*s.lvalue);
        if (s.for_init) renumber(*s.for_init);
        if (s.cond) renumber(*s.cond);
        if (s.init) renumber(*s.init);
        if (s.for_update) renumber(*s.for_update);
        for (auto& a : s.args) renumber(*a);
        if (s.body) renumber(*s.body);
        if (s.else_body) renumber(*s.else_body);
    }

    void renumber(Block& b) {
        b.id = next();
        for (auto& s : b.stmts) renumber(*s);
    }

    void renumber(Ast& ast) {
        counter_ = 0;
        for (auto& cls : ast.classes) {
            cls.id = next();
            for (auto& f : cls.fields) f.id = next();
            if (cls.ctor) {
                cls.ctor->id = next();
                for (auto& p : cls.ctor->params) p.id = next();
                renumber(*cls.ctor->body);
            }
            for (auto& m : cls.methods) {
                m.id = next();
                for (auto& p : m.params) p.id = next();
                renumber(*m.body);
            }
        }
        ast.next_id = counter_ + 1;
    }
};

} // namespace

std::variant<Ast, ParseError> parse(std::string_view source) {
    try {
        Parser p(lex(source));
        return p.parse_program();
    } catch (const LexError& e) {
        return ParseError{e.span, e.message};
    } catch (const ParseError& e) {
        return e;
    }
}

std::variant<std::vector<StmtPtr>, ParseError> parse_statements(std::string_view source) {
    try {
        Parser p(lex(source));
        return p.parse_stmt_list();
    } catch (const LexError& e) {
        return ParseError{e.span, e.message};
    } catch (const ParseError& e) {
        return e;
    }
}

} // namespace mj
