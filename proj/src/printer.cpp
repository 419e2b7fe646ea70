#include "mj/printer.hpp"

#include <charconv>
#include <cstdio>

namespace mj {

namespace {

int precedence(const Expr& e) {
    if (e.kind == ExprKind::Unary) return 7;
    if (e.kind != ExprKind::Binary) return 9;
    switch (e.op) {
    case BinOp::Or: return 1;
    case BinOp::And: return 2;
    case BinOp::Eq: case BinOp::Ne: return 3;
    case BinOp::Lt: case BinOp::Le: case BinOp::Gt: case BinOp::Ge: return 4;
    case BinOp::Add: case BinOp::Sub: return 5;
    case BinOp::Mul: case BinOp::Div: case BinOp::Mod: return 6;
    }
    return 9;
}

std::string escape_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\\': out += "\\\\"; break;
        case '"': out += "\\\""; break;
        default: out += c;
        }
    }
    out += '"';
    return out;
}

class Printer {
public:
    std::string render(const Ast& ast) {
        for (std::size_t i = 0; i < ast.classes.size(); ++i) {
            if (i > 0) out_ += '\n';
            render_class(ast.classes[i]);
        }
        return std::move(out_);
    }

private:
    std::string out_;
    int indent_ = 0;

    void line(const std::string& text) {
        out_.append(static_cast<std::size_t>(indent_) * 4, ' ');
        out_ += text;
        out_ += '\n';
    }

    void render_class(const ClassDecl& cls) {
        line("class " + cls.name + " {");
        ++indent_;
        for (const auto& f : cls.fields) line(print_type(f.type) + " " + f.name + ";");
        if (cls.ctor) {
            if (!cls.fields.empty()) out_ += '\n';
            line(cls.name + "(" + params_str(cls.ctor->params) + ") {");
            render_block_body(*cls.ctor->body);
            line("}");
        }
        for (std::size_t i = 0; i < cls.methods.size(); ++i) {
            if (i > 0 || cls.ctor || !cls.fields.empty()) out_ += '\n';
            const auto& m = cls.methods[i];
            std::string ret = m.return_type ? print_type(*m.return_type) : "void";
            line(ret + " " + m.name + "(" + params_str(m.params) + ") {");
            render_block_body(*m.body);
            line("}");
        }
        --indent_;
        line("}");
    }

    static std::string params_str(const std::vector<Param>& params) {
        std::string s;
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i > 0) s += ", ";
            s += print_type(params[i].type) + " " + params[i].name;
        }
        return s;
    }

    void render_block_body(const Block& b) {
        ++indent_;
        for (const auto& s : b.stmts) render_stmt(*s);
        --indent_;
    }

    void render_stmt(const Stmt& s) {
        switch (s.kind) {
        case StmtKind::If: {
            render_if(s, "if");
            break;
        }
        case StmtKind::While:
            line("while (" + print_expr(*s.cond) + ") {");
            render_block_body(*s.body);
            line("}");
            break;
        case StmtKind::For:
            line("for (" + header_stmt(s.for_init) + "; " +
                 (s.cond ? print_expr(*s.cond) : "") + "; " + header_stmt(s.for_update) + ") {");
            render_block_body(*s.body);
            line("}");
            break;
        default:
            line(simple_stmt_text(s));
        }
    }

    // Renders an if/else-if chain. `kw` is "if" for the head; else-branches
    // holding a single If are folded into "} else if (...) {".
    void render_if(const Stmt& s, const std::string& kw) {
        line(kw + " (" + print_expr(*s.cond) + ") {");
        render_block_body(*s.body);
        const Stmt* cur = &s;
        while (cur->else_body) {
            const Block& eb = *cur->else_body;
            if (eb.stmts.size() == 1 && eb.stmts[0]->kind == StmtKind::If) {
                const Stmt& nested = *eb.stmts[0];
                line("} else if (" + print_expr(*nested.cond) + ") {");
                render_block_body(*nested.body);
                cur = &nested;
            } else {
                line("} else {");
                render_block_body(eb);
                break;
            }
        }
        line("}");
    }

    static std::string header_stmt(const StmtPtr& s) {
        return s ? simple_stmt_text_nosemi(*s) : "";
    }

public:
    static std::string simple_stmt_text(const Stmt& s) {
        switch (s.kind) {
        case StmtKind::Return:
            return s.init ? "return " + print_expr(*s.init) + ";" : "return;";
        case StmtKind::Assert:
            if (s.assert_kind == AssertKind::True)
                return "assertTrue(" + print_expr(*s.args[0]) + ");";
            return "assertEquals(" + print_expr(*s.args[0]) + ", " + print_expr(*s.args[1]) + ");";
        default:
            return simple_stmt_text_nosemi(s) + ";";
        }
    }

    static std::string simple_stmt_text_nosemi(const Stmt& s) {
        switch (s.kind) {
        case StmtKind::VarDecl: {
            std::string t = print_type(s.decl_type) + " " + s.name;
            if (s.init) t += " = " + print_expr(*s.init);
            return t;
        }
        case StmtKind::Assign:
            return print_expr(*s.lvalue) + " = " + print_expr(*s.init);
        case StmtKind::ExprStmt:
            return print_expr(*s.init);
        default:
            return "";
        }
    }
};

void inline_stmt(const Stmt& s, std::string& out);

void inline_block(const Block& b, std::string& out) {
    out += "{";
    for (const auto& s : b.stmts) {
        out += ' ';
        inline_stmt(*s, out);
    }
    out += " }";
}

void inline_stmt(const Stmt& s, std::string& out) {
    switch (s.kind) {
    case StmtKind::If: {
        out += "if (" + print_expr(*s.cond) + ") ";
        inline_block(*s.body, out);
        if (s.else_body) {
            out += " else ";
            if (s.else_body->stmts.size() == 1 && s.else_body->stmts[0]->kind == StmtKind::If) {
                inline_stmt(*s.else_body->stmts[0], out);
            } else {
                inline_block(*s.else_body, out);
            }
        }
        break;
    }
    case StmtKind::While:
        out += "while (" + print_expr(*s.cond) + ") ";
        inline_block(*s.body, out);
        break;
    case StmtKind::For:
        out += "for (" + (s.for_init ? Printer::simple_stmt_text_nosemi(*s.for_init) : "") + "; " +
               (s.cond ? print_expr(*s.cond) : "") + "; " +
               (s.for_update ? Printer::simple_stmt_text_nosemi(*s.for_update) : "") + ") ";
        inline_block(*s.body, out);
        break;
    default:
        out += Printer::simple_stmt_text(s);
    }
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    std::string s(buf, p);
    // Keep literals lexable: plain decimal point, no exponent form.
    if (s.find('e') != std::string::npos || s.find('E') != std::string::npos) {
        std::snprintf(buf, sizeof(buf), "%.17f", v);
        s = buf;
        std::size_t dot = s.find('.');
        std::size_t last = s.find_last_not_of('0');
        if (last > dot) s.erase(last + 1);
        else s.erase(dot + 2);
    }
    if (s.find('.') == std::string::npos) s += ".0";
    return s;
}

std::string print_type(const MjType& t) { return t.str(); }

std::string print_expr(const Expr& e) {
    switch (e.kind) {
    case ExprKind::IntLit: return std::to_string(e.int_val);
    case ExprKind::LongLit: return std::to_string(e.int_val) + "L";
    case ExprKind::FloatLit: return format_double(e.float_val) + "f";
    case ExprKind::DoubleLit: return format_double(e.float_val);
    case ExprKind::BoolLit: return e.bool_val ? "true" : "false";
    case ExprKind::StringLit: return escape_string(e.str_val);
    case ExprKind::NullLit: return "null";
    case ExprKind::This: return "this";
    case ExprKind::VarRef: return e.name;
    case ExprKind::Unary: {
        std::string inner = print_expr(*e.lhs);
        if (precedence(*e.lhs) < 7) inner = "(" + inner + ")";
        // "- -x" must not fuse into a comment-free "--x"? (no -- token, but
        // keep the space for readability and to avoid "--" digraphs)
        if (e.uop == UnOp::Neg && !inner.empty() && inner[0] == '-')
            return std::string(un_op_str(e.uop)) + " " + inner;
        return std::string(un_op_str(e.uop)) + inner;
    }
    case ExprKind::Binary: {
        int prec = precedence(e);
        std::string l = print_expr(*e.lhs);
        if (precedence(*e.lhs) < prec) l = "(" + l + ")";
        std::string r = print_expr(*e.rhs);
        if (precedence(*e.rhs) <= prec) r = "(" + r + ")";
        return l + " " + bin_op_str(e.op) + " " + r;
    }
    case ExprKind::FieldAccess: {
        std::string recv = print_expr(*e.recv);
        if (precedence(*e.recv) < 8) recv = "(" + recv + ")";
        return recv + "." + e.name;
    }
    case ExprKind::Index: {
        std::string recv = print_expr(*e.lhs);
        if (precedence(*e.lhs) < 8) recv = "(" + recv + ")";
        return recv + "[" + print_expr(*e.rhs) + "]";
    }
    case ExprKind::Call: {
        std::string s;
        if (e.recv) {
            std::string recv = print_expr(*e.recv);
            if (precedence(*e.recv) < 8) recv = "(" + recv + ")";
            s = recv + ".";
        }
        s += e.name + "(";
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            if (i > 0) s += ", ";
            s += print_expr(*e.args[i]);
        }
        return s + ")";
    }
    case ExprKind::New: {
        std::string s = "new " + e.name + "(";
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            if (i > 0) s += ", ";
            s += print_expr(*e.args[i]);
        }
        return s + ")";
    }
    case ExprKind::NewArray:
        return "new " + print_type(e.decl_type) + "[" + print_expr(*e.lhs) + "]";
    }
    return "";
}

std::string pretty_print(const Ast& ast) {
    Printer p;
    return p.render(ast);
}

std::string print_stmt_inline(const Stmt& s) {
    std::string out;
    inline_stmt(s, out);
    return out;
}

std::string print_stmts_inline(const std::vector<const Stmt*>& stmts) {
    std::string out;
    for (std::size_t i = 0; i < stmts.size(); ++i) {
        if (i > 0) out += ' ';
        inline_stmt(*stmts[i], out);
    }
    return out;
}

std::string print_block_inline(const Block& b) {
    std::string out;
    inline_block(b, out);
    return out;
}

} // namespace mj
