#include "mj/lexer.hpp"

#include <cctype>
#include <charconv>
#include <unordered_map>

namespace mj {

namespace {

const std::unordered_map<std::string_view, Tok> kKeywords = {
    {"class", Tok::KwClass},   {"void", Tok::KwVoid},     {"int", Tok::KwInt},
    {"long", Tok::KwLong},     {"float", Tok::KwFloat},   {"double", Tok::KwDouble},
    {"bool", Tok::KwBool},     {"string", Tok::KwString}, {"if", Tok::KwIf},
    {"else", Tok::KwElse},     {"while", Tok::KwWhile},   {"for", Tok::KwFor},
    {"return", Tok::KwReturn}, {"new", Tok::KwNew},       {"this", Tok::KwThis},
    {"null", Tok::KwNull},     {"true", Tok::KwTrue},     {"false", Tok::KwFalse},
    {"assertTrue", Tok::KwAssertTrue}, {"assertEquals", Tok::KwAssertEquals},
};

struct Cursor {
    std::string_view src;
    std::size_t pos = 0;
    std::uint32_t line = 1;
    std::uint32_t col = 1;

    bool eof() const { return pos >= src.size(); }
    char peek(std::size_t k = 0) const {
        return pos + k < src.size() ? src[pos + k] : '\0';
    }
    char advance() {
        char c = src[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    Span here() const { return Span{line, col, static_cast<std::uint32_t>(pos), static_cast<std::uint32_t>(pos)}; }
};

[[noreturn]] void fail(const Cursor& c, std::string msg) {
    throw LexError{c.here(), std::move(msg)};
}

} // namespace

std::vector<Token> lex(std::string_view source) {
    std::vector<Token> out;
    Cursor c{source};

    while (!c.eof()) {
        char ch = c.peek();
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
            c.advance();
            continue;
        }
        if (ch == '/' && c.peek(1) == '/') {
            while (!c.eof() && c.peek() != '\n') c.advance();
            continue;
        }

        Token t;
        t.span = c.here();
        std::size_t start = c.pos;

        auto finish = [&](Tok kind) {
            t.kind = kind;
            t.span.byte_end = static_cast<std::uint32_t>(c.pos);
            t.text = std::string(source.substr(start, c.pos - start));
            out.push_back(std::move(t));
        };

        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_'))
                c.advance();
            std::string_view word = source.substr(start, c.pos - start);
            auto it = kKeywords.find(word);
            finish(it != kKeywords.end() ? it->second : Tok::Ident);
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (std::isdigit(static_cast<unsigned char>(c.peek()))) c.advance();
            bool is_float = false;
            if (c.peek() == '.' && std::isdigit(static_cast<unsigned char>(c.peek(1)))) {
                is_float = true;
                c.advance();
                while (std::isdigit(static_cast<unsigned char>(c.peek()))) c.advance();
            }
            if (is_float) {
                std::string_view digits = source.substr(start, c.pos - start);
                double v = 0;
                std::from_chars(digits.data(), digits.data() + digits.size(), v);
                t.float_val = v;
                if (c.peek() == 'f' || c.peek() == 'F') {
                    c.advance();
                    finish(Tok::FloatLit);
                } else {
                    finish(Tok::DoubleLit);
                }
            } else {
                std::string_view digits = source.substr(start, c.pos - start);
                long long v = 0;
                std::from_chars(digits.data(), digits.data() + digits.size(), v);
                t.int_val = v;
                if (c.peek() == 'L' || c.peek() == 'l') {
                    c.advance();
                    finish(Tok::LongLit);
                } else {
                    finish(Tok::IntLit);
                }
            }
            continue;
        }

        if (ch == '"') {
            c.advance();
            std::string value;
            while (true) {
                if (c.eof() || c.peek() == '\n') fail(c, "unterminated string literal");
                char d = c.advance();
                if (d == '"') break;
                if (d == '\\') {
                    if (c.eof()) fail(c, "unterminated string literal");
                    char e = c.advance();
                    switch (e) {
                    case 'n': value += '\n'; break;
                    case 't': value += '\t'; break;
                    case '\\': value += '\\'; break;
                    case '"': value += '"'; break;
                    default: fail(c, std::string("unknown escape \\") + e);
                    }
                } else {
                    value += d;
                }
            }
            t.str_val = std::move(value);
            finish(Tok::StringLit);
            continue;
        }

        c.advance();
        switch (ch) {
        case '(': finish(Tok::LParen); break;
        case ')': finish(Tok::RParen); break;
        case '{': finish(Tok::LBrace); break;
        case '}': finish(Tok::RBrace); break;
        case '[': finish(Tok::LBracket); break;
        case ']': finish(Tok::RBracket); break;
        case ';': finish(Tok::Semi); break;
        case ',': finish(Tok::Comma); break;
        case '.': finish(Tok::Dot); break;
        case '+': finish(Tok::Plus); break;
        case '-': finish(Tok::Minus); break;
        case '*': finish(Tok::Star); break;
        case '/': finish(Tok::Slash); break;
        case '%': finish(Tok::Percent); break;
        case '=':
            if (c.peek() == '=') { c.advance(); finish(Tok::EqEq); }
            else finish(Tok::Assign);
            break;
        case '!':
            if (c.peek() == '=') { c.advance(); finish(Tok::NotEq); }
            else finish(Tok::Bang);
            break;
        case '<':
            if (c.peek() == '=') { c.advance(); finish(Tok::Le); }
            else finish(Tok::Lt);
            break;
        case '>':
            if (c.peek() == '=') { c.advance(); finish(Tok::Ge); }
            else finish(Tok::Gt);
            break;
        case '&':
            if (c.peek() == '&') { c.advance(); finish(Tok::AndAnd); }
            else fail(c, "stray '&'");
            break;
        case '|':
            if (c.peek() == '|') { c.advance(); finish(Tok::OrOr); }
            else fail(c, "stray '|'");
            break;
        default:
            fail(c, std::string("unexpected character '") + ch + "'");
        }
    }

    Token eof;
    eof.kind = Tok::Eof;
    eof.span = c.here();
    out.push_back(std::move(eof));
    return out;
}

} // namespace mj
