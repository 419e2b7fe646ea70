#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mj/span.hpp"

namespace mj {

enum class Tok {
    Ident, IntLit, LongLit, FloatLit, DoubleLit, StringLit,
    // keywords
    KwClass, KwVoid, KwInt, KwLong, KwFloat, KwDouble, KwBool, KwString,
    KwIf, KwElse, KwWhile, KwFor, KwReturn, KwNew, KwThis, KwNull, KwTrue, KwFalse,
    KwAssertTrue, KwAssertEquals,
    // punctuation
    LParen, RParen, LBrace, RBrace, LBracket, RBracket,
    Semi, Comma, Dot, Assign,
    // operators
    EqEq, NotEq, Lt, Le, Gt, Ge, AndAnd, OrOr, Plus, Minus, Star, Slash, Percent, Bang,
    Eof
};

struct Token {
    Tok kind;
    Span span;
    std::string text;      // raw source text of the token
    long long int_val = 0; // IntLit/LongLit
    double float_val = 0;  // FloatLit/DoubleLit
    std::string str_val;   // StringLit, unescaped
};

struct LexError {
    Span span;
    std::string message;
};

// Tokenizes MJ source. Throws LexError on malformed input
// (unterminated literal, stray character).
std::vector<Token> lex(std::string_view source);

} // namespace mj
