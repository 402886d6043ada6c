#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unitc/errors.hpp"

namespace unitc::lang {

// Errors with a source position, 1-based.
class LexError : public Error {
public:
    LexError(const std::string& what, int line, int col)
        : Error(what), line(line), col(col) {}
    int line;
    int col;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int col)
        : Error(what), line(line), col(col) {}
    int line;
    int col;
};

enum class TokenKind {
    Ident,
    Number,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Tilde,
    Colon,
    Semicolon,
    Equals,
    KwBase,
    KwScale,
    KwSigned,
    KwDim,
    KwCheck,
    KwExpress,
    KwIn,
    KwPigroups,
    KwRatio,
    End,
};

const char* token_kind_name(TokenKind kind);

struct Token {
    TokenKind kind;
    std::string text;  // raw spelling; numbers keep their sign
    int line = 1;
    int col = 1;
};

// Splits source text into tokens, ending with an End token. '#' starts a
// comment running to end of line. A '-' is only legal directly before a
// digit, where it opens a negative number literal.
std::vector<Token> tokenize(std::string_view src);

}  // namespace unitc::lang
