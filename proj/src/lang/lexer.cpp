#include "unitc/lang/token.hpp"

#include <cctype>
#include <map>

namespace unitc::lang {

const char* token_kind_name(TokenKind kind) {
    switch (kind) {
        case TokenKind::Ident: return "identifier";
        case TokenKind::Number: return "number";
        case TokenKind::Star: return "'*'";
        case TokenKind::Slash: return "'/'";
        case TokenKind::Caret: return "'^'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Comma: return "','";
        case TokenKind::Tilde: return "'~'";
        case TokenKind::Colon: return "':'";
        case TokenKind::Semicolon: return "';'";
        case TokenKind::Equals: return "'='";
        case TokenKind::KwBase: return "'base'";
        case TokenKind::KwScale: return "'scale'";
        case TokenKind::KwSigned: return "'signed'";
        case TokenKind::KwDim: return "'dim'";
        case TokenKind::KwCheck: return "'check'";
        case TokenKind::KwExpress: return "'express'";
        case TokenKind::KwIn: return "'in'";
        case TokenKind::KwPigroups: return "'pigroups'";
        case TokenKind::KwRatio: return "'ratio'";
        case TokenKind::End: return "end of input";
    }
    return "?";
}

namespace {

const std::map<std::string, TokenKind>& keywords() {
    static const std::map<std::string, TokenKind> kw{
        {"base", TokenKind::KwBase},       {"scale", TokenKind::KwScale},
        {"signed", TokenKind::KwSigned},   {"dim", TokenKind::KwDim},
        {"check", TokenKind::KwCheck},     {"express", TokenKind::KwExpress},
        {"in", TokenKind::KwIn},           {"pigroups", TokenKind::KwPigroups},
        {"ratio", TokenKind::KwRatio},
    };
    return kw;
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            if (eof()) break;
            out.push_back(next_token());
        }
        out.push_back(Token{TokenKind::End, "", line_, col_});
        return out;
    }

private:
    bool eof() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }
    char peek2() const { return pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0'; }

    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_blank() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    Token next_token() {
        int line = line_;
        int col = col_;
        char c = peek();

        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return ident(line, col);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return number(line, col, false);
        }
        if (c == '-') {
            if (std::isdigit(static_cast<unsigned char>(peek2()))) {
                return number(line, col, true);
            }
            throw LexError("stray '-' (only negative number literals carry a sign)", line, col);
        }

        advance();
        switch (c) {
            case '*': return Token{TokenKind::Star, "*", line, col};
            case '/': return Token{TokenKind::Slash, "/", line, col};
            case '^': return Token{TokenKind::Caret, "^", line, col};
            case '(': return Token{TokenKind::LParen, "(", line, col};
            case ')': return Token{TokenKind::RParen, ")", line, col};
            case ',': return Token{TokenKind::Comma, ",", line, col};
            case '~': return Token{TokenKind::Tilde, "~", line, col};
            case ':': return Token{TokenKind::Colon, ":", line, col};
            case ';': return Token{TokenKind::Semicolon, ";", line, col};
            case '=': return Token{TokenKind::Equals, "=", line, col};
            default:
                throw LexError(std::string("unexpected character '") + c + "'", line, col);
        }
    }

    Token ident(int line, int col) {
        std::string text;
        while (!eof()) {
            char c = peek();
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                text += advance();
            } else {
                break;
            }
        }
        auto kw = keywords().find(text);
        TokenKind kind = kw == keywords().end() ? TokenKind::Ident : kw->second;
        return Token{kind, std::move(text), line, col};
    }

    // digits ['.' digits] [('e'|'E') ['+'|'-'] digits], optionally preceded
    // by '-'.
    Token number(int line, int col, bool negative) {
        std::string text;
        if (negative) text += advance();
        auto digits = [&](const char* what) {
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                throw LexError(std::string("expected ") + what + " in number", line_, col_);
            }
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                text += advance();
            }
        };
        digits("digits");
        if (!eof() && peek() == '.') {
            text += advance();
            digits("digits after decimal point");
        }
        if (!eof() && (peek() == 'e' || peek() == 'E')) {
            text += advance();
            if (!eof() && (peek() == '+' || peek() == '-')) text += advance();
            digits("exponent digits");
        }
        return Token{TokenKind::Number, std::move(text), line, col};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
    return Lexer(src).run();
}

}  // namespace unitc::lang
