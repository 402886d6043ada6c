#include "unitc/lang/parser.hpp"

#include <charconv>

namespace unitc::lang {

namespace {

// program   ::= statement*
// statement ::= "base" IDENT ";"
//             | ["signed"] "scale" IDENT ":" expr ["=" NUMBER] ";"
//             | "dim" expr ";"
//             | "check" expr "~" expr ";"
//             | "express" expr "in" "(" IDENT "," IDENT "," IDENT ")" ";"
//             | "pigroups" "(" IDENT ("," IDENT)* ")" ";"
//             | "ratio" expr "," expr ";"
// expr      ::= term (("*" | "/") term)*
// term      ::= factor ["^" rational]
// factor    ::= IDENT | NUMBER | "(" expr ")"
// rational  ::= INT | "(" INT "/" INT ")"
class Parser {
public:
    explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

    std::vector<Statement> program() {
        std::vector<Statement> out;
        while (!at(TokenKind::End)) {
            out.push_back(statement());
        }
        return out;
    }

    ExprPtr bare_expression() {
        ExprPtr e = expr();
        expect(TokenKind::End, "after the expression");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool at(TokenKind k) const { return peek().kind == k; }

    const Token& advance() { return tokens_[pos_++]; }

    bool accept(TokenKind k) {
        if (!at(k)) return false;
        ++pos_;
        return true;
    }

    const Token& expect(TokenKind k, const char* context) {
        if (!at(k)) {
            throw ParseError(std::string("expected ") + token_kind_name(k) + " " + context +
                                 ", got " + token_kind_name(peek().kind),
                             peek().line, peek().col);
        }
        return advance();
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, peek().line, peek().col);
    }

    Statement statement() {
        const Token& first = peek();
        Statement s;
        s.line = first.line;
        s.col = first.col;

        switch (first.kind) {
            case TokenKind::KwBase:
                advance();
                s.kind = Statement::Kind::Base;
                s.name = expect(TokenKind::Ident, "after 'base'").text;
                break;
            case TokenKind::KwSigned:
                advance();
                if (!at(TokenKind::KwScale)) fail("'signed' must introduce a scale definition");
                [[fallthrough]];
            case TokenKind::KwScale:
                advance();
                s.kind = Statement::Kind::ScaleDef;
                s.is_signed = first.kind == TokenKind::KwSigned;
                s.name = expect(TokenKind::Ident, "after 'scale'").text;
                expect(TokenKind::Colon, "after the scale name");
                s.expr = expr();
                if (accept(TokenKind::Equals)) {
                    s.coeff = number_value(expect(TokenKind::Number, "after '='"));
                }
                break;
            case TokenKind::KwDim:
                advance();
                s.kind = Statement::Kind::Dim;
                s.expr = expr();
                break;
            case TokenKind::KwCheck:
                advance();
                s.kind = Statement::Kind::Check;
                s.expr = expr();
                expect(TokenKind::Tilde, "between the sides of 'check'");
                s.rhs = expr();
                break;
            case TokenKind::KwExpress:
                advance();
                s.kind = Statement::Kind::Express;
                s.expr = expr();
                expect(TokenKind::KwIn, "after the expression of 'express'");
                s.names = name_list(3);
                break;
            case TokenKind::KwPigroups:
                advance();
                s.kind = Statement::Kind::PiGroups;
                s.names = name_list(0);
                break;
            case TokenKind::KwRatio:
                advance();
                s.kind = Statement::Kind::Ratio;
                s.expr = expr();
                expect(TokenKind::Comma, "between the sides of 'ratio'");
                s.rhs = expr();
                break;
            default:
                fail(std::string("expected a statement, got ") + token_kind_name(first.kind));
        }
        expect(TokenKind::Semicolon, "at the end of the statement");
        return s;
    }

    // Parenthesized comma-separated identifiers; exactly `arity` of them
    // when arity is nonzero, at least one otherwise.
    std::vector<std::string> name_list(std::size_t arity) {
        expect(TokenKind::LParen, "to open the name list");
        std::vector<std::string> names;
        names.push_back(expect(TokenKind::Ident, "in the name list").text);
        while (accept(TokenKind::Comma)) {
            names.push_back(expect(TokenKind::Ident, "in the name list").text);
        }
        const Token& close = expect(TokenKind::RParen, "to close the name list");
        if (arity != 0 && names.size() != arity) {
            throw ParseError("expected exactly " + std::to_string(arity) + " names, got " +
                                 std::to_string(names.size()),
                             close.line, close.col);
        }
        return names;
    }

    ExprPtr expr() {
        ExprPtr left = term();
        while (at(TokenKind::Star) || at(TokenKind::Slash)) {
            const Token& op = advance();
            ExprPtr right = term();
            auto node = std::make_shared<UnitExpr>();
            node->kind = op.kind == TokenKind::Star ? UnitExpr::Kind::Mul : UnitExpr::Kind::Div;
            node->line = op.line;
            node->col = op.col;
            node->lhs = std::move(left);
            node->rhs = std::move(right);
            left = std::move(node);
        }
        return left;
    }

    ExprPtr term() {
        ExprPtr base = factor();
        if (accept(TokenKind::Caret)) {
            auto node = std::make_shared<UnitExpr>();
            node->kind = UnitExpr::Kind::Pow;
            node->line = base->line;
            node->col = base->col;
            node->exponent = rational();
            node->lhs = std::move(base);
            return node;
        }
        return base;
    }

    ExprPtr factor() {
        if (at(TokenKind::Ident)) {
            const Token& t = advance();
            auto node = std::make_shared<UnitExpr>();
            node->kind = UnitExpr::Kind::Ident;
            node->line = t.line;
            node->col = t.col;
            node->name = t.text;
            return node;
        }
        if (at(TokenKind::Number)) {
            const Token& t = peek();
            double v = number_value(t);
            if (!(v > 0)) {
                fail("number literals in expressions must be positive");
            }
            advance();
            auto node = std::make_shared<UnitExpr>();
            node->kind = UnitExpr::Kind::Literal;
            node->line = t.line;
            node->col = t.col;
            node->value = v;
            return node;
        }
        if (accept(TokenKind::LParen)) {
            ExprPtr inner = expr();
            expect(TokenKind::RParen, "to close the group");
            return inner;
        }
        fail(std::string("expected a scale name, number, or '(', got ") +
             token_kind_name(peek().kind));
    }

    // An exponent: a bare integer, or (p / q) with integer p and positive
    // integer q.
    Rational rational() {
        if (at(TokenKind::Number)) {
            return integer_value(advance());
        }
        if (accept(TokenKind::LParen)) {
            Rational num = integer_value(expect(TokenKind::Number, "in the exponent"));
            expect(TokenKind::Slash, "in the exponent");
            const Token& den_tok = expect(TokenKind::Number, "in the exponent");
            Rational den = integer_value(den_tok);
            if (!den.is_positive()) {
                throw ParseError("exponent denominator must be a positive integer",
                                 den_tok.line, den_tok.col);
            }
            expect(TokenKind::RParen, "to close the exponent");
            return num / den;
        }
        fail(std::string("expected an exponent, got ") + token_kind_name(peek().kind));
    }

    Rational integer_value(const Token& t) {
        if (t.text.find_first_of(".eE") != std::string::npos) {
            throw ParseError("exponents must be integers or (p/q) fractions", t.line, t.col);
        }
        return Rational::parse(t.text);
    }

    double number_value(const Token& t) {
        double v{};
        const char* begin = t.text.data();
        const char* end = begin + t.text.size();
        auto [p, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || p != end) {
            throw ParseError("malformed number \"" + t.text + "\"", t.line, t.col);
        }
        return v;
    }

    const std::vector<Token>& tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<Statement> parse_program(const std::vector<Token>& tokens) {
    return Parser(tokens).program();
}

ExprPtr parse_expression(const std::vector<Token>& tokens) {
    return Parser(tokens).bare_expression();
}

}  // namespace unitc::lang
