#pragma once

#include <vector>

#include "unitc/lang/ast.hpp"
#include "unitc/lang/token.hpp"

namespace unitc::lang {

// Parses a whole program. Throws ParseError at the first syntax error.
std::vector<Statement> parse_program(const std::vector<Token>& tokens);

// Parses a token stream that must hold exactly one expression.
ExprPtr parse_expression(const std::vector<Token>& tokens);

}  // namespace unitc::lang
