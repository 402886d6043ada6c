#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unitc/rational.hpp"

namespace unitc::lang {

// Expression over scale names: products, quotients, rational powers, and
// positive number literals. Exponents are exact rationals.
struct UnitExpr {
    enum class Kind { Ident, Literal, Mul, Div, Pow };

    Kind kind;
    int line = 0;
    int col = 0;

    std::string name;                          // Ident
    double value = 0;                          // Literal
    std::shared_ptr<const UnitExpr> lhs, rhs;  // Mul/Div; Pow keeps its base in lhs
    Rational exponent;                         // Pow
};

using ExprPtr = std::shared_ptr<const UnitExpr>;

struct Statement {
    enum class Kind { Base, ScaleDef, Dim, Check, Express, PiGroups, Ratio };

    Kind kind;
    int line = 1;
    int col = 1;

    std::string name;                // Base, ScaleDef
    bool is_signed = false;          // ScaleDef
    ExprPtr expr;                    // ScaleDef body, Dim, Check lhs, Express subject, Ratio lhs
    ExprPtr rhs;                     // Check rhs, Ratio rhs
    std::optional<double> coeff;     // ScaleDef trailing "= NUMBER"
    std::vector<std::string> names;  // Express basis (three), PiGroups arguments
};

// Canonical rendering; parses back to a structurally equal tree.
std::string pretty(const UnitExpr& e);
std::string pretty(const Statement& s);

// Structural equality, ignoring source positions.
bool equal(const UnitExpr& a, const UnitExpr& b);
bool equal(const Statement& a, const Statement& b);

}  // namespace unitc::lang
