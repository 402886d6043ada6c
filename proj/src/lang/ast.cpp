#include "unitc/lang/ast.hpp"

#include "unitc/numeric.hpp"

namespace unitc::lang {

namespace {

bool is_product(const UnitExpr& e) {
    return e.kind == UnitExpr::Kind::Mul || e.kind == UnitExpr::Kind::Div;
}

void render(const UnitExpr& e, std::string& out) {
    switch (e.kind) {
        case UnitExpr::Kind::Ident:
            out += e.name;
            break;
        case UnitExpr::Kind::Literal:
            out += format_double(e.value);
            break;
        case UnitExpr::Kind::Mul:
        case UnitExpr::Kind::Div:
            // Left-associative chain; only a product on the right needs
            // parentheses to parse back into the same shape.
            render(*e.lhs, out);
            out += e.kind == UnitExpr::Kind::Mul ? " * " : " / ";
            if (is_product(*e.rhs)) {
                out += '(';
                render(*e.rhs, out);
                out += ')';
            } else {
                render(*e.rhs, out);
            }
            break;
        case UnitExpr::Kind::Pow:
            if (is_product(*e.lhs)) {
                out += '(';
                render(*e.lhs, out);
                out += ')';
            } else {
                render(*e.lhs, out);
            }
            out += '^';
            if (e.exponent.is_integer()) {
                out += e.exponent.str();
            } else {
                out += '(';
                out += e.exponent.str();
                out += ')';
            }
            break;
    }
}

void join_names(const std::vector<std::string>& names, std::string& out) {
    out += '(';
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    out += ')';
}

}  // namespace

std::string pretty(const UnitExpr& e) {
    std::string out;
    render(e, out);
    return out;
}

std::string pretty(const Statement& s) {
    std::string out;
    switch (s.kind) {
        case Statement::Kind::Base:
            out = "base " + s.name + ";";
            break;
        case Statement::Kind::ScaleDef:
            if (s.is_signed) out += "signed ";
            out += "scale " + s.name + " : " + pretty(*s.expr);
            if (s.coeff) out += " = " + format_double(*s.coeff);
            out += ";";
            break;
        case Statement::Kind::Dim:
            out = "dim " + pretty(*s.expr) + ";";
            break;
        case Statement::Kind::Check:
            out = "check " + pretty(*s.expr) + " ~ " + pretty(*s.rhs) + ";";
            break;
        case Statement::Kind::Express:
            out = "express " + pretty(*s.expr) + " in ";
            join_names(s.names, out);
            out += ";";
            break;
        case Statement::Kind::PiGroups:
            out = "pigroups ";
            join_names(s.names, out);
            out += ";";
            break;
        case Statement::Kind::Ratio:
            out = "ratio " + pretty(*s.expr) + ", " + pretty(*s.rhs) + ";";
            break;
    }
    return out;
}

bool equal(const UnitExpr& a, const UnitExpr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case UnitExpr::Kind::Ident:
            return a.name == b.name;
        case UnitExpr::Kind::Literal:
            return a.value == b.value;
        case UnitExpr::Kind::Mul:
        case UnitExpr::Kind::Div:
            return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
        case UnitExpr::Kind::Pow:
            return a.exponent == b.exponent && equal(*a.lhs, *b.lhs);
    }
    return false;
}

bool equal(const Statement& a, const Statement& b) {
    if (a.kind != b.kind || a.name != b.name || a.is_signed != b.is_signed ||
        a.names != b.names || a.coeff.has_value() != b.coeff.has_value()) {
        return false;
    }
    if (a.coeff && *a.coeff != *b.coeff) return false;
    if ((a.expr != nullptr) != (b.expr != nullptr)) return false;
    if (a.expr && !equal(*a.expr, *b.expr)) return false;
    if ((a.rhs != nullptr) != (b.rhs != nullptr)) return false;
    if (a.rhs && !equal(*a.rhs, *b.rhs)) return false;
    return true;
}

}  // namespace unitc::lang
