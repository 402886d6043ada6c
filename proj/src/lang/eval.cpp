#include "unitc/lang/eval.hpp"

#include <utility>

#include "unitc/errors.hpp"
#include "unitc/lang/parser.hpp"
#include "unitc/lang/token.hpp"

namespace unitc::lang {

namespace {

// Thrown while running a single statement; the driver turns it into a
// diagnostic, drops the statement, and moves on.
struct SemanticError {
    Diagnostic diag;
};

[[noreturn]] void semantic(Severity severity, int line, int col, std::string code,
                           std::string message) {
    throw SemanticError{Diagnostic{severity, line, col, std::move(code), std::move(message)}};
}

SignedScale eval_expr(const UnitExpr& e, const Registry& registry) {
    switch (e.kind) {
        case UnitExpr::Kind::Ident: {
            const RegistryEntry* entry = registry.find(e.name);
            if (entry == nullptr) {
                semantic(Severity::Error, e.line, e.col, "undefined-identifier",
                         "undefined scale '" + e.name + "'");
            }
            return SignedScale(entry->dims, entry->coeff);
        }
        case UnitExpr::Kind::Literal:
            return SignedScale(DimVector{}, e.value);
        case UnitExpr::Kind::Mul:
            return scale_mul(eval_expr(*e.lhs, registry), eval_expr(*e.rhs, registry));
        case UnitExpr::Kind::Div: {
            SignedScale num = eval_expr(*e.lhs, registry);
            SignedScale den = eval_expr(*e.rhs, registry);
            if (den.coeff() == 0) {
                semantic(Severity::Error, e.line, e.col, "division-by-zero",
                         "division by a scale with coefficient zero");
            }
            return scale_div(num, den);
        }
        case UnitExpr::Kind::Pow: {
            SignedScale base = eval_expr(*e.lhs, registry);
            try {
                return scale_pow(base, e.exponent);
            } catch (const FractionalPowerOfNegative&) {
                semantic(Severity::Error, e.line, e.col, "fractional-power-of-negative",
                         "exponent " + e.exponent.str() +
                             " is not an integer but the coefficient is negative");
            } catch (const ZeroToNonpositivePower&) {
                semantic(Severity::Error, e.line, e.col, "zero-to-nonpositive-power",
                         "exponent " + e.exponent.str() +
                             " is not positive but the coefficient is zero");
            }
        }
    }
    throw InvariantViolation("unhandled expression kind");
}

SignedScale lookup(const std::string& name, const Statement& s, const Registry& registry) {
    const RegistryEntry* entry = registry.find(name);
    if (entry == nullptr) {
        semantic(Severity::Error, s.line, s.col, "undefined-identifier",
                 "undefined scale '" + name + "'");
    }
    return SignedScale(entry->dims, entry->coeff);
}

void run_base(const Statement& s, Registry& registry) {
    if (registry.has(s.name)) {
        semantic(Severity::Error, s.line, s.col, "duplicate-definition",
                 "name '" + s.name + "' is already defined");
    }
    if (registry.bases_complete()) {
        semantic(Severity::Error, s.line, s.col, "too-many-bases",
                 "the system already has three bases");
    }
    registry.add_base(s.name);
}

void run_scale(const Statement& s, Registry& registry) {
    if (!registry.bases_complete()) {
        semantic(Severity::Error, s.line, s.col, "bases-incomplete",
                 "scale '" + s.name + "' defined before all three bases");
    }
    if (registry.has(s.name)) {
        semantic(Severity::Error, s.line, s.col, "duplicate-definition",
                 "name '" + s.name + "' is already defined");
    }
    SignedScale body = eval_expr(*s.expr, registry);
    double coeff = s.coeff.value_or(1.0) * body.coeff();
    if (!s.is_signed && !(coeff > 0)) {
        semantic(Severity::Error, s.line, s.col, "nonpositive-coefficient",
                 "scale '" + s.name + "' has a nonpositive coefficient; declare it 'signed'");
    }
    registry.define(s.name, RegistryEntry{body.dims(), coeff, s.is_signed});
}

Result run_dim(const Statement& s, const Registry& registry) {
    SignedScale v = eval_expr(*s.expr, registry);
    return Result{pretty(s), "dim", true, DimPayload{v.dims()}};
}

Result run_check(const Statement& s, const Registry& registry) {
    SignedScale lhs = eval_expr(*s.expr, registry);
    SignedScale rhs = eval_expr(*s.rhs, registry);
    bool ok = lhs.dims() == rhs.dims();
    return Result{pretty(s), "check", ok, CheckPayload{lhs.dims(), rhs.dims()}};
}

std::string joined(const std::vector<std::string>& names) {
    std::string out;
    for (const std::string& name : names) {
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

Result run_express(const Statement& s, const Registry& registry,
                   std::vector<Diagnostic>& diagnostics) {
    SignedScale subject = eval_expr(*s.expr, registry);
    std::vector<SignedScale> entries;
    for (const std::string& name : s.names) {
        SignedScale k = lookup(name, s, registry);
        if (k.coeff() == 0) {
            semantic(Severity::Error, s.line, s.col, "zero-coefficient",
                     "basis scale '" + name + "' has coefficient zero");
        }
        entries.push_back(k);
    }
    Result r{pretty(s), "express", true, {}};
    if (!is_scale_basis(entries[0], entries[1], entries[2])) {
        diagnostics.push_back(Diagnostic{Severity::Failure, s.line, s.col, "singular-basis",
                                         "the scales " + joined(s.names) +
                                             " do not form a basis"});
        r.ok = false;
        return r;
    }
    ScaleBasis basis(entries[0], entries[1], entries[2]);
    BasisExpression b = express_in_basis(subject, basis);
    r.payload = ExpressPayload{{s.names[0], s.names[1], s.names[2]}, b.exponents, b.coeff};
    return r;
}

Result run_pigroups(const Statement& s, const Registry& registry) {
    std::vector<SignedScale> ks;
    for (const std::string& name : s.names) {
        ks.push_back(lookup(name, s, registry));
    }
    return Result{pretty(s), "pigroups", true, PiGroupsPayload{s.names, pi_groups(ks)}};
}

Result run_ratio(const Statement& s, const Registry& registry,
                 std::vector<Diagnostic>& diagnostics) {
    SignedScale lhs = eval_expr(*s.expr, registry);
    SignedScale rhs = eval_expr(*s.rhs, registry);
    Result r{pretty(s), "ratio", true, {}};
    if (lhs.dims() != rhs.dims()) {
        diagnostics.push_back(Diagnostic{Severity::Failure, s.line, s.col, "dimension-mismatch",
                                         "incommensurable scales: " + lhs.dims().str() + " vs " +
                                             rhs.dims().str()});
        r.ok = false;
        return r;
    }
    if (rhs.coeff() == 0) {
        semantic(Severity::Error, s.line, s.col, "division-by-zero",
                 "ratio against a scale with coefficient zero");
    }
    r.payload = RatioPayload{lhs.coeff() / rhs.coeff()};
    return r;
}

}  // namespace

EvalOutput evaluate(const std::vector<Statement>& program, Registry& registry) {
    EvalOutput out;
    for (const Statement& s : program) {
        try {
            switch (s.kind) {
                case Statement::Kind::Base:
                    run_base(s, registry);
                    break;
                case Statement::Kind::ScaleDef:
                    run_scale(s, registry);
                    break;
                case Statement::Kind::Dim:
                    out.results.push_back(run_dim(s, registry));
                    break;
                case Statement::Kind::Check:
                    out.results.push_back(run_check(s, registry));
                    break;
                case Statement::Kind::Express:
                    out.results.push_back(run_express(s, registry, out.diagnostics));
                    break;
                case Statement::Kind::PiGroups:
                    out.results.push_back(run_pigroups(s, registry));
                    break;
                case Statement::Kind::Ratio:
                    out.results.push_back(run_ratio(s, registry, out.diagnostics));
                    break;
            }
        } catch (const SemanticError& e) {
            out.diagnostics.push_back(e.diag);
        }
    }
    return out;
}

int exit_code(const EvalOutput& output) {
    bool failed = false;
    for (const Diagnostic& d : output.diagnostics) {
        if (d.severity == Severity::Error) return 2;
        failed = failed || d.severity == Severity::Failure;
    }
    for (const Result& r : output.results) {
        failed = failed || !r.ok;
    }
    return failed ? 1 : 0;
}

Registry load_definitions(const std::string& source, std::vector<Diagnostic>& diagnostics) {
    Registry registry;
    std::vector<Statement> program;
    try {
        program = parse_program(tokenize(source));
    } catch (const LexError& e) {
        diagnostics.push_back(
            Diagnostic{Severity::Error, e.line, e.col, "lex-error", e.what()});
        return registry;
    } catch (const ParseError& e) {
        diagnostics.push_back(
            Diagnostic{Severity::Error, e.line, e.col, "parse-error", e.what()});
        return registry;
    }
    std::vector<Statement> definitions;
    for (const Statement& s : program) {
        if (s.kind == Statement::Kind::Base || s.kind == Statement::Kind::ScaleDef) {
            definitions.push_back(s);
        } else {
            diagnostics.push_back(Diagnostic{Severity::Error, s.line, s.col,
                                             "query-in-definitions",
                                             "query statement in a definitions file"});
        }
    }
    EvalOutput out = evaluate(definitions, registry);
    diagnostics.insert(diagnostics.end(), out.diagnostics.begin(), out.diagnostics.end());
    return registry;
}

}  // namespace unitc::lang
