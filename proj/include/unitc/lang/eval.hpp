#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "unitc/lang/ast.hpp"
#include "unitc/scales.hpp"

namespace unitc::lang {

// Error caps the run's exit status at 2; Failure marks a well-formed
// question whose answer came out negative (exit 1); Info is advisory and
// never changes the exit code.
enum class Severity { Error, Failure, Info };

struct Diagnostic {
    Severity severity = Severity::Error;
    int line = 0;
    int col = 0;
    std::string code;     // stable machine-readable tag, e.g. "undefined-identifier"
    std::string message;  // human-readable explanation
};

struct DimPayload {
    DimVector dims;
};

struct CheckPayload {
    DimVector lhs, rhs;
};

struct ExpressPayload {
    std::array<std::string, 3> basis;
    std::array<Rational, 3> exponents;
    double coeff = 1.0;
};

struct PiGroupsPayload {
    std::vector<std::string> names;
    std::vector<std::vector<Rational>> groups;
};

struct RatioPayload {
    double value = 0;
};

// One query statement's outcome. Definitions produce no result; a query that
// hit an Error produces a diagnostic instead of a result.
struct Result {
    std::string stmt;  // canonical rendering of the statement
    std::string kind;  // "dim", "check", "express", "pigroups", "ratio"
    bool ok = true;
    std::variant<std::monostate, DimPayload, CheckPayload, ExpressPayload, PiGroupsPayload,
                 RatioPayload>
        payload;
};

struct EvalOutput {
    std::vector<Result> results;
    std::vector<Diagnostic> diagnostics;
};

// Runs a program against the registry, which base and scale definitions
// mutate. A statement with a semantic error is skipped with an Error
// diagnostic; later statements still run.
EvalOutput evaluate(const std::vector<Statement>& program, Registry& registry);

// 2 when any Error was diagnosed, else 1 when any Failure was diagnosed or
// any result came out negative, else 0.
int exit_code(const EvalOutput& output);

// Parses and evaluates a definitions file, which may hold only base and
// scale statements. Query statements, syntax errors, and semantic errors are
// reported into `diagnostics` as Errors.
Registry load_definitions(const std::string& source, std::vector<Diagnostic>& diagnostics);

}  // namespace unitc::lang
