#include "unitc/lang/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "unitc/lang/eval.hpp"
#include "unitc/lang/json_out.hpp"
#include "unitc/lang/parser.hpp"
#include "unitc/lang/token.hpp"
#include "unitc/numeric.hpp"

namespace unitc::lang {

namespace {

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void print_diagnostic(std::ostream& err, const Diagnostic& d) {
    const char* severity = d.severity == Severity::Error     ? "error"
                           : d.severity == Severity::Failure ? "failure"
                                                             : "info";
    err << d.line << ":" << d.col << ": " << severity << ": " << d.message << " (" << d.code
        << ")\n";
}

// "" for exponent one, "^-2" for other integers, "^(3/2)" for fractions;
// matches how exponents are spelled in the language.
std::string exponent_suffix(const Rational& q) {
    if (q == Rational(1)) return "";
    if (q.is_integer()) return "^" + q.str();
    return "^(" + q.str() + ")";
}

void print_result(std::ostream& out, const Result& r) {
    out << r.stmt << "\n";
    std::visit(
        Overload{
            [&](const std::monostate&) { out << "-> failed\n"; },
            [&](const DimPayload& p) { out << "-> " << p.dims.str() << "\n"; },
            [&](const CheckPayload& p) {
                if (r.ok) {
                    out << "-> ok\n";
                } else {
                    out << "-> mismatch: " << p.lhs.str() << " vs " << p.rhs.str() << "\n";
                }
            },
            [&](const ExpressPayload& p) {
                out << "-> " << format_double(p.coeff);
                for (std::size_t j = 0; j < 3; ++j) {
                    out << " * " << p.basis[j] << exponent_suffix(p.exponents[j]);
                }
                out << "\n";
            },
            [&](const PiGroupsPayload& p) {
                if (p.groups.empty()) {
                    out << "-> none\n";
                    return;
                }
                for (const std::vector<Rational>& g : p.groups) {
                    out << "->";
                    bool first = true;
                    for (std::size_t i = 0; i < p.names.size(); ++i) {
                        if (g[i].is_zero()) continue;
                        out << (first ? " " : " * ") << p.names[i] << exponent_suffix(g[i]);
                        first = false;
                    }
                    out << "\n";
                }
            },
            [&](const RatioPayload& p) { out << "-> " << format_double(p.value) << "\n"; },
        },
        r.payload);
}

int finish(const EvalOutput& output, bool json_mode, std::ostream& out, std::ostream& err) {
    if (json_mode) {
        out << to_json(output);
    } else {
        for (const Result& r : output.results) print_result(out, r);
        for (const Diagnostic& d : output.diagnostics) print_diagnostic(err, d);
    }
    return exit_code(output);
}

int syntax_error(const char* code, const std::string& message, int line, int col,
                 bool json_mode, std::ostream& out, std::ostream& err) {
    Diagnostic d{Severity::Error, line, col, code, message};
    if (json_mode) {
        EvalOutput output;
        output.diagnostics.push_back(d);
        out << to_json(output);
    } else {
        print_diagnostic(err, d);
    }
    return 2;
}

// Loads --defs into a registry; `fallback` supplies the registry when no
// definitions file was named. Returns nullopt after reporting on err.
std::optional<Registry> registry_from(const std::string& defs_path, Registry fallback,
                                      std::ostream& err) {
    if (defs_path.empty()) return fallback;
    std::optional<std::string> text = read_file(defs_path);
    if (!text) {
        err << "cannot read definitions file '" << defs_path << "'\n";
        return std::nullopt;
    }
    std::vector<Diagnostic> diagnostics;
    Registry registry = load_definitions(*text, diagnostics);
    if (!diagnostics.empty()) {
        err << "in definitions file '" << defs_path << "':\n";
        for (const Diagnostic& d : diagnostics) print_diagnostic(err, d);
        return std::nullopt;
    }
    return registry;
}

int cmd_check(const std::string& path, const std::string& defs_path, bool json_mode,
              std::ostream& out, std::ostream& err) {
    // Without --defs the program file is on its own: it declares its bases.
    std::optional<Registry> registry = registry_from(defs_path, Registry{}, err);
    if (!registry) return 2;
    std::optional<std::string> source = read_file(path);
    if (!source) {
        err << "cannot read program file '" << path << "'\n";
        return 2;
    }
    std::vector<Statement> program;
    try {
        program = parse_program(tokenize(*source));
    } catch (const LexError& e) {
        return syntax_error("lex-error", e.what(), e.line, e.col, json_mode, out, err);
    } catch (const ParseError& e) {
        return syntax_error("parse-error", e.what(), e.line, e.col, json_mode, out, err);
    }
    return finish(evaluate(program, *registry), json_mode, out, err);
}

// Parses one expression from the command line, or reports and returns null.
ExprPtr parse_arg_expr(const std::string& text, std::ostream& err) {
    try {
        return parse_expression(tokenize(text));
    } catch (const LexError& e) {
        err << "in expression '" << text << "': " << e.what() << " (column " << e.col << ")\n";
    } catch (const ParseError& e) {
        err << "in expression '" << text << "': " << e.what() << " (column " << e.col << ")\n";
    }
    return nullptr;
}

std::optional<std::vector<std::string>> split_names(const std::string& csv, std::ostream& err) {
    std::vector<std::string> names;
    std::string current;
    for (char c : csv) {
        if (c == ',') {
            names.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    names.push_back(current);
    for (const std::string& name : names) {
        if (name.empty()) {
            err << "empty name in list '" << csv << "'\n";
            return std::nullopt;
        }
    }
    return names;
}

int run_query(Statement statement, const std::string& defs_path, std::ostream& out,
              std::ostream& err) {
    std::optional<Registry> registry = registry_from(defs_path, default_registry(), err);
    if (!registry) return 2;
    EvalOutput output = evaluate({std::move(statement)}, *registry);
    return finish(output, /*json_mode=*/false, out, err);
}

int cmd_dim(const std::string& expr_text, const std::string& defs_path, std::ostream& out,
            std::ostream& err) {
    ExprPtr expr = parse_arg_expr(expr_text, err);
    if (!expr) return 2;
    Statement s;
    s.kind = Statement::Kind::Dim;
    s.expr = std::move(expr);
    return run_query(std::move(s), defs_path, out, err);
}

int cmd_express(const std::string& expr_text, const std::string& basis_csv,
                const std::string& defs_path, std::ostream& out, std::ostream& err) {
    ExprPtr expr = parse_arg_expr(expr_text, err);
    if (!expr) return 2;
    std::optional<std::vector<std::string>> names = split_names(basis_csv, err);
    if (!names) return 2;
    if (names->size() != 3) {
        err << "--basis needs exactly three names, got " << names->size() << "\n";
        return 2;
    }
    Statement s;
    s.kind = Statement::Kind::Express;
    s.expr = std::move(expr);
    s.names = std::move(*names);
    return run_query(std::move(s), defs_path, out, err);
}

int cmd_pigroups(const std::string& names_csv, const std::string& defs_path, std::ostream& out,
                 std::ostream& err) {
    std::optional<std::vector<std::string>> names = split_names(names_csv, err);
    if (!names) return 2;
    Statement s;
    s.kind = Statement::Kind::PiGroups;
    s.names = std::move(*names);
    return run_query(std::move(s), defs_path, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"scale and dimension calculus"};
    app.name("unitc");
    app.require_subcommand(1);

    std::string file;
    std::string defs;
    bool json_mode = false;
    std::string expr_text;
    std::string basis_csv;
    std::string names_csv;

    CLI::App* check = app.add_subcommand("check", "run a .units program");
    check->add_option("file", file, "program file")->required();
    check->add_option("--defs", defs, "definitions file")->envname("UNITC_DEFS");
    check->add_flag("--json", json_mode, "emit the JSON report");

    CLI::App* dim = app.add_subcommand("dim", "dimension triple of an expression");
    dim->add_option("expr", expr_text, "scale expression")->required();
    dim->add_option("--defs", defs, "definitions file")->envname("UNITC_DEFS");

    CLI::App* express = app.add_subcommand("express", "rewrite an expression in a scale basis");
    express->add_option("expr", expr_text, "scale expression")->required();
    express->add_option("--basis", basis_csv, "three comma-separated scale names")->required();
    express->add_option("--defs", defs, "definitions file")->envname("UNITC_DEFS");

    CLI::App* pigroups =
        app.add_subcommand("pigroups", "dimensionless combinations of named scales");
    pigroups->add_option("names", names_csv, "comma-separated scale names")->required();
    pigroups->add_option("--defs", defs, "definitions file")->envname("UNITC_DEFS");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        // Help requests exit 0; every real usage problem exits 2.
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    if (check->parsed()) return cmd_check(file, defs, json_mode, out, err);
    if (dim->parsed()) return cmd_dim(expr_text, defs, out, err);
    if (express->parsed()) return cmd_express(expr_text, basis_csv, defs, out, err);
    if (pigroups->parsed()) return cmd_pigroups(names_csv, defs, out, err);
    err << "no subcommand given\n";
    return 2;
}

}  // namespace unitc::lang
