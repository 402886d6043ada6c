#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "unitc/lang/eval.hpp"
#include "unitc/lang/json_out.hpp"
#include "unitc/lang/parser.hpp"
#include "unitc/lang/token.hpp"

using namespace unitc;
using namespace unitc::lang;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

EvalOutput run(const std::string& src, Registry& registry) {
    return evaluate(parse_program(tokenize(src)), registry);
}

EvalOutput run_default(const std::string& src) {
    Registry registry = default_registry();
    return run(src, registry);
}

const char* kToyDefs =
    "base T; base L; base M;\n"
    "scale v  : L / T = 2;\n"
    "scale h  : M * L^2 / T = 8;\n"
    "scale g  : L^3 / (M * T^2) = 1;\n"
    "scale mu : M = 4;\n";

}  // namespace

TEST_CASE("definitions build up the registry") {
    Registry registry;
    EvalOutput out = run(
        "base T; base L; base M;\n"
        "scale v : L / T = 2;\n"
        "scale k : 2.5 * v = 3;\n"
        "signed scale w : v^2 = -3;\n",
        registry);
    CHECK(out.diagnostics.empty());
    CHECK(out.results.empty());

    const RegistryEntry* v = registry.find("v");
    REQUIRE(v != nullptr);
    CHECK(v->dims == DimVector{-1, 1, 0});
    CHECK(v->coeff == 2.0);
    CHECK(!v->is_signed);

    // The trailing number multiplies the coefficient of the body.
    const RegistryEntry* k = registry.find("k");
    REQUIRE(k != nullptr);
    CHECK(k->dims == DimVector{-1, 1, 0});
    CHECK(k->coeff == 15.0);

    const RegistryEntry* w = registry.find("w");
    REQUIRE(w != nullptr);
    CHECK(w->dims == DimVector{-2, 2, 0});
    CHECK(w->coeff == -12.0);
    CHECK(w->is_signed);

    // Bases answer as scales with unit exponent triples.
    const RegistryEntry* base_l = registry.find("L");
    REQUIRE(base_l != nullptr);
    CHECK(base_l->dims == DimVector{0, 1, 0});
    CHECK(base_l->coeff == 1.0);
}

TEST_CASE("dim reports the exponent triple") {
    EvalOutput out = run_default("dim c * hbar;");
    REQUIRE(out.results.size() == 1);
    const Result& r = out.results[0];
    CHECK(r.kind == "dim");
    CHECK(r.ok);
    CHECK(r.stmt == "dim c * hbar;");
    CHECK(std::get<DimPayload>(r.payload).dims.str() == "T^-2 L^3 M");
    CHECK(exit_code(out) == 0);
}

TEST_CASE("dim handles fractional exponent triples") {
    EvalOutput out = run_default("dim e;");
    REQUIRE(out.results.size() == 1);
    CHECK(std::get<DimPayload>(out.results[0].payload).dims.str() == "L^3/2 M^1/2");
}

TEST_CASE("the gravity and squared-charge check passes") {
    EvalOutput out = run_default("check G ~ q^2 / m^2;");
    REQUIRE(out.results.size() == 1);
    CHECK(out.results[0].ok);
    CHECK(exit_code(out) == 0);
}

TEST_CASE("check compares triples exactly") {
    EvalOutput good = run_default("check hbar ~ m * c * L;");
    REQUIRE(good.results.size() == 1);
    CHECK(good.results[0].ok);
    CHECK(good.diagnostics.empty());
    CHECK(exit_code(good) == 0);

    EvalOutput bad = run_default("check c ~ m;");
    REQUIRE(bad.results.size() == 1);
    CHECK(!bad.results[0].ok);
    const auto& p = std::get<CheckPayload>(bad.results[0].payload);
    CHECK(p.lhs.str() == "T^-1 L");
    CHECK(p.rhs.str() == "M");
    // A failing check is an answer, not a malfunction: no diagnostic.
    CHECK(bad.diagnostics.empty());
    CHECK(exit_code(bad) == 1);
}

TEST_CASE("express solves for the exponents") {
    EvalOutput out = run_default("express c in (m, hbar, G);");
    REQUIRE(out.results.size() == 1);
    const auto& p = std::get<ExpressPayload>(out.results[0].payload);
    CHECK(p.basis == std::array<std::string, 3>{"m", "hbar", "G"});
    CHECK(p.exponents == std::array<Rational, 3>{Rational(2), Rational(-1), Rational(1)});
    CHECK(p.coeff == 1.0);  // all built-in coefficients are one
    CHECK(exit_code(out) == 0);
}

TEST_CASE("express against a dependent triple is a failure, not an error") {
    EvalOutput out = run_default("express c in (c, hbar, hbar);");
    REQUIRE(out.results.size() == 1);
    CHECK(!out.results[0].ok);
    CHECK(std::holds_alternative<std::monostate>(out.results[0].payload));
    REQUIRE(out.diagnostics.size() == 1);
    CHECK(out.diagnostics[0].severity == Severity::Failure);
    CHECK(out.diagnostics[0].code == "singular-basis");
    CHECK(exit_code(out) == 1);
}

TEST_CASE("mass, charge, and gravity are mutually dependent as a basis") {
    EvalOutput out = run_default("express c in (m, q, G);");
    REQUIRE(out.results.size() == 1);
    CHECK(!out.results[0].ok);
    REQUIRE(out.diagnostics.size() == 1);
    CHECK(out.diagnostics[0].code == "singular-basis");
    CHECK(exit_code(out) == 1);
}

TEST_CASE("express refuses a basis entry with coefficient zero") {
    Registry registry;
    EvalOutput out = run(
        "base T; base L; base M;\n"
        "signed scale z : T = 0;\n"
        "express T in (z, L, M);\n",
        registry);
    CHECK(out.results.empty());
    REQUIRE(out.diagnostics.size() == 1);
    CHECK(out.diagnostics[0].severity == Severity::Error);
    CHECK(out.diagnostics[0].code == "zero-coefficient");
    CHECK(exit_code(out) == 2);
}

TEST_CASE("pigroups finds the dimensionless combinations") {
    EvalOutput out = run_default("pigroups (c, hbar, G, m);");
    REQUIRE(out.results.size() == 1);
    const auto& p = std::get<PiGroupsPayload>(out.results[0].payload);
    CHECK(p.names == std::vector<std::string>{"c", "hbar", "G", "m"});
    REQUIRE(p.groups.size() == 1);
    CHECK(p.groups[0] == std::vector<Rational>{1, 1, -1, -2});

    EvalOutput none = run_default("pigroups (m);");
    CHECK(std::get<PiGroupsPayload>(none.results[0].payload).groups.empty());
    CHECK(exit_code(none) == 0);
}

TEST_CASE("ratio divides commensurable scales") {
    Registry registry;
    EvalOutput out = run(std::string(kToyDefs) + "ratio v^2 * mu, h / T;", registry);
    REQUIRE(out.results.size() == 1);
    CHECK(std::get<RatioPayload>(out.results[0].payload).value == 2.0);
    CHECK(exit_code(out) == 0);
}

TEST_CASE("ratio across different triples is a failure") {
    EvalOutput out = run_default("ratio c, m;");
    REQUIRE(out.results.size() == 1);
    CHECK(!out.results[0].ok);
    REQUIRE(out.diagnostics.size() == 1);
    CHECK(out.diagnostics[0].severity == Severity::Failure);
    CHECK(out.diagnostics[0].code == "dimension-mismatch");
    CHECK(exit_code(out) == 1);
}

TEST_CASE("ratio against a zero coefficient is an error") {
    Registry registry;
    EvalOutput out = run(
        "base T; base L; base M;\n"
        "signed scale z : T = 0;\n"
        "ratio T, z;\n",
        registry);
    CHECK(out.results.empty());
    REQUIRE(out.diagnostics.size() == 1);
    CHECK(out.diagnostics[0].code == "division-by-zero");
    CHECK(exit_code(out) == 2);
}

TEST_CASE("semantic errors carry codes and positions") {
    Registry empty;

    SUBCASE("undefined identifier, at the name") {
        EvalOutput out = run("dim nosuch;", empty);
        REQUIRE(out.diagnostics.size() == 1);
        CHECK(out.diagnostics[0].code == "undefined-identifier");
        CHECK(out.diagnostics[0].line == 1);
        CHECK(out.diagnostics[0].col == 5);
    }

    SUBCASE("scale before the bases") {
        EvalOutput out = run("base T; scale v : T;", empty);
        REQUIRE(out.diagnostics.size() == 1);
        CHECK(out.diagnostics[0].code == "bases-incomplete");
        CHECK(out.diagnostics[0].col == 9);
    }

    SUBCASE("duplicate name") {
        EvalOutput out = run("base T; base L; base M; scale T : L;", empty);
        REQUIRE(out.diagnostics.size() == 1);
        CHECK(out.diagnostics[0].code == "duplicate-definition");
    }

    SUBCASE("fourth base") {
        EvalOutput out = run("base T; base L; base M; base X;", empty);
        REQUIRE(out.diagnostics.size() == 1);
        CHECK(out.diagnostics[0].code == "too-many-bases");
    }

    SUBCASE("unsigned scale with a nonpositive coefficient") {
        EvalOutput out = run("base T; base L; base M; scale v : L = -2;", empty);
        REQUIRE(out.diagnostics.size() == 1);
        CHECK(out.diagnostics[0].code == "nonpositive-coefficient");
    }

    SUBCASE("fractional power of a negative coefficient") {
        EvalOutput out = run(
            "base T; base L; base M;\n"
            "signed scale q : T = -1;\n"
            "dim q^(1/2);\n",
            empty);
        REQUIRE(out.diagnostics.size() == 1);
        CHECK(out.diagnostics[0].code == "fractional-power-of-negative");
        CHECK(out.diagnostics[0].line == 3);
    }

    SUBCASE("zero coefficient to a nonpositive power") {
        EvalOutput out = run(
            "base T; base L; base M;\n"
            "signed scale z : T = 0;\n"
            "dim z^-1;\n",
            empty);
        REQUIRE(out.diagnostics.size() == 1);
        CHECK(out.diagnostics[0].code == "zero-to-nonpositive-power");
    }

    SUBCASE("division by a zero coefficient, at the operator") {
        EvalOutput out = run(
            "base T; base L; base M;\n"
            "signed scale z : T = 0;\n"
            "dim T / z;\n",
            empty);
        REQUIRE(out.diagnostics.size() == 1);
        CHECK(out.diagnostics[0].code == "division-by-zero");
        CHECK(out.diagnostics[0].line == 3);
        CHECK(out.diagnostics[0].col == 7);
    }
}

TEST_CASE("a broken statement does not stop the rest of the program") {
    EvalOutput out = run_default(
        "dim nosuch;\n"
        "dim c;\n");
    REQUIRE(out.results.size() == 1);
    CHECK(std::get<DimPayload>(out.results[0].payload).dims.str() == "T^-1 L");
    REQUIRE(out.diagnostics.size() == 1);
    CHECK(exit_code(out) == 2);
}

TEST_CASE("errors dominate failures in the exit code") {
    EvalOutput out = run_default(
        "check c ~ m;\n"  // failure
        "dim nosuch;\n");  // error
    CHECK(exit_code(out) == 2);

    EvalOutput empty_out;
    CHECK(exit_code(empty_out) == 0);
}

TEST_CASE("load_definitions builds a registry from source") {
    std::vector<Diagnostic> diagnostics;
    Registry registry = load_definitions(kToyDefs, diagnostics);
    CHECK(diagnostics.empty());
    CHECK(registry.bases_complete());
    REQUIRE(registry.find("h") != nullptr);
    CHECK(registry.find("h")->coeff == 8.0);
}

TEST_CASE("load_definitions rejects query statements but keeps the definitions") {
    std::vector<Diagnostic> diagnostics;
    Registry registry = load_definitions(
        "base T; base L; base M;\n"
        "dim T;\n"
        "scale v : L / T;\n",
        diagnostics);
    REQUIRE(diagnostics.size() == 1);
    CHECK(diagnostics[0].code == "query-in-definitions");
    CHECK(diagnostics[0].line == 2);
    CHECK(registry.find("v") != nullptr);
}

TEST_CASE("load_definitions reports syntax errors as diagnostics") {
    std::vector<Diagnostic> diagnostics;
    load_definitions("base T", diagnostics);
    REQUIRE(diagnostics.size() == 1);
    CHECK(diagnostics[0].code == "parse-error");

    diagnostics.clear();
    load_definitions("base @;", diagnostics);
    REQUIRE(diagnostics.size() == 1);
    CHECK(diagnostics[0].code == "lex-error");
}

TEST_CASE("the JSON report is byte-deterministic") {
    std::string a = to_json(run_default("dim c; check c ~ c; pigroups (c, hbar);"));
    std::string b = to_json(run_default("dim c; check c ~ c; pigroups (c, hbar);"));
    CHECK(a == b);

    CHECK(to_json(EvalOutput{}) ==
          "{\n"
          "  \"diagnostics\": [],\n"
          "  \"results\": [],\n"
          "  \"version\": \"1\"\n"
          "}\n");
}

TEST_CASE("the sample program matches its frozen JSON report") {
    namespace fs = std::filesystem;
    std::string source = slurp(fs::path(UNITC_DATA_DIR) / "sample.units");
    Registry registry;  // the sample declares its own bases and scales
    EvalOutput out = run(source, registry);
    CHECK(exit_code(out) == 0);
    CHECK(to_json(out) == slurp(fs::path(UNITC_DATA_DIR) / "sample.golden.json"));
}
