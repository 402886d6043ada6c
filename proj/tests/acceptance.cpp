// End-to-end acceptance run. Each criterion prints one [PASS]/[FAIL] line;
// the process exits nonzero when anything failed. Tolerances and expected
// values are pinned here as named constants.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gen.hpp"
#include "oracles.hpp"
#include "spawn.hpp"
#include "unitc/lang/ast.hpp"
#include "unitc/lang/parser.hpp"
#include "unitc/lang/token.hpp"
#include "unitc/matrix.hpp"
#include "unitc/numeric.hpp"
#include "unitc/posspace.hpp"
#include "unitc/scales.hpp"
#include "unitc/semivec.hpp"
#include "unitc/tensor.hpp"

using namespace unitc;

namespace {

// Relative tolerance for floating coefficients; exponent arithmetic and
// rational coordinates are compared exactly.
constexpr double kRelTol = 1e-12;

// Wall-clock budget for the determinant table.
constexpr double kDetTableBudgetSeconds = 1.0;

// Working coefficients used where a criterion needs real magnitudes.
constexpr double kSpeedOfLight = 2.99792458e8;
constexpr double kReducedPlanck = 1.054571817e-34;
constexpr double kGravity = 6.6743e-11;
constexpr double kElectronMass = 9.1093837015e-31;

bool close(double a, double b) {
    if (a == b) return true;
    return std::abs(a - b) <= kRelTol * std::max(std::abs(a), std::abs(b));
}

DimVector dims_of(const Registry& reg, const char* name) { return reg.find(name)->dims; }

RatMatrix rows_matrix(const DimVector& a, const DimVector& b, const DimVector& c) {
    RatMatrix m(3, 3);
    const DimVector* rows[3] = {&a, &b, &c};
    for (std::size_t i = 0; i < 3; ++i) {
        m(i, 0) = rows[i]->t;
        m(i, 1) = rows[i]->l;
        m(i, 2) = rows[i]->m;
    }
    return m;
}

// --- criterion 1 -----------------------------------------------------------

bool determinant_table() {
    auto start = std::chrono::steady_clock::now();
    Registry reg = default_registry();
    DimVector m = dims_of(reg, "m"), q = dims_of(reg, "q"), hbar = dims_of(reg, "hbar"),
              grav = dims_of(reg, "G");
    bool ok = det3(rows_matrix(m, q, hbar)) == Rational(-1, 2)    //
              && det3(rows_matrix(m, hbar, grav)) == Rational(1)  //
              && det3(rows_matrix(q, hbar, grav)) == Rational(1)  //
              && det3(rows_matrix(m, q, grav)) == Rational(0);
    auto scale = [](const DimVector& d) { return SignedScale(d, 1.0); };
    ok = ok && is_scale_basis(scale(m), scale(q), scale(hbar))      //
         && is_scale_basis(scale(m), scale(hbar), scale(grav))     //
         && is_scale_basis(scale(q), scale(hbar), scale(grav))     //
         && !is_scale_basis(scale(m), scale(q), scale(grav));
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    return ok && elapsed < kDetTableBudgetSeconds;
}

// --- criterion 2 -----------------------------------------------------------

bool charge_mass_matches_gravity() {
    Registry reg = default_registry();
    SignedScale q(dims_of(reg, "q"), 1.0);
    SignedScale m(dims_of(reg, "m"), 1.0);
    SignedScale grav(dims_of(reg, "G"), 1.0);
    DimVector combined = sdi(scale_div(scale_pow(q, Rational(2)), scale_pow(m, Rational(2))));
    return combined == sdi(grav);
}

// --- criterion 3 -----------------------------------------------------------

bool express_speed_in_mass_action_gravity() {
    Registry reg = default_registry();
    SignedScale c(dims_of(reg, "c"), kSpeedOfLight);
    SignedScale m(dims_of(reg, "m"), kElectronMass);
    SignedScale hbar(dims_of(reg, "hbar"), kReducedPlanck);
    SignedScale grav(dims_of(reg, "G"), kGravity);

    ScaleBasis basis(m, hbar, grav);
    BasisExpression b = express_in_basis(c, basis);
    if (b.exponents != std::array<Rational, 3>{Rational(2), Rational(-1), Rational(1)}) {
        return false;
    }

    DimVector reassembled = m.dims().scaled(b.exponents[0]) +
                            hbar.dims().scaled(b.exponents[1]) +
                            grav.dims().scaled(b.exponents[2]);
    if (reassembled != c.dims()) return false;

    double round_trip = b.coeff * pow_rational(std::abs(m.coeff()), b.exponents[0]) *
                        pow_rational(std::abs(hbar.coeff()), b.exponents[1]) *
                        pow_rational(std::abs(grav.coeff()), b.exponents[2]);
    return close(round_trip, c.coeff());
}

// --- criterion 4 -----------------------------------------------------------

bool single_dimensionless_group() {
    Registry reg = default_registry();
    std::vector<SignedScale> ks{SignedScale(dims_of(reg, "c"), 1.0),
                                SignedScale(dims_of(reg, "hbar"), 1.0),
                                SignedScale(dims_of(reg, "G"), 1.0),
                                SignedScale(dims_of(reg, "m"), 1.0)};
    auto groups = pi_groups(ks);
    if (groups.size() != 1) return false;
    if (groups[0] != std::vector<Rational>{1, 1, -1, -2}) return false;
    DimVector total;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        total = total + ks[i].dims().scaled(groups[0][i]);
    }
    return total.is_zero();
}

// --- criterion 5 -----------------------------------------------------------

SemiVector random_semivec(gen::Rng& rng, const SemiSpace& s) {
    std::map<std::size_t, Rational> coords;
    for (std::size_t i = 0; i < s.sdim; ++i) coords[i] = rng.positive_rational();
    return SemiVector(s, std::move(coords));
}

RatMatrix random_positive_matrix(gen::Rng& rng, std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.positive_rational();
    }
    return m;
}

bool semivector_laws() {
    gen::Rng rng(51000);
    std::size_t cases = 0;

    // Additive cancellation: u + w and v + w agree exactly when u equals v.
    for (int iter = 0; iter < 200; ++iter, ++cases) {
        SemiSpace s = orthant_space(std::size_t(rng.uniform(1, 4)), "S");
        SemiVector u = random_semivec(rng, s);
        SemiVector v = rng.chance(0.3) ? u : random_semivec(rng, s);
        SemiVector w = random_semivec(rng, s);
        if ((add(u, w) == add(v, w)) != (u == v)) return false;
    }

    // Maps respect nonnegative combinations exactly.
    for (int iter = 0; iter < 200; ++iter, ++cases) {
        SemiSpace src = orthant_space(std::size_t(rng.uniform(1, 4)), "U");
        SemiSpace dst = orthant_space(std::size_t(rng.uniform(1, 4)), "W");
        SemiLinearMap f(src, dst, random_positive_matrix(rng, dst.sdim, src.sdim));
        SemiVector u = random_semivec(rng, src);
        SemiVector v = random_semivec(rng, src);
        Rational a = rng.positive_rational();
        Rational b = rng.positive_rational();
        SemiVector lhs = apply(f, add(smul(a, u), smul(b, v)));
        SemiVector rhs = add(smul(a, apply(f, u)), smul(b, apply(f, v)));
        if (lhs != rhs) return false;
    }

    // The production semi-basis test agrees with an inversion-based oracle.
    for (int iter = 0; iter < 100; ++iter, ++cases) {
        std::size_t n = std::size_t(rng.uniform(1, 4));
        SemiSpace s = orthant_space(n, "B");
        std::vector<SemiVector> cands;
        if (rng.chance(0.5)) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), std::size_t(0));
            std::shuffle(perm.begin(), perm.end(), rng.engine());
            for (std::size_t i = 0; i < n; ++i) {
                cands.push_back(SemiVector::basis_element(s, perm[i], rng.positive_rational()));
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) cands.push_back(random_semivec(rng, s));
        }
        if (is_semi_basis(s, cands) != oracle::semi_basis_by_inversion(s, cands)) return false;
    }

    // Convex combinations stay inside and match direct arithmetic.
    for (int iter = 0; iter < 100; ++iter, ++cases) {
        SemiSpace s = orthant_space(std::size_t(rng.uniform(1, 4)), "C");
        SemiVector u = random_semivec(rng, s);
        SemiVector v = random_semivec(rng, s);
        Rational a(rng.uniform(1, 19), 20);
        SemiVector combo = add(smul(a, u), smul(Rational(1) - a, v));
        for (std::size_t i = 0; i < s.sdim; ++i) {
            if (combo.coord(i) != a * u.coord(i) + (Rational(1) - a) * v.coord(i)) return false;
        }
    }

    return cases >= 500;
}

// --- criterion 6 -----------------------------------------------------------

bool product_dimension_formulas() {
    gen::Rng rng(61000);
    for (int iter = 0; iter < 50; ++iter) {
        std::size_t m = std::size_t(rng.uniform(1, 4));
        std::size_t n = std::size_t(rng.uniform(1, 4));
        std::size_t k = std::size_t(rng.uniform(1, 4));
        VecSpace v{m, "V"};
        VecSpace w{k, "W"};
        SemiSpace u = orthant_space(n, "U");

        if (SesquiSpace(v, u).dim() != m * n) return false;

        SesquiSpace svv(v, w);
        if (svv.dim() != 2 * m * k) return false;

        // The one-dimensional left factor keeps the right factor's size.
        if (SesquiSpace(VecSpace{1, "R"}, u).dim() != n) return false;

        RatMatrix p = sesqui_projection_matrix(svv);
        if (rank(p) != m * k) return false;
        if (nullspace(p).size() != m * k) return false;
    }
    return true;
}

// --- criterion 7 -----------------------------------------------------------

bool extension_agrees_with_original() {
    gen::Rng rng(71000);
    for (int iter = 0; iter < 100; ++iter) {
        SemiSpace src = orthant_space(std::size_t(rng.uniform(1, 4)), "U");
        SemiSpace dst = orthant_space(std::size_t(rng.uniform(1, 4)), "W");
        SemiLinearMap f(src, dst, random_positive_matrix(rng, dst.sdim, src.sdim));
        ExtensionSpace eu = extend_space(src);
        ExtensionSpace ew = extend_space(dst);
        LinMap ext = extend_map(f);

        SemiVector u = random_semivec(rng, src);
        if (embed(ew, apply(f, u)) != apply(ext, embed(eu, u))) return false;

        // Any point of the extension splits into a difference of two
        // semi-vectors that reassembles it coordinate by coordinate.
        std::vector<Rational> coords;
        for (std::size_t i = 0; i < eu.vec.dim; ++i) coords.push_back(rng.rational());
        Vector x(eu.vec, coords);
        auto [pos, neg] = decompose_extension(eu, x);
        for (std::size_t i = 0; i < eu.vec.dim; ++i) {
            Rational p = pos ? pos->coord(i) : Rational(0);
            Rational nn = neg ? neg->coord(i) : Rational(0);
            if (p - nn != x.at(i)) return false;
        }
    }
    return true;
}

// --- criterion 8 -----------------------------------------------------------

double random_coeff(gen::Rng& rng) {
    return std::uniform_real_distribution<double>(0.1, 10.0)(rng.engine());
}

bool power_laws() {
    gen::Rng rng(81000);
    for (int iter = 0; iter < 200; ++iter) {
        PowerSpace base = PowerSpace::atomic("U").pow(rng.nonzero_rational(6, 6));
        double x = random_coeff(rng);
        PowerElement u(base, x);
        Rational p = rng.rational(6, 6);
        Rational q = rng.rational(6, 6);

        // Iterated powers compose multiplicatively.
        PowerElement twice = power(power(u, p), q);
        PowerElement once = power(u, p * q);
        if (twice.space() != once.space()) return false;
        if (!close(twice.coeff(), once.coeff())) return false;

        // Combining u^p with u^q adds exponents and multiplies coefficients.
        PowerElement combined = combine_powers(power(u, p), power(u, q));
        if (combined.space() != base.pow(p + q)) return false;
        if (!close(combined.coeff(), pow_rational(x, p + q))) return false;

        // Stepwise and direct powers are the same operation.
        PowerElement stepped = iterate_power(u, q);
        PowerElement direct = power(u, q);
        if (stepped.space() != direct.space() || stepped.coeff() != direct.coeff()) {
            return false;
        }

        // Scaling before or after taking the power agrees: (r u)^q = r^q u^q.
        double r = random_coeff(rng);
        PowerElement scaled(base, r * x);
        if (!close(power(scaled, q).coeff(), pow_rational(r, q) * power(u, q).coeff())) {
            return false;
        }
    }
    return true;
}

// --- criterion 9 -----------------------------------------------------------

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool language_contract() {
    namespace fs = std::filesystem;
    using namespace unitc::lang;

    fs::path data = UNITC_DATA_DIR;
    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(data / "corpus")) {
        if (entry.path().extension() != ".units") continue;
        ++files;
        auto program = parse_program(tokenize(slurp(entry.path())));
        for (const Statement& s : program) {
            std::string text = pretty(s);
            auto again = parse_program(tokenize(text));
            if (again.size() != 1 || !equal(s, again[0]) || pretty(again[0]) != text) {
                return false;
            }
        }
    }
    if (files < 20) return false;

    std::string bin = UNITC_BIN;
    auto golden = spawn::run(bin, "check " + (data / "sample.units").string() + " --json");
    if (golden.exit_code != 0) return false;
    if (golden.out != slurp(data / "sample.golden.json")) return false;

    if (spawn::run(bin, "check " + (data / "failing_check.units").string()).exit_code != 1) {
        return false;
    }
    if (spawn::run(bin, "check " + (data / "bad_parse.units").string()).exit_code != 2) {
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

int failures = 0;

void report(int n, const char* what, bool (*fn)()) {
    bool ok = false;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        std::cerr << "criterion " << n << " threw: " << e.what() << "\n";
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << what << "\n";
    if (!ok) ++failures;
}

}  // namespace

int main() {
    report(1, "scale-basis determinant table matches its pinned values", determinant_table);
    report(2, "squared charge over squared mass shares gravity's dimension triple",
           charge_mass_matches_gravity);
    report(3, "speed in the (mass, action, gravity) basis is (2, -1, 1) with a round-trip "
              "coefficient",
           express_speed_in_mass_action_gravity);
    report(4, "the four-scale system has exactly one dimensionless group, (1, 1, -1, -2)",
           single_dimensionless_group);
    report(5, "semi-vector laws hold exactly on 600 random cases", semivector_laws);
    report(6, "product-space dimension formulas hold on random shapes",
           product_dimension_formulas);
    report(7, "extended maps agree with the originals on embedded points",
           extension_agrees_with_original);
    report(8, "rational power laws hold to 1e-12 on 200 random exponent pairs", power_laws);
    report(9, "the language round-trips its corpus and the CLI honors its exit contract",
           language_contract);
    return failures == 0 ? 0 : 1;
}
