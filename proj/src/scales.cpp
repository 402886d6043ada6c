#include "unitc/scales.hpp"

#include <cmath>
#include <utility>

#include "unitc/errors.hpp"

namespace unitc {

std::string DimVector::str() const {
    static const char* names[3] = {"T", "L", "M"};
    const Rational* exps[3] = {&t, &l, &m};
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (exps[i]->is_zero()) continue;
        if (!out.empty()) out += ' ';
        out += names[i];
        if (*exps[i] != Rational(1)) {
            out += '^';
            out += exps[i]->str();
        }
    }
    return out.empty() ? "1" : out;
}

Scale::Scale(DimVector dims, double coeff) : dims_(std::move(dims)), coeff_(coeff) {
    if (!(coeff > 0)) {
        throw InvariantViolation("scale coefficient must be positive");
    }
}

DimVector sdi(const Scale& k) { return k.dims(); }
DimVector sdi(const SignedScale& k) { return k.dims(); }

Scale scale_mul(const Scale& a, const Scale& b) {
    return Scale(a.dims() + b.dims(), a.coeff() * b.coeff());
}

Scale scale_div(const Scale& a, const Scale& b) {
    return Scale(a.dims() - b.dims(), a.coeff() / b.coeff());
}

Scale scale_pow(const Scale& a, const Rational& q) {
    return Scale(a.dims().scaled(q), pow_rational(a.coeff(), q));
}

SignedScale scale_mul(const SignedScale& a, const SignedScale& b) {
    return SignedScale(a.dims() + b.dims(), a.coeff() * b.coeff());
}

SignedScale scale_div(const SignedScale& a, const SignedScale& b) {
    if (b.coeff() == 0) throw DivisionByZero("division by a zero scale");
    return SignedScale(a.dims() - b.dims(), a.coeff() / b.coeff());
}

SignedScale scale_pow(const SignedScale& a, const Rational& q) {
    DimVector dims = a.dims().scaled(q);
    if (a.coeff() > 0) {
        return SignedScale(std::move(dims), pow_rational(a.coeff(), q));
    }
    if (a.coeff() == 0) {
        if (!q.is_positive()) throw ZeroToNonpositivePower();
        return SignedScale(std::move(dims), 0.0);
    }
    if (!q.is_integer()) throw FractionalPowerOfNegative();
    double mag = pow_rational(-a.coeff(), q);
    bool odd = (q.num() % 2) != 0;
    return SignedScale(std::move(dims), odd ? -mag : mag);
}

double ratio(const Scale& a, const Scale& b) {
    return ratio(SignedScale(a), SignedScale(b));
}

double ratio(const SignedScale& a, const SignedScale& b) {
    if (a.dims() != b.dims()) {
        throw DimensionMismatch("cannot compare " + a.dims().str() + " with " + b.dims().str());
    }
    if (b.coeff() == 0) throw DivisionByZero("ratio against a zero scale");
    return a.coeff() / b.coeff();
}

namespace {

RatMatrix columns_matrix(const SignedScale& a, const SignedScale& b, const SignedScale& c) {
    RatMatrix m(3, 3);
    const SignedScale* ks[3] = {&a, &b, &c};
    for (std::size_t j = 0; j < 3; ++j) {
        m(0, j) = ks[j]->dims().t;
        m(1, j) = ks[j]->dims().l;
        m(2, j) = ks[j]->dims().m;
    }
    return m;
}

}  // namespace

bool is_scale_basis(const SignedScale& a, const SignedScale& b, const SignedScale& c) {
    return !det3(columns_matrix(a, b, c)).is_zero();
}

ScaleBasis::ScaleBasis(SignedScale e1, SignedScale e2, SignedScale e3)
    : entries_{std::move(e1), std::move(e2), std::move(e3)} {
    for (const SignedScale& e : entries_) {
        if (e.coeff() == 0) {
            throw InvariantViolation("basis scale has zero coefficient");
        }
    }
    if (!is_scale_basis(entries_[0], entries_[1], entries_[2])) {
        throw SingularBasis();
    }
}

RatMatrix ScaleBasis::dims_matrix() const {
    return columns_matrix(entries_[0], entries_[1], entries_[2]);
}

BasisExpression express_in_basis(const SignedScale& k, const ScaleBasis& basis) {
    std::vector<Rational> rhs{k.dims().t, k.dims().l, k.dims().m};
    std::vector<Rational> c = solve_linear(basis.dims_matrix(), rhs);

    double denom = 1.0;
    for (std::size_t j = 0; j < 3; ++j) {
        denom *= pow_rational(std::abs(basis.e(j).coeff()), c[j]);
    }
    return BasisExpression{{c[0], c[1], c[2]}, k.coeff() / denom};
}

std::vector<std::vector<Rational>> pi_groups(const std::vector<SignedScale>& ks) {
    RatMatrix a(3, ks.size());
    for (std::size_t j = 0; j < ks.size(); ++j) {
        a(0, j) = ks[j].dims().t;
        a(1, j) = ks[j].dims().l;
        a(2, j) = ks[j].dims().m;
    }
    auto basis = nullspace(a);
    // Clear denominators; with the leading entry already 1, multiplying by
    // the lcm of denominators gives the smallest integer form.
    for (auto& v : basis) {
        mpz_class mult(1);
        for (const Rational& e : v) mult = lcm(mult, e.den());
        if (mult != 1) {
            Rational factor(mult, mpz_class(1));
            for (Rational& e : v) e *= factor;
        }
    }
    return basis;
}

void Registry::add_base(const std::string& name) {
    if (has(name)) {
        throw InvariantViolation("name \"" + name + "\" is already defined");
    }
    if (bases_.size() >= 3) {
        throw InvariantViolation("a fourth base space is not allowed");
    }
    DimVector dims;
    switch (bases_.size()) {
        case 0: dims.t = 1; break;
        case 1: dims.l = 1; break;
        default: dims.m = 1; break;
    }
    entries_.emplace(name, RegistryEntry{dims, 1.0, false});
    bases_.push_back(name);
}

void Registry::define(const std::string& name, RegistryEntry entry) {
    if (!bases_complete()) {
        throw InvariantViolation("scales need all three base spaces declared first");
    }
    if (has(name)) {
        throw InvariantViolation("name \"" + name + "\" is already defined");
    }
    entries_.emplace(name, std::move(entry));
}

bool Registry::has(const std::string& name) const {
    return entries_.count(name) != 0;
}

const RegistryEntry* Registry::find(const std::string& name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
}

Registry default_registry() {
    Registry r;
    r.add_base("T");
    r.add_base("L");
    r.add_base("M");
    r.define("c", {DimVector{Rational(-1), Rational(1), Rational(0)}, 1.0, false});
    r.define("hbar", {DimVector{Rational(-1), Rational(2), Rational(1)}, 1.0, false});
    r.define("G", {DimVector{Rational(-2), Rational(3), Rational(-1)}, 1.0, false});
    r.define("e", {DimVector{Rational(0), Rational(3, 2), Rational(1, 2)}, 1.0, false});
    r.define("m", {DimVector{Rational(0), Rational(0), Rational(1)}, 1.0, false});
    r.define("q", {DimVector{Rational(-1), Rational(3, 2), Rational(1, 2)}, 1.0, true});
    return r;
}

}  // namespace unitc
