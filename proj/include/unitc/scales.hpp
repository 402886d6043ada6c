#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "unitc/matrix.hpp"
#include "unitc/numeric.hpp"
#include "unitc/rational.hpp"

namespace unitc {

// Exponent triple over the three base spaces (time, length, mass).
struct DimVector {
    Rational t, l, m;

    friend bool operator==(const DimVector&, const DimVector&) = default;

    bool is_zero() const { return t.is_zero() && l.is_zero() && m.is_zero(); }

    friend DimVector operator+(const DimVector& a, const DimVector& b) {
        return DimVector{a.t + b.t, a.l + b.l, a.m + b.m};
    }
    friend DimVector operator-(const DimVector& a, const DimVector& b) {
        return DimVector{a.t - b.t, a.l - b.l, a.m - b.m};
    }
    DimVector scaled(const Rational& q) const { return DimVector{t * q, l * q, m * q}; }

    // "T^-1 L", "L^3/2 M^1/2", "1" for the dimensionless triple. Factors
    // with exponent zero are omitted, as is an exponent of one.
    std::string str() const;
};

// A scale: an exponent triple with a positive coefficient.
class Scale {
public:
    Scale(DimVector dims, double coeff);

    const DimVector& dims() const { return dims_; }
    double coeff() const { return coeff_; }

private:
    DimVector dims_;
    double coeff_;
};

// Scale tensored with the reals: the coefficient may be any real number,
// including zero.
class SignedScale {
public:
    SignedScale(DimVector dims, double coeff) : dims_(std::move(dims)), coeff_(coeff) {}
    SignedScale(const Scale& s) : dims_(s.dims()), coeff_(s.coeff()) {}  // NOLINT: implicit

    const DimVector& dims() const { return dims_; }
    double coeff() const { return coeff_; }

private:
    DimVector dims_;
    double coeff_;
};

DimVector sdi(const Scale& k);
DimVector sdi(const SignedScale& k);

Scale scale_mul(const Scale& a, const Scale& b);
Scale scale_div(const Scale& a, const Scale& b);
Scale scale_pow(const Scale& a, const Rational& q);

SignedScale scale_mul(const SignedScale& a, const SignedScale& b);
SignedScale scale_div(const SignedScale& a, const SignedScale& b);

// Signed power rules: a negative coefficient needs an integer exponent
// (FractionalPowerOfNegative), a zero coefficient needs a positive one
// (ZeroToNonpositivePower).
SignedScale scale_pow(const SignedScale& a, const Rational& q);

// Quotient of two scales of exactly equal dimension triples; anything else
// is DimensionMismatch.
double ratio(const Scale& a, const Scale& b);
double ratio(const SignedScale& a, const SignedScale& b);

// Three scales form a basis iff the 3x3 matrix of their exponent triples has
// nonzero determinant. Coefficients and signs play no part.
bool is_scale_basis(const SignedScale& a, const SignedScale& b, const SignedScale& c);

// A validated basis; construction throws SingularBasis when the exponent
// triples are dependent and rejects zero coefficients.
class ScaleBasis {
public:
    ScaleBasis(SignedScale e1, SignedScale e2, SignedScale e3);

    const SignedScale& e(std::size_t j) const { return entries_.at(j); }

    // Columns are the exponent triples.
    RatMatrix dims_matrix() const;

private:
    std::array<SignedScale, 3> entries_;
};

struct BasisExpression {
    std::array<Rational, 3> exponents;
    double coeff = 1.0;
};

// Writes k as coeff * e1^c1 * e2^c2 * e3^c3. Exponents are exact; the
// coefficient is k.coeff divided by the product of |e_j.coeff|^c_j.
BasisExpression express_in_basis(const SignedScale& k, const ScaleBasis& basis);

// Exponent vectors spanning the dimensionless combinations of the given
// scales, one per independent group, in canonical smallest-integer form
// (first nonzero entry positive, no common factor, no denominators).
std::vector<std::vector<Rational>> pi_groups(const std::vector<SignedScale>& ks);

struct RegistryEntry {
    DimVector dims;
    double coeff = 1.0;
    bool is_signed = false;
};

// Named scales over a three-base system. Base names double as scale names
// with unit exponent triples. Names are unique across bases and scales.
class Registry {
public:
    // At most three bases; the j-th base gets the j-th unit triple.
    void add_base(const std::string& name);

    // Requires all three bases first; rejects duplicate names.
    void define(const std::string& name, RegistryEntry entry);

    bool has(const std::string& name) const;

    // Null when absent.
    const RegistryEntry* find(const std::string& name) const;

    const std::vector<std::string>& base_names() const { return bases_; }
    std::size_t base_count() const { return bases_.size(); }
    bool bases_complete() const { return bases_.size() == 3; }

private:
    std::vector<std::string> bases_;
    std::map<std::string, RegistryEntry> entries_;
};

// Time/length/mass bases plus the six canonical scales (speed c, action
// hbar, gravity G, charge-like e, mass m, signed charge q), all with
// coefficient 1: the numeric values of working unit systems are
// configuration, loaded from definition files, never baked in here.
Registry default_registry();

}  // namespace unitc
