#pragma once

#include <string>

#include "unitc/numeric.hpp"
#include "unitc/rational.hpp"

namespace unitc {

// A rational power U^q of an atomic one-dimensional positive space U. Bases
// are interned by label, so identity is (base, exponent) with exact exponent
// comparison. Exponent 0 is the scalar space regardless of base.
class PowerSpace {
public:
    static PowerSpace atomic(const std::string& label);  // U^1
    static PowerSpace scalar();

    PowerSpace pow(const Rational& q) const;  // exponent multiplies
    PowerSpace dual() const;                  // exponent negates

    // Same base, replaced exponent.
    PowerSpace with_exponent(const Rational& e) const;

    bool is_scalar() const { return exponent_.is_zero(); }
    const Rational& exponent() const { return exponent_; }

    // Label of the interned base; empty for the scalar space.
    std::string base_label() const;

    std::string str() const;

    friend bool operator==(const PowerSpace& a, const PowerSpace& b) {
        if (a.exponent_.is_zero() && b.exponent_.is_zero()) return true;
        return a.base_ == b.base_ && a.exponent_ == b.exponent_;
    }
    friend bool operator!=(const PowerSpace& a, const PowerSpace& b) { return !(a == b); }

private:
    PowerSpace(int base, Rational exponent) : base_(base), exponent_(std::move(exponent)) {}

    int base_ = -1;  // intern id; -1 when created as the scalar space
    Rational exponent_;
};

// An element of a power space: a positive multiple of the canonical unit.
class PowerElement {
public:
    PowerElement(PowerSpace space, double coeff);

    const PowerSpace& space() const { return space_; }
    double coeff() const { return coeff_; }

private:
    PowerSpace space_;
    double coeff_;
};

// Reciprocal element in the dual power: exponent negates, coefficient
// inverts.
PowerElement inverse(const PowerElement& x);

// x^q: exponent multiplies by q, coefficient is raised to q. q = 0 lands in
// the scalar space with coefficient 1.
PowerElement power(const PowerElement& x, const Rational& q);

// Same arithmetic as power, named for the iterated-product reading.
PowerElement iterate_power(const PowerElement& x, const Rational& q);

// Product of elements over the same base (or scalars): exponents add,
// coefficients multiply. Throws BaseMismatch for unrelated bases.
PowerElement combine_powers(const PowerElement& x, const PowerElement& y);

// A map f with f(r u) = r^degree f(u). Determined by its degree and a single
// input/output pair, which is stored verbatim so that evaluating at the
// anchor returns the anchored value bit-exactly.
class RationalMap {
public:
    RationalMap(Rational degree, PowerSpace source, PowerSpace target, double image_coeff);

    // The unique degree-q map sending u to v.
    static RationalMap through(const Rational& degree, const PowerElement& u,
                               const PowerElement& v);

    static RationalMap identity(const PowerSpace& s);

    const Rational& degree() const { return degree_; }
    const PowerSpace& source() const { return source_; }
    const PowerSpace& target() const { return target_; }

    // Value coefficient at the canonical unit of the source.
    double image_coeff() const;

    friend PowerElement apply_rational(const RationalMap& f, const PowerElement& x);
    friend RationalMap compose_rational(const RationalMap& g, const RationalMap& f);
    friend RationalMap invert_rational(const RationalMap& f);

private:
    RationalMap(Rational degree, PowerSpace source, PowerSpace target, double anchor_src,
                double anchor_tgt);

    Rational degree_;
    PowerSpace source_;
    PowerSpace target_;
    double anchor_src_;
    double anchor_tgt_;
};

PowerElement apply_rational(const RationalMap& f, const PowerElement& x);

// Composite has the product degree.
RationalMap compose_rational(const RationalMap& g, const RationalMap& f);

// Inverse of a degree-q map, itself (1/q)-rational; q must be nonzero.
RationalMap invert_rational(const RationalMap& f);

}  // namespace unitc
