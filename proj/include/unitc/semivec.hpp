#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "unitc/matrix.hpp"
#include "unitc/rational.hpp"

namespace unitc {

// A semi-free space of semi-dimension sdim over the positive rationals, held
// in coordinates of its canonical semi-basis b_0..b_{sdim-1}. `complete`
// marks spaces that contain a zero element.
struct SemiSpace {
    std::size_t sdim = 0;
    bool complete = false;
    std::string label;

    friend bool operator==(const SemiSpace&, const SemiSpace&) = default;
};

SemiSpace positive_space(std::string label);
SemiSpace orthant_space(std::size_t sdim, std::string label, bool complete = false);

// Adjoins a zero element. Throws AlreadyComplete if one is already there.
SemiSpace complete(const SemiSpace& s);

// Dual space: same semi-dimension and completeness, label toggles a "*".
SemiSpace dual_space(const SemiSpace& s);

// Element of a semi-free space: a finite combination of semi-basis elements
// with positive rational coefficients, stored sparsely. Empty support is the
// zero element and only exists in complete spaces.
class SemiVector {
public:
    SemiVector(SemiSpace space, std::map<std::size_t, Rational> coords);

    static SemiVector zero(const SemiSpace& space);
    static SemiVector basis_element(const SemiSpace& space, std::size_t i,
                                    const Rational& coeff = Rational(1));

    const SemiSpace& space() const { return space_; }
    const std::map<std::size_t, Rational>& coords() const { return coords_; }

    bool is_zero() const { return coords_.empty(); }

    // Coefficient of b_i, zero when i is outside the support.
    Rational coord(std::size_t i) const;

    std::vector<Rational> dense() const;
    std::string str() const;

    friend bool operator==(const SemiVector&, const SemiVector&) = default;

private:
    SemiSpace space_;
    std::map<std::size_t, Rational> coords_;
};

SemiVector add(const SemiVector& a, const SemiVector& b);

// r u for r > 0; throws NonPositiveScalar otherwise.
SemiVector smul(const Rational& r, const SemiVector& u);

// True iff the candidates are exactly sdim vectors whose coordinate matrix is
// monomial: one positive entry in every row and every column. That is the
// whole characterization; no change-of-coordinates search is needed.
bool is_semi_basis(const SemiSpace& space, const std::vector<SemiVector>& candidates);

// Canonical dual semi-basis; pairs with the primal basis by Kronecker delta.
std::vector<SemiVector> dual_basis(const SemiSpace& space);

// Evaluation of a dual element on a primal one, as an exact rational.
Rational pair(const SemiVector& alpha, const SemiVector& u);

// Map between semi-free spaces, stored as the matrix of semi-basis images
// (target.sdim x source.sdim). Entries are nonnegative; when the target has
// no zero element every column must have a positive entry.
class SemiLinearMap {
public:
    SemiLinearMap(SemiSpace source, SemiSpace target, RatMatrix m);

    static SemiLinearMap identity(const SemiSpace& space);
    static SemiLinearMap from_basis_images(const SemiSpace& source, const SemiSpace& target,
                                           const std::vector<SemiVector>& images);

    const SemiSpace& source() const { return source_; }
    const SemiSpace& target() const { return target_; }
    const RatMatrix& matrix() const { return matrix_; }

    friend bool operator==(const SemiLinearMap&, const SemiLinearMap&) = default;

    friend SemiLinearMap transpose(const SemiLinearMap& f);

private:
    struct unchecked_t {};
    SemiLinearMap(unchecked_t, SemiSpace source, SemiSpace target, RatMatrix m);

    SemiSpace source_;
    SemiSpace target_;
    RatMatrix matrix_;
};

SemiVector apply(const SemiLinearMap& f, const SemiVector& u);
SemiLinearMap compose(const SemiLinearMap& g, const SemiLinearMap& f);
SemiLinearMap add(const SemiLinearMap& f, const SemiLinearMap& g);

// Transpose between the duals: if f : U -> V then transpose(f) : V* -> U*,
// with the transposed matrix. May legitimately have zero columns (when f has
// zero rows), so it bypasses the column check; applying it where the image
// would be empty in a zero-free space throws.
SemiLinearMap transpose(const SemiLinearMap& f);

}  // namespace unitc
