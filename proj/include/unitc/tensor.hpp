#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "unitc/matrix.hpp"
#include "unitc/rational.hpp"
#include "unitc/semivec.hpp"

namespace unitc {

struct VecSpace {
    std::size_t dim = 0;
    std::string label;

    friend bool operator==(const VecSpace&, const VecSpace&) = default;
};

// Dense vector with exact rational coordinates.
class Vector {
public:
    Vector(VecSpace space, std::vector<Rational> coords);

    static Vector zero(const VecSpace& space);
    static Vector basis_element(const VecSpace& space, std::size_t i,
                                const Rational& coeff = Rational(1));

    const VecSpace& space() const { return space_; }
    const std::vector<Rational>& coords() const { return coords_; }
    const Rational& at(std::size_t i) const { return coords_.at(i); }
    bool is_zero() const;

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    VecSpace space_;
    std::vector<Rational> coords_;
};

Vector add(const Vector& a, const Vector& b);
Vector smul(const Rational& r, const Vector& v);  // any sign
Vector negate(const Vector& v);

VecSpace tensor_space(const VecSpace& a, const VecSpace& b);
Vector tensor(const Vector& v, const Vector& u);

// The one-sided product of a vector space V (dim m) with a right factor that
// is either semi-free (sdim n, giving dim m*n) or a vector space (dim k,
// giving dim 2*m*k: a positive and a negative copy of each basis pair).
// Elements live in a plain underlying vector space.
class SesquiSpace {
public:
    SesquiSpace(VecSpace left, SemiSpace right);
    SesquiSpace(VecSpace left, VecSpace right);

    const VecSpace& left() const { return left_; }
    bool right_is_vector() const { return std::holds_alternative<VecSpace>(right_); }
    const SemiSpace& right_semi() const { return std::get<SemiSpace>(right_); }
    const VecSpace& right_vec() const { return std::get<VecSpace>(right_); }

    std::size_t dim() const { return vec_.dim; }
    const VecSpace& vec() const { return vec_; }

    // Slot of b_i (x) c_j, and of b_i (x) (-c_j) for a vector right factor.
    std::size_t pos_index(std::size_t i, std::size_t j) const;
    std::size_t neg_index(std::size_t i, std::size_t j) const;

    friend bool operator==(const SesquiSpace&, const SesquiSpace&) = default;

private:
    VecSpace left_;
    std::variant<SemiSpace, VecSpace> right_;
    VecSpace vec_;
};

// v (x) u with a semi-free right factor: coordinates v_i * u_j.
Vector sesqui(const SesquiSpace& s, const Vector& v, const SemiVector& u);

// v (x) u with a vector right factor: u splits into positive and negative
// parts with disjoint support, filling the two blocks. Linear in v, only
// semi-linear in u (negating u swaps blocks instead of negating).
Vector sesqui_vv(const SesquiSpace& s, const Vector& v, const Vector& u);

// The left-handed product u (x) v is the right-handed one with slots
// reindexed; same underlying coordinates, transposed index order.
Vector sesqui_left(const SesquiSpace& s, const SemiVector& u, const Vector& v);

// Projection onto the plain tensor product for a vector right factor:
// b_i (x) c_j goes to +e_ij, b_i (x) (-c_j) to -e_ij. Rank m*k with a kernel
// of the same dimension.
RatMatrix sesqui_projection_matrix(const SesquiSpace& s);
Vector sesqui_project(const SesquiSpace& s, const Vector& t);

// Linear map between plain vector spaces.
class LinMap {
public:
    LinMap(VecSpace source, VecSpace target, RatMatrix m);

    const VecSpace& source() const { return source_; }
    const VecSpace& target() const { return target_; }
    const RatMatrix& matrix() const { return matrix_; }

    friend bool operator==(const LinMap&, const LinMap&) = default;

private:
    VecSpace source_;
    VecSpace target_;
    RatMatrix matrix_;
};

Vector apply(const LinMap& f, const Vector& v);

// Semi-linear map from a semi-free space into a vector space, stored as the
// matrix of semi-basis images. Entries may have any sign.
class SemiToVecMap {
public:
    SemiToVecMap(SemiSpace source, VecSpace target, RatMatrix m);

    static SemiToVecMap from_basis_images(const SemiSpace& source, const VecSpace& target,
                                          const std::vector<Vector>& images);

    const SemiSpace& source() const { return source_; }
    const VecSpace& target() const { return target_; }
    const RatMatrix& matrix() const { return matrix_; }

    friend bool operator==(const SemiToVecMap&, const SemiToVecMap&) = default;

private:
    SemiSpace source_;
    VecSpace target_;
    RatMatrix matrix_;
};

Vector apply(const SemiToVecMap& f, const SemiVector& u);

// The universal vector space a semi-free space embeds into; its dimension is
// the semi-dimension of the base.
struct ExtensionSpace {
    SemiSpace base;
    VecSpace vec;

    friend bool operator==(const ExtensionSpace&, const ExtensionSpace&) = default;
};

ExtensionSpace extend_space(const SemiSpace& base);

// Coordinate-preserving injection of the base into its extension.
Vector embed(const ExtensionSpace& e, const SemiVector& u);

// Splits t into positive and negative parts of the base, t = plus - minus
// under embed, with disjoint supports. A part with empty support is absent.
std::pair<std::optional<SemiVector>, std::optional<SemiVector>>
decompose_extension(const ExtensionSpace& e, const Vector& t);

// Unique linear factorization through the extension: the returned map reuses
// the matrix of f and satisfies extend_map(f)(embed(u)) = f(u).
LinMap extend_map(const SemiToVecMap& f);

// Functorial extension of a map between semi-free spaces; commutes with the
// embeddings of source and target.
LinMap extend_map(const SemiLinearMap& f);

// Semi-tensor product: semi-dimension multiplies, zero of either factor
// absorbs (so completeness is inherited from either side).
SemiSpace semi_tensor_space(const SemiSpace& a, const SemiSpace& b);
SemiVector semi_tensor(const SemiVector& u, const SemiVector& v);

// n-fold product; n = 0 is the scalar space.
SemiSpace semi_tensor_power_space(const SemiSpace& u, std::size_t n);

// The positive scalars as a semi-free space of semi-dimension 1.
SemiSpace scalar_space();
SemiVector scalar_value(const Rational& r);

// Identification of scalar (x) U with U.
SemiVector collapse_scalar(const SemiVector& t, const SemiSpace& u_space);

// The map U -> V packed into an element of U* (x) V: a pure tensor
// alpha (x) v acts as u |-> alpha(u) v.
SemiLinearMap slin_as_semitensor(const SemiVector& t, const SemiSpace& u, const SemiSpace& v);

}  // namespace unitc
