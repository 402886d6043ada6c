#include "unitc/tensor.hpp"

#include <utility>

#include "unitc/errors.hpp"

namespace unitc {

namespace {

std::string vec_mismatch(const VecSpace& a, const VecSpace& b) {
    return "spaces \"" + a.label + "\" and \"" + b.label + "\" differ";
}

}  // namespace

Vector::Vector(VecSpace space, std::vector<Rational> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
    if (coords_.size() != space_.dim) {
        throw ShapeMismatch("vector in \"" + space_.label + "\" needs " +
                            std::to_string(space_.dim) + " coordinates, got " +
                            std::to_string(coords_.size()));
    }
}

Vector Vector::zero(const VecSpace& space) {
    return Vector(space, std::vector<Rational>(space.dim));
}

Vector Vector::basis_element(const VecSpace& space, std::size_t i, const Rational& coeff) {
    if (i >= space.dim) {
        throw InvariantViolation("basis index " + std::to_string(i) + " out of range in \"" +
                                 space.label + "\"");
    }
    std::vector<Rational> coords(space.dim);
    coords[i] = coeff;
    return Vector(space, std::move(coords));
}

bool Vector::is_zero() const {
    for (const auto& c : coords_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.space() != b.space()) throw SpaceMismatch(vec_mismatch(a.space(), b.space()));
    std::vector<Rational> sum = a.coords();
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b.coords()[i];
    return Vector(a.space(), std::move(sum));
}

Vector smul(const Rational& r, const Vector& v) {
    std::vector<Rational> scaled = v.coords();
    for (auto& c : scaled) c *= r;
    return Vector(v.space(), std::move(scaled));
}

Vector negate(const Vector& v) {
    return smul(Rational(-1), v);
}

VecSpace tensor_space(const VecSpace& a, const VecSpace& b) {
    return VecSpace{a.dim * b.dim, "ten(" + a.label + "," + b.label + ")"};
}

Vector tensor(const Vector& v, const Vector& u) {
    VecSpace space = tensor_space(v.space(), u.space());
    std::vector<Rational> coords(space.dim);
    for (std::size_t i = 0; i < v.space().dim; ++i) {
        for (std::size_t j = 0; j < u.space().dim; ++j) {
            coords[i * u.space().dim + j] = v.coords()[i] * u.coords()[j];
        }
    }
    return Vector(space, std::move(coords));
}

SesquiSpace::SesquiSpace(VecSpace left, SemiSpace right)
    : left_(std::move(left)), right_(std::move(right)) {
    const SemiSpace& r = std::get<SemiSpace>(right_);
    vec_ = VecSpace{left_.dim * r.sdim, "sq(" + left_.label + "," + r.label + ")"};
}

SesquiSpace::SesquiSpace(VecSpace left, VecSpace right)
    : left_(std::move(left)), right_(std::move(right)) {
    const VecSpace& r = std::get<VecSpace>(right_);
    vec_ = VecSpace{2 * left_.dim * r.dim, "sq(" + left_.label + "," + r.label + ")"};
}

std::size_t SesquiSpace::pos_index(std::size_t i, std::size_t j) const {
    std::size_t n = right_is_vector() ? right_vec().dim : right_semi().sdim;
    if (i >= left_.dim || j >= n) {
        throw InvariantViolation("pair index (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") out of range in \"" + vec_.label + "\"");
    }
    return i * n + j;
}

std::size_t SesquiSpace::neg_index(std::size_t i, std::size_t j) const {
    if (!right_is_vector()) {
        throw InvariantViolation("\"" + vec_.label + "\" has no negative block");
    }
    return left_.dim * right_vec().dim + pos_index(i, j);
}

Vector sesqui(const SesquiSpace& s, const Vector& v, const SemiVector& u) {
    if (s.right_is_vector()) {
        throw InvariantViolation("\"" + s.vec().label + "\" has a vector right factor");
    }
    if (v.space() != s.left()) throw SpaceMismatch(vec_mismatch(v.space(), s.left()));
    if (u.space() != s.right_semi()) {
        throw SpaceMismatch("right factor lives in \"" + u.space().label + "\", expected \"" +
                            s.right_semi().label + "\"");
    }
    std::vector<Rational> coords(s.dim());
    for (std::size_t i = 0; i < v.space().dim; ++i) {
        if (v.coords()[i].is_zero()) continue;
        for (const auto& [j, c] : u.coords()) {
            coords[s.pos_index(i, j)] = v.coords()[i] * c;
        }
    }
    return Vector(s.vec(), std::move(coords));
}

Vector sesqui_vv(const SesquiSpace& s, const Vector& v, const Vector& u) {
    if (!s.right_is_vector()) {
        throw InvariantViolation("\"" + s.vec().label + "\" has a semi-free right factor");
    }
    if (v.space() != s.left()) throw SpaceMismatch(vec_mismatch(v.space(), s.left()));
    if (u.space() != s.right_vec()) throw SpaceMismatch(vec_mismatch(u.space(), s.right_vec()));
    std::vector<Rational> coords(s.dim());
    for (std::size_t i = 0; i < v.space().dim; ++i) {
        if (v.coords()[i].is_zero()) continue;
        for (std::size_t j = 0; j < u.space().dim; ++j) {
            const Rational& uj = u.coords()[j];
            if (uj.is_positive()) {
                coords[s.pos_index(i, j)] = v.coords()[i] * uj;
            } else if (uj.is_negative()) {
                coords[s.neg_index(i, j)] = v.coords()[i] * (-uj);
            }
        }
    }
    return Vector(s.vec(), std::move(coords));
}

Vector sesqui_left(const SesquiSpace& s, const SemiVector& u, const Vector& v) {
    return sesqui(s, v, u);
}

RatMatrix sesqui_projection_matrix(const SesquiSpace& s) {
    if (!s.right_is_vector()) {
        throw InvariantViolation("projection needs a vector right factor");
    }
    std::size_t mk = s.left().dim * s.right_vec().dim;
    RatMatrix p(mk, 2 * mk);
    for (std::size_t a = 0; a < mk; ++a) {
        p(a, a) = Rational(1);
        p(a, mk + a) = Rational(-1);
    }
    return p;
}

Vector sesqui_project(const SesquiSpace& s, const Vector& t) {
    if (t.space() != s.vec()) throw SpaceMismatch(vec_mismatch(t.space(), s.vec()));
    RatMatrix p = sesqui_projection_matrix(s);
    return Vector(tensor_space(s.left(), s.right_vec()), mat_vec(p, t.coords()));
}

LinMap::LinMap(VecSpace source, VecSpace target, RatMatrix m)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(m)) {
    if (matrix_.rows() != target_.dim || matrix_.cols() != source_.dim) {
        throw ShapeMismatch("map matrix must be " + std::to_string(target_.dim) + "x" +
                            std::to_string(source_.dim) + ", got " +
                            std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
    }
}

Vector apply(const LinMap& f, const Vector& v) {
    if (v.space() != f.source()) throw SpaceMismatch(vec_mismatch(v.space(), f.source()));
    return Vector(f.target(), mat_vec(f.matrix(), v.coords()));
}

SemiToVecMap::SemiToVecMap(SemiSpace source, VecSpace target, RatMatrix m)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(m)) {
    if (matrix_.rows() != target_.dim || matrix_.cols() != source_.sdim) {
        throw ShapeMismatch("map matrix must be " + std::to_string(target_.dim) + "x" +
                            std::to_string(source_.sdim) + ", got " +
                            std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
    }
}

SemiToVecMap SemiToVecMap::from_basis_images(const SemiSpace& source, const VecSpace& target,
                                             const std::vector<Vector>& images) {
    if (images.size() != source.sdim) {
        throw ShapeMismatch("need " + std::to_string(source.sdim) + " images, got " +
                            std::to_string(images.size()));
    }
    RatMatrix m(target.dim, source.sdim);
    for (std::size_t j = 0; j < images.size(); ++j) {
        if (images[j].space() != target) {
            throw SpaceMismatch(vec_mismatch(images[j].space(), target));
        }
        for (std::size_t i = 0; i < target.dim; ++i) m(i, j) = images[j].coords()[i];
    }
    return SemiToVecMap(source, target, std::move(m));
}

Vector apply(const SemiToVecMap& f, const SemiVector& u) {
    if (u.space() != f.source()) {
        throw SpaceMismatch("element lives in \"" + u.space().label + "\", expected \"" +
                            f.source().label + "\"");
    }
    return Vector(f.target(), mat_vec(f.matrix(), u.dense()));
}

ExtensionSpace extend_space(const SemiSpace& base) {
    return ExtensionSpace{base, VecSpace{base.sdim, "ext(" + base.label + ")"}};
}

Vector embed(const ExtensionSpace& e, const SemiVector& u) {
    if (u.space() != e.base) {
        throw SpaceMismatch("element lives in \"" + u.space().label + "\", expected \"" +
                            e.base.label + "\"");
    }
    return Vector(e.vec, u.dense());
}

std::pair<std::optional<SemiVector>, std::optional<SemiVector>>
decompose_extension(const ExtensionSpace& e, const Vector& t) {
    if (t.space() != e.vec) throw SpaceMismatch(vec_mismatch(t.space(), e.vec));
    std::map<std::size_t, Rational> plus;
    std::map<std::size_t, Rational> minus;
    for (std::size_t i = 0; i < t.coords().size(); ++i) {
        const Rational& c = t.coords()[i];
        if (c.is_positive()) plus.emplace(i, c);
        if (c.is_negative()) minus.emplace(i, -c);
    }
    std::pair<std::optional<SemiVector>, std::optional<SemiVector>> parts;
    if (!plus.empty()) parts.first = SemiVector(e.base, std::move(plus));
    if (!minus.empty()) parts.second = SemiVector(e.base, std::move(minus));
    return parts;
}

LinMap extend_map(const SemiToVecMap& f) {
    return LinMap(extend_space(f.source()).vec, f.target(), f.matrix());
}

LinMap extend_map(const SemiLinearMap& f) {
    return LinMap(extend_space(f.source()).vec, extend_space(f.target()).vec, f.matrix());
}

SemiSpace semi_tensor_space(const SemiSpace& a, const SemiSpace& b) {
    return SemiSpace{a.sdim * b.sdim, a.complete || b.complete,
                     "st(" + a.label + "," + b.label + ")"};
}

SemiVector semi_tensor(const SemiVector& u, const SemiVector& v) {
    SemiSpace space = semi_tensor_space(u.space(), v.space());
    std::map<std::size_t, Rational> coords;
    for (const auto& [i, a] : u.coords()) {
        for (const auto& [j, b] : v.coords()) {
            coords.emplace(i * v.space().sdim + j, a * b);
        }
    }
    return SemiVector(std::move(space), std::move(coords));
}

SemiSpace semi_tensor_power_space(const SemiSpace& u, std::size_t n) {
    SemiSpace acc = scalar_space();
    for (std::size_t i = 0; i < n; ++i) {
        acc = (i == 0) ? u : semi_tensor_space(acc, u);
    }
    return acc;
}

SemiSpace scalar_space() {
    return SemiSpace{1, false, "R+"};
}

SemiVector scalar_value(const Rational& r) {
    return SemiVector::basis_element(scalar_space(), 0, r);
}

SemiVector collapse_scalar(const SemiVector& t, const SemiSpace& u_space) {
    if (t.space() != semi_tensor_space(scalar_space(), u_space)) {
        throw SpaceMismatch("element lives in \"" + t.space().label +
                            "\", expected the scalar product with \"" + u_space.label + "\"");
    }
    std::map<std::size_t, Rational> coords(t.coords().begin(), t.coords().end());
    return SemiVector(u_space, std::move(coords));
}

SemiLinearMap slin_as_semitensor(const SemiVector& t, const SemiSpace& u, const SemiSpace& v) {
    if (t.space() != semi_tensor_space(dual_space(u), v)) {
        throw SpaceMismatch("element lives in \"" + t.space().label +
                            "\", expected the product of \"" + dual_space(u).label +
                            "\" with \"" + v.label + "\"");
    }
    RatMatrix m(v.sdim, u.sdim);
    for (const auto& [idx, c] : t.coords()) {
        std::size_t j = idx / v.sdim;  // dual slot
        std::size_t i = idx % v.sdim;  // target slot
        m(i, j) = c;
    }
    return SemiLinearMap(u, v, std::move(m));
}

}  // namespace unitc
