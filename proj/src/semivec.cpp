#include "unitc/semivec.hpp"

#include <sstream>
#include <utility>

#include "unitc/errors.hpp"

namespace unitc {

namespace {

std::string space_mismatch(const SemiSpace& a, const SemiSpace& b) {
    return "spaces \"" + a.label + "\" and \"" + b.label + "\" differ";
}

}  // namespace

SemiSpace positive_space(std::string label) {
    return SemiSpace{1, false, std::move(label)};
}

SemiSpace orthant_space(std::size_t sdim, std::string label, bool complete) {
    if (sdim == 0) throw InvariantViolation("semi-dimension must be at least 1");
    return SemiSpace{sdim, complete, std::move(label)};
}

SemiSpace complete(const SemiSpace& s) {
    if (s.complete) throw AlreadyComplete("\"" + s.label + "\" already has a zero element");
    return SemiSpace{s.sdim, true, "comp(" + s.label + ")"};
}

SemiSpace dual_space(const SemiSpace& s) {
    std::string label = s.label;
    if (label.size() >= 1 && label.back() == '*') {
        label.pop_back();
    } else {
        label += '*';
    }
    return SemiSpace{s.sdim, s.complete, std::move(label)};
}

SemiVector::SemiVector(SemiSpace space, std::map<std::size_t, Rational> coords)
    : space_(std::move(space)), coords_(std::move(coords)) {
    for (const auto& [i, c] : coords_) {
        if (i >= space_.sdim) {
            throw InvariantViolation("coordinate index " + std::to_string(i) +
                                     " out of range in \"" + space_.label + "\"");
        }
        if (!c.is_positive()) {
            throw InvariantViolation("coordinate " + std::to_string(i) + " is " + c.str() +
                                     "; coordinates must be positive");
        }
    }
    if (coords_.empty() && !space_.complete) {
        throw InvariantViolation("\"" + space_.label + "\" has no zero element");
    }
}

SemiVector SemiVector::zero(const SemiSpace& space) {
    return SemiVector(space, {});
}

SemiVector SemiVector::basis_element(const SemiSpace& space, std::size_t i,
                                     const Rational& coeff) {
    return SemiVector(space, {{i, coeff}});
}

Rational SemiVector::coord(std::size_t i) const {
    auto it = coords_.find(i);
    return it == coords_.end() ? Rational(0) : it->second;
}

std::vector<Rational> SemiVector::dense() const {
    std::vector<Rational> v(space_.sdim);
    for (const auto& [i, c] : coords_) v[i] = c;
    return v;
}

std::string SemiVector::str() const {
    if (coords_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : coords_) {
        if (!first) os << " + ";
        first = false;
        if (c != Rational(1)) os << c.str() << " ";
        os << "b" << i;
    }
    return os.str();
}

SemiVector add(const SemiVector& a, const SemiVector& b) {
    if (a.space() != b.space()) throw SpaceMismatch(space_mismatch(a.space(), b.space()));
    std::map<std::size_t, Rational> sum = a.coords();
    for (const auto& [i, c] : b.coords()) {
        auto [it, inserted] = sum.emplace(i, c);
        if (!inserted) it->second += c;
    }
    return SemiVector(a.space(), std::move(sum));
}

SemiVector smul(const Rational& r, const SemiVector& u) {
    if (!r.is_positive()) {
        throw NonPositiveScalar("scalar " + r.str() + " is not positive");
    }
    std::map<std::size_t, Rational> scaled;
    for (const auto& [i, c] : u.coords()) scaled.emplace(i, r * c);
    return SemiVector(u.space(), std::move(scaled));
}

bool is_semi_basis(const SemiSpace& space, const std::vector<SemiVector>& candidates) {
    for (const SemiVector& v : candidates) {
        if (v.space() != space) throw SpaceMismatch(space_mismatch(v.space(), space));
    }
    if (candidates.size() != space.sdim) return false;
    // Monomial test: each candidate hits exactly one coordinate, and each
    // coordinate is hit exactly once.
    std::vector<bool> row_used(space.sdim, false);
    for (const SemiVector& v : candidates) {
        if (v.coords().size() != 1) return false;
        std::size_t i = v.coords().begin()->first;
        if (row_used[i]) return false;
        row_used[i] = true;
    }
    return true;
}

std::vector<SemiVector> dual_basis(const SemiSpace& space) {
    SemiSpace dual = dual_space(space);
    std::vector<SemiVector> basis;
    basis.reserve(space.sdim);
    for (std::size_t i = 0; i < space.sdim; ++i) {
        basis.push_back(SemiVector::basis_element(dual, i));
    }
    return basis;
}

Rational pair(const SemiVector& alpha, const SemiVector& u) {
    if (alpha.space() != dual_space(u.space())) {
        throw SpaceMismatch("\"" + alpha.space().label + "\" is not the dual of \"" +
                            u.space().label + "\"");
    }
    Rational acc;
    for (const auto& [i, c] : alpha.coords()) {
        acc += c * u.coord(i);
    }
    return acc;
}

SemiLinearMap::SemiLinearMap(SemiSpace source, SemiSpace target, RatMatrix m)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(m)) {
    if (matrix_.rows() != target_.sdim || matrix_.cols() != source_.sdim) {
        throw ShapeMismatch("map matrix must be " + std::to_string(target_.sdim) + "x" +
                            std::to_string(source_.sdim) + ", got " +
                            std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
    }
    for (std::size_t j = 0; j < matrix_.cols(); ++j) {
        bool has_positive = false;
        for (std::size_t i = 0; i < matrix_.rows(); ++i) {
            const Rational& e = matrix_(i, j);
            if (e.is_negative()) {
                throw InvariantViolation("map entry (" + std::to_string(i) + "," +
                                         std::to_string(j) + ") is negative");
            }
            if (e.is_positive()) has_positive = true;
        }
        if (!has_positive && !target_.complete) {
            throw InvariantViolation("column " + std::to_string(j) +
                                     " is zero but \"" + target_.label +
                                     "\" has no zero element");
        }
    }
}

SemiLinearMap::SemiLinearMap(unchecked_t, SemiSpace source, SemiSpace target, RatMatrix m)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(m)) {}

SemiLinearMap SemiLinearMap::identity(const SemiSpace& space) {
    return SemiLinearMap(space, space, RatMatrix::identity(space.sdim));
}

SemiLinearMap SemiLinearMap::from_basis_images(const SemiSpace& source, const SemiSpace& target,
                                               const std::vector<SemiVector>& images) {
    if (images.size() != source.sdim) {
        throw ShapeMismatch("need " + std::to_string(source.sdim) + " images, got " +
                            std::to_string(images.size()));
    }
    RatMatrix m(target.sdim, source.sdim);
    for (std::size_t j = 0; j < images.size(); ++j) {
        if (images[j].space() != target) {
            throw SpaceMismatch(space_mismatch(images[j].space(), target));
        }
        for (const auto& [i, c] : images[j].coords()) m(i, j) = c;
    }
    return SemiLinearMap(source, target, std::move(m));
}

SemiVector apply(const SemiLinearMap& f, const SemiVector& u) {
    if (u.space() != f.source()) throw SpaceMismatch(space_mismatch(u.space(), f.source()));
    std::map<std::size_t, Rational> out;
    for (const auto& [j, c] : u.coords()) {
        for (std::size_t i = 0; i < f.target().sdim; ++i) {
            const Rational& e = f.matrix()(i, j);
            if (e.is_zero()) continue;
            auto [it, inserted] = out.emplace(i, e * c);
            if (!inserted) it->second += e * c;
        }
    }
    if (out.empty() && !f.target().complete) {
        throw InvariantViolation("image has empty support but \"" + f.target().label +
                                 "\" has no zero element");
    }
    return SemiVector(f.target(), std::move(out));
}

SemiLinearMap compose(const SemiLinearMap& g, const SemiLinearMap& f) {
    if (f.target() != g.source()) {
        throw SpaceMismatch("cannot compose: " + space_mismatch(f.target(), g.source()));
    }
    return SemiLinearMap(f.source(), g.target(), mat_mul(g.matrix(), f.matrix()));
}

SemiLinearMap add(const SemiLinearMap& f, const SemiLinearMap& g) {
    if (f.source() != g.source() || f.target() != g.target()) {
        throw SpaceMismatch("cannot add maps with different source or target");
    }
    RatMatrix sum = f.matrix();
    for (std::size_t i = 0; i < sum.rows(); ++i) {
        for (std::size_t j = 0; j < sum.cols(); ++j) {
            sum(i, j) += g.matrix()(i, j);
        }
    }
    return SemiLinearMap(f.source(), f.target(), std::move(sum));
}

SemiLinearMap transpose(const SemiLinearMap& f) {
    return SemiLinearMap(SemiLinearMap::unchecked_t{}, dual_space(f.target()),
                         dual_space(f.source()), transposed(f.matrix()));
}

}  // namespace unitc
