#include "unitc/posspace.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "unitc/errors.hpp"

namespace unitc {

namespace {

// Append-only intern table for base labels.
class InternTable {
public:
    int id_for(const std::string& label) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, inserted] = ids_.emplace(label, static_cast<int>(labels_.size()));
        if (inserted) labels_.push_back(label);
        return it->second;
    }

    std::string label_for(int id) {
        std::lock_guard<std::mutex> lock(mutex_);
        return labels_.at(static_cast<std::size_t>(id));
    }

private:
    std::mutex mutex_;
    std::map<std::string, int> ids_;
    std::vector<std::string> labels_;
};

InternTable& interns() {
    static InternTable table;
    return table;
}

}  // namespace

PowerSpace PowerSpace::atomic(const std::string& label) {
    if (label.empty()) throw InvariantViolation("base label must be nonempty");
    return PowerSpace(interns().id_for(label), Rational(1));
}

PowerSpace PowerSpace::scalar() {
    return PowerSpace(-1, Rational(0));
}

PowerSpace PowerSpace::pow(const Rational& q) const {
    return PowerSpace(base_, exponent_ * q);
}

PowerSpace PowerSpace::dual() const {
    return PowerSpace(base_, -exponent_);
}

PowerSpace PowerSpace::with_exponent(const Rational& e) const {
    return PowerSpace(base_, e);
}

std::string PowerSpace::base_label() const {
    if (base_ < 0) return "";
    return interns().label_for(base_);
}

std::string PowerSpace::str() const {
    if (is_scalar()) return "R+";
    if (exponent_ == Rational(1)) return base_label();
    return base_label() + "^" + exponent_.str();
}

PowerElement::PowerElement(PowerSpace space, double coeff)
    : space_(std::move(space)), coeff_(coeff) {
    if (!(coeff > 0)) {
        throw InvariantViolation("power element coefficient must be positive");
    }
}

PowerElement inverse(const PowerElement& x) {
    return PowerElement(x.space().dual(), 1.0 / x.coeff());
}

PowerElement power(const PowerElement& x, const Rational& q) {
    return PowerElement(x.space().pow(q), pow_rational(x.coeff(), q));
}

PowerElement iterate_power(const PowerElement& x, const Rational& q) {
    return power(x, q);
}

PowerElement combine_powers(const PowerElement& x, const PowerElement& y) {
    const PowerSpace& a = x.space();
    const PowerSpace& b = y.space();
    if (!a.is_scalar() && !b.is_scalar() && a.base_label() != b.base_label()) {
        throw BaseMismatch("cannot combine powers of \"" + a.base_label() + "\" and \"" +
                           b.base_label() + "\"");
    }
    // The scalar space is the zeroth power of anything, so a scalar factor
    // adopts the other side's base.
    const PowerSpace& carrier = a.is_scalar() ? b : a;
    return PowerElement(carrier.with_exponent(a.exponent() + b.exponent()),
                        x.coeff() * y.coeff());
}

RationalMap::RationalMap(Rational degree, PowerSpace source, PowerSpace target,
                         double image_coeff)
    : RationalMap(std::move(degree), std::move(source), std::move(target), 1.0, image_coeff) {}

RationalMap::RationalMap(Rational degree, PowerSpace source, PowerSpace target,
                         double anchor_src, double anchor_tgt)
    : degree_(std::move(degree)),
      source_(std::move(source)),
      target_(std::move(target)),
      anchor_src_(anchor_src),
      anchor_tgt_(anchor_tgt) {
    if (!(anchor_src_ > 0) || !(anchor_tgt_ > 0)) {
        throw InvariantViolation("rational map anchors must be positive");
    }
}

RationalMap RationalMap::through(const Rational& degree, const PowerElement& u,
                                 const PowerElement& v) {
    return RationalMap(degree, u.space(), v.space(), u.coeff(), v.coeff());
}

RationalMap RationalMap::identity(const PowerSpace& s) {
    return RationalMap(Rational(1), s, s, 1.0, 1.0);
}

double RationalMap::image_coeff() const {
    return pow_rational(1.0 / anchor_src_, degree_) * anchor_tgt_;
}

PowerElement apply_rational(const RationalMap& f, const PowerElement& x) {
    if (x.space() != f.source()) {
        throw SpaceMismatch("element lives in " + x.space().str() + ", expected " +
                            f.source().str());
    }
    if (x.coeff() == f.anchor_src_) {
        return PowerElement(f.target(), f.anchor_tgt_);
    }
    double scaled = pow_rational(x.coeff() / f.anchor_src_, f.degree_);
    return PowerElement(f.target(), scaled * f.anchor_tgt_);
}

RationalMap compose_rational(const RationalMap& g, const RationalMap& f) {
    if (f.target() != g.source()) {
        throw SpaceMismatch("cannot compose: " + f.target().str() + " is not " +
                            g.source().str());
    }
    PowerElement mid(f.target(), f.anchor_tgt_);
    PowerElement out = apply_rational(g, mid);
    return RationalMap(g.degree_ * f.degree_, f.source(), g.target(), f.anchor_src_,
                       out.coeff());
}

RationalMap invert_rational(const RationalMap& f) {
    if (f.degree_.is_zero()) {
        throw InvariantViolation("a constant map has no inverse");
    }
    return RationalMap(Rational(1) / f.degree_, f.target(), f.source(), f.anchor_tgt_,
                       f.anchor_src_);
}

}  // namespace unitc
