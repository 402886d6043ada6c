#include "unitc/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "unitc/errors.hpp"

namespace unitc {

bool approx_equal(double a, double b, double rel_tol) {
    if (a == b) return true;
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rel_tol * scale;
}

double pow_rational(double x, const Rational& q) {
    if (!(x > 0)) {
        throw InvariantViolation("pow_rational needs a positive base");
    }
    if (q.is_zero()) return 1.0;
    if (q == Rational(1)) return x;
    if (q == Rational(-1)) return 1.0 / x;
    if (q.is_integer()) return std::pow(x, q.to_double());
    return std::exp(q.to_double() * std::log(x));
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw InvariantViolation("cannot format double");
    }
    return std::string(buf, ptr);
}

}  // namespace unitc
