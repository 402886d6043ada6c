#pragma once

#include <string>

#include "unitc/rational.hpp"

namespace unitc {

// Relative tolerance used everywhere floating coefficients are compared.
inline constexpr double kCoeffRelTol = 1e-12;

bool approx_equal(double a, double b, double rel_tol = kCoeffRelTol);

// x^q for x > 0. Exact for q in {0, 1, -1}; std::pow for other integers;
// exp(q ln x) otherwise. The one place coefficient powers get rounded.
double pow_rational(double x, const Rational& q);

// Shortest decimal string that parses back to exactly this double.
std::string format_double(double v);

}  // namespace unitc
