#pragma once

#include <stdexcept>
#include <string>

namespace unitc {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

class SingularMatrix : public Error {
public:
    explicit SingularMatrix(const std::string& what = "matrix is singular") : Error(what) {}
};

class SpaceMismatch : public Error {
public:
    explicit SpaceMismatch(const std::string& what) : Error(what) {}
};

class NonPositiveScalar : public Error {
public:
    explicit NonPositiveScalar(const std::string& what = "scalar must be positive") : Error(what) {}
};

class AlreadyComplete : public Error {
public:
    explicit AlreadyComplete(const std::string& what = "space already has a zero element") : Error(what) {}
};

class BaseMismatch : public Error {
public:
    explicit BaseMismatch(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
public:
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class FractionalPowerOfNegative : public Error {
public:
    explicit FractionalPowerOfNegative(const std::string& what =
        "non-integer power of a negative coefficient") : Error(what) {}
};

class ZeroToNonpositivePower : public Error {
public:
    explicit ZeroToNonpositivePower(const std::string& what =
        "zero coefficient raised to a nonpositive power") : Error(what) {}
};

class SingularBasis : public Error {
public:
    explicit SingularBasis(const std::string& what = "scales do not form a basis") : Error(what) {}
};

// A constructor or operation was handed data that breaks a structural
// invariant (wrong sign, missing coverage, out-of-range index, ...).
class InvariantViolation : public Error {
public:
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

}  // namespace unitc
