#include "unitc/rational.hpp"

#include <cctype>
#include <ostream>

namespace unitc {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && s[0] == '-') {
        negative = true;
        s = s.substr(1);
    }
    std::string num_part = s;
    std::string den_part = "1";
    if (auto slash = s.find('/'); slash != std::string::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
    }
    if (!all_digits(num_part) || !all_digits(den_part)) {
        throw InvariantViolation("cannot parse rational: \"" + text + "\"");
    }
    mpz_class num(num_part, 10);
    mpz_class den(den_part, 10);
    if (negative) num = -num;
    return Rational(num, den);
}

long Rational::to_long() const {
    if (!is_integer()) {
        throw InvariantViolation("rational " + str() + " is not an integer");
    }
    if (!q_.get_num().fits_slong_p()) {
        throw InvariantViolation("rational " + str() + " does not fit in a long");
    }
    return q_.get_num().get_si();
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace unitc
