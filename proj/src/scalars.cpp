#include "csalg/scalars.hpp"

#include <ostream>
#include <sstream>

namespace csalg {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::real: return "real";
        case Kind::complex: return "complex";
        case Kind::quaternion: return "quaternion";
    }
    return "?";
}

namespace {

void append_term(std::ostringstream& os, bool& first, const Rational& coeff, const char* unit) {
    if (coeff.is_zero()) return;
    if (!first && coeff.sign() > 0) os << "+";
    if (*unit && coeff == Rational(-1)) {
        os << "-" << unit;
    } else if (*unit && coeff.is_one()) {
        os << unit;
    } else {
        os << coeff.str() << unit;
    }
    first = false;
}

} // namespace

std::string GaussRational::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    append_term(os, first, re, "");
    append_term(os, first, im, "i");
    return os.str();
}

std::string RatQuaternion::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    append_term(os, first, a, "");
    append_term(os, first, b, "i");
    append_term(os, first, c, "j");
    append_term(os, first, d, "k");
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }
std::ostream& operator<<(std::ostream& os, const RatQuaternion& q) { return os << q.str(); }

} // namespace csalg
