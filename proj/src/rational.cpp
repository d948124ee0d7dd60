#include "csalg/rational.hpp"

#include <cctype>
#include <ostream>

namespace csalg {

std::optional<Rational> Rational::parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    // mpq_set_str is permissive (accepts whitespace, "0x" prefixes); validate
    // the shape ourselves: -?digits(/-?digits)?
    auto valid_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        if (!valid_int(s)) return std::nullopt;
    } else {
        if (!valid_int(s.substr(0, slash)) || !valid_int(s.substr(slash + 1)))
            return std::nullopt;
    }
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    mpz_class num = x.numerator(), den = x.denominator();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(rn, rd);
}

} // namespace csalg
