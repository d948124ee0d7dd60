#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "csalg/errors.hpp"

namespace csalg {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Comparison is exact and total.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { canonical(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) { canonical(); }
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Accepts "p", "p/q", optionally signed. Returns nullopt on bad syntax
    /// or a zero denominator.
    static std::optional<Rational> parse(std::string_view s);

    /// "p" when the denominator is 1, else "p/q".
    std::string str() const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvalidArgumentError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }

    const mpq_class& raw() const { return v_; }

private:
    void canonical() {
        if (v_.get_den() == 0) throw InvalidArgumentError("rational with zero denominator");
        v_.canonicalize();
    }

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact square root in Q: returns r with r*r == x and r >= 0, or nullopt
/// when x is negative or not a square of a rational.
std::optional<Rational> exact_sqrt(const Rational& x);

} // namespace csalg
