#pragma once

#include <iosfwd>
#include <string>

#include "csalg/rational.hpp"

namespace csalg {

/// Which of the three division algebras over Q a scalar (or matrix) lives in.
enum class Kind { real, complex, quaternion };

std::string kind_name(Kind k);

/// Element of Q(sqrt(-1)): re + im*sqrt(-1).
struct GaussRational {
    Rational re, im;

    GaussRational() = default;
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(long n) : re(n) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational sqrt_minus_one() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussRational& operator*=(const GaussRational& o) { *this = *this * o; return *this; }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussRational operator-() const { return {-re, -im}; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) = default;

    /// re^2 + im^2; zero only at zero since <1,1> is anisotropic over Q.
    Rational norm() const { return re * re + im * im; }

    GaussRational inverse() const {
        if (is_zero()) throw InvalidArgumentError("inverse of zero Gaussian rational");
        const Rational n = norm();
        return {re / n, -im / n};
    }

    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        return a * b.inverse();
    }

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

/// Element of the quaternion algebra (-1,-1) over Q: a + b*i + c*j + d*k
/// with i^2 = j^2 = -1 and ij = -ji = k.
struct RatQuaternion {
    Rational a, b, c, d;

    RatQuaternion() = default;
    RatQuaternion(Rational re) : a(std::move(re)) {}
    RatQuaternion(long n) : a(n) {}
    RatQuaternion(Rational a_, Rational b_, Rational c_, Rational d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static RatQuaternion unit_i() { return {0, 1, 0, 0}; }
    static RatQuaternion unit_j() { return {0, 0, 1, 0}; }
    static RatQuaternion unit_k() { return {0, 0, 0, 1}; }

    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }

    RatQuaternion& operator+=(const RatQuaternion& o) {
        a += o.a; b += o.b; c += o.c; d += o.d;
        return *this;
    }
    RatQuaternion& operator-=(const RatQuaternion& o) {
        a -= o.a; b -= o.b; c -= o.c; d -= o.d;
        return *this;
    }
    RatQuaternion& operator*=(const RatQuaternion& o) { *this = *this * o; return *this; }

    friend RatQuaternion operator+(RatQuaternion x, const RatQuaternion& y) { return x += y; }
    friend RatQuaternion operator-(RatQuaternion x, const RatQuaternion& y) { return x -= y; }
    friend RatQuaternion operator*(const RatQuaternion& x, const RatQuaternion& y) {
        return {x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
                x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
                x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
                x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a};
    }
    RatQuaternion operator-() const { return {-a, -b, -c, -d}; }

    friend bool operator==(const RatQuaternion& x, const RatQuaternion& y) = default;

    /// a^2 + b^2 + c^2 + d^2 = q * conj(q); zero only at zero.
    Rational norm() const { return a * a + b * b + c * c + d * d; }

    RatQuaternion inverse() const {
        if (is_zero()) throw InvalidArgumentError("inverse of zero quaternion");
        const Rational n = norm();
        return {a / n, -b / n, -c / n, -d / n};
    }

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const RatQuaternion& q);

// --- canonical involution and real part, uniformly for the three scalars ---

inline Rational conj(const Rational& x) { return x; }
inline GaussRational conj(const GaussRational& z) { return {z.re, -z.im}; }
inline RatQuaternion conj(const RatQuaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

inline Rational real_part(const Rational& x) { return x; }
inline Rational real_part(const GaussRational& z) { return z.re; }
inline Rational real_part(const RatQuaternion& q) { return q.a; }

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const GaussRational& z) { return z.is_zero(); }
inline bool is_zero(const RatQuaternion& q) { return q.is_zero(); }

// --- compile-time description of the scalar tower ---

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr Kind kind = Kind::real;
    static constexpr int components = 1;  // dimension over Q
    static constexpr int degree_factor = 1;  // deg M_n(D) = degree_factor * n
    using Center = Rational;
};

template <>
struct ScalarTraits<GaussRational> {
    static constexpr Kind kind = Kind::complex;
    static constexpr int components = 2;
    static constexpr int degree_factor = 1;
    using Center = GaussRational;
};

template <>
struct ScalarTraits<RatQuaternion> {
    static constexpr Kind kind = Kind::quaternion;
    static constexpr int components = 4;
    static constexpr int degree_factor = 2;
    using Center = Rational;
};

template <class T>
inline constexpr Kind kind_of_v = ScalarTraits<T>::kind;

template <class T>
using center_t = typename ScalarTraits<T>::Center;

/// Q-coordinates of a scalar in the basis {1}, {1,i} or {1,i,j,k}.
inline void scalar_coords(const Rational& x, Rational* out) { out[0] = x; }
inline void scalar_coords(const GaussRational& z, Rational* out) { out[0] = z.re; out[1] = z.im; }
inline void scalar_coords(const RatQuaternion& q, Rational* out) {
    out[0] = q.a; out[1] = q.b; out[2] = q.c; out[3] = q.d;
}

inline void scalar_from_coords(Rational& x, const Rational* in) { x = in[0]; }
inline void scalar_from_coords(GaussRational& z, const Rational* in) { z = {in[0], in[1]}; }
inline void scalar_from_coords(RatQuaternion& q, const Rational* in) {
    q = {in[0], in[1], in[2], in[3]};
}

} // namespace csalg
