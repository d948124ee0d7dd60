#pragma once

#include <cstdint>
#include <random>

#include "csalg/matrix.hpp"

namespace csalg {

/// Deterministic seeded generator. All randomized operations in the library
/// and tests draw through this so that a fixed seed reproduces a run
/// bit-for-bit.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    /// Uniform in [lo, hi], inclusive. Implemented by rejection so the
    /// stream does not depend on library internals.
    long uniform(long lo, long hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t x;
        do { x = eng_(); } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

    bool coin() { return (eng_() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

/// Numerator in [-max_num, max_num], denominator in [1, max_den].
inline Rational random_rational(Rng& rng, long max_num = 10, long max_den = 10) {
    return Rational(rng.uniform(-max_num, max_num), rng.uniform(1, max_den));
}

template <class T>
T random_scalar(Rng& rng, long max_num = 10, long max_den = 10) {
    constexpr int comps = ScalarTraits<T>::components;
    Rational coords[4];
    for (int c = 0; c < comps; ++c) coords[c] = random_rational(rng, max_num, max_den);
    T x{};
    scalar_from_coords(x, coords);
    return x;
}

template <class T>
Matrix<T> random_matrix(Rng& rng, int n, long max_num = 10, long max_den = 10) {
    Matrix<T> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = random_scalar<T>(rng, max_num, max_den);
    return m;
}

template <class T>
Matrix<T> random_invertible(Rng& rng, int n, long max_num = 10, long max_den = 10) {
    for (;;) {
        Matrix<T> m = random_matrix<T>(rng, n, max_num, max_den);
        if (invert(m)) return m;
    }
}

template <class T>
Matrix<T> random_hermitian(Rng& rng, int n, long max_num = 10, long max_den = 10) {
    Matrix<T> m(n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = T(random_rational(rng, max_num, max_den));
        for (int j = i + 1; j < n; ++j) {
            const T x = random_scalar<T>(rng, max_num, max_den);
            m.at(i, j) = x;
            m.at(j, i) = conj(x);
        }
    }
    return m;
}

/// adjoint(S) = -S: purely imaginary diagonal, s_ji = -conj(s_ij).
template <class T>
Matrix<T> random_anti_hermitian(Rng& rng, int n, long max_num = 10, long max_den = 10) {
    constexpr int comps = ScalarTraits<T>::components;
    Matrix<T> m(n);
    for (int i = 0; i < n; ++i) {
        Rational coords[4];
        coords[0] = Rational(0);
        for (int c = 1; c < comps; ++c) coords[c] = random_rational(rng, max_num, max_den);
        T diag{};
        scalar_from_coords(diag, coords);
        m.at(i, i) = diag;
        for (int j = i + 1; j < n; ++j) {
            const T x = random_scalar<T>(rng, max_num, max_den);
            m.at(i, j) = x;
            m.at(j, i) = -conj(x);
        }
    }
    return m;
}

/// Random hermitian invertible symmetric scaling for involutions.
template <class T>
Matrix<T> random_hermitian_invertible(Rng& rng, int n, long max_num = 10, long max_den = 10) {
    for (;;) {
        Matrix<T> m = random_hermitian<T>(rng, n, max_num, max_den);
        if (invert(m)) return m;
    }
}

} // namespace csalg
