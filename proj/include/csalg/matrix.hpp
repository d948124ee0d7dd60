#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "csalg/scalars.hpp"

namespace csalg {

/// Dense square matrix over one of the three exact division algebras.
/// Immutable by convention: all operations return fresh matrices.
template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() : n_(1), e_(1) {}
    explicit Matrix(int n) : n_(check_size(n)), e_(static_cast<size_t>(n) * n) {}
    Matrix(int n, std::vector<T> entries) : n_(check_size(n)), e_(std::move(entries)) {
        if (e_.size() != static_cast<size_t>(n_) * n_)
            throw ShapeError("entry count does not match dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }
    static Matrix zero(int n) { return Matrix(n); }
    /// q * I_n (diagonal embedding; the unambiguous way to scale over H).
    static Matrix scalar(int n, const T& q) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = q;
        return m;
    }

    int n() const { return n_; }
    static constexpr Kind kind() { return kind_of_v<T>; }

    T& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
    const T& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

    const std::vector<T>& entries() const { return e_; }

    bool is_zero() const {
        for (const T& x : e_)
            if (!csalg::is_zero(x)) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    Matrix operator-() const {
        Matrix r(n_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
        return r;
    }

    /// Ring product; entry (i,j) accumulates row entry times column entry,
    /// in that order (it matters over the quaternions).
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        const int n = a.n_;
        Matrix c(n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const T& aik = a.at(i, k);
                if (csalg::is_zero(aik)) continue;
                for (int j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    /// Entrywise canonical involution followed by transpose.
    Matrix adjoint() const {
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = conj(at(j, i));
        return r;
    }

    Matrix transpose() const {
        Matrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
        return r;
    }

    /// Ordinary trace, valued in the coefficient algebra.
    T trace() const {
        T t{};
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    bool is_hermitian() const { return *this == adjoint(); }
    bool is_anti_hermitian() const { return adjoint() == -*this; }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < n_; ++i) {
            os << (i ? ", [" : "[");
            for (int j = 0; j < n_; ++j) {
                if (j) os << ", ";
                os << at(i, j);
            }
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    static int check_size(int n) {
        if (n < 1) throw ShapeError("matrix dimension must be positive");
        return n;
    }
    void require_same_shape(const Matrix& o) const {
        if (n_ != o.n_) throw ShapeError("matrix dimension mismatch");
    }

    int n_;
    std::vector<T> e_;
};

/// Left scaling by a central rational (commutes with everything).
template <class T>
Matrix<T> operator*(const Rational& s, const Matrix<T>& m) {
    Matrix<T> r(m.n());
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) r.at(i, j) = T(s) * m.at(i, j);
    return r;
}

/// deg M_n(D): n for the real and complex kinds, 2n for the quaternion kind.
template <class T>
int degree(const Matrix<T>& m) {
    return ScalarTraits<T>::degree_factor * m.n();
}

/// Dimension of M_n(D) over Q: n^2, 2n^2 or 4n^2.
template <class T>
int q_dimension(int n) {
    return ScalarTraits<T>::components * n * n;
}

/// Reduced trace: the ordinary trace for the real and complex kinds,
/// 2 * sum of real parts of the diagonal for the quaternion kind.
inline Rational reduced_trace(const Matrix<Rational>& m) { return m.trace(); }
inline GaussRational reduced_trace(const Matrix<GaussRational>& m) { return m.trace(); }
inline Rational reduced_trace(const Matrix<RatQuaternion>& m) {
    Rational t;
    for (int i = 0; i < m.n(); ++i) t += m.at(i, i).a;
    return Rational(2) * t;
}

/// Writes M = M1 + j*M2 with M1, M2 over Q(sqrt(-1)) and maps it to the
/// 2n x 2n block matrix [[M1, -conj(M2)], [M2, conj(M1)]]. For an entry
/// q = a+bi+cj+dk the split is M1 = a + b*sqrt(-1), M2 = c - d*sqrt(-1);
/// this convention makes the map a morphism of rings with involution
/// (checked by the property suite).
Matrix<GaussRational> star_embed(const Matrix<RatQuaternion>& m);

/// Inverse image under star_embed; requires the block symmetry of the
/// argument and throws InternalError if it is violated.
Matrix<RatQuaternion> star_pullback(const Matrix<GaussRational>& m);

/// Exact two-sided inverse, or nullopt when the matrix is singular.
std::optional<Matrix<Rational>> invert(const Matrix<Rational>& m);
std::optional<Matrix<GaussRational>> invert(const Matrix<GaussRational>& m);
std::optional<Matrix<RatQuaternion>> invert(const Matrix<RatQuaternion>& m);

// --- the canonical Q-basis of M_n(D) -------------------------------------
//
// Basis order: entry position (r,s) runs row-major, and within a position the
// scalar units run 1 | 1,i | 1,i,j,k. Index u = components*(r*n+s) + comp.

template <class T>
Matrix<T> basis_element(int n, int u) {
    constexpr int comps = ScalarTraits<T>::components;
    const int pos = u / comps, comp = u % comps;
    Rational coords[4];
    for (int c = 0; c < comps; ++c) coords[c] = Rational(c == comp ? 1 : 0);
    T unit{};
    scalar_from_coords(unit, coords);
    Matrix<T> m(n);
    m.at(pos / n, pos % n) = unit;
    return m;
}

/// Q-coordinates of a matrix in the canonical basis above.
template <class T>
std::vector<Rational> flatten(const Matrix<T>& m) {
    constexpr int comps = ScalarTraits<T>::components;
    const int n = m.n();
    std::vector<Rational> out(static_cast<size_t>(comps) * n * n);
    Rational coords[4];
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            scalar_coords(m.at(r, s), coords);
            for (int c = 0; c < comps; ++c)
                out[static_cast<size_t>(comps) * (r * n + s) + c] = coords[c];
        }
    return out;
}

template <class T>
Matrix<T> unflatten(int n, const std::vector<Rational>& coords) {
    constexpr int comps = ScalarTraits<T>::components;
    if (coords.size() != static_cast<size_t>(comps) * n * n)
        throw ShapeError("coordinate vector has wrong length");
    Matrix<T> m(n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            scalar_from_coords(m.at(r, s),
                               coords.data() + static_cast<size_t>(comps) * (r * n + s));
    return m;
}

/// Homogeneous list of d matrices of the same kind and size.
template <class T>
struct MatrixTuple {
    std::vector<Matrix<T>> items;

    MatrixTuple() = default;
    explicit MatrixTuple(std::vector<Matrix<T>> ms) : items(std::move(ms)) {
        if (items.empty()) throw ShapeError("matrix tuple must be nonempty");
        for (const auto& m : items)
            if (m.n() != items.front().n()) throw ShapeError("mixed sizes in matrix tuple");
    }

    int n() const { return items.front().n(); }
    int d() const { return static_cast<int>(items.size()); }
};

} // namespace csalg
