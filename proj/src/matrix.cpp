#include "csalg/matrix.hpp"

namespace csalg {

Matrix<GaussRational> star_embed(const Matrix<RatQuaternion>& m) {
    const int n = m.n();
    Matrix<GaussRational> out(2 * n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            const RatQuaternion& q = m.at(r, s);
            const GaussRational m1{q.a, q.b};
            const GaussRational m2{q.c, -q.d};
            out.at(r, s) = m1;
            out.at(r, n + s) = -conj(m2);
            out.at(n + r, s) = m2;
            out.at(n + r, n + s) = conj(m1);
        }
    return out;
}

Matrix<RatQuaternion> star_pullback(const Matrix<GaussRational>& m) {
    if (m.n() % 2 != 0) throw InternalError("star image must have even dimension");
    const int n = m.n() / 2;
    Matrix<RatQuaternion> out(n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            const GaussRational& m1 = m.at(r, s);
            const GaussRational& m2 = m.at(n + r, s);
            if (m.at(r, n + s) != -conj(m2) || m.at(n + r, n + s) != conj(m1))
                throw InternalError("matrix is not in the image of the star embedding");
            out.at(r, s) = RatQuaternion{m1.re, m1.im, m2.re, -m2.im};
        }
    return out;
}

namespace {

// Gauss-Jordan over an exact field (Q or Q(sqrt(-1))). First nonzero pivot
// in each column, deterministic.
template <class F>
std::optional<Matrix<F>> invert_field(const Matrix<F>& m) {
    const int n = m.n();
    Matrix<F> a = m;
    Matrix<F> inv = Matrix<F>::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!is_zero(a.at(r, col))) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        const F p = a.at(col, col);
        const F pinv = F(1) / p;
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = pinv * a.at(col, j);
            inv.at(col, j) = pinv * inv.at(col, j);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            const F f = a.at(r, col);
            if (is_zero(f)) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

} // namespace

std::optional<Matrix<Rational>> invert(const Matrix<Rational>& m) {
    return invert_field(m);
}

std::optional<Matrix<GaussRational>> invert(const Matrix<GaussRational>& m) {
    return invert_field(m);
}

std::optional<Matrix<RatQuaternion>> invert(const Matrix<RatQuaternion>& m) {
    // Invert the complex image and pull back; the inverse of a star image has
    // the same block shape, so the pullback is well-defined.
    auto cinv = invert_field(star_embed(m));
    if (!cinv) return std::nullopt;
    return star_pullback(*cinv);
}

} // namespace csalg
