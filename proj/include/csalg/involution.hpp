#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csalg/cones.hpp"
#include "csalg/matrix.hpp"
#include "csalg/qlinalg.hpp"

namespace csalg {

enum class InvolutionKind { first, second };
enum class InvolutionType { orthogonal, symplectic, unitary };

std::string involution_kind_name(InvolutionKind k);
std::string involution_type_name(InvolutionType t);

struct KindAndType {
    InvolutionKind kind;
    InvolutionType type;
    int dim_sym;  // dim_Q Sym(M_n(D), sigma)

    friend bool operator==(const KindAndType&, const KindAndType&) = default;
};

struct InvolutionReport {
    bool ok = true;
    std::string first_violation;
};

/// The involution x -> a * adjoint(x) * a^{-1} on M_n(D), in the
/// scaled-adjoint normal form with a hermitian invertible. Symmetry of the
/// scale makes the involution axioms hold by construction; construction
/// rejects anything else.
template <class T>
class Involution {
public:
    static Involution make(Matrix<T> scale) {
        if (!scale.is_hermitian())
            throw InvalidArgumentError("involution scale must be symmetric (adjoint(a) = a)");
        auto inv = invert(scale);
        if (!inv) throw InvalidArgumentError("involution scale must be invertible");
        return Involution(std::move(scale), std::move(*inv));
    }

    /// The base involution adjoint = Int(I) o adjoint.
    static Involution adjoint_involution(int n) {
        return Involution(Matrix<T>::identity(n), Matrix<T>::identity(n));
    }

    int n() const { return scale_.n(); }
    static constexpr Kind kind() { return kind_of_v<T>; }
    const Matrix<T>& scale() const { return scale_; }
    const Matrix<T>& scale_inverse() const { return scale_inv_; }
    bool is_adjoint() const { return scale_ == Matrix<T>::identity(scale_.n()); }

    Matrix<T> apply(const Matrix<T>& x) const {
        if (x.n() != scale_.n()) throw ShapeError("involution applied to wrong size");
        return scale_ * x.adjoint() * scale_inv_;
    }

private:
    Involution(Matrix<T> s, Matrix<T> si) : scale_(std::move(s)), scale_inv_(std::move(si)) {}

    Matrix<T> scale_;
    Matrix<T> scale_inv_;
};

/// Reduced trace of a product, without forming the product matrix.
inline Rational reduced_trace_of_product(const Matrix<Rational>& a, const Matrix<Rational>& b) {
    Rational t;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) t += a.at(i, j) * b.at(j, i);
    return t;
}
inline GaussRational reduced_trace_of_product(const Matrix<GaussRational>& a,
                                              const Matrix<GaussRational>& b) {
    GaussRational t;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) t += a.at(i, j) * b.at(j, i);
    return t;
}
inline Rational reduced_trace_of_product(const Matrix<RatQuaternion>& a,
                                         const Matrix<RatQuaternion>& b) {
    // Trd = 2 Re(tr); Re(q q') needs only the component products.
    Rational t;
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) {
            const RatQuaternion& x = a.at(i, j);
            const RatQuaternion& y = b.at(j, i);
            t += x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d;
        }
    return Rational(2) * t;
}

/// Full axiom suite on a proposed scale matrix, reporting the first failed
/// axiom instead of throwing: symmetry and invertibility of the scale, then
/// sigma^2 = id, anti-multiplicativity on canonical basis pairs, and
/// Q-linearity on sampled combinations.
template <class T>
InvolutionReport verify_involution_axioms(const Matrix<T>& scale) {
    if (!scale.is_hermitian())
        return {false, "scale is not symmetric: adjoint(a) != a"};
    auto scale_inv = invert(scale);
    if (!scale_inv)
        return {false, "scale is not invertible"};
    const int n = scale.n();
    const int m = q_dimension<T>(n);
    auto sigma = [&](const Matrix<T>& x) { return scale * x.adjoint() * *scale_inv; };

    std::vector<Matrix<T>> basis, image;
    basis.reserve(m);
    image.reserve(m);
    for (int u = 0; u < m; ++u) {
        basis.push_back(basis_element<T>(n, u));
        image.push_back(sigma(basis.back()));
    }
    for (int u = 0; u < m; ++u)
        if (sigma(image[u]) != basis[u])
            return {false, "sigma^2 != id at basis element " + std::to_string(u)};
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            if (sigma(basis[u] * basis[v]) != image[v] * image[u])
                return {false, "sigma(xy) != sigma(y)sigma(x) at basis pair (" +
                                   std::to_string(u) + ", " + std::to_string(v) + ")"};
    // Q-linearity spot checks (structurally true; kept for the contract).
    const Rational q(3, 2);
    for (int u = 0; u + 1 < m; u += std::max(1, m / 4)) {
        const Matrix<T> combo = q * basis[u] + basis[u + 1];
        if (sigma(combo) != q * image[u] + image[u + 1])
            return {false, "sigma is not Q-linear at sample " + std::to_string(u)};
    }
    return {true, ""};
}

template <class T>
InvolutionReport verify_involution(const Involution<T>& inv) {
    return verify_involution_axioms(inv.scale());
}

namespace detail {

/// Matrix of sigma as a Q-linear endomorphism of M_n(D) in the canonical
/// basis (columns are images of basis vectors).
template <class T>
QGrid linear_map_of(const Involution<T>& inv) {
    const int n = inv.n();
    const int m = q_dimension<T>(n);
    QGrid s(m, m);
    for (int u = 0; u < m; ++u) {
        const auto col = flatten(inv.apply(basis_element<T>(n, u)));
        for (int r = 0; r < m; ++r) s.at(r, u) = col[r];
    }
    return s;
}

} // namespace detail

/// Kind and type from dim_Q Sym(M_n(D), sigma), solved exactly over the
/// canonical basis. First kind splits orthogonal/symplectic by the
/// m(m+1)/2 versus m(m-1)/2 dimension count at m = deg; the complex kind is
/// unitary (second kind) with dim_Q Sym = n^2.
template <class T>
KindAndType classify(const Involution<T>& inv) {
    const int n = inv.n();
    const int m_q = q_dimension<T>(n);
    QGrid s = detail::linear_map_of(inv);
    for (int i = 0; i < m_q; ++i) s.at(i, i) -= Rational(1);
    const int dim_sym = m_q - rank(std::move(s));

    if constexpr (kind_of_v<T> == Kind::complex) {
        if (dim_sym != n * n)
            throw InternalError("unitary involution with unexpected dim Sym = " +
                                std::to_string(dim_sym));
        return {InvolutionKind::second, InvolutionType::unitary, dim_sym};
    } else {
        const int deg = degree(Matrix<T>::identity(n));
        if (dim_sym == deg * (deg + 1) / 2)
            return {InvolutionKind::first, InvolutionType::orthogonal, dim_sym};
        if (dim_sym == deg * (deg - 1) / 2)
            return {InvolutionKind::first, InvolutionType::symplectic, dim_sym};
        throw InternalError("first-kind involution with dim Sym = " + std::to_string(dim_sym) +
                            " matching neither type formula");
    }
}

namespace detail {

/// Scale to integer components with content 1 and positive leading nonzero
/// component, removing the central-scalar ambiguity.
template <class T>
Matrix<T> normalize_central(const Matrix<T>& m) {
    constexpr int comps = ScalarTraits<T>::components;
    const auto coords = flatten(m);
    mpz_class den_lcm = 1;
    for (const Rational& c : coords)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
    mpz_class content = 0;
    for (const Rational& c : coords) {
        mpz_class num = c.numerator() * den_lcm / c.denominator();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    if (content == 0) return m;  // zero matrix
    int lead_sign = 0;
    for (const Rational& c : coords)
        if (!c.is_zero()) { lead_sign = c.sign(); break; }
    Rational factor(lead_sign < 0 ? -den_lcm : den_lcm, content);
    (void)comps;
    return factor * m;
}

} // namespace detail

/// Solves sigma = Int(a) o gamma for an invertible a: the Q-linear system
/// sigma(x) a = a gamma(x) over the canonical basis, intersected with
/// invertibility. The solution space is Z(A)-one-dimensional when the types
/// match; the first invertible nullspace basis vector is returned,
/// normalized to integer components with content 1. nullopt when no
/// invertible solution exists (a type mismatch upstream).
template <class T>
std::optional<Matrix<T>> solve_scaling(const Involution<T>& sigma, const Involution<T>& gamma) {
    if (sigma.n() != gamma.n()) throw ShapeError("solve_scaling: size mismatch");
    const int n = sigma.n();
    const int m = q_dimension<T>(n);

    std::vector<Matrix<T>> basis, sig_img, gam_img;
    for (int u = 0; u < m; ++u) {
        basis.push_back(basis_element<T>(n, u));
        sig_img.push_back(sigma.apply(basis.back()));
        gam_img.push_back(gamma.apply(basis.back()));
    }

    QGrid sys(m * m, m);
    for (int v = 0; v < m; ++v)
        for (int u = 0; u < m; ++u) {
            const auto col = flatten(sig_img[v] * basis[u] - basis[u] * gam_img[v]);
            for (int r = 0; r < m; ++r) sys.at(v * m + r, u) = col[r];
        }

    for (const auto& vec : nullspace_basis(sys)) {
        Matrix<T> a = unflatten<T>(n, vec);
        if (invert(a)) return detail::normalize_central(a);
    }
    return std::nullopt;
}

struct PositivityResult {
    bool positive = false;
    Matrix<Rational> gram;  // Gram matrix of (x, y) -> Trd(sigma(x) y) over Q
    CongruenceCertificate<Rational> certificate;
};

namespace detail {

inline Rational descend_to_q(const Rational& t) { return t; }
inline Rational descend_to_q(const GaussRational& t) { return Rational(2) * t.re; }

} // namespace detail

/// Positivity of the involution: the trace form (x, y) -> Trd(sigma(x) y)
/// must be positive definite. For the complex kind the form is valued in the
/// centre and is taken down to Q through z -> z + conj(z). The verdict
/// carries the congruence diagonalization of the Gram matrix.
template <class T>
PositivityResult is_positive(const Involution<T>& inv) {
    const int n = inv.n();
    const int m = q_dimension<T>(n);
    std::vector<Matrix<T>> basis, sig_img;
    for (int u = 0; u < m; ++u) {
        basis.push_back(basis_element<T>(n, u));
        sig_img.push_back(inv.apply(basis.back()));
    }
    Matrix<Rational> gram(m);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v)
            gram.at(u, v) = detail::descend_to_q(reduced_trace_of_product(sig_img[u], basis[v]));

    PositivityResult r;
    r.certificate = diagonalize_congruence(gram);
    r.positive = true;
    for (const Rational& x : r.certificate.d)
        if (x.sign() <= 0) { r.positive = false; break; }
    r.gram = std::move(gram);
    return r;
}

/// Checks that b realizes the isomorphism (A, Int(a) o sigma) -> (A, sigma):
/// a^{-1} = sigma(b) b exactly, and Int(b) intertwines the two involutions
/// on the canonical basis.
template <class T>
bool verify_scaling_iso(const Matrix<T>& a, const Matrix<T>& b, const Involution<T>& inv) {
    if (a.n() != inv.n() || b.n() != inv.n()) throw ShapeError("verify_scaling_iso: size mismatch");
    if (!a.is_hermitian()) return false;
    auto a_inv = invert(a);
    if (!a_inv) return false;
    if (*a_inv != inv.apply(b) * b) return false;
    auto b_inv = invert(b);
    if (!b_inv) return false;

    const int m = q_dimension<T>(inv.n());
    for (int u = 0; u < m; ++u) {
        const Matrix<T> x = basis_element<T>(inv.n(), u);
        const Matrix<T> lhs = b * (a * inv.apply(x) * *a_inv) * *b_inv;
        const Matrix<T> rhs = inv.apply(b * x * *b_inv);
        if (lhs != rhs) return false;
    }
    return true;
}

// --- certificates for membership in generated cones -----------------------

/// Carathéodory-shaped certificate that z lies in the cone generated by the
/// base PSD cone and the symmetric element a inside (A, sigma):
/// z = p + sum_i u_i sigma(x_i) a x_i with p PSD and u_i >= 0, with at most
/// dim_Q(A) + 1 terms.
template <class T>
struct ConeCertificate {
    Matrix<T> p;
    CongruenceCertificate<T> p_certificate;
    std::vector<std::pair<Rational, Matrix<T>>> terms;
};

struct ConeVerification {
    bool ok = true;
    std::string failure;
};

template <class T>
ConeVerification verify_cone_certificate(const Matrix<T>& a, const Involution<T>& inv,
                                         const Matrix<T>& z, const ConeCertificate<T>& cert) {
    const int n = inv.n();
    if (a.n() != n || z.n() != n || cert.p.n() != n)
        return {false, "shape mismatch between certificate and ambient algebra"};
    const int m = q_dimension<T>(n);
    if (static_cast<int>(cert.terms.size()) > m + 1)
        return {false, "more than dim_Q(A) + 1 = " + std::to_string(m + 1) + " terms"};
    for (size_t i = 0; i < cert.terms.size(); ++i)
        if (cert.terms[i].first.sign() < 0)
            return {false, "negative weight u_" + std::to_string(i)};
    if (!cert.p.is_hermitian()) return {false, "p is not hermitian"};
    if (!verify_congruence(cert.p, cert.p_certificate))
        return {false, "congruence certificate for p does not verify"};
    for (const Rational& x : cert.p_certificate.d)
        if (x.sign() < 0) return {false, "certificate for p has a negative diagonal value"};

    Matrix<T> sum = cert.p;
    for (const auto& [u, x] : cert.terms) {
        if (x.n() != n) return {false, "term has wrong dimension"};
        sum += u * (inv.apply(x) * a * x);
    }
    if (sum != z) return {false, "z != p + sum of u_i sigma(x_i) a x_i"};
    return {true, ""};
}

} // namespace csalg
