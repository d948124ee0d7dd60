#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csalg/matrix.hpp"
#include "csalg/random_gen.hpp"

namespace csalg {

/// Pivot-selection order for congruence elimination. Both orders are
/// deterministic; exposing two lets tests witness the law of inertia.
enum class PivotOrder { first, last };

/// Exact congruence diagonalization: adjoint(P) * H * P = diag(d).
template <class T>
struct CongruenceCertificate {
    Matrix<T> P;
    std::vector<Rational> d;
};

template <class T>
bool verify_congruence(const Matrix<T>& H, const CongruenceCertificate<T>& cert) {
    if (cert.P.n() != H.n() || static_cast<int>(cert.d.size()) != H.n()) return false;
    Matrix<T> lhs = cert.P.adjoint() * H * cert.P;
    Matrix<T> diag(H.n());
    for (int i = 0; i < H.n(); ++i) diag.at(i, i) = T(cert.d[i]);
    return lhs == diag;
}

struct SignatureResult {
    int positives = 0;
    int negatives = 0;
    int zeros = 0;
    int signature() const { return positives - negatives; }

    friend bool operator==(const SignatureResult&, const SignatureResult&) = default;
};

namespace detail {

// The diagonal of a hermitian matrix lies in Q; extract it.
template <class T>
Rational rational_diagonal_entry(const T& x) {
    Rational coords[4];
    scalar_coords(x, coords);
    for (int c = 1; c < ScalarTraits<T>::components; ++c)
        if (!coords[c].is_zero())
            throw InternalError("hermitian diagonal entry is not rational");
    return coords[0];
}

} // namespace detail

/// Hermitian Gaussian elimination by congruence. When a diagonal pivot is
/// missing, first try swapping in a later nonzero diagonal; otherwise fold a
/// nonzero off-diagonal entry q into the pivot position, using the unit
/// conj(q) when q has zero real part (this keeps the new pivot in Q even for
/// quaternion entries).
template <class T>
CongruenceCertificate<T> diagonalize_congruence(const Matrix<T>& H,
                                                PivotOrder order = PivotOrder::first) {
    if (!H.is_hermitian()) throw NotHermitianError("diagonalize_congruence: not hermitian");
    const int n = H.n();
    Matrix<T> m = H;
    Matrix<T> p = Matrix<T>::identity(n);

    // col_dst += col_src * beta, as a congruence (mirrored row op), with the
    // same column operation accumulated into p.
    auto add_column = [&](int dst, int src, const T& beta) {
        for (int r = 0; r < n; ++r) m.at(r, dst) += m.at(r, src) * beta;
        const T cb = conj(beta);
        for (int c = 0; c < n; ++c) m.at(dst, c) += cb * m.at(src, c);
        for (int r = 0; r < n; ++r) p.at(r, dst) += p.at(r, src) * beta;
    };
    auto swap_index = [&](int a, int b) {
        for (int r = 0; r < n; ++r) std::swap(m.at(r, a), m.at(r, b));
        for (int c = 0; c < n; ++c) std::swap(m.at(a, c), m.at(b, c));
        for (int r = 0; r < n; ++r) std::swap(p.at(r, a), p.at(r, b));
    };
    auto pick = [&](int from, auto&& pred) -> int {
        if (order == PivotOrder::first) {
            for (int j = from; j < n; ++j)
                if (pred(j)) return j;
        } else {
            for (int j = n - 1; j >= from; --j)
                if (pred(j)) return j;
        }
        return -1;
    };

    std::vector<Rational> d(n);
    for (int k = 0; k < n; ++k) {
        if (is_zero(m.at(k, k))) {
            const int jd = pick(k + 1, [&](int j) { return !is_zero(m.at(j, j)); });
            if (jd >= 0) {
                swap_index(k, jd);
            } else {
                const int jo = pick(k + 1, [&](int j) { return !is_zero(m.at(k, j)); });
                if (jo < 0) {
                    d[k] = Rational(0);  // row k of the trailing block is zero
                    continue;
                }
                const T q = m.at(k, jo);
                if (!real_part(q).is_zero())
                    add_column(k, jo, T(1));
                else
                    add_column(k, jo, conj(q));
            }
        }
        const Rational pivot = detail::rational_diagonal_entry(m.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            if (is_zero(m.at(k, i))) continue;
            const T alpha = T(Rational(-1) / pivot) * m.at(k, i);
            add_column(i, k, alpha);
        }
        d[k] = pivot;
    }
    return {std::move(p), std::move(d)};
}

template <class T>
SignatureResult signature(const Matrix<T>& H, PivotOrder order = PivotOrder::first) {
    const auto cert = diagonalize_congruence(H, order);
    SignatureResult s;
    for (const Rational& x : cert.d) {
        if (x.sign() > 0) ++s.positives;
        else if (x.sign() < 0) ++s.negatives;
        else ++s.zeros;
    }
    return s;
}

template <class T>
struct PsdResult {
    bool psd = false;
    CongruenceCertificate<T> certificate;
};

/// Positive semidefinite iff every diagonal value of the congruence
/// diagonalization is nonnegative.
template <class T>
PsdResult<T> is_psd(const Matrix<T>& H) {
    PsdResult<T> r{true, diagonalize_congruence(H)};
    for (const Rational& x : r.certificate.d)
        if (x.sign() < 0) { r.psd = false; break; }
    return r;
}

/// Outcome of the hermitian-square factorization H = adjoint(b) * b.
/// `exact` carries b with the identity holding over Q; `real_closure` means
/// H is PSD but some diagonal value is not a rational square, so b exists
/// only after adjoining the square roots; `not_psd` is a refutation.
template <class T>
struct HermitianSquareResult {
    enum class Status { exact, real_closure, not_psd };
    Status status;
    std::optional<Matrix<T>> b;
    CongruenceCertificate<T> certificate;
};

template <class T>
HermitianSquareResult<T> hermitian_square_certificate(const Matrix<T>& H) {
    using R = HermitianSquareResult<T>;
    auto cert = diagonalize_congruence(H);
    for (const Rational& x : cert.d)
        if (x.sign() < 0) return R{R::Status::not_psd, std::nullopt, std::move(cert)};

    std::vector<Rational> roots;
    roots.reserve(cert.d.size());
    for (const Rational& x : cert.d) {
        auto r = exact_sqrt(x);
        if (!r) return R{R::Status::real_closure, std::nullopt, std::move(cert)};
        roots.push_back(*r);
    }
    auto pinv = invert(cert.P);
    if (!pinv) throw InternalError("congruence transform is not invertible");
    Matrix<T> b(H.n());
    for (int i = 0; i < H.n(); ++i)
        for (int j = 0; j < H.n(); ++j) b.at(i, j) = T(roots[i]) * pinv->at(i, j);
    return R{R::Status::exact, std::move(b), std::move(cert)};
}

/// Membership of x in the scaled cone a * PSD, the positive cone of the
/// involution Int(a) o adjoint: holds iff a^{-1} x is hermitian and PSD.
template <class T>
bool cone_membership_scaled(const Matrix<T>& a, const Matrix<T>& x) {
    if (!a.is_hermitian()) throw InvalidArgumentError("scaling matrix must be hermitian");
    auto ainv = invert(a);
    if (!ainv) throw InvalidArgumentError("scaling matrix must be invertible");
    const Matrix<T> y = *ainv * x;
    if (!y.is_hermitian()) return false;
    return is_psd(y).psd;
}

// --- sampled checks of the cone axioms ------------------------------------

/// Test hook: deliberately corrupt one check so the reporting path can be
/// exercised. `claim_negated_psd` makes the properness check treat -p as PSD.
enum class ConeFault { none, claim_negated_psd };

struct ConeAxiomViolation {
    std::string axiom;
    std::string description;
};

struct ConeAxiomReport {
    int samples = 0;
    std::vector<ConeAxiomViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Draws random PSD matrices as adjoint(g)*g and random y, and checks the
/// closure and properness axioms of the PSD cone on (M_n(D), adjoint):
/// closure under addition, closure under p -> adjoint(y)*p*y, stability
/// under nonnegative rational scaling (and failure under negative scaling),
/// and properness (p and -p both PSD only for p = 0).
template <class T>
ConeAxiomReport sample_cone_axioms_typed(int n, int samples, uint64_t seed,
                                         ConeFault fault = ConeFault::none) {
    Rng rng(seed);
    ConeAxiomReport report;
    report.samples = samples;
    auto complain = [&](const char* axiom, const std::string& desc) {
        report.violations.push_back({axiom, desc});
    };
    for (int s = 0; s < samples; ++s) {
        Matrix<T> g1 = random_matrix<T>(rng, n, 5, 5);
        Matrix<T> g2 = random_matrix<T>(rng, n, 5, 5);
        Matrix<T> p1 = g1.adjoint() * g1;
        Matrix<T> p2 = g2.adjoint() * g2;
        Matrix<T> y = random_matrix<T>(rng, n, 5, 5);
        const Rational u(rng.uniform(0, 20), rng.uniform(1, 5));

        if (!is_psd(p1 + p2).psd)
            complain("P2", "sum of hermitian squares not PSD, p1 = " + p1.str() +
                               ", p2 = " + p2.str());
        if (!is_psd(y.adjoint() * p1 * y).psd)
            complain("P3", "adjoint(y)*p*y not PSD, p = " + p1.str() + ", y = " + y.str());
        if (!is_psd(u * p1).psd)
            complain("P4", "nonnegative scaling left the cone, u = " + u.str() +
                               ", p = " + p1.str());
        if (!p1.is_zero() && !u.is_zero() && is_psd(Rational(-1) * u * p1).psd)
            complain("P4", "negative scaling of nonzero PSD still PSD, p = " + p1.str());
        if (!p1.is_zero()) {
            bool neg_psd;
            if (fault == ConeFault::claim_negated_psd) {
                auto cert = diagonalize_congruence(Rational(-1) * p1);
                for (Rational& x : cert.d) x = -x;  // corrupted on purpose
                neg_psd = true;
                for (const Rational& x : cert.d)
                    if (x.sign() < 0) neg_psd = false;
            } else {
                neg_psd = is_psd(Rational(-1) * p1).psd;
            }
            if (neg_psd)
                complain("P5", "p and -p both PSD for nonzero p = " + p1.str());
        }
    }
    return report;
}

ConeAxiomReport sample_cone_axioms(Kind kind, int n, int samples, uint64_t seed,
                                   ConeFault fault = ConeFault::none);

} // namespace csalg
