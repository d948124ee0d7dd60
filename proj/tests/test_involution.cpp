#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csalg/involution.hpp"
#include "csalg/random_gen.hpp"

using namespace csalg;

namespace {

Matrix<Rational> qmat(int n, std::vector<long> vals) {
    std::vector<Rational> e(vals.begin(), vals.end());
    return Matrix<Rational>(n, std::move(e));
}

} // namespace

TEST_CASE("construction rejects bad scales") {
    CHECK_THROWS_AS(Involution<Rational>::make(qmat(2, {1, 1, 0, 1})), InvalidArgumentError);
    CHECK_THROWS_AS(Involution<Rational>::make(qmat(2, {1, 1, 1, 1})), InvalidArgumentError);
    const auto rep = verify_involution_axioms(qmat(2, {1, 1, 0, 1}));
    CHECK(!rep.ok);
    CHECK(rep.first_violation.find("symmetric") != std::string::npos);
}

TEST_CASE("apply") {
    const auto adj = Involution<Rational>::adjoint_involution(2);
    Rng rng(83);
    const auto x = random_matrix<Rational>(rng, 2);
    CHECK(adj.apply(x) == x.adjoint());

    // scale diag(1,2): sigma(E12) = a E21 a^{-1} = 2 E21
    const auto inv = Involution<Rational>::make(qmat(2, {1, 0, 0, 2}));
    const auto e12 = qmat(2, {0, 1, 0, 0});
    CHECK(inv.apply(e12) == Rational(2) * qmat(2, {0, 0, 1, 0}));

    for (int t = 0; t < 40; ++t) {
        const auto y = random_matrix<Rational>(rng, 2);
        CHECK(inv.apply(inv.apply(y)) == y);
    }
    CHECK_THROWS_AS(inv.apply(Matrix<Rational>::identity(3)), ShapeError);
}

TEST_CASE("axiom suite passes for well-formed involutions") {
    CHECK(verify_involution(Involution<Rational>::adjoint_involution(2)).ok);
    // symmetric invertible with an off-diagonal part: E12 + E21 + E11
    const auto inv = Involution<Rational>::make(qmat(2, {1, 1, 1, 0}));
    CHECK(verify_involution(inv).ok);

    Rng rng(89);
    const auto aq = random_hermitian_invertible<RatQuaternion>(rng, 2);
    CHECK(verify_involution(Involution<RatQuaternion>::make(aq)).ok);
    const auto ac = random_hermitian_invertible<GaussRational>(rng, 2);
    CHECK(verify_involution(Involution<GaussRational>::make(ac)).ok);
}

TEST_CASE("classification of the adjoint involutions") {
    for (int n = 1; n <= 3; ++n) {
        const auto r = classify(Involution<Rational>::adjoint_involution(n));
        CHECK(r.kind == InvolutionKind::first);
        CHECK(r.type == InvolutionType::orthogonal);
        CHECK(r.dim_sym == n * (n + 1) / 2);

        const auto q = classify(Involution<RatQuaternion>::adjoint_involution(n));
        CHECK(q.kind == InvolutionKind::first);
        CHECK(q.type == InvolutionType::symplectic);
        CHECK(q.dim_sym == n * (2 * n - 1));

        const auto c = classify(Involution<GaussRational>::adjoint_involution(n));
        CHECK(c.kind == InvolutionKind::second);
        CHECK(c.type == InvolutionType::unitary);
        CHECK(c.dim_sym == n * n);
    }
}

TEST_CASE("classification is invariant under symmetric scaling") {
    Rng rng(97);
    for (int t = 0; t < 10; ++t) {
        const auto a = random_hermitian_invertible<Rational>(rng, 2);
        CHECK(classify(Involution<Rational>::make(a)) ==
              classify(Involution<Rational>::adjoint_involution(2)));
        const auto q = random_hermitian_invertible<RatQuaternion>(rng, 2);
        CHECK(classify(Involution<RatQuaternion>::make(q)) ==
              classify(Involution<RatQuaternion>::adjoint_involution(2)));
        const auto c = random_hermitian_invertible<GaussRational>(rng, 2);
        CHECK(classify(Involution<GaussRational>::make(c)) ==
              classify(Involution<GaussRational>::adjoint_involution(2)));
    }
}

TEST_CASE("solve_scaling") {
    const auto adj = Involution<Rational>::adjoint_involution(2);
    // gamma = sigma: a is central, normalized to the identity
    CHECK(solve_scaling(adj, adj) == Matrix<Rational>::identity(2));

    const auto cadj = Involution<GaussRational>::adjoint_involution(2);
    CHECK(solve_scaling(cadj, cadj) == Matrix<GaussRational>::identity(2));

    // sigma = Int(diag(1,2)) o t against gamma = t recovers diag(1,2)
    const auto sigma = Involution<Rational>::make(qmat(2, {1, 0, 0, 2}));
    const auto a = solve_scaling(sigma, adj);
    REQUIRE(a.has_value());
    CHECK(*a == qmat(2, {1, 0, 0, 2}));

    // substitution reproduces sigma on the whole basis
    for (int u = 0; u < q_dimension<Rational>(2); ++u) {
        const auto x = basis_element<Rational>(2, u);
        CHECK(sigma.apply(x) == *a * adj.apply(x) * *invert(*a));
    }
}

TEST_CASE("solve_scaling recovers g g^t up to a central factor") {
    Rng rng(101);
    for (int t = 0; t < 8; ++t) {
        const auto g = random_invertible<Rational>(rng, 2, 5, 3);
        const auto ggt = g * g.adjoint();
        const auto sigma = Involution<Rational>::make(ggt);
        const auto adj = Involution<Rational>::adjoint_involution(2);
        const auto a = solve_scaling(sigma, adj);
        REQUIRE(a.has_value());
        // proportionality: a = lambda * g g^t
        Rational lambda;
        for (int u = 0; u < 4 && lambda.is_zero(); ++u)
            if (!ggt.entries()[u].is_zero()) lambda = a->entries()[u] / ggt.entries()[u];
        CHECK(*a == lambda * ggt);
        for (int u = 0; u < q_dimension<Rational>(2); ++u) {
            const auto x = basis_element<Rational>(2, u);
            CHECK(sigma.apply(x) == *a * adj.apply(x) * *invert(*a));
        }
    }
}

TEST_CASE("positivity of involutions") {
    // the adjoint involution is positive for every kind up to n = 4
    for (int n = 1; n <= 4; ++n) {
        CHECK(is_positive(Involution<Rational>::adjoint_involution(n)).positive);
        CHECK(is_positive(Involution<GaussRational>::adjoint_involution(n)).positive);
        CHECK(is_positive(Involution<RatQuaternion>::adjoint_involution(n)).positive);
    }

    // Int(diag(1,-1)) o t is not positive: the Gram form picks up
    // Trd(sigma(E12) E12) = -1
    const auto indef = is_positive(Involution<Rational>::make(qmat(2, {1, 0, 0, -1})));
    CHECK(!indef.positive);

    CHECK(is_positive(Involution<Rational>::make(qmat(2, {1, 0, 0, 2}))).positive);

    // certificates verify
    const auto r = is_positive(Involution<Rational>::adjoint_involution(2));
    CHECK(verify_congruence(r.gram, r.certificate));
}

TEST_CASE("positive scaled involutions have definite scales") {
    Rng rng(103);
    int positives_seen = 0;
    for (int t = 0; t < 40; ++t) {
        Matrix<Rational> a(2);
        if (t % 2 == 0) {
            a = random_hermitian_invertible<Rational>(rng, 2, 5, 3);
        } else {
            const auto g = random_invertible<Rational>(rng, 2, 5, 3);
            a = g.adjoint() * g;
        }
        const auto inv = Involution<Rational>::make(a);
        if (is_positive(inv).positive) {
            ++positives_seen;
            const bool a_psd = is_psd(a).psd;
            const bool neg_a_psd = is_psd(Rational(-1) * a).psd;
            CHECK((a_psd || neg_a_psd));
        }
    }
    CHECK(positives_seen > 0);  // the adjoint(g)*g draws guarantee positives
}

TEST_CASE("verify_scaling_iso") {
    const auto adj = Involution<Rational>::adjoint_involution(2);
    CHECK(verify_scaling_iso(Matrix<Rational>::identity(2), Matrix<Rational>::identity(2), adj));

    // a = diag(1/4, 1/9), b = diag(2, 3): sigma(b) b = diag(4, 9) = a^{-1}
    Matrix<Rational> a(2);
    a.at(0, 0) = Rational(1, 4);
    a.at(1, 1) = Rational(1, 9);
    const auto b = qmat(2, {2, 0, 0, 3});
    CHECK(verify_scaling_iso(a, b, adj));

    // b not satisfying a^{-1} = sigma(b) b
    CHECK(!verify_scaling_iso(a, qmat(2, {2, 0, 0, 4}), adj));
}
