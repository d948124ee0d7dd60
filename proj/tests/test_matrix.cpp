#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csalg/matrix.hpp"
#include "csalg/random_gen.hpp"

using namespace csalg;

namespace {

Matrix<Rational> qmat(int n, std::vector<long> vals) {
    std::vector<Rational> e(vals.begin(), vals.end());
    return Matrix<Rational>(n, std::move(e));
}

} // namespace

TEST_CASE("matrix product basics") {
    Rng rng(7);
    const auto a = random_matrix<Rational>(rng, 3);
    CHECK(Matrix<Rational>::identity(3) * a == a);
    CHECK(a * Matrix<Rational>::identity(3) == a);

    // E_{1,2} * E_{2,1} = E_{1,1} in M_2(Q)
    const auto e12 = basis_element<Rational>(2, 1);
    const auto e21 = basis_element<Rational>(2, 2);
    const auto e11 = basis_element<Rational>(2, 0);
    CHECK(e12 * e21 == e11);
    CHECK((e21 * e12) == basis_element<Rational>(2, 3));

    // (j I_1) (i I_1) = -k I_1 in M_1(H)
    const auto ji = Matrix<RatQuaternion>::scalar(1, RatQuaternion::unit_j()) *
                    Matrix<RatQuaternion>::scalar(1, RatQuaternion::unit_i());
    CHECK(ji == Matrix<RatQuaternion>::scalar(1, -RatQuaternion::unit_k()));

    CHECK_THROWS_AS(qmat(2, {1, 0, 0, 1}) * Matrix<Rational>::identity(3), ShapeError);
}

TEST_CASE("adjoint") {
    CHECK(Matrix<Rational>::identity(3).adjoint() == Matrix<Rational>::identity(3));

    Matrix<RatQuaternion> m(2);
    m.at(0, 1) = RatQuaternion::unit_i();
    Matrix<RatQuaternion> expect(2);
    expect.at(1, 0) = -RatQuaternion::unit_i();
    CHECK(m.adjoint() == expect);

    Rng rng(13);
    const auto a = random_matrix<Rational>(rng, 3);
    CHECK(a.adjoint() == a.transpose());  // real kind: plain transpose

    for (int t = 0; t < 50; ++t) {
        const auto x = random_matrix<RatQuaternion>(rng, 2);
        const auto y = random_matrix<RatQuaternion>(rng, 2);
        CHECK(x.adjoint().adjoint() == x);
        CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
    }
}

TEST_CASE("reduced trace values") {
    // Trd(I_1) = deg M_1(H) = 2
    CHECK(reduced_trace(Matrix<RatQuaternion>::identity(1)) == Rational(2));
    // Trd(i I_1) = 2 Re(i) = 0
    CHECK(reduced_trace(Matrix<RatQuaternion>::scalar(1, RatQuaternion::unit_i())) ==
          Rational(0));
    CHECK(reduced_trace(qmat(2, {1, 0, 0, 2})) == Rational(3));
    CHECK(reduced_trace(Matrix<GaussRational>::identity(3)) == GaussRational(3));
    CHECK(reduced_trace(Matrix<RatQuaternion>::identity(3)) == Rational(6));
}

TEST_CASE("trace symmetry Trd(AB) = Trd(BA)") {
    Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        const auto a = random_matrix<Rational>(rng, 3);
        const auto b = random_matrix<Rational>(rng, 3);
        CHECK(reduced_trace(a * b) == reduced_trace(b * a));
        const auto c = random_matrix<GaussRational>(rng, 2);
        const auto d = random_matrix<GaussRational>(rng, 2);
        CHECK(reduced_trace(c * d) == reduced_trace(d * c));
        const auto p = random_matrix<RatQuaternion>(rng, 2);
        const auto q = random_matrix<RatQuaternion>(rng, 2);
        CHECK(reduced_trace(p * q) == reduced_trace(q * p));
    }
}

TEST_CASE("reduced trace is invariant under conjugation") {
    Rng rng(19);
    for (int t = 0; t < 25; ++t) {
        const auto a = random_matrix<RatQuaternion>(rng, 2);
        const auto g = random_invertible<RatQuaternion>(rng, 2);
        CHECK(reduced_trace(g * a * *invert(g)) == reduced_trace(a));
        const auto b = random_matrix<GaussRational>(rng, 3);
        const auto h = random_invertible<GaussRational>(rng, 3);
        CHECK(reduced_trace(h * b * *invert(h)) == reduced_trace(b));
    }
}

TEST_CASE("star embedding block values") {
    // j I_1 -> [[0, -1], [1, 0]]
    const auto sj = star_embed(Matrix<RatQuaternion>::scalar(1, RatQuaternion::unit_j()));
    Matrix<GaussRational> expect(2);
    expect.at(0, 1) = GaussRational(-1);
    expect.at(1, 0) = GaussRational(1);
    CHECK(sj == expect);

    CHECK(star_embed(Matrix<RatQuaternion>::identity(1)) == Matrix<GaussRational>::identity(2));
    // i -> diag(i, -i)
    const auto si = star_embed(Matrix<RatQuaternion>::scalar(1, RatQuaternion::unit_i()));
    Matrix<GaussRational> di(2);
    di.at(0, 0) = GaussRational::sqrt_minus_one();
    di.at(1, 1) = -GaussRational::sqrt_minus_one();
    CHECK(si == di);
}

TEST_CASE("star embedding is a morphism of rings with involution") {
    Rng rng(29);
    for (int t = 0; t < 40; ++t) {
        const auto a = random_matrix<RatQuaternion>(rng, 2);
        const auto b = random_matrix<RatQuaternion>(rng, 2);
        CHECK(star_embed(a + b) == star_embed(a) + star_embed(b));
        CHECK(star_embed(a * b) == star_embed(a) * star_embed(b));
        CHECK(star_embed(a.adjoint()) == star_embed(a).adjoint());
        CHECK(star_pullback(star_embed(a)) == a);
    }
    CHECK(star_embed(Matrix<RatQuaternion>::identity(3)) == Matrix<GaussRational>::identity(6));
}

TEST_CASE("Trd equals the trace of the star image") {
    Rng rng(37);
    for (int t = 0; t < 60; ++t) {
        const int n = 1 + static_cast<int>(t % 3);
        const auto a = random_matrix<RatQuaternion>(rng, n);
        CHECK(GaussRational(reduced_trace(a)) == reduced_trace(star_embed(a)));
    }
}

TEST_CASE("inversion") {
    CHECK(invert(Matrix<Rational>::identity(3)) == Matrix<Rational>::identity(3));
    CHECK(invert(qmat(2, {2, 0, 0, 3})) ==
          Matrix<Rational>(2, {Rational(1, 2), Rational(0), Rational(0), Rational(1, 3)}));

    // [[i, 0], [0, j]] over H inverts to [[-i, 0], [0, -j]]
    Matrix<RatQuaternion> m(2);
    m.at(0, 0) = RatQuaternion::unit_i();
    m.at(1, 1) = RatQuaternion::unit_j();
    const auto mi = invert(m);
    REQUIRE(mi.has_value());
    CHECK(*mi * m == Matrix<RatQuaternion>::identity(2));
    CHECK(m * *mi == Matrix<RatQuaternion>::identity(2));
    CHECK(mi->at(0, 0) == -RatQuaternion::unit_i());
    CHECK(mi->at(1, 1) == -RatQuaternion::unit_j());

    CHECK(!invert(qmat(2, {1, 2, 2, 4})));
    CHECK(!invert(Matrix<RatQuaternion>::zero(2)));

    Rng rng(41);
    for (int t = 0; t < 30; ++t) {
        const auto g = random_invertible<GaussRational>(rng, 3);
        const auto gi = invert(g);
        REQUIRE(gi.has_value());
        CHECK(*gi * g == Matrix<GaussRational>::identity(3));
        CHECK(g * *gi == Matrix<GaussRational>::identity(3));
        const auto q = random_invertible<RatQuaternion>(rng, 2);
        const auto qi = invert(q);
        REQUIRE(qi.has_value());
        CHECK(*qi * q == Matrix<RatQuaternion>::identity(2));
        CHECK(q * *qi == Matrix<RatQuaternion>::identity(2));
    }
}

TEST_CASE("flatten and basis elements are inverse to each other") {
    Rng rng(43);
    const auto m = random_matrix<RatQuaternion>(rng, 2);
    CHECK(unflatten<RatQuaternion>(2, flatten(m)) == m);
    for (int u = 0; u < q_dimension<RatQuaternion>(2); ++u) {
        const auto coords = flatten(basis_element<RatQuaternion>(2, u));
        for (size_t i = 0; i < coords.size(); ++i)
            CHECK(coords[i] == Rational(static_cast<int>(i) == u ? 1 : 0));
    }
}

TEST_CASE("degrees and dimensions") {
    CHECK(degree(Matrix<Rational>::identity(3)) == 3);
    CHECK(degree(Matrix<GaussRational>::identity(3)) == 3);
    CHECK(degree(Matrix<RatQuaternion>::identity(3)) == 6);
    CHECK(q_dimension<Rational>(3) == 9);
    CHECK(q_dimension<GaussRational>(3) == 18);
    CHECK(q_dimension<RatQuaternion>(3) == 36);
}
