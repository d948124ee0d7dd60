#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csalg/random_gen.hpp"
#include "csalg/words.hpp"

using namespace csalg;

namespace {

Matrix<Rational> qmat(int n, std::vector<long> vals) {
    std::vector<Rational> e(vals.begin(), vals.end());
    return Matrix<Rational>(n, std::move(e));
}

std::vector<Word> drain(WordStream s) {
    std::vector<Word> out;
    while (auto w = s.next()) out.push_back(*w);
    return out;
}

template <class T>
MatrixTuple<T> conjugated_tuple(const MatrixTuple<T>& x, const Matrix<T>& o) {
    std::vector<Matrix<T>> items;
    for (const auto& m : x.items) items.push_back(o.adjoint() * m * o);
    return MatrixTuple<T>(std::move(items));
}

} // namespace

TEST_CASE("word tokens") {
    const Word w({0, 1, 2, 5});
    CHECK(w.str() == "x1 s1 x2 s3");
    CHECK(Word::parse("x1 s1 x2 s3") == w);
    CHECK(!Word::parse(""));
    CHECK(!Word::parse("y1"));
    CHECK(!Word::parse("x0"));
    CHECK(!Word::parse("x"));
}

TEST_CASE("canonical form is the least rotation") {
    CHECK(Word({0, 1}).is_canonical());
    CHECK(!Word({1, 0}).is_canonical());
    CHECK(Word({0, 0, 1}).is_canonical());
    CHECK(!Word({0, 1, 0}).is_canonical());
    CHECK(Word({2}).rotated(0) == Word({2}));
    CHECK(Word({0, 1, 2}).rotated(1) == Word({1, 2, 0}));
}

TEST_CASE("enumeration counts") {
    // d = 1, max_len = 1: x1, s1
    const auto a = drain(WordStream(1, 1, false));
    REQUIRE(a.size() == 2);
    CHECK(a[0] == Word({0}));
    CHECK(a[1] == Word({1}));

    // d = 1, max_len = 2, dedup: x1, s1, x1x1, x1s1, s1s1
    const auto b = drain(WordStream(1, 2, true));
    REQUIRE(b.size() == 5);
    CHECK(b[2] == Word({0, 0}));
    CHECK(b[3] == Word({0, 1}));
    CHECK(b[4] == Word({1, 1}));

    // d = 2, max_len = 4, no dedup: 4 + 16 + 64 + 256
    CHECK(drain(WordStream(2, 4, false)).size() == 340);
}

TEST_CASE("canonical stream equals the filtered full stream") {
    // lengths up to 6 cover periodic classes with composite periods
    const auto full = drain(WordStream(2, 6, false));
    std::vector<Word> filtered;
    for (const auto& w : full)
        if (w.is_canonical()) filtered.push_back(w);
    const auto canon = drain(WordStream(2, 6, true));
    CHECK(canon == filtered);

    const auto full1 = drain(WordStream(1, 7, false));
    std::vector<Word> filtered1;
    for (const auto& w : full1)
        if (w.is_canonical()) filtered1.push_back(w);
    CHECK(drain(WordStream(1, 7, true)) == filtered1);
}

TEST_CASE("word traces") {
    const MatrixTuple<Rational> id3({Matrix<Rational>::identity(3)});
    CHECK(word_trace(id3, Word({0})) == Rational(3));

    const MatrixTuple<Rational> nil({qmat(2, {0, 1, 0, 0})});
    CHECK(word_trace(nil, Word({0, 1})) == Rational(1));  // tr(X X^t)

    const MatrixTuple<Rational> nil2({qmat(2, {0, 2, 0, 0})});
    CHECK(word_trace(nil2, Word({0, 1})) == Rational(4));

    CHECK_THROWS_AS(word_trace(id3, Word({2})), InvalidArgumentError);
}

TEST_CASE("word traces are cyclic invariants") {
    Rng rng(107);
    for (int t = 0; t < 10; ++t) {
        const MatrixTuple<RatQuaternion> x(
            {random_matrix<RatQuaternion>(rng, 2), random_matrix<RatQuaternion>(rng, 2)});
        const MatrixTuple<GaussRational> y(
            {random_matrix<GaussRational>(rng, 2), random_matrix<GaussRational>(rng, 2)});
        for (int len = 2; len <= 4; ++len) {
            std::vector<uint8_t> letters;
            for (int i = 0; i < len; ++i)
                letters.push_back(static_cast<uint8_t>(rng.uniform(0, 3)));
            const Word w(letters);
            for (int r = 1; r < len; ++r) {
                CHECK(word_trace(x, w) == word_trace(x, w.rotated(r)));
                CHECK(word_trace(y, w) == word_trace(y, w.rotated(r)));
            }
        }
    }
}

TEST_CASE("identical tuples are equivalent") {
    Rng rng(109);
    const MatrixTuple<Rational> x({random_matrix<Rational>(rng, 2)});
    const auto v = decide_similarity(x, x);
    CHECK(v.equivalent);
    CHECK(!v.witness);
}

TEST_CASE("the basic separation example") {
    const MatrixTuple<Rational> x({qmat(2, {0, 1, 0, 0})});
    const MatrixTuple<Rational> y({qmat(2, {0, 2, 0, 0})});
    const auto v = decide_similarity(x, y);
    REQUIRE(!v.equivalent);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->str() == "x1 s1");
    REQUIRE(v.traces.has_value());
    CHECK(v.traces->first == Rational(1));
    CHECK(v.traces->second == Rational(4));
}

TEST_CASE("cayley transform") {
    CHECK(cayley_unitary(Matrix<Rational>::zero(2)) == Matrix<Rational>::identity(2));
    CHECK(cayley_unitary(qmat(2, {0, 1, -1, 0})) == qmat(2, {0, -1, 1, 0}));
    CHECK_THROWS_AS(cayley_unitary(qmat(2, {1, 0, 0, 1})), InvalidArgumentError);

    Rng rng(113);
    for (int t = 0; t < 20; ++t) {
        const auto s = random_anti_hermitian<RatQuaternion>(rng, 2);
        const auto o = cayley_unitary(s);
        CHECK(o.adjoint() * o == Matrix<RatQuaternion>::identity(2));
        const auto sc = random_anti_hermitian<GaussRational>(rng, 3);
        const auto oc = cayley_unitary(sc);
        CHECK(oc.adjoint() * oc == Matrix<GaussRational>::identity(3));
    }
}

TEST_CASE("unitary conjugates are equivalent") {
    Rng rng(127);
    for (int t = 0; t < 6; ++t) {
        const int n = 2 + t % 2;
        const MatrixTuple<GaussRational> x(
            {random_matrix<GaussRational>(rng, n), random_matrix<GaussRational>(rng, n)});
        const auto o = cayley_unitary(random_anti_hermitian<GaussRational>(rng, n));
        CHECK(decide_similarity(x, conjugated_tuple(x, o)).equivalent);
    }
    for (int t = 0; t < 4; ++t) {
        const MatrixTuple<RatQuaternion> x({random_matrix<RatQuaternion>(rng, 2)});
        const auto o = cayley_unitary(random_anti_hermitian<RatQuaternion>(rng, 2));
        CHECK(decide_similarity(x, conjugated_tuple(x, o)).equivalent);
    }
}

TEST_CASE("witnesses verify and are monotone in the bound") {
    Rng rng(131);
    for (int t = 0; t < 12; ++t) {
        const int n = 2;
        const MatrixTuple<Rational> x(
            {random_matrix<Rational>(rng, n), random_matrix<Rational>(rng, n)});
        const auto o = cayley_unitary(random_anti_hermitian<Rational>(rng, n));
        auto items = conjugated_tuple(x, o).items;
        items[0].at(0, 1) += Rational(1);
        const MatrixTuple<Rational> y(std::move(items));

        const auto v = decide_similarity(x, y);
        REQUIRE(!v.equivalent);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->length() <= n * n);
        CHECK(word_trace(x, *v.witness) != word_trace(y, *v.witness));
        CHECK(v.witness->is_canonical());

        // a larger bound finds a witness of the same minimal length
        const auto v2 = decide_similarity(x, y, n * n + 3);
        REQUIRE(v2.witness.has_value());
        CHECK(v2.witness->length() == v.witness->length());
    }
}

TEST_CASE("scan strategies agree") {
    Rng rng(137);
    for (int t = 0; t < 10; ++t) {
        const MatrixTuple<RatQuaternion> x(
            {random_matrix<RatQuaternion>(rng, 2), random_matrix<RatQuaternion>(rng, 2)});
        MatrixTuple<RatQuaternion> y = x;
        if (t % 2 == 0) y.items[t % 2].at(0, 0) += RatQuaternion(1);
        const auto a = decide_similarity(x, y, 4, 1, ScanStrategy::split_tables);
        const auto b = decide_similarity(x, y, 4, 1, ScanStrategy::direct);
        const auto c = decide_similarity(x, y, 4, 2, ScanStrategy::split_tables);
        CHECK(a.equivalent == b.equivalent);
        CHECK(a.witness == b.witness);
        CHECK(a.equivalent == c.equivalent);
        CHECK(a.witness == c.witness);
    }
}

TEST_CASE("quaternion verdicts persist through the star embedding") {
    Rng rng(139);
    for (int t = 0; t < 4; ++t) {
        const int n = 2;
        const MatrixTuple<RatQuaternion> x({random_matrix<RatQuaternion>(rng, n)});
        const auto o = cayley_unitary(random_anti_hermitian<RatQuaternion>(rng, n));
        const auto y = conjugated_tuple(x, o);
        REQUIRE(decide_similarity(x, y).equivalent);

        // the complex scan over the star images up to the same length also
        // finds no witness
        const MatrixTuple<GaussRational> xs({star_embed(x.items[0])});
        const MatrixTuple<GaussRational> ys({star_embed(y.items[0])});
        CHECK(decide_similarity(xs, ys, n * n).equivalent);
    }
}

TEST_CASE("shape validation") {
    const MatrixTuple<Rational> x({Matrix<Rational>::identity(2)});
    const MatrixTuple<Rational> y3({Matrix<Rational>::identity(3)});
    CHECK_THROWS_AS(decide_similarity(x, y3), ShapeError);
    const MatrixTuple<Rational> y2(
        {Matrix<Rational>::identity(2), Matrix<Rational>::identity(2)});
    CHECK_THROWS_AS(decide_similarity(x, y2), ShapeError);
    CHECK_THROWS_AS(decide_similarity(x, x, 0), InvalidArgumentError);
}
