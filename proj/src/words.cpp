#include "csalg/words.hpp"

#include <array>
#include <sstream>
#include <thread>

namespace csalg {

// --- Word ------------------------------------------------------------------

std::string Word::str() const {
    std::ostringstream os;
    for (size_t t = 0; t < letters.size(); ++t) {
        if (t) os << ' ';
        os << ((letters[t] % 2) ? 's' : 'x') << (letters[t] / 2 + 1);
    }
    return os.str();
}

std::optional<Word> Word::parse(const std::string& tokens) {
    std::istringstream is(tokens);
    std::vector<uint8_t> letters;
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 's')) return std::nullopt;
        int idx = 0;
        for (size_t i = 1; i < tok.size(); ++i) {
            if (tok[i] < '0' || tok[i] > '9') return std::nullopt;
            idx = idx * 10 + (tok[i] - '0');
            if (idx > 127) return std::nullopt;
        }
        if (idx < 1) return std::nullopt;
        letters.push_back(static_cast<uint8_t>(2 * (idx - 1) + (tok[0] == 's' ? 1 : 0)));
    }
    if (letters.empty()) return std::nullopt;
    return Word(std::move(letters));
}

Word Word::rotated(int r) const {
    const int len = length();
    std::vector<uint8_t> out(letters.size());
    for (int t = 0; t < len; ++t) out[t] = letters[(t + r) % len];
    return Word(std::move(out));
}

namespace {

bool least_rotation(const uint8_t* w, int len) {
    for (int r = 1; r < len; ++r) {
        for (int t = 0; t < len; ++t) {
            const uint8_t a = w[(t + r) % len], b = w[t];
            if (a < b) return false;
            if (a > b) break;
        }
    }
    return true;
}

} // namespace

bool Word::is_canonical() const {
    return least_rotation(letters.data(), length());
}

// --- canonical (least-rotation) word enumeration ---------------------------

namespace {

// Fredricksen–Kessler–Maiorana recursion: emits, in lex order, every word of
// length exactly n that is the least rotation in its cyclic class.
void fkm_rec(int t, int p, int n, int k, std::vector<uint8_t>& a, std::vector<uint8_t>& out) {
    if (t > n) {
        if (n % p == 0) out.insert(out.end(), a.begin() + 1, a.begin() + 1 + n);
        return;
    }
    a[t] = a[t - p];
    fkm_rec(t + 1, p, n, k, a, out);
    for (int j = a[t - p] + 1; j < k; ++j) {
        a[t] = static_cast<uint8_t>(j);
        fkm_rec(t + 1, t, n, k, a, out);
    }
}

} // namespace

std::vector<uint8_t> canonical_words_flat(int alphabet, int len) {
    if (alphabet < 1 || len < 1) throw InvalidArgumentError("bad enumeration parameters");
    std::vector<uint8_t> out;
    std::vector<uint8_t> a(len + 1, 0);
    fkm_rec(1, 1, len, alphabet, a, out);
    return out;
}

// --- WordStream -------------------------------------------------------------

WordStream::WordStream(int d, int max_len, bool dedup_cyclic)
    : alphabet_(2 * d), max_len_(max_len), dedup_(dedup_cyclic) {
    if (d < 1 || d > 127) throw InvalidArgumentError("d must be in 1..127");
    if (max_len < 1) throw InvalidArgumentError("max_len must be >= 1");
}

void WordStream::advance_length() {
    ++len_;
    pos_ = 0;
    exhausted_ = false;
    if (len_ > max_len_) return;
    if (dedup_) {
        buffer_ = canonical_words_flat(alphabet_, len_);
        count_ = buffer_.size() / len_;
    } else {
        current_.assign(len_, 0);  // odometer; no word count is materialized
    }
}

std::optional<Word> WordStream::next() {
    if (dedup_) {
        while (len_ <= max_len_ && pos_ >= count_) advance_length();
        if (len_ > max_len_) return std::nullopt;
        const uint8_t* w = buffer_.data() + pos_ * len_;
        ++pos_;
        return Word(std::vector<uint8_t>(w, w + len_));
    }
    while (len_ <= max_len_ && (len_ == 0 || exhausted_)) advance_length();
    if (len_ > max_len_) return std::nullopt;
    Word out{current_};
    int t = len_ - 1;
    while (t >= 0 && current_[t] == alphabet_ - 1) current_[t--] = 0;
    if (t < 0)
        exhausted_ = true;
    else
        ++current_[t];
    return out;
}

// --- reference evaluation (exact rationals) ---------------------------------

template <class T>
center_t<T> word_trace(const MatrixTuple<T>& X, const Word& w) {
    if (w.length() < 1) throw InvalidArgumentError("word must be nonempty");
    const int d = X.d();
    auto letter = [&](uint8_t c) -> Matrix<T> {
        const int i = c / 2;
        if (i >= d) throw InvalidArgumentError("word letter index out of range");
        return (c % 2) ? X.items[i].adjoint() : X.items[i];
    };
    Matrix<T> p = letter(w.letters[0]);
    for (size_t t = 1; t < w.letters.size(); ++t) p = p * letter(w.letters[t]);
    return reduced_trace(p);
}

template Rational word_trace<Rational>(const MatrixTuple<Rational>&, const Word&);
template GaussRational word_trace<GaussRational>(const MatrixTuple<GaussRational>&, const Word&);
template Rational word_trace<RatQuaternion>(const MatrixTuple<RatQuaternion>&, const Word&);

// --- integer-scaled scan engine ---------------------------------------------
//
// Matrices enter the scan as integer matrices with one positive scalar
// denominator per tuple, so word products are pure mpz arithmetic (no gcd
// normalization) and fingerprints compare by cross-multiplication.

namespace {

struct ZReal {
    mpz_class v;
    static constexpr int trace_comps = 1;
    static void mul_acc(ZReal& acc, const ZReal& x, const ZReal& y) { acc.v += x.v * y.v; }
    static ZReal conjed(const ZReal& x) { return {x.v}; }
    static void trace_acc(std::array<mpz_class, 1>& t, const ZReal& x, const ZReal& y) {
        t[0] += x.v * y.v;
    }
    static void diag_acc(std::array<mpz_class, 1>& t, const ZReal& x) { t[0] += x.v; }
};

struct ZComplex {
    mpz_class re, im;
    static constexpr int trace_comps = 2;
    static void mul_acc(ZComplex& acc, const ZComplex& x, const ZComplex& y) {
        acc.re += x.re * y.re;
        acc.re -= x.im * y.im;
        acc.im += x.re * y.im;
        acc.im += x.im * y.re;
    }
    static ZComplex conjed(const ZComplex& x) { return {x.re, -x.im}; }
    static void trace_acc(std::array<mpz_class, 2>& t, const ZComplex& x, const ZComplex& y) {
        t[0] += x.re * y.re;
        t[0] -= x.im * y.im;
        t[1] += x.re * y.im;
        t[1] += x.im * y.re;
    }
    static void diag_acc(std::array<mpz_class, 2>& t, const ZComplex& x) {
        t[0] += x.re;
        t[1] += x.im;
    }
};

struct ZQuat {
    mpz_class a, b, c, d;
    static constexpr int trace_comps = 1;  // reduced trace sees the real part only
    static void mul_acc(ZQuat& acc, const ZQuat& x, const ZQuat& y) {
        acc.a += x.a * y.a; acc.a -= x.b * y.b; acc.a -= x.c * y.c; acc.a -= x.d * y.d;
        acc.b += x.a * y.b; acc.b += x.b * y.a; acc.b += x.c * y.d; acc.b -= x.d * y.c;
        acc.c += x.a * y.c; acc.c -= x.b * y.d; acc.c += x.c * y.a; acc.c += x.d * y.b;
        acc.d += x.a * y.d; acc.d += x.b * y.c; acc.d -= x.c * y.b; acc.d += x.d * y.a;
    }
    static ZQuat conjed(const ZQuat& x) { return {x.a, -x.b, -x.c, -x.d}; }
    static void trace_acc(std::array<mpz_class, 1>& t, const ZQuat& x, const ZQuat& y) {
        t[0] += x.a * y.a;
        t[0] -= x.b * y.b;
        t[0] -= x.c * y.c;
        t[0] -= x.d * y.d;
    }
    static void diag_acc(std::array<mpz_class, 1>& t, const ZQuat& x) { t[0] += x.a; }
};

template <class T> struct ZOf;
template <> struct ZOf<Rational> { using type = ZReal; };
template <> struct ZOf<GaussRational> { using type = ZComplex; };
template <> struct ZOf<RatQuaternion> { using type = ZQuat; };

template <class Z>
struct ZMat {
    int n = 0;
    std::vector<Z> e;
    explicit ZMat(int nn = 0) : n(nn), e(static_cast<size_t>(nn) * nn) {}
    Z& at(int i, int j) { return e[static_cast<size_t>(i) * n + j]; }
    const Z& at(int i, int j) const { return e[static_cast<size_t>(i) * n + j]; }
};

template <class Z>
ZMat<Z> zmul(const ZMat<Z>& a, const ZMat<Z>& b) {
    ZMat<Z> c(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int k = 0; k < a.n; ++k) {
            const Z& aik = a.at(i, k);
            for (int j = 0; j < a.n; ++j) Z::mul_acc(c.at(i, j), aik, b.at(k, j));
        }
    return c;
}

template <class Z>
ZMat<Z> zadjoint(const ZMat<Z>& a) {
    ZMat<Z> c(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) c.at(i, j) = Z::conjed(a.at(j, i));
    return c;
}

template <class Z>
using TraceVal = std::array<mpz_class, Z::trace_comps>;

template <class Z>
TraceVal<Z> trace_of_product(const ZMat<Z>& a, const ZMat<Z>& b) {
    TraceVal<Z> t{};
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) Z::trace_acc(t, a.at(i, j), b.at(j, i));
    return t;
}

template <class Z>
TraceVal<Z> trace_single(const ZMat<Z>& a) {
    TraceVal<Z> t{};
    for (int i = 0; i < a.n; ++i) Z::diag_acc(t, a.at(i, i));
    return t;
}

// tX / sX = tY / sY, compared as tX * sY == tY * sX componentwise.
template <class Z>
bool traces_equal(const TraceVal<Z>& tx, const mpz_class& sy_pow, const TraceVal<Z>& ty,
                  const mpz_class& sx_pow) {
    for (size_t c = 0; c < tx.size(); ++c)
        if (mpz_class(tx[c] * sy_pow) != mpz_class(ty[c] * sx_pow)) return false;
    return true;
}

template <class T>
mpz_class common_denominator(const std::vector<Matrix<T>>& ms) {
    mpz_class s = 1;
    Rational coords[4];
    for (const auto& m : ms)
        for (int i = 0; i < m.n(); ++i)
            for (int j = 0; j < m.n(); ++j) {
                scalar_coords(m.at(i, j), coords);
                for (int c = 0; c < ScalarTraits<T>::components; ++c) {
                    const mpz_class den = coords[c].denominator();
                    mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), den.get_mpz_t());
                }
            }
    return s;
}

template <class T>
ZMat<typename ZOf<T>::type> scale_to_int(const Matrix<T>& m, const mpz_class& s) {
    using Z = typename ZOf<T>::type;
    constexpr int comps = ScalarTraits<T>::components;
    ZMat<Z> out(m.n());
    Rational coords[4];
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) {
            scalar_coords(m.at(i, j), coords);
            mpz_class vals[4];
            for (int c = 0; c < comps; ++c)
                vals[c] = coords[c].numerator() * (s / coords[c].denominator());
            if constexpr (std::is_same_v<Z, ZReal>) {
                out.at(i, j) = ZReal{vals[0]};
            } else if constexpr (std::is_same_v<Z, ZComplex>) {
                out.at(i, j) = ZComplex{vals[0], vals[1]};
            } else {
                out.at(i, j) = ZQuat{vals[0], vals[1], vals[2], vals[3]};
            }
        }
    return out;
}

size_t max_component_bits(const mpz_class& x) {
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

template <class Z>
size_t letter_bits(const std::vector<ZMat<Z>>& letters) {
    size_t bits = 1;
    auto upd = [&](const mpz_class& v) { bits = std::max(bits, max_component_bits(v)); };
    for (const auto& m : letters)
        for (const Z& z : m.e) {
            if constexpr (std::is_same_v<Z, ZReal>) {
                upd(z.v);
            } else if constexpr (std::is_same_v<Z, ZComplex>) {
                upd(z.re); upd(z.im);
            } else {
                upd(z.a); upd(z.b); upd(z.c); upd(z.d);
            }
        }
    return bits;
}

constexpr size_t kTableBudgetBytes = 256ull << 20;

bool tables_fit(int k, int half, int n, int comps, size_t bits) {
    double total = 0;
    double cnt = 1;
    for (int l = 1; l <= half; ++l) {
        cnt *= k;
        const double per_mpz = 24.0 + 8.0 * (static_cast<double>(l) * (bits + 8) / 64.0 + 1);
        total += cnt * n * n * comps * per_mpz;
        if (total > static_cast<double>(kTableBudgetBytes)) return false;
    }
    return true;
}

// Per-tuple scan state: scaled letters, denominator, lazily built tables of
// all products of words of length <= built_len.
template <class Z>
struct TupleData {
    std::vector<ZMat<Z>> letters;
    mpz_class denom;
    std::vector<std::vector<ZMat<Z>>> table;  // table[l], l >= 1

    void ensure_tables(int upto) {
        const int k = static_cast<int>(letters.size());
        if (table.empty()) table.resize(1);  // dummy slot 0
        while (static_cast<int>(table.size()) - 1 < upto) {
            const int l = static_cast<int>(table.size());
            std::vector<ZMat<Z>> level;
            if (l == 1) {
                level = letters;
            } else {
                const auto& prev = table[l - 1];
                level.reserve(prev.size() * k);
                for (const auto& p : prev)
                    for (int c = 0; c < k; ++c) level.push_back(zmul(p, letters[c]));
            }
            table.push_back(std::move(level));
        }
    }
};

template <class Z>
size_t word_index(const uint8_t* w, int len, int k) {
    size_t idx = 0;
    for (int t = 0; t < len; ++t) idx = idx * k + w[t];
    return idx;
}

// Lex-least index in [0, count) of a canonical word of length len whose
// fingerprints differ, or npos. Pure function of the buffers; chunks of the
// range can run on separate threads and reduce by min.
template <class Z>
size_t scan_range_mitm(const std::vector<uint8_t>& flat, int len, int k, size_t begin, size_t end,
                       const TupleData<Z>& tx, const TupleData<Z>& ty, const mpz_class& sx_pow,
                       const mpz_class& sy_pow) {
    const int l1 = len - len / 2, l2 = len / 2;
    for (size_t i = begin; i < end; ++i) {
        const uint8_t* w = flat.data() + i * len;
        const size_t iu = word_index<Z>(w, l1, k);
        TraceVal<Z> vx, vy;
        if (l2 == 0) {
            vx = trace_single(tx.table[l1][iu]);
            vy = trace_single(ty.table[l1][iu]);
        } else {
            const size_t iv = word_index<Z>(w + l1, l2, k);
            vx = trace_of_product(tx.table[l1][iu], tx.table[l2][iv]);
            vy = trace_of_product(ty.table[l1][iu], ty.table[l2][iv]);
        }
        if (!traces_equal<Z>(vx, sy_pow, vy, sx_pow)) return i;
    }
    return static_cast<size_t>(-1);
}

// Depth-first direct scan of all words of exact length len in lex order,
// maintaining path products; needs no tables. Returns the first (lex-least)
// canonical word with differing fingerprints.
template <class Z>
bool scan_direct_length(int len, int k, const TupleData<Z>& tx, const TupleData<Z>& ty,
                        const mpz_class& sx_pow, const mpz_class& sy_pow,
                        std::vector<uint8_t>& word_out) {
    std::vector<uint8_t> w(len);
    std::vector<ZMat<Z>> px(len + 1), py(len + 1);
    auto rec = [&](auto&& self, int t) -> bool {
        if (t == len) {
            if (!least_rotation(w.data(), len)) return false;
            if (traces_equal<Z>(trace_single(px[len]), sy_pow, trace_single(py[len]), sx_pow))
                return false;
            word_out = w;
            return true;
        }
        for (int c = 0; c < k; ++c) {
            w[t] = static_cast<uint8_t>(c);
            px[t + 1] = (t == 0) ? tx.letters[c] : zmul(px[t], tx.letters[c]);
            py[t + 1] = (t == 0) ? ty.letters[c] : zmul(py[t], ty.letters[c]);
            if (self(self, t + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

template <class T>
TupleData<typename ZOf<T>::type> prepare_tuple(const MatrixTuple<T>& X) {
    using Z = typename ZOf<T>::type;
    TupleData<Z> td;
    td.denom = common_denominator(X.items);
    for (const auto& m : X.items) {
        ZMat<Z> zi = scale_to_int(m, td.denom);
        td.letters.push_back(zi);
        td.letters.push_back(zadjoint(zi));
    }
    return td;
}

} // namespace

template <class T>
SimilarityVerdict<T> decide_similarity(const MatrixTuple<T>& X, const MatrixTuple<T>& Y,
                                       std::optional<int> max_len, int threads,
                                       ScanStrategy strategy) {
    using Z = typename ZOf<T>::type;
    if (X.n() != Y.n() || X.d() != Y.d())
        throw ShapeError("decide_similarity: tuples must have the same size and length");
    const int n = X.n();
    const int d = X.d();
    if (d > 127) throw InvalidArgumentError("tuple length too large");
    const int bound = max_len.value_or(n * n);
    if (bound < 1) throw InvalidArgumentError("max_len must be >= 1");
    if (threads < 1) threads = 1;

    const int k = 2 * d;
    TupleData<Z> tx = prepare_tuple(X);
    TupleData<Z> ty = prepare_tuple(Y);

    bool use_tables;
    switch (strategy) {
        case ScanStrategy::split_tables: use_tables = true; break;
        case ScanStrategy::direct: use_tables = false; break;
        default: {
            const size_t bits = std::max(letter_bits(tx.letters), letter_bits(ty.letters));
            use_tables = tables_fit(k, (bound + 1) / 2, n, ScalarTraits<T>::components, bits);
        }
    }

    // The per-length canonical-word buffer grows like k^len / len; beyond
    // this cap the direct DFS (no buffers) takes over for that length.
    auto buffer_fits = [&](int len) {
        double total = 1;
        for (int i = 0; i < len; ++i) {
            total *= k;
            if (total > 2.5e8) return false;
        }
        return true;
    };

    for (int len = 1; len <= bound; ++len) {
        mpz_class sx_pow, sy_pow;
        mpz_pow_ui(sx_pow.get_mpz_t(), tx.denom.get_mpz_t(), len);
        mpz_pow_ui(sy_pow.get_mpz_t(), ty.denom.get_mpz_t(), len);

        std::vector<uint8_t> witness_letters;
        if (use_tables && buffer_fits(len)) {
            const int l1 = len - len / 2;
            tx.ensure_tables(l1);
            ty.ensure_tables(l1);
            const std::vector<uint8_t> flat = canonical_words_flat(k, len);
            const size_t count = flat.size() / len;
            size_t found = static_cast<size_t>(-1);
            if (threads <= 1 || count < 4096) {
                found = scan_range_mitm(flat, len, k, 0, count, tx, ty, sx_pow, sy_pow);
            } else {
                const int nt = std::min<size_t>(threads, 64);
                std::vector<size_t> results(nt, static_cast<size_t>(-1));
                std::vector<std::thread> pool;
                for (int t = 0; t < nt; ++t) {
                    const size_t lo = count * t / nt, hi = count * (t + 1) / nt;
                    pool.emplace_back([&, t, lo, hi] {
                        results[t] =
                            scan_range_mitm(flat, len, k, lo, hi, tx, ty, sx_pow, sy_pow);
                    });
                }
                for (auto& th : pool) th.join();
                for (size_t r : results) found = std::min(found, r);
            }
            if (found != static_cast<size_t>(-1))
                witness_letters.assign(flat.begin() + found * len,
                                       flat.begin() + (found + 1) * len);
        } else {
            scan_direct_length(len, k, tx, ty, sx_pow, sy_pow, witness_letters);
        }

        if (!witness_letters.empty()) {
            SimilarityVerdict<T> v;
            v.equivalent = false;
            v.witness = Word(std::move(witness_letters));
            const center_t<T> tx_val = word_trace(X, *v.witness);
            const center_t<T> ty_val = word_trace(Y, *v.witness);
            if (tx_val == ty_val)
                throw InternalError("scan engine and reference evaluation disagree");
            v.traces = std::make_pair(tx_val, ty_val);
            return v;
        }
    }

    SimilarityVerdict<T> v;
    v.equivalent = true;
    return v;
}

template SimilarityVerdict<Rational> decide_similarity<Rational>(const MatrixTuple<Rational>&,
                                                                 const MatrixTuple<Rational>&,
                                                                 std::optional<int>, int,
                                                                 ScanStrategy);
template SimilarityVerdict<GaussRational> decide_similarity<GaussRational>(
    const MatrixTuple<GaussRational>&, const MatrixTuple<GaussRational>&, std::optional<int>, int,
    ScanStrategy);
template SimilarityVerdict<RatQuaternion> decide_similarity<RatQuaternion>(
    const MatrixTuple<RatQuaternion>&, const MatrixTuple<RatQuaternion>&, std::optional<int>, int,
    ScanStrategy);

} // namespace csalg
