#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csalg/matrix.hpp"

namespace csalg {

/// Word over the alphabet {x_1, ..., x_d, x_1^s, ..., x_d^s}. Letter codes:
/// 2*(i-1) is x_i, 2*(i-1)+1 is x_i^s, so lexicographic order on codes is
/// x_1 < x_1^s < x_2 < x_2^s < ...
struct Word {
    std::vector<uint8_t> letters;

    Word() = default;
    explicit Word(std::vector<uint8_t> ls) : letters(std::move(ls)) {}

    int length() const { return static_cast<int>(letters.size()); }

    /// Token form "x1 s1 x2 ..." (xi for x_i, si for x_i^s).
    std::string str() const;
    static std::optional<Word> parse(const std::string& tokens);

    Word rotated(int r) const;
    /// True when the word is the lexicographically least among its rotations,
    /// i.e. the canonical representative of its cyclic class.
    bool is_canonical() const;

    friend bool operator==(const Word&, const Word&) = default;
};

/// Streams every word of length 1..max_len over the 2d-letter alphabet in
/// (length, lex) order; with dedup_cyclic only canonical representatives are
/// produced, which is sound for trace fingerprints since the reduced trace
/// is a cyclic invariant.
class WordStream {
public:
    WordStream(int d, int max_len, bool dedup_cyclic);

    std::optional<Word> next();

private:
    void advance_length();

    int alphabet_;
    int max_len_;
    bool dedup_;
    int len_ = 0;
    size_t pos_ = 0;
    std::vector<uint8_t> buffer_;   // canonical words of the current length, flat
    size_t count_ = 0;              // dedup mode only
    std::vector<uint8_t> current_;  // full mode: odometer state
    bool exhausted_ = false;        // full mode: current length done
};

/// All canonical representatives of the given exact length, in lex order,
/// concatenated into a flat buffer (count * len codes).
std::vector<uint8_t> canonical_words_flat(int alphabet, int len);

/// Reduced trace of the word evaluated at the tuple, substituting X_i for
/// x_i and adjoint(X_i) for x_i^s, product taken left to right.
template <class T>
center_t<T> word_trace(const MatrixTuple<T>& X, const Word& w);

template <class T>
struct SimilarityVerdict {
    bool equivalent = false;
    std::optional<Word> witness;
    std::optional<std::pair<center_t<T>, center_t<T>>> traces;  // (X value, Y value)
};

/// Evaluation strategy for the word scan; `automatic` picks split-product
/// tables when they fit in memory and falls back to a direct depth-first
/// scan otherwise. All strategies produce the identical verdict.
enum class ScanStrategy { automatic, split_tables, direct };

/// Simultaneous unitary similarity of X and Y, decided by comparing the
/// reduced traces of all words of length up to max_len (default n^2) in the
/// tuples and their adjoints; scanned in increasing length then lex order
/// over canonical cyclic representatives, so a returned witness is minimal
/// in that order. An `equivalent` verdict asserts a unitary O exists over
/// the real closure; O is not constructed.
template <class T>
SimilarityVerdict<T> decide_similarity(const MatrixTuple<T>& X, const MatrixTuple<T>& Y,
                                       std::optional<int> max_len = std::nullopt,
                                       int threads = 1,
                                       ScanStrategy strategy = ScanStrategy::automatic);

/// Cayley transform O = (I - S)(I + S)^{-1} of an anti-hermitian S; the
/// result satisfies adjoint(O) * O = I exactly.
template <class T>
Matrix<T> cayley_unitary(const Matrix<T>& S) {
    if (!S.is_anti_hermitian())
        throw InvalidArgumentError("cayley_unitary: argument is not anti-hermitian");
    const Matrix<T> id = Matrix<T>::identity(S.n());
    auto inv = invert(id + S);
    if (!inv) throw InvalidArgumentError("cayley_unitary: I + S is singular");
    return (id - S) * *inv;
}

} // namespace csalg
