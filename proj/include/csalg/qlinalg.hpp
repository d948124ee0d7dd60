#pragma once

#include <vector>

#include "csalg/rational.hpp"

namespace csalg {

/// Dense rectangular matrix over Q, row-major. Only what the involution and
/// structure-constant machinery needs: reduced row echelon form, rank, and
/// nullspace bases, all exact.
struct QGrid {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> e;

    QGrid() = default;
    QGrid(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}

    Rational& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
};

/// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<int> rref(QGrid& g);

int rank(QGrid g);

/// Basis of {x : g x = 0}, one vector per free column, in increasing order
/// of free column index. Deterministic: free variable set to 1, pivots
/// back-substituted.
std::vector<std::vector<Rational>> nullspace_basis(const QGrid& g);

} // namespace csalg
