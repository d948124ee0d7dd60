#include "csalg/qlinalg.hpp"

namespace csalg {

std::vector<int> rref(QGrid& g) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < g.cols && row < g.rows; ++col) {
        int piv = -1;
        for (int r = row; r < g.rows; ++r)
            if (!g.at(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < g.cols; ++j) std::swap(g.at(piv, j), g.at(row, j));
        const Rational p = g.at(row, col);
        for (int j = col; j < g.cols; ++j) g.at(row, j) /= p;
        for (int r = 0; r < g.rows; ++r) {
            if (r == row) continue;
            const Rational f = g.at(r, col);
            if (f.is_zero()) continue;
            for (int j = col; j < g.cols; ++j) g.at(r, j) -= f * g.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(QGrid g) {
    return static_cast<int>(rref(g).size());
}

std::vector<std::vector<Rational>> nullspace_basis(const QGrid& g) {
    QGrid r = g;
    const std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(g.cols, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < g.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(g.cols);
        v[free] = Rational(1);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace csalg
