#include "qgem/gf2.hpp"

#include <algorithm>

namespace qgem {

Gf2Matrix Gf2Matrix::from_rows(const std::vector<BitVec>& rows_in) {
    Gf2Matrix m;
    m.rows = rows_in.size();
    m.cols = rows_in.empty() ? 0 : rows_in[0].size();
    m.r = rows_in;
    return m;
}

std::vector<std::size_t> Gf2Matrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t sel = lead;
        while (sel < rows && !r[sel].get(col)) ++sel;
        if (sel == rows) continue;
        std::swap(r[lead], r[sel]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != lead && r[i].get(col)) r[i] ^= r[lead];
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::size_t Gf2Matrix::rank() const {
    Gf2Matrix tmp = *this;
    return tmp.rref().size();
}

std::optional<BitVec> Gf2Matrix::solve(const BitVec& b) const {
    // Gaussian elimination on [A | b].
    Gf2Matrix aug(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            if (r[i].get(j)) aug.r[i].set(j);
        if (b.get(i)) aug.r[i].set(cols);
    }
    std::size_t lead = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t sel = lead;
        while (sel < rows && !aug.r[sel].get(col)) ++sel;
        if (sel == rows) continue;
        std::swap(aug.r[lead], aug.r[sel]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != lead && aug.r[i].get(col)) aug.r[i] ^= aug.r[lead];
        pivots.push_back(col);
        ++lead;
    }
    // Inconsistent iff some zero row has RHS 1.
    for (std::size_t i = lead; i < rows; ++i)
        if (aug.r[i].get(cols)) return std::nullopt;
    BitVec x(cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (aug.r[i].get(cols)) x.set(pivots[i]);
    return x;
}

std::vector<BitVec> Gf2Matrix::kernel() const {
    Gf2Matrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<BitVec> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVec v(cols);
        v.set(free_col);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (m.r[i].get(free_col)) v.set(pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

BitVec Gf2Eliminator::reduce(BitVec v) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v.get(pivots[i])) v ^= basis[i];
    return v;
}

bool Gf2Eliminator::insert(const BitVec& v) {
    BitVec res = reduce(v);
    if (res.none()) return false;
    std::size_t p = 0;
    while (!res.get(p)) ++p;
    // Keep echelon shape: clear column p from existing rows.
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].get(p)) basis[i] ^= res;
    basis.push_back(std::move(res));
    pivots.push_back(p);
    return true;
}

}  // namespace qgem
