#pragma once

#include <optional>
#include <vector>

#include "qgem/bitvec.hpp"

namespace qgem {

// Dense GF(2) matrix with bit-packed rows. Small and deterministic: row
// operations always pick the lowest-index pivot, so solve/kernel output is a
// pure function of the input.
struct Gf2Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<BitVec> r;

    Gf2Matrix() = default;
    Gf2Matrix(std::size_t nrows, std::size_t ncols)
        : rows(nrows), cols(ncols), r(nrows, BitVec(ncols)) {}

    bool get(std::size_t i, std::size_t j) const { return r[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v = true) { r[i].set(j, v); }

    static Gf2Matrix from_rows(const std::vector<BitVec>& rows_in);

    // In-place reduced row echelon form; returns pivot column per pivot row.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    // Particular solution of (*this) x = b with free variables set to zero.
    std::optional<BitVec> solve(const BitVec& b) const;

    // Basis of { x : (*this) x = 0 }, one vector per free column, ordered by
    // column index.
    std::vector<BitVec> kernel() const;
};

// Incremental independence structure: rows are reduced against the stored
// echelon basis as they are inserted.
struct Gf2Eliminator {
    std::size_t cols = 0;
    std::vector<BitVec> basis;         // echelon rows
    std::vector<std::size_t> pivots;   // pivot column of each basis row

    explicit Gf2Eliminator(std::size_t ncols) : cols(ncols) {}

    // Reduce v against the basis (returns the residual).
    BitVec reduce(BitVec v) const;

    // Reduce and, if the residual is nonzero, absorb it. Returns true when v
    // was independent of the current span.
    bool insert(const BitVec& v);

    bool in_span(const BitVec& v) const { return reduce(v).none(); }
};

}  // namespace qgem
