#pragma once

#include <vector>

#include "vko/sparse.hpp"

namespace vko {

/// One elementary row or column operation.
/// add:    line i += a * line j
/// swap:   exchange lines i and j
/// negate: line i *= -1
struct ElementaryOp {
    enum class Kind : std::uint8_t { add, swap, negate };
    Kind kind;
    Index i;
    Index j;
    mpz_class a;
};

/// U * M * V = D where U is the product of the row ops (first op applied first)
/// and V the product of the column ops.  D has `diagonal` on its leading
/// diagonal, each entry positive and dividing the next.
struct SmithForm {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<mpz_class> diagonal;
    std::vector<ElementaryOp> row_ops;
    std::vector<ElementaryOp> col_ops;

    SparseIntMatrix diagonal_matrix() const;
    /// Undoes the recorded operations on D; equals the input matrix.
    SparseIntMatrix reconstruct() const;
};

/// Dense elimination with greedy minimal-magnitude pivots.  Intended for
/// matrices up to a few thousand rows and columns.
SmithForm smith_normal_form(const SparseIntMatrix& m);

/// Nonzero invariant factors of m, in divisibility order.  Unit pivots are
/// eliminated sparsely first, so this scales to large boundary matrices.
std::vector<mpz_class> elementary_divisors(const SparseIntMatrix& m);

std::size_t rank_mod2(const SparseIntMatrix& m);

} // namespace vko
