#pragma once

// Elimination engines shared by the Smith form, homology and the solvers.

#include <cstdint>
#include <utility>
#include <vector>

#include "vko/smith.hpp"

namespace vko::detail {

using IntRow = std::vector<std::pair<Index, mpz_class>>;  // sorted by column
using BitRow = std::vector<Index>;                        // sorted column indices

/// row[target] += factor * row[source]
struct RowOp {
    Index target;
    Index source;
    mpz_class factor;
};

struct IntElimination {
    std::vector<IntRow> rows;                  // rows after elimination
    std::vector<std::pair<Index, Index>> pivots;  // (row, column), in elimination order; entry is +-1
    std::vector<RowOp> ops;
    std::vector<Index> residual;               // non-pivot rows that are still nonzero
    std::vector<bool> pivot_column;
};

/// Eliminates with unit pivots chosen by a Markowitz-style cost until no
/// unit entry remains among the non-pivot rows.
IntElimination eliminate_units(std::vector<IntRow> rows, std::size_t cols, bool record);

struct Mod2Elimination {
    std::vector<BitRow> rows;
    std::vector<std::pair<Index, Index>> pivots;
    std::vector<std::pair<Index, Index>> ops;  // row[first] ^= row[second]
};

Mod2Elimination eliminate_mod2(std::vector<BitRow> rows, std::size_t cols, bool record);

struct DenseSmith {
    std::vector<mpz_class> diagonal;
    std::vector<ElementaryOp> row_ops;
    std::vector<ElementaryOp> col_ops;
};

DenseSmith dense_smith(std::vector<std::vector<mpz_class>> m, bool record);

void apply_row_op(std::vector<std::vector<mpz_class>>& m, const ElementaryOp& op);
void apply_col_op(std::vector<std::vector<mpz_class>>& m, const ElementaryOp& op);

/// Rows of a sparse matrix, as IntRow (entries keep their sign).
std::vector<IntRow> rows_of(const SparseIntMatrix& m);

} // namespace vko::detail
