#include "vko/smith.hpp"

#include "vko/detail/elimination.hpp"

namespace vko {

SparseIntMatrix SmithForm::diagonal_matrix() const
{
    SparseIntMatrix d(rows, cols);
    for (Index t = 0; t < diagonal.size(); ++t)
        d.set(t, t, diagonal[t]);
    return d;
}

SparseIntMatrix SmithForm::reconstruct() const
{
    auto m = diagonal_matrix().to_dense();
    auto inverse = [](ElementaryOp op) {
        if (op.kind == ElementaryOp::Kind::add)
            op.a = -op.a;
        return op;
    };
    for (auto it = col_ops.rbegin(); it != col_ops.rend(); ++it)
        detail::apply_col_op(m, inverse(*it));
    for (auto it = row_ops.rbegin(); it != row_ops.rend(); ++it)
        detail::apply_row_op(m, inverse(*it));
    SparseIntMatrix out(rows, cols);
    for (Index r = 0; r < rows; ++r)
        for (Index c = 0; c < cols; ++c)
            out.set(r, c, m[r][c]);
    return out;
}

SmithForm smith_normal_form(const SparseIntMatrix& m)
{
    auto result = detail::dense_smith(m.to_dense(), true);
    SmithForm out;
    out.rows = m.rows();
    out.cols = m.cols();
    out.diagonal = std::move(result.diagonal);
    out.row_ops = std::move(result.row_ops);
    out.col_ops = std::move(result.col_ops);
    return out;
}

std::vector<mpz_class> elementary_divisors(const SparseIntMatrix& m)
{
    auto elim = detail::eliminate_units(detail::rows_of(m), m.cols(), false);
    std::vector<bool> used(m.cols(), false);
    for (Index r : elim.residual)
        for (const auto& [c, v] : elim.rows[r])
            used[c] = true;
    std::vector<Index> compressed(m.cols(), 0);
    Index next = 0;
    for (Index c = 0; c < m.cols(); ++c)
        if (used[c])
            compressed[c] = next++;
    std::vector<std::vector<mpz_class>> residual;
    for (Index r : elim.residual) {
        std::vector<mpz_class> row(next);
        for (const auto& [c, v] : elim.rows[r])
            row[compressed[c]] = v;
        residual.push_back(std::move(row));
    }
    std::vector<mpz_class> out(elim.pivots.size(), mpz_class(1));
    for (auto& d : detail::dense_smith(std::move(residual), false).diagonal)
        out.push_back(std::move(d));
    return out;
}

std::size_t rank_mod2(const SparseIntMatrix& m)
{
    std::vector<detail::BitRow> rows(m.rows());
    for (Index c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c))
            if (mpz_odd_p(e.value.get_mpz_t()))
                rows[e.row].push_back(c);
    return detail::eliminate_mod2(std::move(rows), m.cols(), false).pivots.size();
}

} // namespace vko
