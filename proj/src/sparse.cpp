#include "vko/sparse.hpp"

#include <algorithm>

#include "vko/errors.hpp"

namespace vko {

std::size_t SparseIntMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

void SparseIntMatrix::add(Index r, Index c, const mpz_class& v)
{
    if (r >= rows_ || c >= cols())
        throw ParameterError("matrix index out of range");
    if (v == 0)
        return;
    auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, Index row) { return e.row < row; });
    if (it != col.end() && it->row == r) {
        it->value += v;
        if (it->value == 0)
            col.erase(it);
    } else {
        col.insert(it, Entry{r, v});
    }
}

void SparseIntMatrix::set(Index r, Index c, const mpz_class& v)
{
    if (r >= rows_ || c >= cols())
        throw ParameterError("matrix index out of range");
    auto& col = columns_[c];
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, Index row) { return e.row < row; });
    const bool present = it != col.end() && it->row == r;
    if (v == 0) {
        if (present)
            col.erase(it);
    } else if (present) {
        it->value = v;
    } else {
        col.insert(it, Entry{r, v});
    }
}

mpz_class SparseIntMatrix::at(Index r, Index c) const
{
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, Index row) { return e.row < row; });
    if (it != col.end() && it->row == r)
        return it->value;
    return 0;
}

void SparseIntMatrix::assign_column(Index c, std::vector<Entry> entries)
{
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    std::vector<Entry> merged;
    for (auto& e : entries) {
        if (e.row >= rows_)
            throw ParameterError("matrix index out of range");
        if (!merged.empty() && merged.back().row == e.row)
            merged.back().value += e.value;
        else
            merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
    columns_.at(c) = std::move(merged);
}

SparseIntMatrix SparseIntMatrix::transposed() const
{
    SparseIntMatrix t(cols(), rows_);
    for (Index c = 0; c < cols(); ++c)
        for (const auto& e : columns_[c])
            t.columns_[e.row].push_back(Entry{c, e.value});
    return t;
}

SparseIntMatrix SparseIntMatrix::reduced_mod2() const
{
    SparseIntMatrix m(rows_, cols());
    for (Index c = 0; c < cols(); ++c)
        for (const auto& e : columns_[c])
            if (mpz_odd_p(e.value.get_mpz_t()))
                m.columns_[c].push_back(Entry{e.row, 1});
    return m;
}

SparseIntMatrix SparseIntMatrix::operator*(const SparseIntMatrix& other) const
{
    if (cols() != other.rows())
        throw ParameterError("matrix product dimension mismatch");
    SparseIntMatrix out(rows_, other.cols());
    std::vector<mpz_class> acc(rows_);
    std::vector<Index> touched;
    std::vector<bool> seen(rows_, false);
    for (Index c = 0; c < other.cols(); ++c) {
        touched.clear();
        for (const auto& b : other.columns_[c])
            for (const auto& a : columns_[b.row]) {
                if (!seen[a.row]) {
                    seen[a.row] = true;
                    touched.push_back(a.row);
                    acc[a.row] = 0;
                }
                acc[a.row] += a.value * b.value;
            }
        std::sort(touched.begin(), touched.end());
        for (Index r : touched) {
            seen[r] = false;
            if (acc[r] != 0)
                out.columns_[c].push_back(Entry{r, acc[r]});
        }
    }
    return out;
}

std::vector<mpz_class> SparseIntMatrix::operator*(std::span<const mpz_class> x) const
{
    if (x.size() != cols())
        throw ParameterError("matrix-vector dimension mismatch");
    std::vector<mpz_class> y(rows_);
    for (Index c = 0; c < cols(); ++c)
        if (x[c] != 0)
            for (const auto& e : columns_[c])
                y[e.row] += e.value * x[c];
    return y;
}

bool SparseIntMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

bool SparseIntMatrix::operator==(const SparseIntMatrix& other) const
{
    if (rows_ != other.rows_ || cols() != other.cols())
        return false;
    for (Index c = 0; c < cols(); ++c) {
        const auto& a = columns_[c];
        const auto& b = other.columns_[c];
        if (a.size() != b.size())
            return false;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k].row != b[k].row || a[k].value != b[k].value)
                return false;
    }
    return true;
}

std::vector<std::vector<mpz_class>> SparseIntMatrix::to_dense() const
{
    std::vector<std::vector<mpz_class>> m(rows_, std::vector<mpz_class>(cols()));
    for (Index c = 0; c < cols(); ++c)
        for (const auto& e : columns_[c])
            m[e.row][c] = e.value;
    return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<mpz_class>>& m)
{
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    SparseIntMatrix out(m.size(), cols);
    for (Index r = 0; r < m.size(); ++r) {
        if (m[r].size() != cols)
            throw ParameterError("ragged dense matrix");
        for (Index c = 0; c < cols; ++c)
            if (m[r][c] != 0)
                out.columns_[c].push_back(Entry{r, m[r][c]});
    }
    return out;
}

} // namespace vko
