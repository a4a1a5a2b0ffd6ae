#include "vko/detail/elimination.hpp"

#include <algorithm>
#include <limits>

namespace vko::detail {

namespace {

// a += f * b
IntRow combine(const IntRow& a, const mpz_class& f, const IntRow& b)
{
    IntRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, f * b[j].second);
            ++j;
        } else {
            mpz_class v = a[i].second + f * b[j].second;
            if (v != 0)
                out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

BitRow xor_rows(const BitRow& a, const BitRow& b)
{
    BitRow out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

const mpz_class* entry(const IntRow& row, Index c)
{
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, Index col) { return e.first < col; });
    if (it != row.end() && it->first == c)
        return &it->second;
    return nullptr;
}

bool is_unit(const mpz_class& v) { return v == 1 || v == -1; }

// Keeps exact column counts and (possibly stale) column -> row lists while rows change.
struct ColumnIndex {
    std::vector<std::size_t> count;
    std::vector<std::vector<Index>> rows;

    explicit ColumnIndex(std::size_t cols) : count(cols, 0), rows(cols) {}

    template <class Row, class Col>
    void add_row(Index r, const Row& row, Col col)
    {
        for (const auto& e : row) {
            ++count[col(e)];
            rows[col(e)].push_back(r);
        }
    }

    template <class Row, class Col>
    void replace_row(Index r, const Row& before, const Row& after, Col col)
    {
        std::size_t i = 0, j = 0;
        while (i < before.size() || j < after.size()) {
            if (j == after.size() || (i < before.size() && col(before[i]) < col(after[j]))) {
                --count[col(before[i++])];
            } else if (i == before.size() || col(after[j]) < col(before[i])) {
                ++count[col(after[j])];
                rows[col(after[j])].push_back(r);
                ++j;
            } else {
                ++i;
                ++j;
            }
        }
    }
};

} // namespace

IntElimination eliminate_units(std::vector<IntRow> rows, std::size_t cols, bool record)
{
    IntElimination out;
    auto col_of = [](const auto& e) { return e.first; };
    ColumnIndex index(cols);
    for (Index r = 0; r < rows.size(); ++r)
        index.add_row(r, rows[r], col_of);
    std::vector<bool> active(rows.size(), true);
    out.pivot_column.assign(cols, false);

    while (true) {
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        Index best_row = 0, best_col = 0;
        for (Index r = 0; r < rows.size() && best_cost > 0; ++r) {
            if (!active[r] || rows[r].empty())
                continue;
            const std::size_t len = rows[r].size() - 1;
            for (const auto& [c, v] : rows[r]) {
                if (!is_unit(v))
                    continue;
                const std::size_t cost = len * (index.count[c] - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_row = r;
                    best_col = c;
                    if (cost == 0)
                        break;
                }
            }
        }
        if (best_cost == std::numeric_limits<std::size_t>::max())
            break;

        const Index pr = best_row, pc = best_col;
        const mpz_class pivot = *entry(rows[pr], pc);
        active[pr] = false;
        out.pivots.emplace_back(pr, pc);
        out.pivot_column[pc] = true;
        auto targets = std::move(index.rows[pc]);
        index.rows[pc].clear();
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (Index r : targets) {
            if (r == pr || !active[r])
                continue;
            const mpz_class* a = entry(rows[r], pc);
            if (!a)
                continue;
            const mpz_class factor = -(*a) * pivot;  // pivot is its own inverse
            IntRow updated = combine(rows[r], factor, rows[pr]);
            index.replace_row(r, rows[r], updated, col_of);
            rows[r] = std::move(updated);
            if (record)
                out.ops.push_back(RowOp{r, pr, factor});
        }
        // The pivot row no longer counts towards column costs.
        for (const auto& [c, v] : rows[pr])
            --index.count[c];
    }
    for (Index r = 0; r < rows.size(); ++r)
        if (active[r] && !rows[r].empty())
            out.residual.push_back(r);
    out.rows = std::move(rows);
    return out;
}

Mod2Elimination eliminate_mod2(std::vector<BitRow> rows, std::size_t cols, bool record)
{
    Mod2Elimination out;
    auto col_of = [](Index c) { return c; };
    ColumnIndex index(cols);
    for (Index r = 0; r < rows.size(); ++r)
        index.add_row(r, rows[r], col_of);
    std::vector<bool> active(rows.size(), true);

    while (true) {
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        Index best_row = 0, best_col = 0;
        for (Index r = 0; r < rows.size() && best_cost > 0; ++r) {
            if (!active[r] || rows[r].empty())
                continue;
            const std::size_t len = rows[r].size() - 1;
            for (Index c : rows[r]) {
                const std::size_t cost = len * (index.count[c] - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_row = r;
                    best_col = c;
                    if (cost == 0)
                        break;
                }
            }
        }
        if (best_cost == std::numeric_limits<std::size_t>::max())
            break;

        const Index pr = best_row, pc = best_col;
        active[pr] = false;
        out.pivots.emplace_back(pr, pc);
        auto targets = std::move(index.rows[pc]);
        index.rows[pc].clear();
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (Index r : targets) {
            if (r == pr || !active[r])
                continue;
            if (!std::binary_search(rows[r].begin(), rows[r].end(), pc))
                continue;
            BitRow updated = xor_rows(rows[r], rows[pr]);
            index.replace_row(r, rows[r], updated, col_of);
            rows[r] = std::move(updated);
            if (record)
                out.ops.emplace_back(r, pr);
        }
        for (Index c : rows[pr])
            --index.count[c];
    }
    out.rows = std::move(rows);
    return out;
}

void apply_row_op(std::vector<std::vector<mpz_class>>& m, const ElementaryOp& op)
{
    switch (op.kind) {
    case ElementaryOp::Kind::swap:
        std::swap(m[op.i], m[op.j]);
        break;
    case ElementaryOp::Kind::negate:
        for (auto& v : m[op.i])
            v = -v;
        break;
    case ElementaryOp::Kind::add:
        for (std::size_t c = 0; c < m[op.i].size(); ++c)
            if (m[op.j][c] != 0)
                m[op.i][c] += op.a * m[op.j][c];
        break;
    }
}

void apply_col_op(std::vector<std::vector<mpz_class>>& m, const ElementaryOp& op)
{
    for (auto& row : m) {
        switch (op.kind) {
        case ElementaryOp::Kind::swap:
            std::swap(row[op.i], row[op.j]);
            break;
        case ElementaryOp::Kind::negate:
            row[op.i] = -row[op.i];
            break;
        case ElementaryOp::Kind::add:
            if (row[op.j] != 0)
                row[op.i] += op.a * row[op.j];
            break;
        }
    }
}

DenseSmith dense_smith(std::vector<std::vector<mpz_class>> m, bool record)
{
    DenseSmith out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    auto row_op = [&](ElementaryOp op) {
        apply_row_op(m, op);
        if (record)
            out.row_ops.push_back(std::move(op));
    };
    auto col_op = [&](ElementaryOp op) {
        apply_col_op(m, op);
        if (record)
            out.col_ops.push_back(std::move(op));
    };
    using K = ElementaryOp::Kind;

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows)
            break;
        if (pi != t)
            row_op({K::swap, Index(t), Index(pi), 0});
        if (pj != t)
            col_op({K::swap, Index(t), Index(pj), 0});

        while (true) {
            // Bring the smallest entry of row t / column t to the pivot.
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (m[i][t] != 0 && abs(m[i][t]) < abs(m[bi][bj])) {
                    bi = i;
                    bj = t;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m[t][j] != 0 && abs(m[t][j]) < abs(m[bi][bj])) {
                    bi = t;
                    bj = j;
                }
            if (bi != t)
                row_op({K::swap, Index(t), Index(bi), 0});
            if (bj != t)
                col_op({K::swap, Index(t), Index(bj), 0});

            const mpz_class p = m[t][t];
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (m[i][t] != 0) {
                    mpz_class q;
                    mpz_tdiv_q(q.get_mpz_t(), m[i][t].get_mpz_t(), p.get_mpz_t());
                    row_op({K::add, Index(i), Index(t), -q});
                    if (m[i][t] != 0)
                        clean = false;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (m[t][j] != 0) {
                    mpz_class q;
                    mpz_tdiv_q(q.get_mpz_t(), m[t][j].get_mpz_t(), p.get_mpz_t());
                    col_op({K::add, Index(j), Index(t), -q});
                    if (m[t][j] != 0)
                        clean = false;
                }
            if (!clean)
                continue;
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (m[i][j] != 0 && !mpz_divisible_p(m[i][j].get_mpz_t(), p.get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            row_op({K::add, Index(t), Index(bad), 1});
        }
        if (m[t][t] < 0)
            row_op({K::negate, Index(t), Index(t), 0});
        out.diagonal.push_back(m[t][t]);
    }
    return out;
}

std::vector<IntRow> rows_of(const SparseIntMatrix& m)
{
    std::vector<IntRow> rows(m.rows());
    for (Index c = 0; c < m.cols(); ++c)
        for (const auto& e : m.column(c))
            rows[e.row].emplace_back(c, e.value);
    return rows;
}

} // namespace vko::detail
