#include "vko/rational.hpp"

#include <algorithm>
#include <map>

#include "vko/errors.hpp"

namespace vko {

int sign(const mpz_class& v)
{
    return sgn(v);
}

int sign(const mpq_class& v)
{
    return sgn(v);
}

std::vector<std::size_t> rref(QMat& m)
{
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m.front().size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[r], m[p]);
        const mpq_class inv = 1 / m[r][c];
        for (auto& v : m[r])
            v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const mpq_class f = m[i][c];
            for (std::size_t k = c; k < cols; ++k)
                if (m[r][k] != 0)
                    m[i][k] -= f * m[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<QVec> nullspace(QMat m, std::size_t cols)
{
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        QVec z(cols);
        z[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            z[pivots[r]] = -m[r][free];
        basis.push_back(std::move(z));
    }
    return basis;
}

bool feasible(std::vector<QVec> rows, std::vector<bool> strict)
{
    if (strict.size() != rows.size())
        throw ParameterError("feasible: one strictness flag per row");
    if (rows.empty())
        return true;
    const std::size_t vars = rows.front().size();
    std::map<QVec, bool> current;
    auto insert = [&](QVec r, bool s) {
        auto lead = std::find_if(r.begin(), r.end(), [](const mpq_class& v) { return v != 0; });
        if (lead == r.end())
            return !s;
        // Normalize up to positive scaling so duplicates collapse.
        const mpq_class scale = abs(*lead);
        for (auto& v : r)
            v /= scale;
        auto [it, fresh] = current.emplace(std::move(r), s);
        if (!fresh)
            it->second = it->second || s;
        return true;
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!insert(std::move(rows[i]), strict[i]))
            return false;
    for (std::size_t k = vars; k-- > 0;) {
        std::vector<std::pair<QVec, bool>> pos, neg, keep;
        for (auto& [r, s] : current) {
            const int sg = sign(r[k]);
            (sg > 0 ? pos : sg < 0 ? neg : keep).emplace_back(r, s);
        }
        current.clear();
        for (const auto& [p, ps] : pos)
            for (const auto& [n, ns] : neg) {
                QVec combo(k);
                const mpq_class a = -n[k], b = p[k];
                for (std::size_t j = 0; j < k; ++j)
                    combo[j] = a * p[j] + b * n[j];
                keep.emplace_back(std::move(combo), ps || ns);
            }
        for (auto& [r, s] : keep) {
            r.resize(k);
            if (!insert(std::move(r), s))
                return false;
        }
        if (current.empty())
            return true;
    }
    return current.empty();
}

bool strictly_feasible(std::vector<QVec> rows)
{
    std::vector<bool> strict(rows.size(), true);
    return feasible(std::move(rows), std::move(strict));
}

mpz_class determinant(ZMat m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    for (const auto& row : m)
        if (row.size() != n)
            throw ParameterError("determinant needs a square matrix");
    int flip = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            flip = -flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return flip * m[n - 1][n - 1];
}

} // namespace vko
