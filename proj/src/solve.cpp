#include <algorithm>

#include "vko/chains.hpp"
#include "vko/detail/elimination.hpp"
#include "vko/errors.hpp"

namespace vko {

namespace {

using detail::BitRow;
using detail::IntRow;

// Rows of the coboundary matrix into degree d: one row per d-cell, listing its faces.
std::vector<IntRow> coboundary_rows(const CellComplex& x, int d)
{
    std::vector<IntRow> rows(x.count(d));
    std::vector<std::pair<std::size_t, int>> faces;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        faces.clear();
        x.boundary(d, i, faces);
        std::sort(faces.begin(), faces.end());
        IntRow row;
        for (const auto& [f, s] : faces) {
            if (!row.empty() && row.back().first == f)
                row.back().second += s;
            else
                row.emplace_back(static_cast<Index>(f), s);
        }
        std::erase_if(row, [](const auto& e) { return e.second == 0; });
        rows[i] = std::move(row);
    }
    return rows;
}

void require_cocycle(const CellComplex& x, const Cochain& c)
{
    if (!coboundary(x, c).support.empty())
        throw PreconditionError("cochain of degree " + std::to_string(c.degree) + " is not a cocycle");
}

// y^T U for U the product of the recorded dense row ops.
std::vector<mpz_class> row_of_transform(std::size_t n, std::size_t i, const std::vector<ElementaryOp>& ops)
{
    std::vector<mpz_class> v(n);
    v[i] = 1;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        switch (it->kind) {
        case ElementaryOp::Kind::add:
            if (v[it->i] != 0)
                v[it->j] += it->a * v[it->i];
            break;
        case ElementaryOp::Kind::swap:
            std::swap(v[it->i], v[it->j]);
            break;
        case ElementaryOp::Kind::negate:
            v[it->i] = -v[it->i];
            break;
        }
    }
    return v;
}

void apply_ops_to_vector(std::vector<mpz_class>& v, const std::vector<ElementaryOp>& ops)
{
    for (const auto& op : ops) {
        switch (op.kind) {
        case ElementaryOp::Kind::add:
            v[op.i] += op.a * v[op.j];
            break;
        case ElementaryOp::Kind::swap:
            std::swap(v[op.i], v[op.j]);
            break;
        case ElementaryOp::Kind::negate:
            v[op.i] = -v[op.i];
            break;
        }
    }
}

// V y for V the product of the recorded column ops (first op leftmost).
void apply_col_transform(std::vector<mpz_class>& y, const std::vector<ElementaryOp>& ops)
{
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        switch (it->kind) {
        case ElementaryOp::Kind::add:
            y[it->j] += it->a * y[it->i];
            break;
        case ElementaryOp::Kind::swap:
            std::swap(y[it->i], y[it->j]);
            break;
        case ElementaryOp::Kind::negate:
            y[it->i] = -y[it->i];
            break;
        }
    }
}

CoboundarySolution solve_z(const CellComplex& x, const Cochain& c)
{
    const int d = c.degree;
    const std::size_t ncols = d > 0 ? x.count(d - 1) : 0;
    auto elim = detail::eliminate_units(coboundary_rows(x, d), ncols, true);
    std::vector<mpz_class> rhs = c.values(x);
    for (const auto& op : elim.ops)
        if (rhs[op.source] != 0)
            rhs[op.target] += op.factor * rhs[op.source];

    CoboundarySolution out{Ring::Z, false, {}, {}};
    const std::size_t nrows = elim.rows.size();
    auto emit_dual = [&](std::vector<mpq_class> y) {
        for (auto it = elim.ops.rbegin(); it != elim.ops.rend(); ++it)
            if (y[it->target] != 0)
                y[it->source] += mpq_class(it->factor) * y[it->target];
        for (std::size_t r = 0; r < nrows; ++r)
            if (y[r] != 0)
                out.dual.emplace(x.cell_id(d, r), y[r]);
    };

    // Rows that eliminated to zero must have zero right-hand side.
    std::vector<bool> pivot_row(nrows, false);
    for (const auto& [r, col] : elim.pivots)
        pivot_row[r] = true;
    for (Index r = 0; r < nrows; ++r)
        if (!pivot_row[r] && elim.rows[r].empty() && rhs[r] != 0) {
            std::vector<mpq_class> y(nrows);
            y[r] = mpq_class(1) / mpq_class(2 * rhs[r]);
            y[r].canonicalize();
            emit_dual(std::move(y));
            return out;
        }

    // Dense Smith form on what unit pivots could not reach.
    std::vector<Index> local(ncols, 0);
    std::vector<bool> used(ncols, false);
    for (Index r : elim.residual)
        for (const auto& [col, v] : elim.rows[r])
            used[col] = true;
    std::vector<Index> columns;
    for (Index col = 0; col < ncols; ++col)
        if (used[col])
            columns.push_back(col);
    for (Index k = 0; k < columns.size(); ++k)
        local[columns[k]] = k;
    std::vector<std::vector<mpz_class>> residual;
    std::vector<mpz_class> residual_rhs;
    for (Index r : elim.residual) {
        std::vector<mpz_class> row(columns.size());
        for (const auto& [col, v] : elim.rows[r])
            row[local[col]] = v;
        residual.push_back(std::move(row));
        residual_rhs.push_back(rhs[r]);
    }
    const auto snf = detail::dense_smith(residual, true);
    apply_ops_to_vector(residual_rhs, snf.row_ops);
    const std::size_t rank = snf.diagonal.size();
    for (std::size_t i = 0; i < residual_rhs.size(); ++i) {
        const bool in_range = i < rank;
        if (in_range ? mpz_divisible_p(residual_rhs[i].get_mpz_t(), snf.diagonal[i].get_mpz_t()) : residual_rhs[i] == 0)
            continue;
        const mpz_class denom = in_range ? snf.diagonal[i] : mpz_class(2 * residual_rhs[i]);
        const auto u = row_of_transform(residual.size(), i, snf.row_ops);
        std::vector<mpq_class> y(nrows);
        for (std::size_t k = 0; k < u.size(); ++k)
            if (u[k] != 0) {
                y[elim.residual[k]] = mpq_class(u[k], denom);
                y[elim.residual[k]].canonicalize();
            }
        emit_dual(std::move(y));
        return out;
    }

    std::vector<mpz_class> z(columns.size());
    for (std::size_t i = 0; i < rank; ++i)
        z[i] = residual_rhs[i] / snf.diagonal[i];
    apply_col_transform(z, snf.col_ops);
    std::vector<mpz_class> solution(ncols);
    for (Index k = 0; k < columns.size(); ++k)
        solution[columns[k]] = z[k];
    for (auto it = elim.pivots.rbegin(); it != elim.pivots.rend(); ++it) {
        const auto [r, col] = *it;
        mpz_class acc = rhs[r];
        mpz_class pivot;
        for (const auto& [k, v] : elim.rows[r]) {
            if (k == col)
                pivot = v;
            else if (solution[k] != 0)
                acc -= v * solution[k];
        }
        solution[col] = acc * pivot;
    }
    out.solvable = true;
    if (d > 0)
        out.witness = Cochain::from_values(x, Ring::Z, d - 1, solution);
    else
        out.witness = Cochain{Ring::Z, -1, {}};
    return out;
}

CoboundarySolution solve_z2(const CellComplex& x, const Cochain& c)
{
    const int d = c.degree;
    const std::size_t ncols = d > 0 ? x.count(d - 1) : 0;
    std::vector<BitRow> rows;
    for (const auto& row : coboundary_rows(x, d)) {
        BitRow bits;
        for (const auto& [col, v] : row)
            if (mpz_odd_p(v.get_mpz_t()))
                bits.push_back(col);
        rows.push_back(std::move(bits));
    }
    auto elim = detail::eliminate_mod2(std::move(rows), ncols, true);
    std::vector<std::uint8_t> rhs(elim.rows.size(), 0);
    {
        const auto values = c.values(x);
        for (std::size_t r = 0; r < values.size(); ++r)
            rhs[r] = values[r] != 0;
    }
    for (const auto& [t, s] : elim.ops)
        rhs[t] ^= rhs[s];

    CoboundarySolution out{Ring::Z2, false, {}, {}};
    std::vector<bool> pivot_row(elim.rows.size(), false);
    for (const auto& [r, col] : elim.pivots)
        pivot_row[r] = true;
    for (Index r = 0; r < elim.rows.size(); ++r)
        if (!pivot_row[r] && rhs[r]) {
            std::vector<std::uint8_t> y(elim.rows.size(), 0);
            y[r] = 1;
            for (auto it = elim.ops.rbegin(); it != elim.ops.rend(); ++it)
                y[it->second] ^= y[it->first];
            for (std::size_t k = 0; k < y.size(); ++k)
                if (y[k])
                    out.dual.emplace(x.cell_id(d, k), mpq_class(1));
            return out;
        }

    std::vector<std::uint8_t> solution(ncols, 0);
    for (auto it = elim.pivots.rbegin(); it != elim.pivots.rend(); ++it) {
        const auto [r, col] = *it;
        std::uint8_t acc = rhs[r];
        for (Index k : elim.rows[r])
            if (k != col)
                acc ^= solution[k];
        solution[col] = acc;
    }
    out.solvable = true;
    out.witness = Cochain{Ring::Z2, d - 1, {}};
    for (std::size_t k = 0; k < ncols; ++k)
        if (solution[k])
            out.witness.support.emplace(x.cell_id(d - 1, k), 1);
    return out;
}

} // namespace

CoboundarySolution coboundary_solve(const CellComplex& x, const Cochain& c)
{
    if (c.degree < 0 || c.degree > x.dim())
        throw ParameterError("cochain degree " + std::to_string(c.degree) + " out of range");
    require_cocycle(x, c);
    auto s = c.ring == Ring::Z ? solve_z(x, c) : solve_z2(x, c);
    if (auto problems = verify_solution(x, c, s); !problems.empty())
        throw VerificationError("coboundary solution failed re-verification: " + problems.front());
    return s;
}

std::vector<std::string> verify_solution(const CellComplex& x, const Cochain& c, const CoboundarySolution& s)
{
    std::vector<std::string> problems;
    if (s.ring != c.ring)
        problems.push_back("ring mismatch");
    const int d = c.degree;
    if (s.solvable) {
        if (s.witness.degree != d - 1) {
            problems.push_back("witness has the wrong degree");
            return problems;
        }
        if (d == 0) {
            if (!c.support.empty())
                problems.push_back("nonzero 0-cochain cannot be a coboundary");
            return problems;
        }
        Cochain w = s.witness;
        w.ring = c.ring;
        Cochain image = coboundary(x, w);
        Cochain target = c;
        if (c.ring == Ring::Z2)
            target = Cochain::from_values(x, Ring::Z2, d, c.values(x));
        if (image.support != target.support)
            problems.push_back("coboundary of the witness differs from the cochain");
        return problems;
    }
    if (s.dual.empty()) {
        problems.push_back("infeasibility claimed without a dual certificate");
        return problems;
    }
    std::vector<mpq_class> y(x.count(d));
    for (const auto& [id, v] : s.dual) {
        auto i = x.find_cell(d, id);
        if (!i) {
            problems.push_back("dual certificate refers to unknown cell '" + id + "'");
            return problems;
        }
        y[*i] = v;
    }
    const auto cv = c.values(x);
    mpq_class pairing = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
        if (y[i] != 0 && cv[i] != 0)
            pairing += y[i] * mpq_class(cv[i]);
    std::vector<mpq_class> ya(d > 0 ? x.count(d - 1) : 0);
    std::vector<std::pair<std::size_t, int>> faces;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0)
            continue;
        faces.clear();
        x.boundary(d, i, faces);
        for (const auto& [f, sgn] : faces)
            ya[f] += y[i] * sgn;
    }
    if (c.ring == Ring::Z) {
        for (const auto& v : ya)
            if (v.get_den() != 1) {
                problems.push_back("y^T A is not integral");
                break;
            }
        if (pairing.get_den() == 1)
            problems.push_back("y^T c is an integer");
    } else {
        for (const auto& v : y)
            if (v.get_den() != 1) {
                problems.push_back("dual certificate over Z/2 must be integral");
                return problems;
            }
        for (const auto& v : ya)
            if (mpz_odd_p(v.get_num().get_mpz_t())) {
                problems.push_back("y^T A is not zero mod 2");
                break;
            }
        if (!mpz_odd_p(pairing.get_num().get_mpz_t()))
            problems.push_back("y^T c is not 1 mod 2");
    }
    return problems;
}

} // namespace vko
