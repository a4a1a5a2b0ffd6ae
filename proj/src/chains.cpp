#include "vko/chains.hpp"

#include <algorithm>

#include "vko/errors.hpp"
#include "vko/smith.hpp"

namespace vko {

std::string_view ring_name(Ring r)
{
    return r == Ring::Z ? "Z" : "Z2";
}

Ring parse_ring(std::string_view s)
{
    if (s == "Z")
        return Ring::Z;
    if (s == "Z2" || s == "Z/2")
        return Ring::Z2;
    throw ParameterError("unknown ring '" + std::string(s) + "' (expected Z or Z2)");
}

Cochain Cochain::from_values(const CellComplex& x, Ring ring, int degree, std::span<const mpz_class> values)
{
    Cochain c{ring, degree, {}};
    for (std::size_t i = 0; i < values.size(); ++i) {
        mpz_class v = values[i];
        if (ring == Ring::Z2)
            v = mpz_odd_p(v.get_mpz_t()) ? 1 : 0;
        if (v != 0)
            c.support.emplace(x.cell_id(degree, i), std::move(v));
    }
    return c;
}

std::vector<mpz_class> Cochain::values(const CellComplex& x) const
{
    std::vector<mpz_class> out(x.count(degree));
    for (const auto& [id, v] : support) {
        auto i = x.find_cell(degree, id);
        if (!i)
            throw ParameterError("cochain refers to unknown " + std::to_string(degree) + "-cell '" + id + "'");
        out[*i] = ring == Ring::Z2 ? mpz_class(mpz_odd_p(v.get_mpz_t()) ? 1 : 0) : v;
    }
    return out;
}

std::string GroupDescriptor::to_string() const
{
    std::string out;
    if (free_rank == 1)
        out = "Z";
    else if (free_rank > 1)
        out = "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion)
        out += (out.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
    return out.empty() ? "0" : out;
}

SparseIntMatrix boundary_matrix(const CellComplex& x, int d, Ring ring)
{
    if (d < 0 || d > x.dim())
        throw ParameterError("dimension " + std::to_string(d) + " out of range 0.." + std::to_string(x.dim()));
    const std::size_t rows = d == 0 ? 0 : x.count(d - 1);
    SparseIntMatrix m(rows, x.count(d));
    std::vector<std::pair<std::size_t, int>> faces;
    for (std::size_t i = 0; i < x.count(d); ++i) {
        faces.clear();
        x.boundary(d, i, faces);
        std::vector<SparseIntMatrix::Entry> entries;
        for (const auto& [f, s] : faces)
            entries.push_back({static_cast<Index>(f), s});
        m.assign_column(static_cast<Index>(i), std::move(entries));
    }
    return ring == Ring::Z2 ? m.reduced_mod2() : m;
}

GroupDescriptor homology_groups(const CellComplex& x, int d, Ring ring, Direction direction)
{
    if (d < 0 || d > x.dim())
        throw ParameterError("dimension " + std::to_string(d) + " out of range 0.." + std::to_string(x.dim()));
    const std::size_t n = x.count(d);
    GroupDescriptor g;
    if (ring == Ring::Z2) {
        const std::size_t r_in = rank_mod2(boundary_matrix(x, d, ring));
        const std::size_t r_out = d < x.dim() ? rank_mod2(boundary_matrix(x, d + 1, ring)) : 0;
        g.free_rank = n - r_in - r_out;
        return g;
    }
    const auto div_in = elementary_divisors(boundary_matrix(x, d, ring));
    const auto div_out = d < x.dim() ? elementary_divisors(boundary_matrix(x, d + 1, ring)) : std::vector<mpz_class>{};
    g.free_rank = n - div_in.size() - div_out.size();
    // Homology torsion comes from the incoming boundary, cohomology torsion from the outgoing one.
    const auto& source = direction == Direction::homology ? div_out : div_in;
    for (const auto& t : source)
        if (t > 1)
            g.torsion.push_back(t);
    return g;
}

Cochain coboundary(const CellComplex& x, const Cochain& b)
{
    const int d = b.degree + 1;
    Cochain out{b.ring, d, {}};
    if (d > x.dim() || d < 0)
        return out;
    const auto values = b.values(x);
    std::vector<std::pair<std::size_t, int>> faces;
    std::vector<mpz_class> result(x.count(d));
    for (std::size_t i = 0; i < x.count(d); ++i) {
        faces.clear();
        x.boundary(d, i, faces);
        for (const auto& [f, s] : faces)
            if (values[f] != 0)
                result[i] += s * values[f];
    }
    return Cochain::from_values(x, b.ring, d, result);
}

} // namespace vko
