#include "vko/surgery.hpp"

#include <algorithm>

#include "vko/builders.hpp"
#include "vko/errors.hpp"
#include "vko/rational.hpp"

namespace vko {

namespace {

using Names = std::vector<std::string>;

std::string hex_name(int i)
{
    return "~h" + std::to_string(i);
}

std::string inner_name(int i)
{
    return indexed_name("~u", static_cast<std::size_t>(i), 12);
}

Simplex resolve(const Complex& x, const Names& names)
{
    Simplex s;
    for (const auto& n : names)
        s.push_back(*x.find_vertex(n));
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

SimplicialMap double_cover_cycle(int len)
{
    if (len % 2 != 0)
        throw ParameterError("double_cover_cycle(len) needs an even length, got " + std::to_string(len));
    if (len < 6)
        throw ParameterError("double_cover_cycle(len) needs len >= 6, got " + std::to_string(len));
    SimplicialMap f;
    f.source = cycle(len);
    f.target = cycle(len / 2);
    for (int i = 0; i < len; ++i)
        f.assignment.push_back(static_cast<VertexId>(i % (len / 2)));
    return f;
}

SurgeryResult reglue_degree2(const Complex& k, const Simplex& facet)
{
    if (k.dim() != 2)
        throw ParameterError("reglue_degree2 needs a 2-dimensional complex, got dimension " + std::to_string(k.dim()));
    if (facet.size() != 3)
        throw ParameterError("reglue_degree2 needs a 2-simplex, got " + std::to_string(facet.size()) + " vertices");
    if (!k.find(facet))
        throw ParameterError("simplex (" + k.simplex_id(facet) + ") is not in " + k.name());
    for (const auto& v : k.vertices())
        if (v.starts_with("~"))
            throw ConstructionError("vertex name '" + v + "' collides with the surgery namespace");

    std::optional<Simplex> disjoint;
    for (std::size_t i = 0; i < k.count(2) && !disjoint; ++i) {
        const auto s = k.simplex(2, i);
        if (std::none_of(s.begin(), s.end(), [&](VertexId v) { return std::count(facet.begin(), facet.end(), v); }))
            disjoint = Simplex(s.begin(), s.end());
    }
    if (!disjoint)
        throw ConstructionError("no facet of " + k.name() + " is disjoint from (" + k.simplex_id(facet) + ")");

    Names vertices = k.vertices();
    for (int i = 0; i < 6; ++i)
        vertices.push_back(hex_name(i));
    for (int i = 0; i < 12; ++i)
        vertices.push_back(inner_name(i));
    vertices.push_back("~o");

    std::vector<Names> outside, disk;
    for (const auto& f : k.facets())
        if (f != facet) {
            Names n;
            for (VertexId v : f)
                n.push_back(k.vertex_name(v));
            outside.push_back(std::move(n));
        }

    // Collar between the facet boundary and the hexagon: corner a sees h5,h0,h1,
    // b sees h1,h2,h3, c sees h3,h4,h5.
    const std::string a = k.vertex_name(facet[0]), b = k.vertex_name(facet[1]), c = k.vertex_name(facet[2]);
    const Names first_collar = {a, hex_name(0), hex_name(1)};
    const std::vector<Names> collar = {first_collar,
                                       {a, hex_name(1), b},
                                       {b, hex_name(1), hex_name(2)},
                                       {b, hex_name(2), hex_name(3)},
                                       {b, hex_name(3), c},
                                       {c, hex_name(3), hex_name(4)},
                                       {c, hex_name(4), hex_name(5)},
                                       {c, hex_name(5), a},
                                       {a, hex_name(5), hex_name(0)}};
    outside.insert(outside.end(), collar.begin(), collar.end());

    // D' with outer vertex w_i glued to h_{i mod 6}.
    auto w = [](int i) { return hex_name(i % 6); };
    for (int i = 0; i < 12; ++i) {
        const int j = (i + 1) % 12;
        disk.push_back({w(i), w(j), inner_name(i)});
        disk.push_back({w(j), inner_name(i), inner_name(j)});
    }
    for (int i = 0; i < 12; ++i)
        disk.push_back({"~o", inner_name(i), inner_name((i + 1) % 12)});

    std::vector<Names> all = outside;
    all.insert(all.end(), disk.begin(), disk.end());
    SurgeryResult out;
    out.complex = Complex::from_facets("reglue(" + k.name() + ")", vertices, all);
    if (out.complex.count(2) != all.size())
        throw ConstructionError("regluing identified two triangles");
    for (const auto& n : disk)
        out.reglued_disk.push_back(resolve(out.complex, n));
    for (const auto& n : outside)
        out.exterior.push_back(resolve(out.complex, n));
    std::sort(out.reglued_disk.begin(), out.reglued_disk.end());
    std::sort(out.exterior.begin(), out.exterior.end());

    Names q;
    for (VertexId v : *disjoint)
        q.push_back(k.vertex_name(v));
    out.marked["p"] = resolve(out.complex, first_collar);
    out.marked["q"] = resolve(out.complex, q);
    out.marked["r"] = resolve(out.complex, {"~o", inner_name(0), inner_name(1)});

    out.seam = double_cover_cycle(12);
    std::vector<Names> hexagon;
    Names hex_vertices;
    for (int i = 0; i < 6; ++i) {
        hex_vertices.push_back(hex_name(i));
        hexagon.push_back({hex_name(i), hex_name((i + 1) % 6)});
    }
    out.seam.target = Complex::from_facets("seam", hex_vertices, hexagon);
    return out;
}

std::vector<mpz_class> top_cycle(const Complex& x)
{
    const int d = x.dim();
    if (d < 1)
        throw PreconditionError("top_cycle needs a complex of dimension >= 1");
    QMat m(x.count(d - 1), QVec(x.count(d)));
    for (std::size_t i = 0; i < x.count(d); ++i)
        for (int j = 0; j <= d; ++j)
            m[x.face_index(d, i, j)][i] = j % 2 ? -1 : 1;
    const auto kernel = nullspace(std::move(m), x.count(d));
    if (kernel.size() != 1)
        throw PreconditionError("top cycles of " + x.name() + " have rank " + std::to_string(kernel.size()) +
                                ", expected 1");
    mpz_class den = 1, g = 0;
    for (const auto& v : kernel[0])
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> z;
    for (const auto& v : kernel[0]) {
        z.push_back(v.get_num() * (den / v.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    const int s = sgn(*std::find_if(z.begin(), z.end(), [](const mpz_class& v) { return v != 0; }));
    for (auto& v : z)
        v = s * v / g;
    return z;
}

Cochain facet_dual(const Complex& x, const Simplex& facet, const mpz_class& coefficient)
{
    const int d = static_cast<int>(facet.size()) - 1;
    if (!x.find(facet))
        throw ParameterError("simplex (" + x.simplex_id(facet) + ") is not in " + x.name());
    Cochain c{Ring::Z, d, {}};
    if (coefficient != 0)
        c.support.emplace(x.simplex_id(facet), coefficient);
    return c;
}

} // namespace vko
