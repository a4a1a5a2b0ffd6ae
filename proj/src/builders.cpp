#include "vko/builders.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>

#include "vko/errors.hpp"

namespace vko {

namespace {

std::vector<std::string> numbered(std::string_view prefix, int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(indexed_name(prefix, static_cast<std::size_t>(i), static_cast<std::size_t>(n)));
    return names;
}

// All subsets of {0..n-1} of size exactly `size`, in lexicographic order.
std::vector<Simplex> subsets_of_size(int n, int size)
{
    std::vector<Simplex> out;
    if (size == 0)
        return {Simplex{}};
    if (size < 0 || size > n)
        return out;
    Simplex s(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        s[i] = static_cast<VertexId>(i);
    while (true) {
        out.push_back(s);
        int i = size - 1;
        while (i >= 0 && static_cast<int>(s[i]) == n - size + i)
            --i;
        if (i < 0)
            break;
        ++s[i];
        for (int j = i + 1; j < size; ++j)
            s[j] = s[j - 1] + 1;
    }
    return out;
}

void require(bool ok, const std::string& constraint)
{
    if (!ok)
        throw ParameterError(constraint);
}

} // namespace

Complex point_complex()
{
    return Complex::from_index_facets("point", {"0"}, {{0}});
}

Complex skeleton_of_simplex(int d, int k)
{
    require(d >= 0, "skeleton_of_simplex(d,k) needs d >= 0");
    require(k >= 0 && k <= d, "skeleton_of_simplex(d,k) needs 0 <= k <= d");
    require(d <= 24, "skeleton_of_simplex(d,k) needs d <= 24");
    return Complex::from_index_facets("skeleton_of_simplex(" + std::to_string(d) + "," + std::to_string(k) + ")",
                                      numbered("", d + 1), subsets_of_size(d + 1, k + 1));
}

Complex flores_join(std::span<const int> skeleton_dims)
{
    require(!skeleton_dims.empty(), "flores_join needs at least one factor");
    const int groups = static_cast<int>(skeleton_dims.size());
    std::vector<std::string> names;
    std::vector<std::vector<Simplex>> group_facets;
    std::vector<VertexId> first;
    std::string label = "flores_join(";
    for (int g = 0; g < groups; ++g) {
        const int k = skeleton_dims[g];
        require(k >= 0 && k <= 10, "flores_join factors need 0 <= k_i <= 10");
        const int n = 2 * k + 3;
        first.push_back(static_cast<VertexId>(names.size()));
        const std::string prefix = indexed_name("", static_cast<std::size_t>(g), static_cast<std::size_t>(groups)) + ".";
        for (auto& v : numbered(prefix, n))
            names.push_back(std::move(v));
        group_facets.push_back(subsets_of_size(n, k + 1));
        label += (g ? "," : "") + std::to_string(k);
    }
    label += ")";

    std::vector<Simplex> facets{Simplex{}};
    for (int g = 0; g < groups; ++g) {
        std::vector<Simplex> next;
        for (const auto& prefix : facets)
            for (const auto& s : group_facets[g]) {
                Simplex joined = prefix;
                for (VertexId v : s)
                    joined.push_back(first[g] + v);
                next.push_back(std::move(joined));
            }
        facets = std::move(next);
    }
    require(facets.front().size() <= 30, "flores_join dimension exceeds 29");
    return Complex::from_index_facets(label, std::move(names), facets);
}

Complex three_point_join(int k)
{
    require(k >= 1, "three_point_join(k) needs k >= 1");
    std::vector<int> zeros(static_cast<std::size_t>(k), 0);
    return flores_join(zeros).renamed("three_point_join(" + std::to_string(k) + ")");
}

Complex triod()
{
    return Complex::from_index_facets("triod", {"0", "1", "2", "3"}, {{0, 1}, {0, 2}, {0, 3}});
}

Complex complete_graph(int n)
{
    require(n >= 1, "complete_graph(n) needs n >= 1");
    if (n == 1)
        return point_complex().renamed("complete_graph(1)");
    return skeleton_of_simplex(n - 1, 1).renamed("complete_graph(" + std::to_string(n) + ")");
}

Complex cycle(int n)
{
    require(n >= 3, "cycle(n) needs n >= 3");
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
    return Complex::from_index_facets("cycle(" + std::to_string(n) + ")", numbered("", n), edges);
}

Complex complete_bipartite(int a, int b)
{
    require(a >= 1 && b >= 1, "complete_bipartite(a, b) needs a, b >= 1");
    auto names = numbered("a", a);
    for (auto& n : numbered("b", b))
        names.push_back(n);
    std::vector<Simplex> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(a + j)});
    return Complex::from_index_facets("complete_bipartite(" + std::to_string(a) + "," + std::to_string(b) + ")",
                                      names, edges);
}

Complex random_planar_graph(int n, std::uint64_t seed)
{
    require(n >= 3, "random_planar_graph(n) needs n >= 3");
    std::mt19937_64 rng(seed);
    std::vector<std::array<VertexId, 3>> faces{{0, 1, 2}, {0, 1, 2}};
    std::set<std::pair<VertexId, VertexId>> edges{{0, 1}, {0, 2}, {1, 2}};
    std::set<std::pair<VertexId, VertexId>> tree{{0, 1}, {0, 2}};
    for (VertexId v = 3; v < static_cast<VertexId>(n); ++v) {
        const std::size_t k = rng() % faces.size();
        const auto f = faces[k];
        faces.erase(faces.begin() + static_cast<std::ptrdiff_t>(k));
        for (int i = 0; i < 3; ++i) {
            edges.insert({f[i], v});
            faces.push_back({f[i], f[(i + 1) % 3], v});
        }
        tree.insert({f[0], v});
    }
    std::vector<Simplex> kept;
    for (const auto& [a, b] : edges)
        if (tree.count({a, b}) || rng() % 3 != 0)
            kept.push_back({a, b});
    return Complex::from_index_facets("random_planar_graph(" + std::to_string(n) + "," + std::to_string(seed) + ")",
                                      numbered("", n), kept);
}

Complex random_tree(int n, std::uint64_t seed)
{
    require(n >= 1, "random_tree(n) needs n >= 1");
    if (n == 1)
        return point_complex().renamed("random_tree(1)");
    std::mt19937_64 rng(seed);
    std::vector<Simplex> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back({static_cast<VertexId>(rng() % v), static_cast<VertexId>(v)});
    return Complex::from_index_facets("random_tree(" + std::to_string(n) + "," + std::to_string(seed) + ")",
                                      numbered("", n), edges);
}

Complex boundary_sphere(int d)
{
    require(d >= 1, "boundary_sphere(d) needs d >= 1");
    return skeleton_of_simplex(d, d - 1).renamed("boundary_sphere(" + std::to_string(d) + ")");
}

Complex rp2_six_vertex()
{
    // Quotient of the icosahedron by the antipodal map.
    const std::vector<Simplex> facets = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
    return Complex::from_index_facets("rp2_six_vertex", {"1", "2", "3", "4", "5", "6"}, facets);
}

std::vector<std::string_view> named_families()
{
    return {"skeleton_of_simplex", "three_point_join", "flores_join", "triod",
            "complete_graph",      "cycle",            "boundary_sphere", "rp2_six_vertex"};
}

Complex build_named(std::string_view family, std::span<const int> params)
{
    auto arity = [&](std::size_t n) {
        require(params.size() == n, std::string(family) + " takes exactly " + std::to_string(n) + " parameter(s)");
    };
    if (family == "skeleton_of_simplex") {
        arity(2);
        return skeleton_of_simplex(params[0], params[1]);
    }
    if (family == "three_point_join") {
        arity(1);
        return three_point_join(params[0]);
    }
    if (family == "flores_join")
        return flores_join(params);
    if (family == "triod") {
        arity(0);
        return triod();
    }
    if (family == "complete_graph") {
        arity(1);
        return complete_graph(params[0]);
    }
    if (family == "cycle") {
        arity(1);
        return cycle(params[0]);
    }
    if (family == "boundary_sphere") {
        arity(1);
        return boundary_sphere(params[0]);
    }
    if (family == "rp2_six_vertex") {
        arity(0);
        return rp2_six_vertex();
    }
    throw ParameterError("unknown family '" + std::string(family) + "'");
}

Complex join(const Complex& a, const Complex& b)
{
    std::vector<std::string> names;
    for (const auto& v : a.vertices())
        names.push_back("L." + v);
    for (const auto& v : b.vertices())
        names.push_back("R." + v);
    const VertexId shift = static_cast<VertexId>(a.vertex_count());

    const auto fa = a.facets();
    const auto fb = b.facets();
    std::vector<Simplex> facets;
    if (fa.empty() || fb.empty()) {
        for (const auto& s : fa)
            facets.push_back(s);
        for (const auto& t : fb) {
            Simplex u;
            for (VertexId v : t)
                u.push_back(v + shift);
            facets.push_back(std::move(u));
        }
    }
    for (const auto& s : fa)
        for (const auto& t : fb) {
            Simplex u = s;
            for (VertexId v : t)
                u.push_back(v + shift);
            facets.push_back(std::move(u));
        }
    return Complex::from_index_facets("join(" + a.name() + "," + b.name() + ")", std::move(names), facets);
}

Complex product(const Complex& a, const Complex& b)
{
    const std::size_t nb = b.vertex_count();
    std::vector<std::string> names;
    for (const auto& u : a.vertices())
        for (const auto& w : b.vertices())
            names.push_back("L." + u + ":R." + w);
    auto pair_id = [nb](VertexId u, VertexId w) { return static_cast<VertexId>(u * nb + w); };

    std::vector<Simplex> facets;
    for (const auto& s : a.facets())
        for (const auto& t : b.facets()) {
            const int p = static_cast<int>(s.size()) - 1;
            const int q = static_cast<int>(t.size()) - 1;
            // Each choice of which of the p+q steps advance in `s` is one staircase simplex.
            for (const auto& steps : subsets_of_size(p + q, p)) {
                Simplex chain{pair_id(s[0], t[0])};
                int i = 0, j = 0;
                std::size_t next = 0;
                for (int step = 0; step < p + q; ++step) {
                    if (next < steps.size() && static_cast<int>(steps[next]) == step) {
                        ++i;
                        ++next;
                    } else {
                        ++j;
                    }
                    chain.push_back(pair_id(s[i], t[j]));
                }
                facets.push_back(std::move(chain));
            }
        }
    return Complex::from_index_facets("product(" + a.name() + "," + b.name() + ")", std::move(names), facets);
}

Complex cone_suspend(const Complex& x, ConeMode mode, int k)
{
    require(k >= 1, "cone_suspend needs k >= 1");
    const Complex apex = mode == ConeMode::cone ? point_complex() : boundary_sphere(1);
    Complex out = x;
    for (int i = 0; i < k; ++i)
        out = join(out, apex);
    const std::string label = mode == ConeMode::cone ? "cone" : "suspension";
    return out.renamed(label + "(" + x.name() + "," + std::to_string(k) + ")");
}

Complex barycentric_subdivision(const Complex& x)
{
    // Vertices are simplices of x; facets are maximal chains of faces.
    std::vector<std::string> names;
    std::map<std::size_t, VertexId> of_gid;
    for (int d = 0; d <= x.dim(); ++d)
        for (std::size_t i = 0; i < x.count(d); ++i) {
            std::string name;
            for (VertexId v : x.simplex(d, i))
                name += (name.empty() ? "" : "+") + x.vertex_name(v);
            of_gid[x.global_id(d, i)] = static_cast<VertexId>(names.size());
            names.push_back(std::move(name));
        }

    std::vector<Simplex> facets;
    // Flags are built top-down by repeatedly dropping a vertex.
    for (const auto& f : x.facets()) {
        const int d = static_cast<int>(f.size()) - 1;
        const std::size_t top = *x.find(f);
        std::vector<std::vector<std::pair<int, std::size_t>>> chains{{{d, top}}};
        for (int level = d; level > 0; --level) {
            std::vector<std::vector<std::pair<int, std::size_t>>> next;
            for (const auto& chain : chains) {
                const auto [cd, ci] = chain.back();
                for (int j = 0; j <= cd; ++j) {
                    auto extended = chain;
                    extended.emplace_back(cd - 1, x.face_index(cd, ci, j));
                    next.push_back(std::move(extended));
                }
            }
            chains = std::move(next);
        }
        for (const auto& chain : chains) {
            Simplex s;
            for (const auto& [cd, ci] : chain)
                s.push_back(of_gid.at(x.global_id(cd, ci)));
            facets.push_back(std::move(s));
        }
    }
    return Complex::from_index_facets("barycentric(" + x.name() + ")", std::move(names), facets);
}

} // namespace vko
