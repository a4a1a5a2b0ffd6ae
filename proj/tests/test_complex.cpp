#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "vko/builders.hpp"
#include "vko/complex.hpp"
#include "vko/complex_io.hpp"
#include "vko/errors.hpp"

using namespace vko;

namespace {

std::vector<std::size_t> fv(const Complex& x) { return x.f_vector(); }

long long reduced_euler(const Complex& x) { return x.euler_characteristic() - 1; }

// Facets containing v, with v removed.
std::vector<Simplex> link_facets(const Complex& x, VertexId v)
{
    std::vector<Simplex> out;
    for (const auto& f : x.facets())
        if (std::find(f.begin(), f.end(), v) != f.end()) {
            Simplex rest;
            for (VertexId w : f)
                if (w != v)
                    rest.push_back(w);
            out.push_back(rest);
        }
    return out;
}

bool is_single_cycle(const std::vector<Simplex>& edges)
{
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& e : edges) {
        if (e.size() != 2)
            return false;
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2)
            return false;
    std::set<VertexId> seen;
    std::vector<VertexId> stack{adj.begin()->first};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second)
            continue;
        for (VertexId w : adj[v])
            stack.push_back(w);
    }
    return seen.size() == adj.size();
}

// Tries to orient every triangle so adjacent triangles induce opposite edge orientations.
bool orientable_surface(const Complex& x)
{
    const auto tris = x.facets();
    std::map<Simplex, std::vector<std::size_t>> by_edge;
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (int j = 0; j < 3; ++j) {
            Simplex e;
            for (int k = 0; k < 3; ++k)
                if (k != j)
                    e.push_back(tris[i][k]);
            by_edge[e].push_back(i);
        }
    // Sign of edge e (sorted) in the boundary of triangle t with orientation o.
    auto edge_sign = [&](std::size_t t, const Simplex& e) {
        for (int j = 0; j < 3; ++j)
            if (std::find(e.begin(), e.end(), tris[t][j]) == e.end())
                return j % 2 == 0 ? 1 : -1;
        return 0;
    };
    std::vector<int> orient(tris.size(), 0);
    for (std::size_t start = 0; start < tris.size(); ++start) {
        if (orient[start])
            continue;
        orient[start] = 1;
        std::vector<std::size_t> queue{start};
        while (!queue.empty()) {
            auto t = queue.back();
            queue.pop_back();
            for (int j = 0; j < 3; ++j) {
                Simplex e;
                for (int k = 0; k < 3; ++k)
                    if (k != j)
                        e.push_back(tris[t][k]);
                for (auto u : by_edge[e]) {
                    if (u == t)
                        continue;
                    const int want = -orient[t] * edge_sign(t, e) * edge_sign(u, e);
                    if (!orient[u]) {
                        orient[u] = want;
                        queue.push_back(u);
                    } else if (orient[u] != want) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

Complex random_complex(std::mt19937_64& rng, const std::string& name)
{
    const int n = 3 + static_cast<int>(rng() % 3);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(std::string(1, static_cast<char>('a' + i)));
    std::vector<Simplex> facets;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
        Simplex s;
        for (int v = 0; v < n; ++v)
            if (rng() % 2)
                s.push_back(static_cast<VertexId>(v));
        if (s.empty())
            s.push_back(0);
        facets.push_back(s);
    }
    return Complex::from_index_facets(name, names, facets);
}

// Vertex-name-independent form: facets as sorted lists of positions in the canonical vertex order.
std::set<Simplex> shape(const Complex& x)
{
    auto f = x.facets();
    return {f.begin(), f.end()};
}

} // namespace

TEST_CASE("named families have the expected face counts")
{
    const int k5[] = {4, 1};
    CHECK(fv(build_named("skeleton_of_simplex", k5)) == std::vector<std::size_t>{5, 10});
    const int three[] = {3};
    CHECK(fv(build_named("three_point_join", three)) == std::vector<std::size_t>{9, 27, 27});
    CHECK(skeleton_of_simplex(6, 2).count(2) == 35);
    CHECK(fv(rp2_six_vertex()) == std::vector<std::size_t>{6, 15, 10});
    CHECK(fv(complete_graph(4)) == std::vector<std::size_t>{4, 6});
    CHECK(fv(cycle(5)) == std::vector<std::size_t>{5, 5});
    CHECK(fv(triod()) == std::vector<std::size_t>{4, 3});
    CHECK(fv(boundary_sphere(3)) == std::vector<std::size_t>{4, 6, 4});
    const int fl[] = {1, 0};
    CHECK(fv(flores_join(fl)) == std::vector<std::size_t>{8, 10 + 5 * 3, 30});
}

TEST_CASE("build_named rejects invalid parameters")
{
    const int bad[] = {2, 3};
    CHECK_THROWS_AS(build_named("skeleton_of_simplex", bad), ParameterError);
    CHECK_THROWS_AS(build_named("no_such_family", {}), ParameterError);
    const int odd[] = {2};
    CHECK_THROWS_AS(build_named("cycle", odd), ParameterError);
    CHECK_THROWS_WITH(build_named("skeleton_of_simplex", bad), Catch::Matchers::ContainsSubstring("0 <= k <= d"));
}

TEST_CASE("rp2 is a closed non-orientable surface")
{
    const Complex rp2 = rp2_six_vertex();
    CHECK(rp2.euler_characteristic() == 1);
    for (VertexId v = 0; v < rp2.vertex_count(); ++v)
        CHECK(is_single_cycle(link_facets(rp2, v)));
    CHECK_FALSE(orientable_surface(rp2));
    CHECK(orientable_surface(boundary_sphere(3)));
}

TEST_CASE("join")
{
    const Complex k5 = complete_graph(5);
    const Complex c = join(point_complex(), k5);
    CHECK(c.total_count() == 2 * k5.total_count() + 1);
    CHECK(join(k5, three_point_join(1)).count(2) == 30);
    const Complex k33 = join(three_point_join(1), three_point_join(1));
    CHECK(fv(k33) == std::vector<std::size_t>{6, 9});
    CHECK(shape(k33) == shape(three_point_join(2)));
    CHECK(k33.dim() == 1);
    CHECK(validate(k33).empty());
}

TEST_CASE("join reduced Euler characteristic and associativity on random complexes")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Complex a = random_complex(rng, "a");
        const Complex b = random_complex(rng, "b");
        const Complex c = random_complex(rng, "c");
        const Complex ab = join(a, b);
        CHECK(reduced_euler(ab) == -reduced_euler(a) * reduced_euler(b));
        CHECK(ab.dim() == a.dim() + b.dim() + 1);
        const Complex left = join(ab, c);
        const Complex right = join(a, join(b, c));
        CHECK(fv(left) == fv(right));
        // Both sides order vertices as a, then b, then c, so canonical position lists must agree.
        CHECK(shape(left) == shape(right));
    }
}

TEST_CASE("product staircase counts")
{
    const Complex edge = skeleton_of_simplex(1, 1);
    const Complex tri = skeleton_of_simplex(2, 2);
    CHECK(fv(product(edge, edge)) == std::vector<std::size_t>{4, 5, 2});
    CHECK(product(triod(), edge).facets().size() == 6);
    CHECK(product(tri, edge).facets().size() == 3);
    CHECK(product(tri, edge).dim() == 3);
    CHECK(product(point_complex(), tri).facets().size() == 1);
    // Product of two circles is a torus.
    const Complex torus = product(cycle(3), cycle(3));
    CHECK(torus.euler_characteristic() == 0);
    CHECK(orientable_surface(torus));
    for (VertexId v = 0; v < torus.vertex_count(); ++v)
        CHECK(is_single_cycle(link_facets(torus, v)));
    CHECK(validate(torus).empty());
}

TEST_CASE("cone and suspension")
{
    const Complex s = cone_suspend(boundary_sphere(2), ConeMode::suspension, 1);
    CHECK(fv(s) == std::vector<std::size_t>{5, 9, 6});
    const Complex c = cone_suspend(complete_graph(5), ConeMode::cone, 1);
    CHECK(c.count(2) == 10);
    CHECK(c.euler_characteristic() == 1);
    const Complex x = complete_graph(4);
    CHECK(cone_suspend(x, ConeMode::suspension, 2).facets().size() == 4 * x.facets().size());
    CHECK_THROWS_AS(cone_suspend(x, ConeMode::cone, 0), ParameterError);
}

TEST_CASE("barycentric subdivision of the tetrahedron boundary")
{
    const Complex sd = barycentric_subdivision(boundary_sphere(3));
    CHECK(fv(sd) == std::vector<std::size_t>{14, 36, 24});
    CHECK(sd.euler_characteristic() == 2);
    CHECK(sd.find_vertex("0+1+2").has_value());
    CHECK(validate(sd).empty());
}

TEST_CASE("validate reports each violation")
{
    CHECK(validate(complete_graph(5)).empty());

    SimplexList missing{"m", {"a", "b", "c"}, {{"a"}, {"b"}, {"c"}, {"a", "b"}, {"a", "c"}, {"a", "b", "c"}}};
    auto issues = validate(missing);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0] == "closure: missing face [b,c]");

    SimplexList unsorted{"u", {"a", "b"}, {{"a"}, {"b"}, {"b", "a"}}};
    issues = validate(unsorted);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].find("canonicalization") != std::string::npos);

    SimplexList dup{"d", {"a", "b"}, {{"a"}, {"b"}, {"a", "b"}, {"a", "b"}}};
    CHECK(validate(dup) == std::vector<std::string>{"duplicate simplex [a,b]"});
}

TEST_CASE("simplicial maps and lookups")
{
    const Complex x = rp2_six_vertex();
    for (int d = 0; d <= x.dim(); ++d)
        for (std::size_t i = 0; i < x.count(d); ++i) {
            CHECK(x.find(x.simplex(d, i)) == i);
            CHECK(x.parse_simplex(x.simplex_id(d, i)) == x.simplex_vector(d, i));
            auto [dd, ii] = x.from_global(x.global_id(d, i));
            CHECK((dd == d && ii == i));
        }
    SimplicialMap collapse{complete_graph(3), point_complex(), {0, 0, 0}};
    CHECK(collapse.validate().empty());
    SimplicialMap bad{cycle(4), complete_graph(2), {0, 1, 0, 1}};
    CHECK(bad.validate().empty());
    SimplicialMap worse{complete_graph(3), cycle(4), {0, 1, 2}};
    CHECK(worse.validate().size() == 1);
}

TEST_CASE("serialization is deterministic and round-trips")
{
    const int params[] = {1, 1};
    const Complex x = build_named("flores_join", params);
    const std::string a = complex_to_json(x).dump();
    const std::string b = complex_to_json(build_named("flores_join", params)).dump();
    CHECK(a == b);
    const Complex y = complex_from_json(json::parse(a));
    CHECK(y == x);
    CHECK(y.name() == x.name());
}
