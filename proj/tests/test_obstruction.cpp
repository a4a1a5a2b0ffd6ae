#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "vko/builders.hpp"
#include "vko/errors.hpp"
#include "vko/obstruction.hpp"

using namespace vko;

namespace {

Complex k33()
{
    return join(three_point_join(1), three_point_join(1));
}

PLMap planar(const Complex& x, const std::vector<std::pair<long, long>>& pts)
{
    std::vector<QVec> coords;
    for (auto [a, b] : pts)
        coords.push_back({mpq_class(a), mpq_class(b)});
    return PLMap(x, 2, coords);
}

// Cofactor expansion, for small matrices only.
mpz_class cofactor_det(const ZMat& m)
{
    if (m.size() == 1)
        return m[0][0];
    mpz_class total = 0;
    for (std::size_t c = 0; c < m.size(); ++c) {
        ZMat minor;
        for (std::size_t r = 1; r < m.size(); ++r) {
            minor.emplace_back();
            for (std::size_t k = 0; k < m.size(); ++k)
                if (k != c)
                    minor.back().push_back(m[r][k]);
        }
        total += (c % 2 ? -1 : 1) * m[0][c] * cofactor_det(minor);
    }
    return total;
}

// On the moment curve, complementary simplices cross iff their parameters alternate.
bool alternates(const std::vector<mpq_class>& t, std::span<const VertexId> a, std::span<const VertexId> b)
{
    std::vector<std::pair<mpq_class, int>> seq;
    for (VertexId v : a)
        seq.emplace_back(t[v], 0);
    for (VertexId v : b)
        seq.emplace_back(t[v], 1);
    std::sort(seq.begin(), seq.end());
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i].second == seq[i - 1].second)
            return false;
    return true;
}

} // namespace

TEST_CASE("Bareiss determinant agrees with cofactor expansion")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        ZMat m(n, std::vector<mpz_class>(n));
        for (auto& row : m)
            for (auto& v : row)
                v = static_cast<long>(rng() % 7) - 3;
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("Fourier-Motzkin feasibility")
{
    CHECK(strictly_feasible({{1, 0}, {0, 1}}));
    CHECK_FALSE(strictly_feasible({{1, 0}, {-1, 0}}));
    CHECK_FALSE(strictly_feasible({{1, -1}, {-1, 2}, {0, -1}}));
    CHECK(strictly_feasible({{1, -1}, {-1, 2}}));
    CHECK(feasible({{1, 0}, {-1, 0}, {0, 1}}, {false, false, true}));
    CHECK_FALSE(feasible({{1, 0}, {-1, 0}, {1, 0}}, {false, false, true}));
    CHECK_FALSE(strictly_feasible({{0, 0}}));
}

TEST_CASE("moment map coordinates and parameters")
{
    const auto k5 = complete_graph(5);
    const auto f = moment_map(k5, 2, 0);
    for (VertexId v = 0; v < 5; ++v) {
        CHECK(f.point(v)[0] == v + 1);
        CHECK(f.point(v)[1] == (v + 1) * (v + 1));
    }
    auto t = moment_parameters(f);
    REQUIRE(t);
    CHECK((*t)[4] == 5);
    const auto g = moment_map(k5, 2, 11);
    CHECK(moment_parameters(g));
    CHECK(f.fingerprint().size() == 64);
    CHECK(f.fingerprint() == moment_map(k5, 2, 0).fingerprint());
    CHECK(f.fingerprint() != g.fingerprint());
    CHECK_THROWS_AS(moment_map(k5, 0, 0), ParameterError);
}

TEST_CASE("moment maps pass the exhaustive genericity sweep")
{
    CHECK(genericity_check(moment_map(complete_graph(5), 2, 0), GenericityMode::exhaustive).empty());
    CHECK(genericity_check(moment_map(k33(), 2, 4), GenericityMode::exhaustive).empty());
    CHECK(genericity_check(moment_map(skeleton_of_simplex(6, 2), 4, 0), GenericityMode::exhaustive).empty());
    CHECK(genericity_check(moment_map(three_point_join(3), 3, 2), GenericityMode::exhaustive).empty());
}

TEST_CASE("genericity violations are located")
{
    const auto k4 = complete_graph(4);
    SECTION("duplicate coordinates")
    {
        auto f = planar(k4, {{0, 0}, {3, 1}, {0, 0}, {1, 5}});
        auto problems = genericity_check(f);
        REQUIRE_FALSE(problems.empty());
        CHECK(std::any_of(problems.begin(), problems.end(),
                          [](const std::string& p) { return p.find("(0)|(2)") != std::string::npos; }));
    }
    SECTION("a vertex on an edge")
    {
        auto f = planar(k4, {{0, 0}, {1, 1}, {2, 2}, {0, 5}});
        CHECK_FALSE(genericity_check(f).empty());
    }
    SECTION("coplanar triangles in R^4")
    {
        auto x = Complex::from_facets("two triangles", {"a", "b", "c", "d", "e", "f"}, {{"a", "b", "c"}, {"d", "e", "f"}});
        std::vector<QVec> pts = {{0, 0, 0, 0}, {4, 0, 0, 0}, {0, 4, 0, 0}, {1, 1, 0, 0}, {5, 1, 0, 0}, {1, 5, 0, 0}};
        auto problems = genericity_check(PLMap(x, 4, pts));
        REQUIRE_FALSE(problems.empty());
        CHECK(problems.back().find("(a,b,c)|(d,e,f)") != std::string::npos);
        CHECK_THROWS_AS(intersection_number(PLMap(x, 4, pts), x.simplex(2, 0), x.simplex(2, 1)), GenericityError);
    }
    SECTION("moment maps are accepted automatically")
    {
        CHECK(genericity_check(moment_map(k4, 2, 0)).empty());
    }
}

TEST_CASE("intersection numbers of segments")
{
    auto x = Complex::from_facets("segments", {"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    auto f = planar(x, {{0, 0}, {2, 2}, {0, 2}, {2, 0}});
    const auto ab = x.simplex(1, 0), cd = x.simplex(1, 1);
    CHECK(intersection_number(f, ab, cd) == -1);
    CHECK(intersection_number(f, cd, ab) == 1);
    auto c = crossing(f, ab, cd);
    REQUIRE(c);
    CHECK(c->first == QVec{mpq_class(1, 2), mpq_class(1, 2)});
    CHECK(f.image(ab, c->first) == f.image(cd, c->second));

    auto apart = planar(x, {{0, 0}, {1, 1}, {5, 5}, {6, 4}});
    CHECK(intersection_number(apart, ab, cd) == 0);
    auto touching = planar(x, {{0, 0}, {2, 2}, {1, 1}, {3, 0}});
    CHECK_THROWS_AS(intersection_number(touching, ab, cd), GenericityError);
}

TEST_CASE("open simplices sharing a vertex")
{
    auto x = Complex::from_facets("fan", {"a", "b", "s"}, {{"a", "s"}, {"b", "s"}});
    const VertexId a = 0, b = 1, s = 2;
    auto folded = planar(x, {{2, 0}, {1, 0}, {0, 0}});
    CHECK(open_simplices_meet(folded, std::array{a}, std::array{b}, std::array{s}) == MeetKind::degenerate);
    auto fine = planar(x, {{2, 0}, {0, 3}, {0, 0}});
    CHECK(open_simplices_meet(fine, std::array{a}, std::array{b}, std::array{s}) == MeetKind::none);
    CHECK_FALSE(genericity_check(folded, GenericityMode::exhaustive).empty());
}

TEST_CASE("convex K5 has exactly five crossings")
{
    const auto k5 = complete_graph(5);
    auto d = deleted_product(k5);
    auto c = vk_cocycle(*d, moment_map(k5, 2, 0));
    CHECK(c.support.size() == 10);
    for (const auto& [id, v] : c.support)
        CHECK(abs(v) == 1);
    auto q = quotient(d, SignMode::product_sign);
    CHECK(orbit_cocycle(*q, moment_map(k5, 2, 0), Ring::Z).support.size() == 5);
}

TEST_CASE("crossings on the moment curve follow parameter alternation")
{
    for (std::uint64_t seed : {0, 1, 2}) {
        for (const auto& [x, m] : std::vector<std::pair<Complex, int>>{
                 {skeleton_of_simplex(6, 2), 4}, {three_point_join(3), 4}, {k33(), 2}, {three_point_join(3), 3}}) {
            auto f = moment_map(x, m, seed);
            auto t = *moment_parameters(f);
            auto d = deleted_product(x);
            for (const auto& cell : d->cells(m)) {
                const auto a = x.simplex(cell.dim_first, cell.first);
                const auto b = x.simplex(cell.dim_second, cell.second);
                CHECK((intersection_number(f, a, b) != 0) == alternates(t, a, b));
            }
        }
    }
}

TEST_CASE("swap sign and cocycle condition")
{
    for (const auto& [x, m] : std::vector<std::pair<Complex, int>>{{complete_graph(5), 2},
                                                                   {k33(), 2},
                                                                   {skeleton_of_simplex(6, 2), 4},
                                                                   {three_point_join(3), 4},
                                                                   {three_point_join(3), 3},
                                                                   {skeleton_of_simplex(6, 2), 3},
                                                                   {complete_graph(5), 1}}) {
        auto d = deleted_product(x);
        auto f = moment_map(x, m, 5);
        auto c = vk_cocycle(*d, f);
        const auto v = c.values(*d);
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& cell = d->cells(m)[i];
            const int eps = (cell.dim_first * cell.dim_second) % 2 ? -1 : 1;
            CHECK(v[d->swap_index(m, i)] == eps * v[i]);
        }
        auto q = quotient(d, SignMode::product_sign);
        auto z2 = orbit_cocycle(*q, f, Ring::Z2);
        CHECK(coboundary(*q, z2).support.empty());
        if (m == x.dim() * 2)
            CHECK(coboundary(*q, orbit_cocycle(*q, f, Ring::Z)).support.empty());
    }
}

TEST_CASE("graph verdicts")
{
    for (Ring ring : {Ring::Z2, Ring::Z}) {
        for (const auto& x : {complete_graph(5), k33(), complete_bipartite(3, 3)}) {
            auto r = vk_obstruction(x, 2, ring, 0);
            CHECK(r.nonzero);
            CHECK_FALSE(r.solution.dual.empty());
            CHECK(verify_report(x, r).empty());
        }
        for (const auto& x : {complete_graph(4), cycle(5), random_planar_graph(10, 1), random_planar_graph(12, 9),
                              random_tree(9, 4), cycle(3)}) {
            auto r = vk_obstruction(x, 2, ring, 0);
            CHECK_FALSE(r.nonzero);
            CHECK(verify_report(x, r).empty());
        }
    }
}

TEST_CASE("verdicts do not depend on the seed")
{
    for (const auto& x : {complete_graph(5), k33(), complete_graph(4), cycle(5), random_planar_graph(10, 1),
                          skeleton_of_simplex(6, 2), rp2_six_vertex()}) {
        const int m = 2 * x.dim();
        for (Ring ring : {Ring::Z2, Ring::Z}) {
            const bool expected = vk_obstruction(x, m, ring, 0).nonzero;
            for (std::uint64_t seed = 1; seed <= 5; ++seed)
                CHECK(vk_obstruction(x, m, ring, seed).nonzero == expected);
        }
    }
}

TEST_CASE("twice the cocycle is a coboundary over Z")
{
    for (const auto& x : {complete_graph(5), k33(), skeleton_of_simplex(6, 2), three_point_join(3), rp2_six_vertex()}) {
        const int m = 2 * x.dim();
        auto q = quotient(deleted_product(x), SignMode::product_sign);
        auto c = orbit_cocycle(*q, moment_map(x, m, 1), Ring::Z);
        for (auto& [id, v] : c.support)
            v *= 2;
        auto s = coboundary_solve(*q, c);
        CHECK(s.solvable);
        CHECK(verify_solution(*q, c, s).empty());
    }
}

TEST_CASE("tampered reports are rejected")
{
    const auto k5 = complete_graph(5);
    auto r = vk_obstruction(k5, 2, Ring::Z, 0);
    auto forged = r;
    forged.cocycle.support.erase(forged.cocycle.support.begin());
    CHECK_FALSE(verify_report(k5, forged).empty());
    forged = r;
    forged.nonzero = false;
    CHECK_FALSE(verify_report(k5, forged).empty());
}

TEST_CASE("obstruction parameters and budget")
{
    const auto x = three_point_join(3);
    CHECK_THROWS_AS(vk_obstruction(x, 3, Ring::Z, 0), ParameterError);
    CHECK_THROWS_AS(vk_obstruction(x, 5, Ring::Z2, 0), ParameterError);
    CHECK_THROWS_AS(vk_obstruction(x, 4, Ring::Z2, 0, Budget{100, 0}), BudgetExceeded);
}
