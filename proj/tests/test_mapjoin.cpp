#include <catch_amalgamated.hpp>

#include <algorithm>

#include "vko/builders.hpp"
#include "vko/errors.hpp"
#include "vko/mapjoin.hpp"
#include "vko/obstruction.hpp"

using namespace vko;

namespace {

// On the moment curve in R^2, disjoint edges ab and cd cross iff the parameters
// alternate.
std::size_t alternation_count(const Complex& x, const std::vector<long>& t)
{
    std::size_t count = 0;
    for (std::size_t i = 0; i < x.count(1); ++i)
        for (std::size_t j = i + 1; j < x.count(1); ++j) {
            auto a = x.simplex_vector(1, i), b = x.simplex_vector(1, j);
            if (std::find_first_of(a.begin(), a.end(), b.begin(), b.end()) != a.end())
                continue;
            auto [a0, a1] = std::minmax(t[a[0]], t[a[1]]);
            const bool in0 = a0 < t[b[0]] && t[b[0]] < a1, in1 = a0 < t[b[1]] && t[b[1]] < a1;
            count += in0 != in1;
        }
    return count;
}

std::vector<long> parameters(const PLMap& f)
{
    std::vector<long> t;
    for (const auto& p : f.coords())
        t.push_back(p[0].get_num().get_si());
    return t;
}

PLMap planar(const Complex& x, const std::vector<std::pair<long, long>>& pts)
{
    std::vector<QVec> coords;
    for (auto [a, b] : pts)
        coords.push_back({mpq_class(a), mpq_class(b)});
    return PLMap(x, 2, coords);
}

} // namespace

TEST_CASE("double points of K5 on the moment curve", "[mapjoin]")
{
    const auto f = moment_map(complete_graph(5), 2, 0);
    const auto d = double_points(f);
    CHECK(d.orbits == 5);
    REQUIRE(d.pairs.size() == 10);
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        const auto& p = d.pairs[i];
        CHECK(d.pairs[p.swapped].swapped == i);
        CHECK(d.pairs[p.swapped].orbit == p.orbit);
        CHECK(p.representative != d.pairs[p.swapped].representative);
        CHECK(f.image(p.first, p.first_weights) == f.image(p.second, p.second_weights));
        CHECK(p.image == f.image(p.second, p.second_weights));
    }
}

TEST_CASE("double point counts follow the alternation rule", "[mapjoin]")
{
    for (std::uint64_t seed : {0, 1, 2, 3}) {
        const auto x = complete_bipartite(3, 3);
        const auto f = moment_map(x, 2, seed);
        CHECK(double_points(f).orbits == alternation_count(x, parameters(f)));
        const auto k = complete_graph(6);
        const auto g = moment_map(k, 2, seed);
        CHECK(double_points(g).orbits == alternation_count(k, parameters(g)));
    }
    CHECK(double_points(moment_map(skeleton_of_simplex(1, 1), 2, 0)).pairs.empty());
    CHECK_THROWS_AS(double_points(moment_map(complete_graph(5), 3, 0)), ParameterError);
}

TEST_CASE("labeling values and subdivision", "[mapjoin]")
{
    const auto f = moment_map(complete_graph(5), 2, 0);
    const auto d = double_points(f);
    const auto s = SignLabeling::from_bits(d.orbits, 0b10110);
    for (std::size_t i = 0; i < d.pairs.size(); ++i)
        CHECK(s(d, i) == -s(d, d.pairs[i].swapped));

    const auto phi = extend_labeling(f, d, s, Projection::first);
    const auto& sub = phi.subdivided();
    // Both endpoints of each double point become vertices.
    CHECK(sub.vertex_count() == 15);
    CHECK(sub.count(1) == 20);
    for (std::size_t i = 0; i < d.pairs.size(); ++i) {
        CHECK(phi.values[phi.first_vertex[i]] == s(d, i));
        CHECK(phi.first_vertex[i] == phi.second_vertex[d.pairs[i].swapped]);
        CHECK(phi.map.point(phi.first_vertex[i]) == d.pairs[i].image);
    }
    const auto psi = extend_labeling(f, d, s, Projection::second);
    for (std::size_t i = 0; i < d.pairs.size(); ++i)
        CHECK(psi.values[psi.second_vertex[i]] == s(d, i));
    const auto k5 = complete_graph(5);
    for (const auto& name : k5.vertices())
        CHECK(phi.values[*sub.find_vertex(name)] == 0);

    const auto pairs = meeting_pairs(phi.map);
    CHECK(pairs.problems.empty());
    CHECK(pairs.meeting.size() == 10);

    const auto empty = extend_labeling(moment_map(complete_graph(4), 2, 0), {}, {});
    CHECK(std::all_of(empty.values.begin(), empty.values.end(), [](const mpq_class& v) { return v == 0; }));
    CHECK_THROWS_AS(extend_labeling(f, d, SignLabeling{{1, 1}}), ParameterError);
    CHECK_THROWS_AS(extend_labeling(f, d, SignLabeling{{1, 1, 0, 1, 1}}), ParameterError);
}

TEST_CASE("double points of h match the prediction on K5 * K5", "[mapjoin]")
{
    const auto f = moment_map(complete_graph(5), 2, 0);
    const auto d = double_points(f);
    std::shared_ptr<const SheetPairs> p_pairs, q_pairs;
    for (std::uint64_t bits : {0u, 1u, 0b10110u, 0b11111u}) {
        for (std::uint64_t other : {0u, 0b01001u}) {
            const auto phi = SignLabeling::from_bits(d.orbits, bits);
            const auto psi = SignLabeling::from_bits(d.orbits, other);
            auto h = build_h(extend_labeling(f, d, phi, Projection::first),
                             extend_labeling(f, d, psi, Projection::second), p_pairs, q_pairs);
            p_pairs = h.p_pairs;
            q_pairs = h.q_pairs;
            CHECK(h.map.ambient_dim() == 6);
            const auto v = verify_double_points(h, d, phi, d, psi);
            INFO(bits << " " << other << " " << (v.problems.empty() ? "" : v.problems.front()));
            CHECK(v.ok);
            CHECK(v.found.size() == 50);
            CHECK(v.predicted == 50);
        }
    }
}

TEST_CASE("an embedded factor gives an embedded join", "[mapjoin]")
{
    // K4 as a triangle with its center.
    const auto x = complete_graph(4);
    const auto e = planar(x, {{0, 0}, {6, 0}, {0, 6}, {1, 1}});
    const auto de = double_points(e);
    REQUIRE(de.pairs.empty());
    const auto f = moment_map(complete_graph(5), 2, 0);
    const auto df = double_points(f);
    const auto s = SignLabeling::from_bits(df.orbits, 0b101);
    const auto h = build_h(extend_labeling(e, de, {}), extend_labeling(f, df, s, Projection::second));
    const auto v = verify_double_points(h, de, {}, df, s);
    CHECK(v.ok);
    CHECK(v.found.empty());
}

TEST_CASE("join certificate agrees with the direct cocycle on small joins", "[mapjoin]")
{
    for (const auto& p : {complete_graph(4), cycle(5), random_planar_graph(6, 3)}) {
        const auto cert = certify_join_mod2(p, 0, 200);
        INFO(p.name() << " " << (cert.problems.empty() ? "" : cert.problems.front()));
        REQUIRE(cert.verified);
        CHECK(cert.m == 6);
        // Oracle: the cocycle of h on the full orbit complex, and d of the witness.
        const auto q = quotient(deleted_product(cert.map->source()), SignMode::product_sign);
        CHECK(genericity_check(*cert.map, GenericityMode::exhaustive).empty());
        CHECK(orbit_cocycle(*q, *cert.map, Ring::Z2) == cert.cocycle);
        CHECK(coboundary(*q, cert.witness) == cert.cocycle);
    }
}

TEST_CASE("join certificate refuses a factor with nonzero obstruction", "[mapjoin]")
{
    const auto cert = certify_join_mod2(complete_graph(5), 0, 10);
    CHECK_FALSE(cert.verified);
    CHECK_THROWS_AS(certify_join_mod2(point_complex(), 0), ParameterError);
}
