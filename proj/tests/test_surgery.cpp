#include <catch_amalgamated.hpp>

#include <map>

#include "vko/builders.hpp"
#include "vko/errors.hpp"
#include "vko/obstruction.hpp"
#include "vko/surgery.hpp"

using namespace vko;

namespace {

std::map<Simplex, int> cofacet_counts(const Complex& x)
{
    std::map<Simplex, int> out;
    for (std::size_t i = 0; i < x.count(1); ++i)
        out[x.simplex_vector(1, i)] = 0;
    for (std::size_t i = 0; i < x.count(2); ++i)
        for (int j = 0; j < 3; ++j)
            ++out[x.simplex_vector(1, x.face_index(2, i, j))];
    return out;
}

bool on_seam(const Complex& x, const Simplex& e)
{
    return x.vertex_name(e[0]).starts_with("~h") && x.vertex_name(e[1]).starts_with("~h");
}

Simplex first_facet(const Complex& x)
{
    return x.simplex_vector(2, 0);
}

} // namespace

TEST_CASE("cyclic double covers")
{
    for (int len : {6, 8, 12}) {
        auto f = double_cover_cycle(len);
        CHECK(f.validate().empty());
        std::map<Simplex, int> preimages;
        for (std::size_t i = 0; i < f.source.count(1); ++i)
            ++preimages[f.image(f.source.simplex(1, i))];
        CHECK(preimages.size() == static_cast<std::size_t>(len / 2));
        for (const auto& [e, n] : preimages) {
            CHECK(e.size() == 2);
            CHECK(n == 2);
        }
    }
    CHECK(double_cover_cycle(12).assignment[7] == 1);
    CHECK_THROWS_AS(double_cover_cycle(5), ParameterError);
    CHECK_THROWS_AS(double_cover_cycle(4), ParameterError);
}

TEST_CASE("regluing three_point_join(3)")
{
    const auto t3 = three_point_join(3);
    const auto r = reglue_degree2(t3, first_facet(t3));
    const auto& l = r.complex;
    CHECK(validate(l).empty());
    CHECK(l.f_vector() == std::vector<std::size_t>{28, 90, 71});
    CHECK(l.euler_characteristic() == t3.euler_characteristic());
    CHECK(r.reglued_disk.size() == 36);
    CHECK(r.exterior.size() + r.reglued_disk.size() == l.count(2));
    CHECK(r.seam.validate().empty());

    int seam_edges = 0;
    for (const auto& [e, n] : cofacet_counts(l))
        if (on_seam(l, e)) {
            ++seam_edges;
            CHECK(n == 3);
        }
    CHECK(seam_edges == 6);

    auto in = [](const std::vector<Simplex>& list, const Simplex& s) {
        return std::find(list.begin(), list.end(), s) != list.end();
    };
    CHECK(in(r.exterior, r.marked.at("p")));
    CHECK(in(r.exterior, r.marked.at("q")));
    CHECK(in(r.reglued_disk, r.marked.at("r")));
    for (VertexId v : r.marked.at("q"))
        for (VertexId w : first_facet(t3))
            CHECK(l.vertex_name(v) != t3.vertex_name(w));
}

TEST_CASE("regluing a sphere gives H^2 = Z and p ~ 2r")
{
    const auto sphere = barycentric_subdivision(boundary_sphere(3));
    const auto r = reglue_degree2(sphere, first_facet(sphere));
    const auto& n = r.complex;
    CHECK(validate(n).empty());
    CHECK(n.euler_characteristic() == 2);
    for (const auto& [e, k] : cofacet_counts(n))
        CHECK(k == (on_seam(n, e) ? 3 : 2));

    const SimplicialCells cells(n);
    CHECK(homology_groups(cells, 2, Ring::Z, Direction::cohomology) == GroupDescriptor{1, {}});
    CHECK(homology_groups(cells, 1, Ring::Z, Direction::homology) == GroupDescriptor{0, {}});

    const auto z = top_cycle(n);
    auto weight = [&](const Simplex& s) { return z[*n.find(s)]; };
    const Simplex p = r.marked.at("p"), rr = r.marked.at("r");
    CHECK(abs(weight(p)) == 2);
    CHECK(abs(weight(rr)) == 1);
    for (const auto& s : r.reglued_disk)
        CHECK(abs(weight(s)) == 1);
    for (const auto& s : r.exterior)
        CHECK(abs(weight(s)) == 2);

    // Co-oriented duals: p - 2r is a coboundary, p - r is not.
    const mpz_class sp = sgn(weight(p)), sr = sgn(weight(rr));
    auto combine = [&](const mpz_class& k) {
        Cochain c = facet_dual(n, p, sp);
        c.support.emplace(n.simplex_id(rr), -k * sr);
        return c;
    };
    auto good = coboundary_solve(cells, combine(2));
    CHECK(good.solvable);
    CHECK(verify_solution(cells, combine(2), good).empty());
    auto bad = coboundary_solve(cells, combine(1));
    CHECK_FALSE(bad.solvable);
    CHECK(verify_solution(cells, combine(1), bad).empty());
}

TEST_CASE("surgery preconditions")
{
    const auto k5 = complete_graph(5);
    CHECK_THROWS_AS(reglue_degree2(k5, k5.simplex_vector(1, 0)), ParameterError);
    const auto t3 = three_point_join(3);
    CHECK_THROWS_AS(reglue_degree2(t3, t3.simplex_vector(1, 0)), ParameterError);
    CHECK_THROWS_AS(reglue_degree2(t3, Simplex{0, 1, 2}), ParameterError);
    const auto tetra = boundary_sphere(3);
    CHECK_THROWS_AS(reglue_degree2(tetra, tetra.simplex_vector(2, 0)), ConstructionError);
    CHECK_THROWS_AS(top_cycle(complete_graph(5)), PreconditionError);
}

TEST_CASE("regluing T3 kills the mod 2 obstruction but not the integral one")
{
    const auto t3 = three_point_join(3);
    const auto l = reglue_degree2(t3, first_facet(t3)).complex;
    CHECK(vk_obstruction(t3, 4, Ring::Z2, 0).nonzero);
    auto mod2 = vk_obstruction(l, 4, Ring::Z2, 0);
    CHECK_FALSE(mod2.nonzero);
    CHECK(verify_report(l, mod2).empty());
    auto integral = vk_obstruction(l, 4, Ring::Z, 0);
    CHECK(integral.nonzero);
    CHECK(verify_report(l, integral).empty());
}
