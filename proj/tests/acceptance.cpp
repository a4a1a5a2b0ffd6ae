// One line per acceptance criterion.  All arithmetic is exact; the only
// tolerance is zero.  Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "vko/builders.hpp"
#include "vko/certificate.hpp"
#include "vko/errors.hpp"
#include "vko/mapjoin.hpp"
#include "vko/surgery.hpp"

using namespace vko;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_seconds) {
        o.pass = false;
        o.detail += " (over time limit)";
    }
    failures += !o.pass;
    std::printf("criterion %d %s  %s  [%.2f s of %.0f s, tolerance 0]  %s\n", id, o.pass ? "PASS" : "FAIL", title, secs,
                limit_seconds, o.detail.c_str());
    std::fflush(stdout);
}

bool verdict_ok(const Complex& x, int m, Ring ring, bool nonzero, std::string& detail)
{
    const auto r = vk_obstruction(x, m, ring, 0);
    const bool ok = r.nonzero == nonzero && verify_report(x, r).empty();
    detail += x.name() + "/" + std::string(ring_name(ring)) + "=" + r.verdict() + " ";
    return ok;
}

bool dd_zero(const CellComplex& c, Ring r)
{
    for (int g = 2; g <= c.dim(); ++g) {
        auto dd = boundary_matrix(c, g - 1, r) * boundary_matrix(c, g, r);
        if (r == Ring::Z2)
            dd = dd.reduced_mod2();
        if (!dd.is_zero())
            return false;
    }
    return true;
}

Complex reglued_t3()
{
    const auto t3 = three_point_join(3);
    return reglue_degree2(t3, t3.simplex_vector(2, 0)).complex;
}

} // namespace

int main()
{
    criterion(1, "graph verdicts", 5, [] {
        std::string d;
        bool ok = true;
        for (Ring ring : {Ring::Z, Ring::Z2}) {
            ok &= verdict_ok(complete_graph(5), 2, ring, true, d);
            ok &= verdict_ok(complete_bipartite(3, 3), 2, ring, true, d);
            ok &= verdict_ok(complete_graph(4), 2, ring, false, d);
            ok &= verdict_ok(cycle(5), 2, ring, false, d);
            ok &= verdict_ok(random_planar_graph(10, 0), 2, ring, false, d);
        }
        return Outcome{ok, d};
    });

    criterion(2, "Flores complexes mod 2 at m=4", 120, [] {
        std::string d;
        bool ok = verdict_ok(skeleton_of_simplex(6, 2), 4, Ring::Z2, true, d);
        ok &= verdict_ok(three_point_join(3), 4, Ring::Z2, true, d);
        return Outcome{ok, d};
    });

    criterion(3, "example e1: H^2(RP^2_6; Z) = Z/2", 5, [] {
        const auto g = homology_groups(SimplicialCells(rp2_six_vertex()), 2, Ring::Z, Direction::cohomology);
        return Outcome{g == GroupDescriptor{0, {mpz_class(2)}}, "H^2 = " + g.to_string()};
    });

    criterion(4, "example e2: H^2(N; Z) = Z and p ~ 2r", 30, [] {
        const auto sphere = barycentric_subdivision(boundary_sphere(3));
        const auto r = reglue_degree2(sphere, sphere.simplex_vector(2, 0));
        const auto& n = r.complex;
        const SimplicialCells cells(n);
        const auto h2 = homology_groups(cells, 2, Ring::Z, Direction::cohomology);
        const auto z = top_cycle(n);
        const Simplex p = r.marked.at("p"), rr = r.marked.at("r");
        const mpz_class sp = sgn(z[*n.find(p)]), sr = sgn(z[*n.find(rr)]);
        auto combine = [&](int k) {
            Cochain c = facet_dual(n, p, sp);
            c.support.emplace(n.simplex_id(rr), -k * sr);
            return c;
        };
        const auto twice = coboundary_solve(cells, combine(2));
        const auto once = coboundary_solve(cells, combine(1));
        const auto replay = verify_certificate(coboundary_certificate(n, combine(2), twice));
        const bool ok = h2 == GroupDescriptor{1, {}} && twice.solvable && replay.empty() && !once.solvable;
        return Outcome{ok, "H^2 = " + h2.to_string() + ", witness cells " +
                               std::to_string(twice.witness.support.size()) + ", p - r not a coboundary"};
    });

    criterion(5, "Theorem 1 core: theta_Z2(L) = 0, theta_Z(L) != 0", 600, [] {
        const auto l = reglued_t3();
        const auto mod2 = vk_obstruction(l, 4, Ring::Z2, 0);
        const auto integral = vk_obstruction(l, 4, Ring::Z, 0);
        const bool ok = !mod2.nonzero && integral.nonzero && verify_report(l, mod2).empty() &&
                        verify_report(l, integral).empty() && !integral.solution.dual.empty();
        return Outcome{ok, "witness cells " + std::to_string(mod2.solution.witness.support.size()) +
                               ", dual certificate cells " + std::to_string(integral.solution.dual.size())};
    });

    criterion(6, "Theorem 1 join: theta_Z2(L*L) = 0 at m=10", 8 * 3600, [] {
        const auto l = reglued_t3();
        const auto c = certify_join_mod2(l, 0);
        const auto j = join_certificate(l, c);
        const auto replay = verify_certificate(json::parse(j.dump()));
        // The moment-map route on L*L stays behind the cell budget.
        bool gated = false;
        try {
            vk_obstruction(join(l, l), 10, Ring::Z2, 0, Budget{5'000'000, 0});
        } catch (const BudgetExceeded&) {
            gated = true;
        }
        return Outcome{c.verified && replay.empty(),
                       "witness orbit cells " + std::to_string(c.witness_support) + ", cocycle orbit cells " +
                           std::to_string(c.cocycle_support) + ", transverse double points " +
                           std::to_string(c.transverse_points) + ", certificate re-verified" +
                           (gated ? ", moment-map run over budget" : "")};
    });

    criterion(7, "BKK: theta_Z2(K33 * K33) != 0 at m=6", 600, [] {
        std::string d;
        const bool ok = verdict_ok(join(complete_bipartite(3, 3), complete_bipartite(3, 3)), 6, Ring::Z2, true, d);
        return Outcome{ok, d};
    });

    criterion(8, "map-join on K5 pentagons, all labelings", 120, [] {
        const auto f = moment_map(complete_graph(5), 2, 0);
        const auto d = double_points(f);
        if (d.orbits != 5)
            return Outcome{false, std::to_string(d.orbits) + " double points"};
        std::shared_ptr<const SheetPairs> pp, qp;
        std::size_t checked = 0, good = 0;
        for (std::uint64_t a = 0; a < 32; ++a)
            for (std::uint64_t b = 0; b < 32; ++b) {
                const auto phi = SignLabeling::from_bits(5, a), psi = SignLabeling::from_bits(5, b);
                const auto h = build_h(extend_labeling(f, d, phi, Projection::first),
                                       extend_labeling(f, d, psi, Projection::second), pp, qp);
                pp = h.p_pairs;
                qp = h.q_pairs;
                const auto v = verify_double_points(h, d, phi, d, psi);
                ++checked;
                good += v.ok && v.found.size() == 50;
            }
        return Outcome{good == checked, std::to_string(good) + "/" + std::to_string(checked) +
                                            " labeling pairs with |Delta_h| = 50 at level 1/2"};
    });

    criterion(9, "property suites", 600, [] {
        const std::vector<Complex> corpus = {complete_graph(5), complete_bipartite(3, 3), complete_graph(4), cycle(5),
                                             triod(), boundary_sphere(3), rp2_six_vertex(), skeleton_of_simplex(6, 2),
                                             three_point_join(3), reglued_t3()};
        std::size_t checks = 0;
        std::string bad;
        auto expect = [&](bool ok, const std::string& what) {
            ++checks;
            if (!ok && bad.empty())
                bad = what;
        };
        for (const auto& x : corpus) {
            const int m = 2 * x.dim();
            const auto d = deleted_product(x);
            const auto q = quotient(d, SignMode::product_sign);
            const auto plain = quotient(d, SignMode::untwisted);
            expect(dd_zero(SimplicialCells(x), Ring::Z), "dd on " + x.name());
            expect(dd_zero(*d, Ring::Z) && dd_zero(*q, Ring::Z) && dd_zero(*plain, Ring::Z2),
                   "dd on deleted product of " + x.name());

            const auto f = moment_map(x, m, 0);
            const auto ordered = vk_cocycle(*d, f);
            expect(coboundary(*d, ordered).support.empty(), "ordered cocycle of " + x.name());
            for (std::size_t i = 0; i < d->count(m); ++i) {
                const auto& c = d->cells(m)[i];
                const auto a = ordered.support.find(d->cell_id(m, i));
                const auto b = ordered.support.find(d->cell_id(m, d->swap_index(m, i)));
                const mpz_class va = a == ordered.support.end() ? 0 : a->second;
                const mpz_class vb = b == ordered.support.end() ? 0 : b->second;
                expect(vb == ((c.dim_first * c.dim_second) % 2 ? -va : va), "swap sign on " + x.name());
            }

            std::optional<bool> verdict;
            for (std::uint64_t seed = 0; seed < 6; ++seed) {
                const auto r = vk_obstruction(x, m, Ring::Z, seed);
                expect(coboundary(*q, r.cocycle).support.empty(), "cocycle of " + x.name());
                expect(!verdict || *verdict == r.nonzero, "seed invariance on " + x.name());
                verdict = r.nonzero;
                if (seed == 0) {
                    Cochain twice = r.cocycle;
                    for (auto& [id, v] : twice.support)
                        v *= 2;
                    const auto s = coboundary_solve(*q, twice);
                    expect(s.solvable && verify_solution(*q, twice, s).empty(), "2c on " + x.name());
                }
            }
        }
        return Outcome{bad.empty(), std::to_string(checks) + " checks over " + std::to_string(corpus.size()) +
                                        " complexes" + (bad.empty() ? "" : "; first failure: " + bad)};
    });

    std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
