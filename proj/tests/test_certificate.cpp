#include <catch_amalgamated.hpp>

#include "vko/builders.hpp"
#include "vko/certificate.hpp"
#include "vko/surgery.hpp"

using namespace vko;

TEST_CASE("cochains survive a json round trip")
{
    Cochain c{Ring::Z, 3, {{"0|1,2", 5}, {"1|0,2", mpz_class("123456789012345678901234567890")}}};
    const auto j = cochain_to_json(c);
    CHECK(j["support"]["1|0,2"].is_string());
    CHECK(j["support"]["0|1,2"] == 5);
    CHECK(cochain_from_json(j) == c);
}

TEST_CASE("obstruction certificates verify and detect tampering")
{
    for (const auto& [x, ring] : {std::pair{complete_graph(5), Ring::Z}, std::pair{complete_graph(4), Ring::Z2},
                                  std::pair{cycle(5), Ring::Z}, std::pair{complete_bipartite(3, 3), Ring::Z2}}) {
        const auto r = vk_obstruction(x, 2, ring, 3);
        auto j = obstruction_certificate(r);
        const auto text = j.dump();
        CHECK(verify_certificate(json::parse(text)).empty());
        Complex back;
        CHECK(report_from_certificate(j, back).cocycle == r.cocycle);
        CHECK(back == x);

        auto flipped = j;
        flipped["verdict"] = r.nonzero ? "zero" : "nonzero";
        CHECK_FALSE(verify_certificate(flipped).empty());
        auto moved = j;
        moved["map"]["coords"][x.vertex_name(0)][0] = "1/3";
        CHECK_FALSE(verify_certificate(moved).empty());
    }
}

TEST_CASE("join certificates verify from the file alone")
{
    const auto p = cycle(5);
    const auto cert = certify_join_mod2(p, 1, 50);
    REQUIRE(cert.verified);
    auto j = join_certificate(p, cert);
    CHECK(verify_certificate(j).empty());

    auto dropped = j;
    dropped["witness"]["support"].erase(dropped["witness"]["support"].begin());
    CHECK_FALSE(verify_certificate(dropped).empty());
    auto shifted = j;
    shifted["map"]["coords"]["R.0"][5] = "7";
    CHECK_FALSE(verify_certificate(shifted).empty());
}

TEST_CASE("coboundary certificates")
{
    const auto x = rp2_six_vertex();
    const SimplicialCells cells(x);
    auto c = facet_dual(x, x.simplex_vector(2, 0), 1);
    auto twice = c;
    twice.support.begin()->second = 2;
    const auto bad = coboundary_solve(cells, c);
    const auto good = coboundary_solve(cells, twice);
    CHECK_FALSE(bad.solvable);
    CHECK(good.solvable);
    CHECK(verify_certificate(coboundary_certificate(x, c, bad)).empty());
    CHECK(verify_certificate(coboundary_certificate(x, twice, good)).empty());
    CHECK_FALSE(verify_certificate(coboundary_certificate(x, twice, bad)).empty());
}
