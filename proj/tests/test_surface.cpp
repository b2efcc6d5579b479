#include <doctest.h>

#include <mcurve/surface.hpp>

using namespace mcurve;

TEST_CASE("coordinate dimension") {
    CHECK(coord_dimension({3, 3}) == 28);
    CHECK(coord_dimension({1, 1}) == 6);
    CHECK(coord_dimension({2, 1}) == 9);
}

TEST_CASE("group sizes sum to the dimension") {
    for (int n = 1; n <= 8; ++n) {
        for (int g = 1; g <= 8; ++g) {
            const SurfaceSig sig{n, g};
            int total = 0;
            for (ArcGroup group : {ArcGroup::Alpha, ArcGroup::Beta, ArcGroup::BetaPrime,
                                   ArcGroup::Xi, ArcGroup::XiPrime, ArcGroup::Gamma,
                                   ArcGroup::C, ArcGroup::CStar})
                total += group_size(sig, group);
            CHECK(total == coord_dimension(sig));
        }
    }
}

TEST_CASE("layout order and golden positions") {
    const SurfaceSig sig{3, 3};
    const auto arcs = layout(sig);
    REQUIRE(arcs.size() == 28);
    CHECK(arcs.front() == ArcId{ArcGroup::Alpha, 1});
    CHECK(arcs.back() == ArcId{ArcGroup::CStar, 1});
    // After 6 alphas and 6 betas, position 12 opens the beta' group, whose
    // first index is n+2 = 5.
    CHECK(arcs[12] == ArcId{ArcGroup::BetaPrime, 5});
}

TEST_CASE("layout is a bijection") {
    for (int n = 1; n <= 8; ++n) {
        for (int g = 1; g <= 8; ++g) {
            const SurfaceSig sig{n, g};
            const auto arcs = layout(sig);
            REQUIRE(static_cast<int>(arcs.size()) == coord_dimension(sig));
            for (int flat = 0; flat < coord_dimension(sig); ++flat) {
                const ArcId arc = arcs[static_cast<std::size_t>(flat)];
                CHECK(flat_index(sig, arc) == flat);
                CHECK(arc_at(sig, flat) == arc);
            }
        }
    }
}

TEST_CASE("g = 1 leaves beta', xi, xi' and c empty") {
    const SurfaceSig sig{2, 1};
    CHECK(group_size(sig, ArcGroup::BetaPrime) == 0);
    CHECK(group_size(sig, ArcGroup::Xi) == 0);
    CHECK(group_size(sig, ArcGroup::XiPrime) == 0);
    CHECK(group_size(sig, ArcGroup::C) == 0);
}

TEST_CASE("region lists") {
    const auto rs33 = regions({3, 3});
    REQUIRE(rs33.size() == 6);
    CHECK(rs33[0].id == RegionId{RegionKind::U, 1});
    CHECK(rs33[2].id == RegionId{RegionKind::U, 3});
    CHECK(rs33[3].id == RegionId{RegionKind::G, 1});
    CHECK(rs33[4].id == RegionId{RegionKind::G, 2});
    CHECK(rs33[5].id == RegionId{RegionKind::GStar, 0});

    const auto rs11 = regions({1, 1});
    REQUIRE(rs11.size() == 2);
    CHECK(rs11[0].id == RegionId{RegionKind::U, 1});
    CHECK(rs11[1].id == RegionId{RegionKind::GStar, 0});

    const auto rs22 = regions({2, 2});
    REQUIRE(rs22.size() == 4);
    CHECK(rs22[2].id == RegionId{RegionKind::G, 1});
}

TEST_CASE("region wall arcs follow the model") {
    const auto rs = regions({3, 3});
    // U_1 is bounded by beta_1 and beta_2.
    CHECK(rs[0].boundary == std::vector<ArcId>{{ArcGroup::Beta, 1}, {ArcGroup::Beta, 2}});
    // G_1's invisible-left wall is beta_1 (no beta'_{n+1} exists).
    CHECK(rs[3].boundary == std::vector<ArcId>{{ArcGroup::Beta, 4},
                                               {ArcGroup::Beta, 1},
                                               {ArcGroup::Beta, 5},
                                               {ArcGroup::BetaPrime, 5}});
    // G* is bounded by beta_{n+g} and beta'_{n+g}.
    CHECK(rs[5].boundary ==
          std::vector<ArcId>{{ArcGroup::Beta, 6}, {ArcGroup::BetaPrime, 6}});

    // For g = 1 the invisible wall of G* is beta_1.
    const auto rs11 = regions({1, 1});
    CHECK(rs11[1].boundary ==
          std::vector<ArcId>{{ArcGroup::Beta, 2}, {ArcGroup::Beta, 1}});
}

TEST_CASE("arc names") {
    CHECK(arc_name({ArcGroup::Beta, 5}) == "beta_5");
    CHECK(arc_name({ArcGroup::XiPrime, 2}) == "xi'_2");
    CHECK(arc_name({ArcGroup::CStar, 1}) == "c*");
    CHECK(region_name({RegionKind::GStar, 0}) == "G*");
}
