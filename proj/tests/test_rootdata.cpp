#include "doctest.h"

#include "krg/error.hpp"
#include "krg/rootdata.hpp"

using namespace krg;

TEST_CASE("build_group validation")
{
    CHECK_NOTHROW(build_group(Family::UnitaryU, 3, Involution::ComplexConjugation));
    CHECK(build_group(Family::UnitaryU, 3, Involution::ComplexConjugation).dim == 3);
    try {
        build_group(Family::UnitaryU, 3, Involution::SymplecticType);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OddRankSymplectic);
    }
    CHECK_THROWS_AS(build_group(Family::ExceptionalG2, 2, Involution::ComplexConjugation), Error);
    CHECK_THROWS_AS(build_group(Family::Symplectic, 2, Involution::ComplexConjugation), Error);
    CHECK_NOTHROW(build_group(Family::Torus, 2, Involution::ComplexConjugation));
}

TEST_CASE("Weyl group orders by reflection closure")
{
    CHECK(weyl_group_order(build_group(Family::ExceptionalG2, 2, Involution::Trivial)) == 12);
    CHECK(weyl_group_order(build_group(Family::UnitaryU, 4, Involution::ComplexConjugation)) == 24);
    CHECK(weyl_group_order(build_group(Family::Symplectic, 2, Involution::Trivial)) == 8);
    CHECK(weyl_group_order(build_group(Family::Symplectic, 3, Involution::Trivial)) == 48);
    CHECK(weyl_group_order(build_group(Family::SpecialUnitary, 3, Involution::Trivial)) == 6);
}

TEST_CASE("fundamental weights")
{
    auto u3 = build_group(Family::UnitaryU, 3, Involution::ComplexConjugation);
    auto f = fundamental_weights(u3);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == Weight{1, 0, 0});
    CHECK(f[1] == Weight{1, 1, 0});
    CHECK(f[2] == Weight{1, 1, 1});
    auto sp4 = build_group(Family::Symplectic, 2, Involution::Trivial);
    CHECK(fundamental_weights(sp4) == std::vector<Weight>{Weight{1, 0}, Weight{1, 1}});
    CHECK_THROWS_AS(fundamental_weights(build_group(Family::Torus, 2, Involution::Trivial)), Error);
}

TEST_CASE("Weyl orbits")
{
    auto u3 = build_group(Family::UnitaryU, 3, Involution::ComplexConjugation);
    CHECK(weyl_orbit(u3, Weight{1, 0, 0}) == std::set<Weight>{Weight{1, 0, 0}, Weight{0, 1, 0}, Weight{0, 0, 1}});
    auto sp4 = build_group(Family::Symplectic, 2, Involution::Trivial);
    CHECK(weyl_orbit(sp4, Weight{1, 0}) ==
          std::set<Weight>{Weight{1, 0}, Weight{-1, 0}, Weight{0, 1}, Weight{0, -1}});
    auto g2 = build_group(Family::ExceptionalG2, 2, Involution::Trivial);
    CHECK(weyl_orbit(g2, Weight{1, 0}).size() == 6);
    CHECK(weyl_orbit(g2, Weight{0, 1}).size() == 6);
}

TEST_CASE("orbit sizes divide the Weyl group order and orbits are closed")
{
    std::vector<GroupSpec> specs = {
        build_group(Family::UnitaryU, 3, Involution::ComplexConjugation),
        build_group(Family::SpecialUnitary, 4, Involution::Trivial),
        build_group(Family::Symplectic, 3, Involution::Trivial),
        build_group(Family::ExceptionalG2, 2, Involution::Trivial),
    };
    for (const auto& g : specs) {
        long long order = weyl_group_order(g);
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b) {
                Weight w(g.dim);
                w[0] = a;
                w[1] = b;
                auto orb = weyl_orbit(g, w);
                CHECK(order % static_cast<long long>(orb.size()) == 0);
                for (const auto& x : orb)
                    for (int i = 0; i < static_cast<int>(g.simple_roots.size()); ++i)
                        CHECK(orb.count(g.reflect(x, i)) == 1);
            }
    }
}

TEST_CASE("involution squares to identity")
{
    for (auto inv : {Involution::Trivial, Involution::ComplexConjugation, Involution::SymplecticType}) {
        auto g = build_group(Family::UnitaryU, 4, inv);
        auto t = involution_weight_map(g);
        for (int a = -2; a <= 2; ++a) {
            Weight w{a, 1, -a, 2};
            CHECK(t.apply(t.apply(w)) == w);
        }
    }
}

TEST_CASE("group tokens")
{
    CHECK(parse_group("C2", "").family == Family::Symplectic);
    CHECK(parse_group("C2", "").rank == 2);
    CHECK(parse_group("U2", "").involution == Involution::ComplexConjugation);
    CHECK(parse_group("SU3", "").involution == Involution::Trivial);
    CHECK(parse_group("U4", "symp").involution == Involution::SymplecticType);
    CHECK_THROWS_AS(parse_group("X7", ""), Error);
    CHECK_THROWS_AS(parse_group("U3", "symp"), Error);
}
