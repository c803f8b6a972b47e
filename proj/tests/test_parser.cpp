#include "doctest.h"

#include <random>

#include "krg/error.hpp"
#include "krg/parser.hpp"

using namespace krg;

namespace {

std::shared_ptr<const KRAlgebra> ring(const std::string& tok, const std::string& inv = "")
{
    auto spec = parse_group(tok, inv);
    if (spec.family == Family::Torus) return KRAlgebra::torus(spec.rank);
    return KRAlgebra::equivariant(spec);
}

int error_position(const std::shared_ptr<const KRAlgebra>& a, const std::string& s)
{
    try {
        parse_element(a, s);
    } catch (const ParseFailure& e) {
        return e.position();
    }
    return -1;
}

}  // namespace

TEST_CASE("basic expressions")
{
    auto g2 = ring("G2");
    auto x = parse_element(g2, "dR(1)");
    CHECK(x == g2->generator(0));
    CHECK(g2->render(parse_element(g2, "dR(1)*dR(1)")) == "eta*([w1]-1)*dR(1) + eta*dR(2)");
    CHECK(g2->render(parse_element(g2, "dR(1)^2")) == "eta*([w1]-1)*dR(1) + eta*dR(2)");
    CHECK(parse_element(g2, "2*eta").is_zero());
    CHECK(parse_element(g2, "eta^3").is_zero());
    CHECK(g2->render(parse_element(g2, "mu^2")) == "4");
    CHECK(g2->render(parse_element(g2, "[w1]^2 - 1")) == "[w1]^2 - 1");
    CHECK(g2->render(parse_element(g2, "-dR(2) + dR(2)*3")) == "2*dR(2)");
    CHECK(parse_element(g2, "r(beta)") == parse_element(g2, "eta^2"));
    CHECK(parse_element(g2, "r(beta^2)") == parse_element(g2, "mu"));
    CHECK(parse_element(g2, "r(beta^3)").is_zero());
    CHECK(parse_element(g2, "r(1)") == g2->integer(2));

    auto su3 = ring("SU3");
    CHECK(su3->render(parse_element(su3, "r(dG(1))*r(dG(1))")) == "eta^2*lam1");
    CHECK(parse_element(su3, "lam1*lam1").is_zero());
    CHECK(parse_element(su3, "[w1]*[w2]") == parse_element(su3, "[w1]*[w2]"));
    CHECK(parse_element(su3, "r(dG(2))") == parse_element(su3, "r(dG(1))"));
    auto u2 = ring("U2", "conj");
    CHECK(parse_element(u2, "eta*mu").is_zero());
}

TEST_CASE("complex reading")
{
    auto su3 = ring("SU3");
    auto z = parse_complex(su3, "lam1");
    CHECK(z == su3->generator_form(0));
    CHECK(parse_complex(su3, "eta*lam1").is_zero());
    CHECK(su3->complexify(parse_element(su3, "mu*lam1")) == parse_complex(su3, "mu*lam1"));
    CHECK(su3->render(parse_complex(su3, "r(dG(1))")) == "dG(1) + dG(2)");
}

TEST_CASE("errors carry positions")
{
    auto g2 = ring("G2");
    CHECK(error_position(g2, "dR(1) +") == 7);
    CHECK(error_position(g2, "dR(3)") == 0);
    CHECK(error_position(g2, "eta * beta") == 6);
    CHECK(error_position(g2, "dG(1)") == 0);
    CHECK(error_position(g2, "(eta") == 4);
    CHECK(error_position(g2, "eta $") == 4);
    CHECK(error_position(g2, "[w3]") == 0);
    CHECK(error_position(g2, "dR(0)") == 3);
    auto su3 = ring("SU3");
    CHECK(error_position(su3, "[w1]") == 0);
    CHECK(error_position(su3, "lam2") == 0);
    auto t2 = ring("T2", "conj");
    CHECK(t2->render(parse_element(t2, "[w1]^-1*dR(1)")) == "[w1]^-1*dR(1)");
    auto u2 = ring("U2", "conj");
    try {
        parse_element(u2, "[w2]^-1");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnclassifiableTwisted);
    }
}

TEST_CASE("rendered elements parse back to themselves")
{
    std::mt19937 rng(7);
    for (auto [tok, inv] : std::vector<std::pair<std::string, std::string>>{
             {"SU3", ""}, {"C2", ""}, {"U2", "conj"}, {"G2", ""}, {"U2", "symp"}, {"SU4", ""}, {"SU5", ""}, {"C1", ""}, {"U4", "symp"}}) {
        auto a = ring(tok, inv);
        CAPTURE(tok);
        bool plain = true;
        for (int i = 0; i < a->num_symbols(); ++i) plain = plain && a->symbol_type(i) != TypeTag::H;
        for (int s = 0; s < 100; ++s) {
            auto x = random_element(a, rng);
            std::string text = a->render(x);
            CAPTURE(text);
            CHECK(parse_element(a, text) == x);
            if (plain) CHECK(parse_complex(a, text) == a->complexify(x));
        }
    }
}
