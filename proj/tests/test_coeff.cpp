#include "doctest.h"

#include <random>

#include "krg/coeff.hpp"
#include "krg/error.hpp"

using namespace krg;

namespace {

std::shared_ptr<const RepRing> ring_of(const std::string& tok, const std::string& inv = "")
{
    return RepRing::make(parse_group(tok, inv));
}

std::vector<Weight> small_irreps(const RepRing& ring, int bound)
{
    std::vector<Weight> out;
    int l = ring.num_fundamentals();
    Weight a(l);
    for (int code = 0;; ++code) {
        int c = code;
        for (int i = 0; i < l; ++i) {
            a[i] = c % (bound + 1);
            c /= bound + 1;
        }
        if (c) break;
        out.push_back(weight_from_fundamental_coords(ring.spec(), a));
    }
    return out;
}

CoeffElement random_coeff(const std::shared_ptr<const RepRing>& ring, std::mt19937& rng, int terms = 3)
{
    auto irreps = small_irreps(*ring, 1);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(irreps.size()) - 1);
    std::uniform_int_distribution<int> coef(-3, 3), basis(0, 3), beta(0, 3);
    CoeffElement e(ring);
    for (int t = 0; t < terms; ++t) {
        const Weight& x = irreps[pick(rng)];
        if (ring->type(x) == TypeTag::C) e.add_realified(x, beta(rng), coef(rng));
        else e.add_free(basis(rng), x, coef(rng));
    }
    return e;
}

ComplexCoeff random_complex(const std::shared_ptr<const RepRing>& ring, std::mt19937& rng)
{
    auto irreps = small_irreps(*ring, 1);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(irreps.size()) - 1);
    std::uniform_int_distribution<int> coef(-3, 3), beta(0, 3);
    ComplexCoeff x;
    for (int t = 0; t < 3; ++t) x.add(beta(rng), irreps[pick(rng)], coef(rng));
    return x;
}

// homogeneous pieces by degree
std::map<int, CoeffElement> by_degree(const CoeffElement& a)
{
    std::map<int, CoeffElement> out;
    const RepRing& ring = *a.ring();
    for (const auto& [k, c] : a.free()) {
        auto& e = out.try_emplace(free_degree(ring, k.first, k.second), a.ring()).first->second;
        e.add_free(k.first, k.second, c);
    }
    for (const auto& [k, c] : a.rpart()) {
        auto& e = out.try_emplace(r_degree(k.second), a.ring()).first->second;
        e.add_realified(k.first, k.second, c);
    }
    return out;
}

const char* kGroups[][2] = {{"SU3", ""}, {"C1", ""}, {"C2", ""}, {"U2", "conj"}, {"G2", ""}, {"U2", "symp"}};

}  // namespace

TEST_CASE("relations in KR*(pt) and K*(+)")
{
    auto one = KRPointElement::basis(kOne), eta = KRPointElement::basis(kEta), mu = KRPointElement::basis(kMu);
    CHECK(eta + eta == KRPointElement{});
    CHECK(eta * eta * eta == KRPointElement{});
    CHECK(mu * eta == KRPointElement{});
    CHECK(mu * mu == KRPointElement::basis(kOne, 4));
    CHECK(eta * eta == KRPointElement::basis(kEta2));
    CHECK(complexify(eta) == KPlusElement{});
    CHECK(complexify(eta * eta) == KPlusElement{});
    CHECK(complexify(mu) == KPlusElement::beta(2, 2));
    CHECK(complexify(one) == KPlusElement::beta(0));
    CHECK(realify(KPlusElement::beta(0)) == KRPointElement::basis(kOne, 2));
    CHECK(realify(KPlusElement::beta(1)) == KRPointElement::basis(kEta2));
    CHECK(realify(KPlusElement::beta(2)) == mu);
    CHECK(realify(KPlusElement::beta(3)) == KRPointElement{});
    CHECK(KPlusElement::beta(3) * KPlusElement::beta(1) == KPlusElement::beta(0));
    CHECK(mu.str() == "mu");
    CHECK((mu + mu + eta).str() == "eta + 2*mu");
}

TEST_CASE("point-level rc = 2 and cr = 1 + conj on samples")
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int s = 0; s < 1000; ++s) {
        KRPointElement a;
        for (auto& c : a.c) c = d(rng);
        a.normalize();
        KRPointElement twice = a + a;
        CHECK(realify(complexify(a)) == twice);
        KPlusElement x;
        for (auto& c : x.c) c = d(rng);
        CHECK(complexify(realify(x)) == x + x.conj());
        // complexification is multiplicative
        KRPointElement b;
        for (auto& c : b.c) c = d(rng);
        b.normalize();
        CHECK(complexify(a * b) == complexify(a) * complexify(b));
    }
}

TEST_CASE("coefficient ring products of basis elements")
{
    auto ring = ring_of("U2", "conj");
    auto eta = CoeffElement::basis(ring, kEta), mu = CoeffElement::basis(ring, kMu);
    CHECK(coeff_mul(eta, mu).is_zero());
    CHECK(coeff_mul(mu, mu) == CoeffElement::integer(ring, 4));
    CHECK(render(coeff_mul(eta, eta)) == "eta^2");

    auto su3 = ring_of("SU3");
    // r(beta) r(beta) = eta^2 eta^2 = 0
    CoeffElement rb(su3);
    rb.add_realified(su3->trivial(), 1, 1);
    CHECK(rb == CoeffElement::basis(su3, kEta2));
    CHECK(coeff_mul(rb, rb).is_zero());
    CoeffElement r1(su3);
    r1.add_realified(su3->trivial(), 0, 1);
    CHECK(r1 == CoeffElement::integer(su3, 2));
    CoeffElement r2(su3);
    r2.add_realified(su3->trivial(), 2, 1);
    CHECK(r2 == CoeffElement::basis(su3, kMu));
    CoeffElement r3(su3);
    r3.add_realified(su3->trivial(), 3, 1);
    CHECK(r3.is_zero());
}

TEST_CASE("complexify and realify on representation coefficients")
{
    auto su3 = ring_of("SU3");
    Weight g = su3->fundamental(0);
    Weight gbar = su3->conj(g);
    CHECK(su3->type(g) == TypeTag::C);
    CoeffElement r(su3);
    r.add_realified(g, 0, 1);
    ComplexCoeff expect;
    expect.add(0, g, 1);
    expect.add(0, gbar, 1);
    CHECK(complexify(r) == expect);

    CHECK(complexify(CoeffElement::basis(su3, kEta)).is_zero());
    ComplexCoeff two_b2;
    two_b2.add(2, su3->trivial(), 2);
    CHECK(complexify(CoeffElement::basis(su3, kMu)) == two_b2);

    // rho_R beta realifies to eta^2 rho_R
    auto g2 = ring_of("G2");
    ComplexCoeff x;
    x.add(1, g2->fundamental(0), 1);
    CoeffElement y(g2);
    y.add_free(kEta2, g2->fundamental(0), 1);
    CHECK(realify(g2, x) == y);

    // the quaternionic fundamental of Sp(2) sits in degree -4
    auto sp2 = ring_of("C1");
    Weight th = sp2->fundamental(0);
    CHECK(sp2->type(th) == TypeTag::H);
    CHECK(free_degree(*sp2, kOne, th) == -4);
    CHECK(free_degree(*sp2, kMu, th) == 0);
    ComplexCoeff c_th;
    c_th.add(2, th, 1);
    CoeffElement th_e(sp2);
    th_e.add_free(kOne, th, 1);
    CHECK(complexify(th_e) == c_th);
}

TEST_CASE("rc = 2 and cr = 1 + conj on sampled coefficients")
{
    std::mt19937 rng(5);
    for (auto [tok, inv] : kGroups) {
        auto ring = ring_of(tok, inv);
        for (int s = 0; s < 1000 / 6 + 1; ++s) {
            CoeffElement a = random_coeff(ring, rng);
            CHECK(realify(ring, complexify(a)) == a + a);
            ComplexCoeff x = random_complex(ring, rng);
            ComplexCoeff cx = x;
            cx.add(complex_conj(*ring, x));
            CHECK(complexify(realify(ring, x)) == cx);
        }
    }
}

TEST_CASE("eta kills the r part and mu shifts it")
{
    auto su3 = ring_of("SU3");
    std::mt19937 rng(2);
    for (const Weight& x : small_irreps(*su3, 2)) {
        if (su3->type(x) != TypeTag::C) continue;
        for (int i = 0; i < 4; ++i) {
            CoeffElement r(su3), r2(su3);
            r.add_realified(x, i, 1);
            r2.add_realified(x, i + 2, 2);
            CHECK(coeff_mul(CoeffElement::basis(su3, kEta), r).is_zero());
            CHECK(coeff_mul(CoeffElement::basis(su3, kEta2), r).is_zero());
            CHECK(coeff_mul(CoeffElement::basis(su3, kMu), r) == r2);
        }
    }
}

TEST_CASE("coefficient ring is commutative and associative with additive degrees")
{
    std::mt19937 rng(7);
    int triples = 0;
    for (auto [tok, inv] : kGroups) {
        auto ring = ring_of(tok, inv);
        for (int s = 0; s < 170; ++s, ++triples) {
            CoeffElement a = random_coeff(ring, rng), b = random_coeff(ring, rng), c = random_coeff(ring, rng);
            CoeffElement ab = coeff_mul(a, b);
            CHECK(ab == coeff_mul(b, a));
            CHECK(coeff_mul(ab, c) == coeff_mul(a, coeff_mul(b, c)));
            CHECK(complexify(ab) == complex_mul(*ring, complexify(a), complexify(b)));
            for (const auto& [da, ea] : by_degree(a))
                for (const auto& [db, eb] : by_degree(b))
                    for (int d : coeff_mul(ea, eb).degrees()) CHECK(d == normalize_degree(da + db));
        }
    }
    CHECK(triples >= 1000);
}

TEST_CASE("mixed groups are rejected")
{
    auto a = CoeffElement::integer(ring_of("SU3"), 1);
    auto b = CoeffElement::integer(ring_of("G2"), 1);
    CHECK_THROWS_AS(coeff_mul(a, b), Error);
}

TEST_CASE("real classes from representations")
{
    auto su3 = ring_of("SU3");
    Weight g = su3->fundamental(0);
    RepClass p;
    p.add(g, 1);
    CHECK_THROWS_AS(from_rep_natural(su3, p), Error);
    p.add(su3->conj(g), 1);
    CoeffElement e = from_rep_natural(su3, p);
    CHECK(e.free().empty());
    CHECK(e.rpart().size() == 1);

    auto sp2 = ring_of("C1");
    RepClass q;
    q.add(sp2->fundamental(0), 2);
    CoeffElement f = from_rep_fixed(sp2, q, false);
    CHECK(render(f) == "mu*[w1]");
    RepClass odd;
    odd.add(sp2->fundamental(0), 1);
    CHECK_THROWS_AS(from_rep_fixed(sp2, odd, false), Error);
    CHECK(render(from_rep_fixed(sp2, odd, true)) == "[w1]");
}

TEST_CASE("rendering")
{
    auto g2 = ring_of("G2");
    CoeffElement e(g2);
    e.add_free(kOne, g2->trivial(), 2);
    e.add_free(kEta2, g2->fundamental(1), 1);
    e.add_free(kMu, g2->fundamental(0), -1);
    CHECK(render(e) == "2 + eta^2*[w2] - mu*[w1]");
    CoeffElement m(g2);
    m.add_free(kEta, g2->fundamental(0), 1);
    m.add_free(kEta, g2->trivial(), 1);
    CHECK(render(m) == "eta*([w1]-1)");

    auto su3 = ring_of("SU3");
    CoeffElement r(su3);
    Weight g = su3->is_c_plus(su3->fundamental(0)) ? su3->fundamental(0) : su3->fundamental(1);
    r.add_realified(g, 1, 1);
    std::string s = render(r);
    CHECK(s.rfind("r([w", 0) == 0);
    CHECK(s.find("*beta)") != std::string::npos);
    CHECK(render(CoeffElement(su3)) == "0");
}

TEST_CASE("degree table of the coefficient ring")
{
    auto ranks = real_quat_tables(builtin_table("Q8xC3")).R;
    CHECK(degree_rank(ranks, 0).free_rank == 4 + 1 + 5);
    CHECK(degree_rank(ranks, 1).z2_rank == 4);
    CHECK(degree_rank(ranks, 2).free_rank == 5);
    CHECK(degree_rank(ranks, 3).group == "0");
    CHECK(degree_rank(ranks, 4).free_rank == 10);
    CHECK(degree_rank(ranks, 5).z2_rank == 1);
    CHECK(degree_rank(ranks, 6).z2_rank == 1);
    CHECK(degree_rank(ranks, 7).group == "0");
    CHECK(degree_rank(ranks, 3).free_rank + degree_rank(ranks, 3).z2_rank == 0);
    CHECK(degree_rank(ranks, 7).free_rank + degree_rank(ranks, 7).z2_rank == 0);
    CHECK_THROWS_AS(degree_rank(ranks, 8), Error);
    auto g2 = degree_rank(parse_group("G2", ""), 0);
    CHECK(g2.infinite);
    CHECK_FALSE(degree_rank(parse_group("G2", ""), 3).infinite);
}
