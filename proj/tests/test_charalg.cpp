#include "doctest.h"

#include <functional>
#include <map>
#include <vector>

#include "krg/charalg.hpp"
#include "krg/error.hpp"

using namespace krg;

namespace {

GroupSpec G2() { return build_group(Family::ExceptionalG2, 2, Involution::Trivial); }
GroupSpec SU(int n) { return build_group(Family::SpecialUnitary, n, Involution::Trivial); }
GroupSpec Sp(int m) { return build_group(Family::Symplectic, m, Involution::Trivial); }
GroupSpec U(int n, Involution i = Involution::ComplexConjugation) { return build_group(Family::UnitaryU, n, i); }

// Weyl dimension formula as an exact rational product.
long long weyl_dimension(const GroupSpec& g, const Weight& hw)
{
    long long num = 1, den = 1;
    for (const auto& a : g.positive_roots) {
        num *= g.inner(hw + g.rho, a);
        den *= g.inner(g.rho, a);
    }
    return num / den;
}

std::vector<Weight> small_dominant(const GroupSpec& g, int bound)
{
    std::vector<Weight> out;
    int l = g.num_fundamentals();
    Weight a(l);
    std::function<void(int)> rec = [&](int i) {
        if (i == l) {
            out.push_back(weight_from_fundamental_coords(g, a));
            return;
        }
        for (int x = 0; x <= bound; ++x) {
            a[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

// Exterior powers by enumerating sub-multisets of the weight list, aggregated by weight sum.
std::vector<Character> brute_exterior(const GroupSpec& g, const Character& chi, int kmax)
{
    std::vector<Weight> ws;
    for (const auto& [w, m] : chi)
        for (long long i = 0; i < m; ++i) ws.push_back(w);
    std::vector<Character> layer(kmax + 1);
    layer[0][g.zero()] = 1;
    for (const auto& w : ws) {
        for (int k = kmax; k >= 1; --k)
            for (const auto& [s, c] : layer[k - 1]) layer[k][g.normalize(s + w)] += c;
    }
    return layer;
}

// literal enumeration for small cases
Character literal_exterior(const GroupSpec& g, const Character& chi, int k)
{
    std::vector<Weight> ws;
    for (const auto& [w, m] : chi)
        for (long long i = 0; i < m; ++i) ws.push_back(w);
    Character out;
    int n = static_cast<int>(ws.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        Weight s = g.zero();
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s += ws[i];
        out[g.normalize(s)] += 1;
    }
    return out;
}

}  // namespace

TEST_CASE("irreducible dimensions match the Weyl dimension formula")
{
    for (const auto& g : {G2(), SU(3), SU(4), Sp(2), Sp(3), U(3)}) {
        for (const auto& hw : small_dominant(g, g.num_fundamentals() > 2 ? 1 : 3)) {
            Character chi = irrep_character(g, hw);
            CHECK(char_dim(chi) == weyl_dimension(g, hw));
            CHECK(is_weyl_invariant(g, chi));
        }
    }
}

TEST_CASE("irrep_character examples")
{
    CHECK(char_dim(irrep_character(G2(), Weight{1, 0})) == 7);
    CHECK(char_dim(irrep_character(G2(), Weight{0, 1})) == 14);
    CHECK(char_dim(irrep_character(U(3), Weight{1, 1, 1})) == 1);
    CHECK(char_dim(irrep_character(Sp(2), Weight{1, 1})) == 5);
    CHECK_THROWS_AS(irrep_character(G2(), Weight{-1, 0}), Error);
}

TEST_CASE("tensor decomposition")
{
    auto g = G2();
    auto s1 = irrep_character(g, Weight{1, 0});
    RepClass r = tensor_decompose(g, s1, s1);
    CHECK(r.terms.at(Weight{0, 0}) == 1);
    RepRing ring(g);
    CHECK(ring.dim(r) == 49);
    CHECK(tensor_decompose(g, s1, Character{{Weight{0, 0}, 1}}).terms == std::map<Weight, long long>{{Weight{1, 0}, 1}});

    auto u2 = U(2);
    auto s = irrep_character(u2, Weight{1, 0});
    RepClass q = tensor_decompose(u2, s, s);
    CHECK(q.terms == std::map<Weight, long long>{{Weight{1, 1}, 1}, {Weight{2, 0}, 1}});
    CHECK_THROWS_AS(tensor_decompose(u2, Character{{Weight{1, 0}, 1}}, s), Error);
}

TEST_CASE("adams operations")
{
    auto u2 = U(2);
    auto s = irrep_character(u2, Weight{1, 0});
    CHECK(adams(1, s) == s);
    CHECK(adams(2, Character{{Weight{0, 0}, 1}}) == Character{{Weight{0, 0}, 1}});
    CHECK(adams(2, s) == Character{{Weight{2, 0}, 1}, {Weight{0, 2}, 1}});
}

TEST_CASE("exterior powers")
{
    auto g = G2();
    auto s1 = irrep_character(g, Weight{1, 0});
    CHECK(decompose(g, exterior_power(g, 2, s1)).terms ==
          std::map<Weight, long long>{{Weight{1, 0}, 1}, {Weight{0, 1}, 1}});
    for (int n = 1; n <= 4; ++n) {
        auto u = U(n);
        Weight e(n);
        e[0] = 1;
        auto top = exterior_power(u, n, irrep_character(u, e));
        CHECK(char_dim(top) == 1);
        Weight det(n);
        for (int i = 0; i < n; ++i) det[i] = 1;
        CHECK(top.count(det) == 1);
    }
    auto su2 = SU(2);
    CHECK(exterior_power(su2, 2, irrep_character(su2, Weight{1, 0})) == Character{{Weight{0, 0}, 1}});
    Character virt = char_add(Character{{Weight{0, 0}, 1}}, irrep_character(g, Weight{1, 0}), -1);
    CHECK_THROWS_AS(exterior_power(g, 2, virt), Error);
}

TEST_CASE("exterior powers agree with sub-multiset enumeration")
{
    // every irreducible of dimension <= 50 in the listed groups; k <= 5, all k when dim <= 12
    for (const auto& g : {G2(), SU(2), SU(3), SU(4), Sp(2), Sp(3), U(2), U(3)}) {
        int bound = g.num_fundamentals() == 1 ? 49 : (g.num_fundamentals() == 2 ? 8 : 3);
        for (const auto& hw : small_dominant(g, bound)) {
            if (g.family == Family::UnitaryU && hw[g.dim - 1] != 0) continue;
            Character chi = irrep_character(g, hw);
            long long d = char_dim(chi);
            if (d > 50) continue;
            int kmax = d <= 12 ? static_cast<int>(d) : 5;
            auto oracle = brute_exterior(g, chi, kmax);
            long long alt = 0;
            for (int k = 0; k <= kmax; ++k) {
                Character ext = exterior_power(g, k, chi);
                CHECK(ext == oracle[k]);
                alt += (k % 2 ? -1 : 1) * char_dim(ext);
            }
            if (kmax == d) CHECK(alt == 0);
            if (d <= 14)
                for (int k = 0; k <= 3 && k <= d; ++k) CHECK(literal_exterior(g, chi, k) == oracle[k]);
        }
    }
}

TEST_CASE("polynomials in fundamentals")
{
    auto g = G2();
    RepRing ring(g);
    auto s2 = irrep_character(g, Weight{0, 1});
    FundPolynomial p = poly_in_fundamentals(g, decompose(g, exterior_power(g, 2, s2)));
    CHECK(p.render() == "[w1]^3-[w1]^2-2*[w1]*[w2]-[w1]");
    CHECK(ring.poly(Weight{1, 0}).render() == "[w1]");

    // Sp(2m): sigma^i + wedge^{i-2} sigma = wedge^i sigma
    for (int m = 2; m <= 3; ++m) {
        auto sp = Sp(m);
        Weight e(m);
        e[0] = 1;
        auto sigma = irrep_character(sp, e);
        for (int i = 2; i <= m; ++i) {
            RepClass lhs;
            lhs.add(sp.fundamentals[i - 1], 1);
            lhs.add(decompose(sp, exterior_power(sp, i - 2, sigma)));
            CHECK(lhs == decompose(sp, exterior_power(sp, i, sigma)));
        }
    }
}

TEST_CASE("polynomial round trip through fundamental characters")
{
    for (const auto& g : {G2(), SU(3), Sp(2), U(3)}) {
        RepRing ring(g);
        std::vector<Character> funds;
        for (const auto& f : g.fundamentals) funds.push_back(irrep_character(g, f));
        for (const auto& hw : small_dominant(g, g.num_fundamentals() > 2 ? 1 : 2)) {
            FundPolynomial p = ring.poly(hw);
            Character total;
            for (const auto& [e, c] : p.terms) {
                Character mono{{g.zero(), 1}};
                for (int i = 0; i < e.size(); ++i)
                    for (int k = 0; k < e[i]; ++k) {
                        mono = char_mul(mono, funds[i]);
                        if (g.family == Family::SpecialUnitary) {
                            Character n;
                            for (const auto& [w, m] : mono) n[g.normalize(w)] += m;
                            mono = n;
                        }
                    }
                total = char_add(total, mono, c);
            }
            CHECK(total == irrep_character(g, hw));
        }
    }
}

TEST_CASE("type classification")
{
    for (int m = 1; m <= 3; ++m) {
        auto sp = Sp(m);
        for (int i = 1; i <= m; ++i)
            CHECK(classify_type(sp, sp.fundamentals[i - 1]) == (i % 2 ? TypeTag::H : TypeTag::R));
    }
    CHECK(classify_type(G2(), Weight{1, 0}) == TypeTag::R);
    CHECK(classify_type(G2(), Weight{0, 1}) == TypeTag::R);
    CHECK(classify_type(SU(3), Weight{1, 0, 0}) == TypeTag::C);
    CHECK(classify_type(SU(4), Weight{1, 1, 0, 0}) == TypeTag::R);
    CHECK(classify_type(SU(2), Weight{1, 0}) == TypeTag::H);
    CHECK(classify_type(U(3), Weight{2, 1, 0}) == TypeTag::R);
    CHECK(classify_type(U(4, Involution::SymplecticType), Weight{1, 1, 1, 0}) == TypeTag::H);
    CHECK(classify_type(U(4, Involution::SymplecticType), Weight{1, 1, 0, 0}) == TypeTag::R);
    CHECK_THROWS_AS(classify_type(U(2), Weight{0, -1}), Error);
}

TEST_CASE("Frobenius-Schur values and quaternionic dimensions")
{
    for (const auto& g : {G2(), SU(2), SU(3), SU(4), Sp(2), Sp(3)}) {
        for (const auto& hw : small_dominant(g, g.num_fundamentals() > 2 ? 1 : 3)) {
            long long fs = frobenius_schur(g, hw);
            CHECK((fs == -1 || fs == 0 || fs == 1));
            TypeTag t = classify_type(g, hw);
            if (t == TypeTag::H) CHECK(char_dim(irrep_character(g, hw)) % 2 == 0);
        }
    }
}

TEST_CASE("conj_dual")
{
    auto su3 = SU(3);
    auto std3 = irrep_character(su3, Weight{1, 0, 0});
    auto dual = irrep_character(su3, Weight{1, 1, 0});
    CHECK(conj_dual(su3, std3) == dual);
    CHECK(conj_dual(su3, conj_dual(su3, std3)) == std3);
    CHECK(conj_dual(su3, Character{{su3.zero(), 1}}) == Character{{su3.zero(), 1}});
    for (auto inv : {Involution::ComplexConjugation, Involution::SymplecticType}) {
        auto u = U(4, inv);
        for (const auto& f : u.fundamentals) {
            auto c = irrep_character(u, f);
            CHECK(conj_dual(u, c) == c);
        }
    }
    auto sp = Sp(2);
    for (const auto& hw : small_dominant(sp, 2)) {
        auto c = irrep_character(sp, hw);
        CHECK(conj_dual(sp, c) == c);
    }
}
