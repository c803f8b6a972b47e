#ifndef KRG_COEFF_HPP
#define KRG_COEFF_HPP

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "krg/charalg.hpp"
#include "krg/finoracle.hpp"

namespace krg {

// Basis of KR*(pt) as a group: 1, eta, eta^2, mu.
enum KRBasis : int { kOne = 0, kEta = 1, kEta2 = 2, kMu = 3 };
int kr_degree(int b);
const char* kr_name(int b);
// product of basis elements as (basis, factor); factor 0 means the product vanishes
std::pair<int, long long> kr_basis_mul(int a, int b);
// product of kr basis b with the complexification target: c(1)=1, c(eta)=0, c(mu)=2 beta^2
std::pair<int, long long> kr_complexify(int b);  // (beta power, factor)
int normalize_degree(int d);  // representative in -7..0

struct KRPointElement {
    std::array<long long, 4> c{};  // eta, eta^2 entries mod 2

    static KRPointElement basis(int b, long long k = 1);
    void normalize();
    bool operator==(const KRPointElement& o) const { return c == o.c; }
    friend KRPointElement operator+(const KRPointElement& a, const KRPointElement& b);
    friend KRPointElement operator*(const KRPointElement& a, const KRPointElement& b);
    std::string str() const;
};

struct KPlusElement {
    std::array<long long, 4> c{};  // coefficients of beta^0..beta^3

    static KPlusElement beta(int j, long long k = 1);
    bool operator==(const KPlusElement& o) const { return c == o.c; }
    friend KPlusElement operator+(const KPlusElement& a, const KPlusElement& b);
    friend KPlusElement operator*(const KPlusElement& a, const KPlusElement& b);
    KPlusElement conj() const;  // beta -> -beta
};

KPlusElement complexify(const KRPointElement& a);
KRPointElement realify(const KPlusElement& a);

// R(G) tensor K*(+): (beta power, irreducible) -> coefficient
struct ComplexCoeff {
    std::map<std::pair<int, Weight>, long long> terms;
    void add(int j, const Weight& x, long long c);
    void add(const ComplexCoeff& o, long long k = 1);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const ComplexCoeff& o) const { return terms == o.terms; }
};

ComplexCoeff complex_mul(const RepRing& ring, const ComplexCoeff& a, const ComplexCoeff& b);
ComplexCoeff complex_conj(const RepRing& ring, const ComplexCoeff& a);

class CoeffElement {
public:
    using FreeKey = std::pair<int, Weight>;  // (kr basis, R- or H-type irreducible)
    using RKey = std::pair<Weight, int>;     // (canonical complex-type irreducible, beta power)

    CoeffElement() = default;
    explicit CoeffElement(std::shared_ptr<const RepRing> ring) : ring_(std::move(ring)) {}

    static CoeffElement integer(std::shared_ptr<const RepRing> ring, long long k);
    static CoeffElement basis(std::shared_ptr<const RepRing> ring, int b, long long k = 1);

    const std::shared_ptr<const RepRing>& ring() const { return ring_; }
    const std::map<FreeKey, long long>& free() const { return free_; }
    const std::map<RKey, long long>& rpart() const { return r_; }

    void add_free(int b, const Weight& x, long long c);
    // r(x beta^j) for any irreducible x, folded into canonical form
    void add_realified(const Weight& x, int j, long long c);
    void add(const CoeffElement& o, long long k = 1);

    bool is_zero() const { return free_.empty() && r_.empty(); }
    bool operator==(const CoeffElement& o) const { return free_ == o.free_ && r_ == o.r_; }
    CoeffElement operator-() const;
    friend CoeffElement operator+(const CoeffElement& a, const CoeffElement& b);
    friend CoeffElement operator-(const CoeffElement& a, const CoeffElement& b);

    std::vector<int> degrees() const;  // distinct degrees in -7..0, ascending by absolute value

private:
    std::shared_ptr<const RepRing> ring_;
    std::map<FreeKey, long long> free_;
    std::map<RKey, long long> r_;
};

int free_degree(const RepRing& ring, int b, const Weight& x);
int r_degree(int j);

CoeffElement coeff_mul(const CoeffElement& a, const CoeffElement& b);
ComplexCoeff complexify(const CoeffElement& a);
CoeffElement realify(std::shared_ptr<const RepRing> ring, const ComplexCoeff& x);

// Real class from a representation with self-conjugate character.
// Constituents go to their natural degree: R -> degree 0, H -> degree -4, conjugate pairs -> r(X).
CoeffElement from_rep_natural(std::shared_ptr<const RepRing> ring, const RepClass& p);
// Real class in degree 0 (quaternionic = false) or degree -4 (quaternionic = true) with c(a) = p
// (times beta^2 in degree -4).
CoeffElement from_rep_fixed(std::shared_ptr<const RepRing> ring, const RepClass& p, bool quaternionic);

struct DegreeDescription {
    int q = 0;
    std::string group;   // e.g. "RR(G)/rho(R(G))"
    std::string formula; // e.g. "(Z/2)^#R"
    long long free_rank = 0;
    long long z2_rank = 0;
    bool infinite = false;  // ranks are not finite (Lie groups)
};

DegreeDescription degree_rank(const TypeRanks& complex_counts, int q);
DegreeDescription degree_rank(const GroupSpec& spec, int q);

// Rendering helpers shared with the ring module.
struct SignedTerm {
    bool negative = false;
    std::string body;
};
std::string join_terms(const std::vector<SignedTerm>& ts);
// prefix factors, polynomial, suffix factors; mod2 polynomials show their constant as -1
std::vector<SignedTerm> scaled_terms(const std::vector<std::string>& prefix, const FundPolynomial& p,
                                     const std::vector<std::string>& suffix, bool mod2, bool expand);
std::string mod2_poly_string(const FundPolynomial& p);
std::string beta_string(int j);
std::string render(const CoeffElement& a);
// signed terms of a coefficient with trailing factors appended to every term
std::vector<SignedTerm> coeff_terms(const CoeffElement& a, const std::vector<std::string>& suffix);
std::string render(const RepRing& ring, const ComplexCoeff& a);

}  // namespace krg

#endif
