#ifndef KRG_OMEGA_HPP
#define KRG_OMEGA_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "krg/charalg.hpp"

namespace krg {

// Square-free monomial in the symbols d[w1]..d[wl], bit i for d[w(i+1)].
using FormMask = std::uint32_t;

int popcount(FormMask m);
// sign of (dA)(dB) relative to d(A|B) in increasing order; 0 when A and B overlap
int merge_sign(FormMask a, FormMask b);
// image of a monomial under a permutation of the symbols, with the reordering sign
FormMask permute_mask(FormMask m, const std::vector<int>& perm, int* sign);

// Element of the exterior algebra over R(G) on the differentials of the fundamentals.
struct DifferentialForm {
    int nvars = 0;
    std::map<FormMask, FundPolynomial> terms;

    DifferentialForm() = default;
    explicit DifferentialForm(int n) : nvars(n) {}
    static DifferentialForm scalar(const FundPolynomial& p);
    static DifferentialForm symbol(int n, int i);

    void add(FormMask m, const FundPolynomial& p);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const DifferentialForm& o) const { return nvars == o.nvars && terms == o.terms; }
    DifferentialForm operator-() const;
    friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b);
    friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b);
    friend DifferentialForm operator*(const FundPolynomial& p, const DifferentialForm& a);

    std::vector<int> degrees() const;  // distinct degrees mod 8 in -7..0
};

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm delta_G(const FundPolynomial& p);
DifferentialForm delta_G(const RepRing& ring, const RepClass& a);
DifferentialForm conj_star(const RepRing& ring, const DifferentialForm& a);

// Element of K*(G) = exterior algebra over Z on delta(rho_i).
struct IntegerForm {
    int nvars = 0;
    std::map<FormMask, long long> terms;

    IntegerForm() = default;
    explicit IntegerForm(int n) : nvars(n) {}
    void add(FormMask m, long long c);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const IntegerForm& o) const { return nvars == o.nvars && terms == o.terms; }
};

IntegerForm wedge(const IntegerForm& a, const IntegerForm& b);
IntegerForm augment(const DifferentialForm& a, const std::vector<long long>& dims);
IntegerForm augment(const RepRing& ring, const DifferentialForm& a);

std::string mask_string(FormMask m, const char* prefix = "d");  // d[w1]^d[w3]
std::string render(const DifferentialForm& a);
std::string render(const IntegerForm& a);

}  // namespace krg

#endif
