#ifndef KRG_CHARALG_HPP
#define KRG_CHARALG_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "krg/rootdata.hpp"

namespace krg {

using Character = std::map<Weight, long long>;

enum class TypeTag { R, C, H };
char type_char(TypeTag t);

struct RepClass {
    std::map<Weight, long long> terms;  // dominant highest weight -> multiplicity

    void add(const Weight& hw, long long c);
    void add(const RepClass& o, long long c = 1);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const RepClass& o) const { return terms == o.terms; }
};

// Integer polynomial in the fundamental classes [w1]..[wl].
struct FundPolynomial {
    int nvars = 0;
    std::map<Weight, long long> terms;  // exponent vector -> coefficient

    FundPolynomial() = default;
    explicit FundPolynomial(int n) : nvars(n) {}
    static FundPolynomial constant(int n, long long c);
    static FundPolynomial variable(int n, int i);

    void add(const Weight& e, long long c);
    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    long long constant_term() const;
    int degree() const;

    FundPolynomial& operator+=(const FundPolynomial& o);
    FundPolynomial& operator-=(const FundPolynomial& o);
    FundPolynomial operator-() const;
    friend FundPolynomial operator+(FundPolynomial a, const FundPolynomial& b) { return a += b; }
    friend FundPolynomial operator-(FundPolynomial a, const FundPolynomial& b) { return a -= b; }
    friend FundPolynomial operator*(const FundPolynomial& a, const FundPolynomial& b);
    friend FundPolynomial operator*(long long k, const FundPolynomial& a);
    bool operator==(const FundPolynomial& o) const { return nvars == o.nvars && terms == o.terms; }

    FundPolynomial pow(int k) const;
    FundPolynomial derivative(int i) const;
    FundPolynomial permuted(const std::vector<int>& perm) const;
    FundPolynomial mod2() const;
    long long evaluate(const std::vector<long long>& values) const;

    // terms in descending graded order, e.g. "[w1]^3-[w1]^2-2*[w1]*[w2]-[w1]"
    std::string render() const;
};

// Character arithmetic.
Character char_mul(const Character& a, const Character& b);
Character char_add(const Character& a, const Character& b, long long k = 1);
long long char_dim(const Character& a);

Character irrep_character(const GroupSpec& spec, const Weight& hw);
RepClass decompose(const GroupSpec& spec, const Character& chi);
RepClass tensor_decompose(const GroupSpec& spec, const Character& a, const Character& b);
Character adams(const GroupSpec& spec, int k, const Character& a);
Character adams(int k, const Character& a);
Character exterior_power(const GroupSpec& spec, int k, const Character& a);
FundPolynomial poly_in_fundamentals(const GroupSpec& spec, const RepClass& a);
Character conj_dual(const GroupSpec& spec, const Character& a);
TypeTag classify_type(const GroupSpec& spec, const Weight& hw);
bool is_weyl_invariant(const GroupSpec& spec, const Character& a);
// multiplicity of the trivial representation
long long trivial_multiplicity(const GroupSpec& spec, const Character& a);
long long frobenius_schur(const GroupSpec& spec, const Weight& hw);

// Cached representation-ring context for one group.
class RepRing {
public:
    explicit RepRing(GroupSpec spec);
    static std::shared_ptr<RepRing> point();
    static std::shared_ptr<RepRing> make(const GroupSpec& spec);

    const GroupSpec& spec() const { return spec_; }
    bool is_point() const { return point_; }
    int num_fundamentals() const { return static_cast<int>(funds_.size()); }
    const Weight& fundamental(int i) const { return funds_[i]; }
    const Weight& trivial() const { return trivial_; }

    const Character& character(const Weight& hw) const;
    long long dim(const Weight& hw) const;
    TypeTag type(const Weight& hw) const;
    Weight conj(const Weight& hw) const;
    // canonical member of a conjugate pair: the lexicographically larger weight
    bool is_c_plus(const Weight& hw) const;
    int fund_conj(int i) const { return fund_perm_[i]; }
    const std::vector<int>& fund_perm() const { return fund_perm_; }

    const RepClass& mul(const Weight& a, const Weight& b) const;
    RepClass mul(const RepClass& a, const RepClass& b) const;
    RepClass conj(const RepClass& a) const;
    Character character_of(const RepClass& a) const;
    long long dim(const RepClass& a) const;

    const FundPolynomial& poly(const Weight& hw) const;
    FundPolynomial poly(const RepClass& a) const;
    const RepClass& monomial(const Weight& exps) const;
    RepClass decompose_poly(const FundPolynomial& p) const;
    std::vector<long long> fundamental_dims() const;

private:
    GroupSpec spec_;
    bool point_ = false;
    Weight trivial_;
    std::vector<Weight> funds_;
    std::vector<int> fund_perm_;

    mutable std::recursive_mutex mu_;
    mutable std::map<Weight, Character> chars_;
    mutable std::map<Weight, TypeTag> types_;
    mutable std::map<std::pair<Weight, Weight>, RepClass> products_;
    mutable std::map<Weight, FundPolynomial> polys_;
    mutable std::map<Weight, RepClass> monomials_;

    RepRing() = default;
};

}  // namespace krg

#endif
