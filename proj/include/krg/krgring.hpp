#ifndef KRG_KRGRING_HPP
#define KRG_KRGRING_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "krg/coeff.hpp"
#include "krg/omega.hpp"

namespace krg {

enum class GenKind { dR = 0, dH = 1, lam = 2 };

struct Generator {
    GenKind kind;
    int symbol;       // 0-based fundamental index; for lam the smaller member of the pair
    int partner = -1; // conjugate fundamental for lam
    int label;        // 1-based index shown in the name
    int degree() const;
    bool odd() const { return kind != GenKind::lam; }
    std::string name() const;
};

// Square-free monomial in the generators, bit g for generator g.
using GenMask = std::uint32_t;

// Element of the differential forms tensored with K*(+): (beta power, form monomial) -> polynomial.
struct ComplexForm {
    int ncoef = 0;  // number of coefficient variables
    int nsym = 0;   // number of form symbols
    std::map<std::pair<int, FormMask>, FundPolynomial> terms;

    ComplexForm() = default;
    ComplexForm(int nc, int ns) : ncoef(nc), nsym(ns) {}
    void add(int j, FormMask m, const FundPolynomial& p);
    void add(const ComplexForm& o, long long k = 1);
    bool is_zero() const { return terms.empty(); }
    bool operator==(const ComplexForm& o) const { return terms == o.terms; }
};

struct RTermKey {
    GenMask d = 0;
    Weight x;
    int j = 0;
    FormMask m = 0;
    auto operator<=>(const RTermKey&) const = default;
};

class KRAlgebra;

// Normal form: sum of coefficient * generator monomial, plus terms D * r(x beta^j dm) with
// m a nonempty canonical monomial in unpaired complex-type symbols.
class KRGElement {
public:
    KRGElement() = default;
    explicit KRGElement(std::shared_ptr<const KRAlgebra> alg) : alg_(std::move(alg)) {}

    const std::shared_ptr<const KRAlgebra>& algebra() const { return alg_; }
    const std::map<GenMask, CoeffElement>& free() const { return free_; }
    const std::map<RTermKey, long long>& rterms() const { return r_; }

    void add_free(GenMask d, const CoeffElement& c, long long k = 1);
    void add_rterm(const RTermKey& key, long long c);
    void add(const KRGElement& o, long long k = 1);

    bool is_zero() const { return free_.empty() && r_.empty(); }
    bool operator==(const KRGElement& o) const { return free_ == o.free_ && r_ == o.r_; }
    KRGElement operator-() const;
    friend KRGElement operator+(const KRGElement& a, const KRGElement& b);
    friend KRGElement operator-(const KRGElement& a, const KRGElement& b);

    std::vector<int> degrees() const;
    // homogeneous components by degree
    std::map<int, KRGElement> by_degree() const;

private:
    std::shared_ptr<const KRAlgebra> alg_;
    std::map<GenMask, CoeffElement> free_;
    std::map<RTermKey, long long> r_;
};

class KRAlgebra : public std::enable_shared_from_this<KRAlgebra> {
public:
    enum class Kind { Equivariant, Nonequivariant, Torus };

    static std::shared_ptr<const KRAlgebra> equivariant(const GroupSpec& spec);
    static std::shared_ptr<const KRAlgebra> nonequivariant(const GroupSpec& spec);
    static std::shared_ptr<const KRAlgebra> torus(int n);

    Kind kind() const { return kind_; }
    const GroupSpec& spec() const { return spec_; }
    const std::shared_ptr<const RepRing>& group_ring() const { return gring_; }
    const std::shared_ptr<const RepRing>& coeff_ring() const { return cring_; }

    int num_symbols() const { return static_cast<int>(sym_type_.size()); }
    TypeTag symbol_type(int i) const { return sym_type_[i]; }
    int symbol_conj(int i) const { return sym_perm_[i]; }
    const std::vector<Generator>& generators() const { return gens_; }
    int generator_of_symbol(int i) const { return sym_gen_[i]; }
    // generator by kind and 1-based label, or -1
    int find_generator(GenKind kind, int label) const;
    std::string monomial_name(GenMask d) const;

    KRGElement zero() const;
    KRGElement scalar(const CoeffElement& c) const;
    KRGElement integer(long long k) const;
    KRGElement basis(int b) const;
    KRGElement generator(int g) const;
    KRGElement monomial(GenMask d) const;

    KRGElement mul(const KRGElement& a, const KRGElement& b) const;
    const KRGElement& square(int g) const;
    // delta_R (quaternionic = false) or delta_H (quaternionic = true) of a Real resp. Quaternionic class
    // given as a polynomial in the fundamentals of the group
    KRGElement lift(const FundPolynomial& p, bool quaternionic) const;
    CoeffElement coefficient_class(const FundPolynomial& p, bool quaternionic) const;

    ComplexForm empty_form() const;
    ComplexForm generator_form(int g) const;
    ComplexForm monomial_form(GenMask d) const;
    ComplexForm form_mul(const ComplexForm& a, const ComplexForm& b) const;
    ComplexForm conj(const ComplexForm& a) const;
    ComplexForm complexify(const KRGElement& a) const;
    ComplexForm complexify(const CoeffElement& c) const;
    KRGElement realify(const ComplexForm& z) const;
    KRGElement normalize(const KRGElement& a) const;

    std::string render(const KRGElement& a) const;
    std::string render(const ComplexForm& z) const;

    KRAlgebra(Kind kind, const GroupSpec& spec);

private:
    Kind kind_;
    GroupSpec spec_;
    std::shared_ptr<const RepRing> gring_, cring_;
    std::vector<TypeTag> sym_type_;
    std::vector<int> sym_perm_;
    std::vector<int> coeff_perm_;
    std::vector<Generator> gens_;
    std::vector<int> sym_gen_;
    std::vector<long long> dims_;

    mutable std::recursive_mutex mu_;
    mutable std::vector<std::optional<KRGElement>> squares_;
    mutable std::map<std::pair<GenMask, GenMask>, KRGElement> mono_cache_;

    FundPolynomial coeff_poly(const FundPolynomial& p) const;
    KRGElement mono_mul(GenMask a, GenMask b) const;
    KRGElement right_generator(const KRGElement& e, int g) const;
    KRGElement compute_square(int g) const;
    void add_realified_term(KRGElement& out, int j, FormMask m, const Weight& x, long long c) const;
    ComplexForm rterm_form(const RTermKey& key, long long c) const;
};

KRGElement kr_mul(const KRGElement& a, const KRGElement& b);
ComplexForm complexify_krg(const KRGElement& a);
KRGElement forget_to_kr(const KRGElement& a, const std::shared_ptr<const KRAlgebra>& nonequivariant);
// restriction along the maximal torus for U(n) with complex conjugation
KRGElement restrict_to_torus(const KRGElement& a, const std::shared_ptr<const KRAlgebra>& torus);
KRGElement restrict_generator_to_torus(const KRAlgebra& g, int gen, const std::shared_ptr<const KRAlgebra>& torus);

// Random elements for property checks.
struct SampleOptions {
    int terms = 3;
    int max_coeff = 3;
    int weight_bound = 1;   // fundamental coordinates of sampled irreducibles
    int max_generators = 2; // generators per monomial
    bool rterms = true;
};
KRGElement random_element(const std::shared_ptr<const KRAlgebra>& alg, std::mt19937& rng, const SampleOptions& opt = {});
CoeffElement random_coefficient(const std::shared_ptr<const RepRing>& ring, std::mt19937& rng, const SampleOptions& opt = {});
std::vector<Weight> small_irreducibles(const RepRing& ring, int bound);

struct RingPresentation {
    std::string group, involution;
    struct Gen {
        std::string name;
        int degree;
        std::string source;  // e.g. "R [w1]"
    };
    std::vector<Gen> generators;
    std::vector<std::string> relations;
    std::vector<std::string> fundamental_types;  // "[w1]: R"
    std::vector<DegreeDescription> coefficient_degrees;
    bool has_rclasses = false;
};
RingPresentation present_ring(const GroupSpec& spec);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;  // both sides on failure
};
struct VerifyOptions {
    unsigned seed = 1;
    int samples = 200;
};
std::vector<CheckResult> verify_suite(const GroupSpec& spec, const VerifyOptions& opt = {});

// Exterior power classes of the standard representation of U(n) as polynomials; zero outside 0..n.
FundPolynomial unitary_wedge(const KRAlgebra& alg, int k);
// Right-hand sides of the exterior-power square formulas.
KRGElement unitary_real_square_formula(const KRAlgebra& alg, int k);
KRGElement unitary_quaternionic_square_formula(const KRAlgebra& alg, int k);  // square of the generator of the k-th power
KRGElement symplectic_square_formula(const KRAlgebra& alg, int j);               // square of the generator of sigma^j
// Symplectic basic classes sigma^j = wedge^j - wedge^(j-2) of the standard representation, any j >= 0.
FundPolynomial symplectic_sigma(const KRAlgebra& alg, int j);

}  // namespace krg

#endif
