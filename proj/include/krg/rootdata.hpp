#ifndef KRG_ROOTDATA_HPP
#define KRG_ROOTDATA_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "krg/weight.hpp"

namespace krg {

enum class Family { UnitaryU, SpecialUnitary, Symplectic, ExceptionalG2, Torus, FiniteProduct };
enum class Involution { Trivial, ComplexConjugation, SymplecticType };

const char* family_name(Family f);
const char* involution_name(Involution i);

struct LatticeInvolution {
    std::vector<std::vector<int>> matrix;
    Weight apply(const Weight& w) const;
};

// Validated group data. Weight conventions:
//   U(n): e-basis, length n. Fundamentals are the highest weights of the exterior powers.
//   SU(n): U(n) e-basis modulo the all-ones vector, normalized so the last coordinate is 0.
//   Sp(2m): e-basis L_1..L_m. Fundamentals L_1+..+L_k.
//   G2: fundamental-weight basis; w1 short (dim 7), w2 long (dim 14).
//   Torus T^n: Z^n, no roots.
struct GroupSpec {
    Family family = Family::UnitaryU;
    int rank = 0;
    Involution involution = Involution::Trivial;
    std::vector<std::string> finite_factors;

    int dim = 0;                        // length of weight vectors
    std::vector<std::vector<int>> gram; // W-invariant form on weight coordinates
    std::vector<Weight> simple_roots;
    std::vector<Weight> positive_roots;
    std::vector<Weight> fundamentals;
    Weight rho;

    bool operator==(const GroupSpec& o) const;
    std::string token() const;  // e.g. "SU3"
    std::string key() const;    // token plus involution

    bool is_lie() const { return family != Family::FiniteProduct; }
    bool is_semisimple() const;
    int num_fundamentals() const { return static_cast<int>(fundamentals.size()); }

    int inner(const Weight& a, const Weight& b) const;
    // <w, a_i^vee> for simple root i
    int pairing(const Weight& w, int i) const;
    Weight reflect(const Weight& w, int i) const;
    Weight normalize(Weight w) const;
    bool is_dominant(const Weight& w) const;
    // dominant representative and parity of the reflection count
    std::pair<Weight, int> dominantize(Weight w) const;
    // linear functional positive on positive roots
    long long height(const Weight& w) const;
    // whether w lies in the nonnegative cone spanned by the simple roots
    bool in_positive_cone(const Weight& w) const;
    Weight zero() const { return Weight(dim); }
};

GroupSpec build_group(Family family, int rank, Involution involution);
GroupSpec build_finite(const std::vector<std::string>& factors);

std::vector<Weight> fundamental_weights(const GroupSpec& spec);
std::set<Weight> weyl_orbit(const GroupSpec& spec, const Weight& w);
long long weyl_group_order(const GroupSpec& spec);
LatticeInvolution involution_weight_map(const GroupSpec& spec);

// exponents of the fundamental weights in a dominant weight
Weight fundamental_coords(const GroupSpec& spec, const Weight& hw);
Weight weight_from_fundamental_coords(const GroupSpec& spec, const Weight& a);

// CLI tokens: U3, SU3, C2, G2, T2; involution: trivial, conj, symp
GroupSpec parse_group(const std::string& token, const std::string& involution);
Involution default_involution(Family f);
Involution parse_involution(const std::string& s);

}  // namespace krg

#endif
