#include "krg/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "krg/error.hpp"

namespace krg {

const char* family_name(Family f)
{
    switch (f) {
    case Family::UnitaryU: return "UnitaryU";
    case Family::SpecialUnitary: return "SpecialUnitary";
    case Family::Symplectic: return "Symplectic";
    case Family::ExceptionalG2: return "ExceptionalG2";
    case Family::Torus: return "Torus";
    case Family::FiniteProduct: return "FiniteProduct";
    }
    return "";
}

const char* involution_name(Involution i)
{
    switch (i) {
    case Involution::Trivial: return "trivial";
    case Involution::ComplexConjugation: return "conj";
    case Involution::SymplecticType: return "symp";
    }
    return "";
}

Weight LatticeInvolution::apply(const Weight& w) const
{
    Weight r(w.size());
    for (int i = 0; i < w.size(); ++i) {
        int s = 0;
        for (int j = 0; j < w.size(); ++j) s += matrix[i][j] * w[j];
        r[i] = s;
    }
    return r;
}

bool GroupSpec::operator==(const GroupSpec& o) const
{
    return family == o.family && rank == o.rank && involution == o.involution &&
           finite_factors == o.finite_factors;
}

std::string GroupSpec::token() const
{
    switch (family) {
    case Family::UnitaryU: return "U" + std::to_string(rank);
    case Family::SpecialUnitary: return "SU" + std::to_string(rank);
    case Family::Symplectic: return "C" + std::to_string(rank);
    case Family::ExceptionalG2: return "G2";
    case Family::Torus: return "T" + std::to_string(rank);
    case Family::FiniteProduct: {
        std::string s;
        for (const auto& f : finite_factors) s += (s.empty() ? "" : "x") + f;
        return s;
    }
    }
    return "";
}

std::string GroupSpec::key() const
{
    return token() + "/" + involution_name(involution);
}

bool GroupSpec::is_semisimple() const
{
    return family == Family::SpecialUnitary || family == Family::Symplectic ||
           family == Family::ExceptionalG2;
}

int GroupSpec::inner(const Weight& a, const Weight& b) const
{
    int s = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) s += a[i] * gram[i][j] * b[j];
    return s;
}

int GroupSpec::pairing(const Weight& w, int i) const
{
    const Weight& a = simple_roots[i];
    return 2 * inner(w, a) / inner(a, a);
}

Weight GroupSpec::reflect(const Weight& w, int i) const
{
    return normalize(w - pairing(w, i) * simple_roots[i]);
}

Weight GroupSpec::normalize(Weight w) const
{
    if (family == Family::SpecialUnitary) {
        int t = w[dim - 1];
        for (int i = 0; i < dim; ++i) w[i] -= t;
    }
    return w;
}

bool GroupSpec::is_dominant(const Weight& w) const
{
    for (int i = 0; i < static_cast<int>(simple_roots.size()); ++i)
        if (pairing(w, i) < 0) return false;
    return true;
}

std::pair<Weight, int> GroupSpec::dominantize(Weight w) const
{
    int parity = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < static_cast<int>(simple_roots.size()); ++i) {
            if (pairing(w, i) < 0) {
                w = reflect(w, i);
                parity ^= 1;
                moved = true;
            }
        }
    }
    return {normalize(w), parity};
}

long long GroupSpec::height(const Weight& w) const
{
    Weight s(dim);
    for (const auto& a : positive_roots) s += a;
    return inner(w, s);
}

bool GroupSpec::in_positive_cone(const Weight& w) const
{
    switch (family) {
    case Family::UnitaryU:
    case Family::SpecialUnitary: {
        int n = dim;
        int total = w.sum();
        int shift = 0;
        if (family == Family::SpecialUnitary) {
            if (total % n != 0) return false;
            shift = -total / n;
        } else if (total != 0) {
            return false;
        }
        long long c = 0;
        for (int i = 0; i < n - 1; ++i) {
            c += w[i] + shift;
            if (c < 0) return false;
        }
        return true;
    }
    case Family::Symplectic: {
        long long c = 0;
        for (int i = 0; i < dim; ++i) {
            c += w[i];
            if (c < 0) return false;
        }
        return c % 2 == 0;
    }
    case Family::ExceptionalG2: {
        int c1 = 2 * w[0] + 3 * w[1];
        int c2 = w[0] + 2 * w[1];
        return c1 >= 0 && c2 >= 0;
    }
    case Family::Torus:
        return w.is_zero();
    case Family::FiniteProduct:
        return false;
    }
    return false;
}

namespace {

Weight unit(int n, int i)
{
    Weight w(n);
    w[i] = 1;
    return w;
}

std::vector<std::vector<int>> identity(int n, int s = 1)
{
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = s;
    return m;
}

}  // namespace

GroupSpec build_group(Family family, int rank, Involution involution)
{
    GroupSpec g;
    g.family = family;
    g.rank = rank;
    g.involution = involution;

    if (family == Family::FiniteProduct)
        throw Error(ErrorCode::UnsupportedFamily, "use build_finite for finite groups");
    if (involution == Involution::SymplecticType) {
        if (family != Family::UnitaryU)
            throw Error(ErrorCode::InvalidInvolution, "symplectic type involution requires U(n)");
        if (rank % 2 != 0)
            throw Error(ErrorCode::OddRankSymplectic, "U(" + std::to_string(rank) + ") has odd rank");
    }
    if (involution == Involution::ComplexConjugation && family != Family::UnitaryU &&
        family != Family::Torus)
        throw Error(ErrorCode::InvalidInvolution, "complex conjugation requires U(n) or a torus");
    if (family == Family::ExceptionalG2 && rank != 2)
        throw Error(ErrorCode::UnsupportedGroup, "G2 has rank 2");

    auto check_rank = [&](int lo, int hi) {
        if (rank < lo || rank > hi)
            throw Error(ErrorCode::UnsupportedGroup, "rank out of supported range");
    };

    switch (family) {
    case Family::UnitaryU:
    case Family::SpecialUnitary: {
        check_rank(family == Family::UnitaryU ? 1 : 2, kMaxRank);
        int n = rank;
        g.dim = n;
        g.gram = identity(n);
        for (int i = 0; i + 1 < n; ++i) g.simple_roots.push_back(unit(n, i) - unit(n, i + 1));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.positive_roots.push_back(unit(n, i) - unit(n, j));
        int kmax = family == Family::UnitaryU ? n : n - 1;
        for (int k = 1; k <= kmax; ++k) {
            Weight w(n);
            for (int i = 0; i < k; ++i) w[i] = 1;
            g.fundamentals.push_back(w);
        }
        g.rho = Weight(n);
        for (int i = 0; i < n; ++i) g.rho[i] = n - 1 - i;
        break;
    }
    case Family::Symplectic: {
        check_rank(1, kMaxRank);
        int m = rank;
        g.dim = m;
        g.gram = identity(m);
        for (int i = 0; i + 1 < m; ++i) g.simple_roots.push_back(unit(m, i) - unit(m, i + 1));
        g.simple_roots.push_back(2 * unit(m, m - 1));
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                g.positive_roots.push_back(unit(m, i) - unit(m, j));
                g.positive_roots.push_back(unit(m, i) + unit(m, j));
            }
        for (int i = 0; i < m; ++i) g.positive_roots.push_back(2 * unit(m, i));
        for (int k = 1; k <= m; ++k) {
            Weight w(m);
            for (int i = 0; i < k; ++i) w[i] = 1;
            g.fundamentals.push_back(w);
        }
        g.rho = Weight(m);
        for (int i = 0; i < m; ++i) g.rho[i] = m - i;
        break;
    }
    case Family::ExceptionalG2: {
        if (involution != Involution::Trivial)
            throw Error(ErrorCode::InvalidInvolution, "G2 supports only the trivial involution");
        g.dim = 2;
        g.gram = {{2, 3}, {3, 6}};
        g.simple_roots = {Weight{2, -1}, Weight{-3, 2}};
        g.positive_roots = {Weight{2, -1}, Weight{-3, 2}, Weight{-1, 1},
                            Weight{1, 0},  Weight{3, -1}, Weight{0, 1}};
        g.fundamentals = {Weight{1, 0}, Weight{0, 1}};
        g.rho = Weight{1, 1};
        break;
    }
    case Family::Torus: {
        check_rank(1, kMaxRank);
        g.dim = rank;
        g.gram = identity(rank);
        g.rho = Weight(rank);
        break;
    }
    case Family::FiniteProduct:
        break;
    }
    return g;
}

GroupSpec build_finite(const std::vector<std::string>& factors)
{
    GroupSpec g;
    g.family = Family::FiniteProduct;
    g.finite_factors = factors;
    g.rank = 0;
    return g;
}

std::vector<Weight> fundamental_weights(const GroupSpec& spec)
{
    if (spec.family == Family::Torus || spec.family == Family::FiniteProduct)
        throw Error(ErrorCode::UnsupportedFamily, "no fundamental weights for this family");
    return spec.fundamentals;
}

std::set<Weight> weyl_orbit(const GroupSpec& spec, const Weight& w)
{
    std::set<Weight> seen{spec.normalize(w)};
    std::deque<Weight> todo{spec.normalize(w)};
    while (!todo.empty()) {
        Weight x = todo.front();
        todo.pop_front();
        for (int i = 0; i < static_cast<int>(spec.simple_roots.size()); ++i) {
            Weight y = spec.reflect(x, i);
            if (seen.insert(y).second) todo.push_back(y);
        }
    }
    return seen;
}

long long weyl_group_order(const GroupSpec& spec)
{
    if (spec.simple_roots.empty()) return 1;
    return static_cast<long long>(weyl_orbit(spec, spec.rho).size());
}

LatticeInvolution involution_weight_map(const GroupSpec& spec)
{
    int s = spec.involution == Involution::Trivial ? 1 : -1;
    return LatticeInvolution{identity(spec.dim, s)};
}

Weight fundamental_coords(const GroupSpec& spec, const Weight& hw0)
{
    if (spec.family == Family::Torus || spec.family == Family::FiniteProduct)
        throw Error(ErrorCode::UnsupportedFamily, "no fundamental weights for this family");
    Weight hw = spec.normalize(hw0);
    if (!spec.is_dominant(hw)) throw Error(ErrorCode::NonDominant, to_string(hw0));
    int l = spec.num_fundamentals();
    Weight a(l);
    switch (spec.family) {
    case Family::ExceptionalG2:
        a = hw;
        break;
    case Family::SpecialUnitary:
        for (int k = 0; k < l; ++k) a[k] = hw[k] - hw[k + 1];
        break;
    case Family::UnitaryU:
    case Family::Symplectic:
        for (int k = 0; k + 1 < l; ++k) a[k] = hw[k] - hw[k + 1];
        a[l - 1] = hw[l - 1];
        if (a[l - 1] < 0) throw Error(ErrorCode::NonPolynomial, to_string(hw0));
        break;
    default:
        break;
    }
    return a;
}

Weight weight_from_fundamental_coords(const GroupSpec& spec, const Weight& a)
{
    Weight w(spec.dim);
    for (int i = 0; i < a.size(); ++i) w += a[i] * spec.fundamentals[i];
    return w;
}

Involution default_involution(Family f)
{
    return (f == Family::UnitaryU || f == Family::Torus) ? Involution::ComplexConjugation
                                                           : Involution::Trivial;
}

Involution parse_involution(const std::string& s)
{
    if (s == "trivial") return Involution::Trivial;
    if (s == "conj") return Involution::ComplexConjugation;
    if (s == "symp") return Involution::SymplecticType;
    throw Error(ErrorCode::ParseError, "unknown involution '" + s + "'");
}

GroupSpec parse_group(const std::string& token, const std::string& involution)
{
    auto number = [&](size_t pos) {
        std::string digits = token.substr(pos);
        if (digits.empty() || digits.size() > 3 ||
            !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw Error(ErrorCode::ParseError, "bad group token '" + token + "'");
        return std::stoi(digits);
    };
    Family f;
    int rank;
    if (token == "G2") {
        f = Family::ExceptionalG2;
        rank = 2;
    } else if (token.rfind("SU", 0) == 0) {
        f = Family::SpecialUnitary;
        rank = number(2);
    } else if (token.rfind("Sp", 0) == 0) {
        f = Family::Symplectic;
        rank = number(2);
        if (rank % 2) throw Error(ErrorCode::ParseError, "Sp needs an even index");
        rank /= 2;
    } else if (token.rfind("U", 0) == 0) {
        f = Family::UnitaryU;
        rank = number(1);
    } else if (token.rfind("C", 0) == 0) {
        f = Family::Symplectic;
        rank = number(1);
    } else if (token.rfind("T", 0) == 0) {
        f = Family::Torus;
        rank = number(1);
    } else {
        throw Error(ErrorCode::ParseError, "bad group token '" + token + "'");
    }
    Involution inv = involution.empty() ? default_involution(f) : parse_involution(involution);
    return build_group(f, rank, inv);
}

}  // namespace krg
