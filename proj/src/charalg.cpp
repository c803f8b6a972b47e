#include "krg/charalg.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "krg/error.hpp"

namespace krg {

char type_char(TypeTag t)
{
    switch (t) {
    case TypeTag::R: return 'R';
    case TypeTag::C: return 'C';
    case TypeTag::H: return 'H';
    }
    return '?';
}

void RepClass::add(const Weight& hw, long long c)
{
    if (c == 0) return;
    auto it = terms.find(hw);
    if (it == terms.end()) {
        terms.emplace(hw, c);
    } else if ((it->second += c) == 0) {
        terms.erase(it);
    }
}

void RepClass::add(const RepClass& o, long long c)
{
    for (const auto& [w, m] : o.terms) add(w, c * m);
}

// ---------------------------------------------------------------- polynomials

FundPolynomial FundPolynomial::constant(int n, long long c)
{
    FundPolynomial p(n);
    p.add(Weight(n), c);
    return p;
}

FundPolynomial FundPolynomial::variable(int n, int i)
{
    FundPolynomial p(n);
    Weight e(n);
    e[i] = 1;
    p.add(e, 1);
    return p;
}

void FundPolynomial::add(const Weight& e, long long c)
{
    if (c == 0) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else if ((it->second += c) == 0) {
        terms.erase(it);
    }
}

bool FundPolynomial::is_constant() const
{
    return terms.empty() || (terms.size() == 1 && terms.begin()->first.is_zero());
}

long long FundPolynomial::constant_term() const
{
    auto it = terms.find(Weight(nvars));
    return it == terms.end() ? 0 : it->second;
}

int FundPolynomial::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms) d = std::max(d, e.sum());
    return d;
}

FundPolynomial& FundPolynomial::operator+=(const FundPolynomial& o)
{
    for (const auto& [e, c] : o.terms) add(e, c);
    return *this;
}

FundPolynomial& FundPolynomial::operator-=(const FundPolynomial& o)
{
    for (const auto& [e, c] : o.terms) add(e, -c);
    return *this;
}

FundPolynomial FundPolynomial::operator-() const
{
    FundPolynomial r(nvars);
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
}

FundPolynomial operator*(const FundPolynomial& a, const FundPolynomial& b)
{
    FundPolynomial r(a.nvars);
    for (const auto& [e1, c1] : a.terms)
        for (const auto& [e2, c2] : b.terms) r.add(e1 + e2, c1 * c2);
    return r;
}

FundPolynomial operator*(long long k, const FundPolynomial& a)
{
    FundPolynomial r(a.nvars);
    for (const auto& [e, c] : a.terms) r.add(e, k * c);
    return r;
}

FundPolynomial FundPolynomial::pow(int k) const
{
    FundPolynomial r = constant(nvars, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

FundPolynomial FundPolynomial::derivative(int i) const
{
    FundPolynomial r(nvars);
    for (const auto& [e, c] : terms) {
        if (e[i] == 0) continue;
        Weight f = e;
        f[i] -= 1;
        r.add(f, c * e[i]);
    }
    return r;
}

FundPolynomial FundPolynomial::permuted(const std::vector<int>& perm) const
{
    FundPolynomial r(nvars);
    for (const auto& [e, c] : terms) {
        Weight f(nvars);
        for (int i = 0; i < nvars; ++i) f[perm[i]] += e[i];
        r.add(f, c);
    }
    return r;
}

FundPolynomial FundPolynomial::mod2() const
{
    FundPolynomial r(nvars);
    for (const auto& [e, c] : terms)
        if (c % 2 != 0) r.add(e, 1);
    return r;
}

long long FundPolynomial::evaluate(const std::vector<long long>& values) const
{
    long long s = 0;
    for (const auto& [e, c] : terms) {
        long long t = c;
        for (int i = 0; i < nvars; ++i)
            for (int k = 0; k < e[i]; ++k) t *= values[i];
        s += t;
    }
    return s;
}

namespace {

bool graded_desc(const Weight& a, const Weight& b)
{
    if (a.sum() != b.sum()) return a.sum() > b.sum();
    return a > b;
}

std::string monomial_string(const Weight& e)
{
    std::string s;
    for (int i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "[w" + std::to_string(i + 1) + "]";
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

}  // namespace

std::string FundPolynomial::render() const
{
    if (terms.empty()) return "0";
    std::vector<std::pair<Weight, long long>> ts(terms.begin(), terms.end());
    std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) { return graded_desc(x.first, y.first); });
    std::string out;
    bool first = true;
    for (const auto& [e, c] : ts) {
        long long a = c < 0 ? -c : c;
        std::string body;
        std::string mono = monomial_string(e);
        if (mono.empty()) body = std::to_string(a);
        else if (a == 1) body = mono;
        else body = std::to_string(a) + "*" + mono;
        if (first) out += (c < 0 ? "-" : "") + body;
        else out += (c < 0 ? "-" : "+") + body;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- characters

Character char_mul(const Character& a, const Character& b)
{
    Character r;
    for (const auto& [w1, m1] : a)
        for (const auto& [w2, m2] : b) r[w1 + w2] += m1 * m2;
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

Character char_add(const Character& a, const Character& b, long long k)
{
    Character r = a;
    for (const auto& [w, m] : b) r[w] += k * m;
    for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

long long char_dim(const Character& a)
{
    long long s = 0;
    for (const auto& [w, m] : a) s += m;
    return s;
}

namespace {

Character normalize_character(const GroupSpec& spec, const Character& a)
{
    if (spec.family != Family::SpecialUnitary) return a;
    Character r;
    for (const auto& [w, m] : a) r[spec.normalize(w)] += m;
    return r;
}

// Freudenthal recursion over the dominant weights below hw.
Character freudenthal(const GroupSpec& g, const Weight& hw)
{
    if (g.simple_roots.empty()) return Character{{hw, 1}};

    std::set<Weight> dom{hw};
    std::deque<Weight> todo{hw};
    while (!todo.empty()) {
        Weight d = todo.front();
        todo.pop_front();
        for (const auto& a : g.positive_roots) {
            Weight nu = g.dominantize(d - a).first;
            if (!g.in_positive_cone(hw - nu)) continue;
            if (dom.insert(nu).second) todo.push_back(nu);
        }
    }

    std::vector<Weight> order(dom.begin(), dom.end());
    std::sort(order.begin(), order.end(), [&](const Weight& x, const Weight& y) {
        long long hx = g.height(x), hy = g.height(y);
        if (hx != hy) return hx > hy;
        return x > y;
    });

    std::map<Weight, long long> mult;
    Weight hr = hw + g.rho;
    long long top = g.inner(hr, hr);
    for (const auto& mu : order) {
        if (mu == hw) {
            mult[mu] = 1;
            continue;
        }
        long long num = 0;
        for (const auto& a : g.positive_roots) {
            for (int k = 1;; ++k) {
                Weight nu = mu + k * a;
                auto it = mult.find(g.dominantize(nu).first);
                if (it == mult.end()) break;
                num += it->second * g.inner(nu, a);
            }
        }
        Weight mr = mu + g.rho;
        long long den = top - g.inner(mr, mr);
        if (den <= 0 || (2 * num) % den != 0)
            throw Error(ErrorCode::NonDominant, "Freudenthal recursion failed at " + to_string(mu));
        long long m = 2 * num / den;
        if (m > 0) mult[mu] = m;
    }

    Character chi;
    for (const auto& [mu, m] : mult)
        for (const auto& w : weyl_orbit(g, mu)) chi[w] = m;
    return chi;
}

Weight max_dominant(const GroupSpec& spec, const Character& chi)
{
    const Weight* best = nullptr;
    long long bh = 0;
    for (const auto& [w, m] : chi) {
        if (!spec.is_dominant(w)) continue;
        long long h = spec.height(w);
        if (!best || h > bh || (h == bh && w > *best)) {
            best = &w;
            bh = h;
        }
    }
    if (!best) throw Error(ErrorCode::NonInvariantInput, "no dominant weight in support");
    return *best;
}

}  // namespace

Character irrep_character(const GroupSpec& spec, const Weight& hw0)
{
    if (spec.family == Family::FiniteProduct)
        throw Error(ErrorCode::UnsupportedFamily, "finite groups use character tables");
    if (hw0.size() != spec.dim) throw Error(ErrorCode::WrongSpec, "weight length mismatch");
    Weight hw = spec.normalize(hw0);
    if (!spec.is_dominant(hw)) throw Error(ErrorCode::NonDominant, to_string(hw0));
    if (spec.family == Family::SpecialUnitary) {
        GroupSpec u = build_group(Family::UnitaryU, spec.rank, Involution::Trivial);
        return normalize_character(spec, freudenthal(u, hw));
    }
    return freudenthal(spec, hw);
}

bool is_weyl_invariant(const GroupSpec& spec, const Character& a)
{
    for (const auto& [w, m] : a)
        for (int i = 0; i < static_cast<int>(spec.simple_roots.size()); ++i) {
            auto it = a.find(spec.reflect(w, i));
            if (it == a.end() || it->second != m) return false;
        }
    return true;
}

RepClass decompose(const GroupSpec& spec, const Character& chi0)
{
    Character chi = normalize_character(spec, chi0);
    RepClass out;
    while (!chi.empty()) {
        Weight hw = max_dominant(spec, chi);
        long long c = chi.at(hw);
        out.add(hw, c);
        chi = char_add(chi, irrep_character(spec, hw), -c);
    }
    return out;
}

RepClass tensor_decompose(const GroupSpec& spec, const Character& a, const Character& b)
{
    if (!is_weyl_invariant(spec, a) || !is_weyl_invariant(spec, b))
        throw Error(ErrorCode::NonInvariantInput, "character is not Weyl invariant");
    return decompose(spec, normalize_character(spec, char_mul(a, b)));
}

Character adams(int k, const Character& a)
{
    Character r;
    for (const auto& [w, m] : a) r[k * w] += m;
    return r;
}

Character adams(const GroupSpec& spec, int k, const Character& a)
{
    return normalize_character(spec, adams(k, a));
}

Character exterior_power(const GroupSpec& spec, int k, const Character& a)
{
    for (const auto& [hw, m] : decompose(spec, a).terms)
        if (m < 0) throw Error(ErrorCode::VirtualInput, "exterior power of a virtual class");
    Character one{{spec.zero(), 1}};
    std::vector<Character> lam{one};
    std::vector<Character> psi(k + 1);
    for (int i = 1; i <= k; ++i) psi[i] = adams(spec, i, a);
    for (int j = 1; j <= k; ++j) {
        Character s;
        for (int i = 1; i <= j; ++i) {
            Character t = normalize_character(spec, char_mul(psi[i], lam[j - i]));
            s = char_add(s, t, (i % 2 == 1) ? 1 : -1);
        }
        for (auto& [w, m] : s) {
            if (m % j != 0) throw Error(ErrorCode::VirtualInput, "inexact Newton division");
            m /= j;
        }
        lam.push_back(s);
    }
    return lam[k];
}

Character conj_dual(const GroupSpec& spec, const Character& a)
{
    LatticeInvolution tau = involution_weight_map(spec);
    Character r;
    for (const auto& [w, m] : a) r[spec.normalize(-tau.apply(w))] += m;
    return r;
}

long long trivial_multiplicity(const GroupSpec& spec, const Character& a0)
{
    Character a = normalize_character(spec, a0);
    if (spec.simple_roots.empty()) {
        auto it = a.find(spec.zero());
        return it == a.end() ? 0 : it->second;
    }
    // Brauer: sum over W of sign(w) * m(w(rho) - rho)
    std::map<Weight, int> signs{{spec.rho, 1}};
    std::deque<Weight> todo{spec.rho};
    while (!todo.empty()) {
        Weight x = todo.front();
        todo.pop_front();
        for (int i = 0; i < static_cast<int>(spec.simple_roots.size()); ++i) {
            Weight y = spec.reflect(x, i);
            if (signs.emplace(y, -signs[x]).second) todo.push_back(y);
        }
    }
    long long s = 0;
    for (const auto& [w, sg] : signs) {
        auto it = a.find(spec.normalize(w - spec.rho));
        if (it != a.end()) s += sg * it->second;
    }
    return s;
}

long long frobenius_schur(const GroupSpec& spec, const Weight& hw)
{
    Character chi = irrep_character(spec, hw);
    Character sq = normalize_character(spec, char_mul(chi, chi));
    Character psi2 = adams(spec, 2, chi);
    Character sym2 = char_add(sq, psi2);
    Character alt2 = char_add(sq, psi2, -1);
    for (auto* c : {&sym2, &alt2})
        for (auto& [w, m] : *c) m /= 2;
    return trivial_multiplicity(spec, sym2) - trivial_multiplicity(spec, alt2);
}

TypeTag classify_type(const GroupSpec& spec, const Weight& hw0)
{
    Weight hw = spec.normalize(hw0);
    if (!spec.is_dominant(hw)) throw Error(ErrorCode::NonDominant, to_string(hw0));
    Weight c = spec.dominantize(-involution_weight_map(spec).apply(hw)).first;
    if (c != hw) return TypeTag::C;
    if (spec.involution == Involution::Trivial) {
        long long fs = frobenius_schur(spec, hw);
        if (fs == 1) return TypeTag::R;
        if (fs == -1) return TypeTag::H;
        return TypeTag::C;
    }
    // tables for the twisted involutions of U(n) and tori
    bool polynomial = std::all_of(hw.c.begin(), hw.c.begin() + hw.n, [](int x) { return x >= 0; });
    if (spec.family == Family::Torus && spec.involution == Involution::ComplexConjugation)
        return TypeTag::R;
    if (spec.family == Family::UnitaryU && polynomial) {
        if (spec.involution == Involution::ComplexConjugation) return TypeTag::R;
        if (spec.involution == Involution::SymplecticType)
            return hw.sum() % 2 == 0 ? TypeTag::R : TypeTag::H;
    }
    throw Error(ErrorCode::UnclassifiableTwisted, spec.key() + " " + to_string(hw0));
}

namespace {

Weight choose_leading(const GroupSpec& spec, const RepClass& r)
{
    const Weight* best = nullptr;
    long long bh = 0;
    for (const auto& [w, m] : r.terms) {
        long long h = spec.height(w);
        if (!best || h > bh || (h == bh && w > *best)) {
            best = &w;
            bh = h;
        }
    }
    return *best;
}

}  // namespace

FundPolynomial poly_in_fundamentals(const GroupSpec& spec, const RepClass& a)
{
    return RepRing(spec).poly(a);
}

// ---------------------------------------------------------------- RepRing

RepRing::RepRing(GroupSpec spec) : spec_(std::move(spec))
{
    if (spec_.family == Family::FiniteProduct)
        throw Error(ErrorCode::UnsupportedFamily, "representation ring of a finite group");
    trivial_ = spec_.zero();
    funds_ = spec_.fundamentals;
    if (spec_.family == Family::Torus) {
        for (int i = 0; i < spec_.rank; ++i) {
            Weight e(spec_.rank);
            e[i] = 1;
            funds_.push_back(e);
        }
    }
    for (const auto& f : funds_) {
        Weight c = conj(f);
        auto it = std::find(funds_.begin(), funds_.end(), c);
        fund_perm_.push_back(it == funds_.end() ? -1 : static_cast<int>(it - funds_.begin()));
    }
}

std::shared_ptr<RepRing> RepRing::point()
{
    auto r = std::shared_ptr<RepRing>(new RepRing());
    r->spec_.family = Family::Torus;
    r->spec_.rank = 0;
    r->spec_.dim = 0;
    r->point_ = true;
    r->trivial_ = Weight(0);
    return r;
}

std::shared_ptr<RepRing> RepRing::make(const GroupSpec& spec)
{
    return std::make_shared<RepRing>(spec);
}

const Character& RepRing::character(const Weight& hw) const
{
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = chars_.find(hw);
    if (it != chars_.end()) return it->second;
    Character c = point_ ? Character{{trivial_, 1}} : irrep_character(spec_, hw);
    return chars_.emplace(hw, std::move(c)).first->second;
}

long long RepRing::dim(const Weight& hw) const
{
    return char_dim(character(hw));
}

long long RepRing::dim(const RepClass& a) const
{
    long long s = 0;
    for (const auto& [w, m] : a.terms) s += m * dim(w);
    return s;
}

TypeTag RepRing::type(const Weight& hw) const
{
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = types_.find(hw);
    if (it != types_.end()) return it->second;
    TypeTag t = point_ ? TypeTag::R : classify_type(spec_, hw);
    types_.emplace(hw, t);
    return t;
}

Weight RepRing::conj(const Weight& hw) const
{
    if (point_ || spec_.involution != Involution::Trivial) return hw;
    return spec_.dominantize(-hw).first;
}

bool RepRing::is_c_plus(const Weight& hw) const
{
    return type(hw) == TypeTag::C && hw > conj(hw);
}

const RepClass& RepRing::mul(const Weight& a, const Weight& b) const
{
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    RepClass r;
    if (point_) r.add(trivial_, 1);
    else if (a == trivial_) r.add(b, 1);
    else if (b == trivial_) r.add(a, 1);
    else r = decompose(spec_, char_mul(character(a), character(b)));
    return products_.emplace(key, std::move(r)).first->second;
}

RepClass RepRing::mul(const RepClass& a, const RepClass& b) const
{
    RepClass r;
    for (const auto& [x, m] : a.terms)
        for (const auto& [y, n] : b.terms) r.add(mul(x, y), m * n);
    return r;
}

RepClass RepRing::conj(const RepClass& a) const
{
    RepClass r;
    for (const auto& [x, m] : a.terms) r.add(conj(x), m);
    return r;
}

Character RepRing::character_of(const RepClass& a) const
{
    Character r;
    for (const auto& [x, m] : a.terms) r = char_add(r, character(x), m);
    return r;
}

const RepClass& RepRing::monomial(const Weight& exps) const
{
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = monomials_.find(exps);
    if (it != monomials_.end()) return it->second;
    RepClass r;
    int i = 0;
    while (i < exps.size() && exps[i] == 0) ++i;
    if (spec_.family == Family::Torus && !point_) {
        r.add(exps, 1);
    } else if (i == exps.size()) {
        r.add(trivial_, 1);
    } else {
        Weight e = exps;
        e[i] -= 1;
        const RepClass& base = monomial(e);
        RepClass f;
        f.add(funds_[i], 1);
        r = mul(base, f);
    }
    return monomials_.emplace(exps, std::move(r)).first->second;
}

RepClass RepRing::decompose_poly(const FundPolynomial& p) const
{
    RepClass r;
    for (const auto& [e, c] : p.terms) r.add(monomial(e), c);
    return r;
}

FundPolynomial RepRing::poly(const RepClass& a) const
{
    int l = num_fundamentals();
    FundPolynomial p(l);
    RepClass rem = a;
    if (point_) {
        for (const auto& [w, m] : rem.terms) p.add(Weight(0), m);
        return p;
    }
    if (spec_.family == Family::Torus) {
        for (const auto& [w, m] : rem.terms) p.add(w, m);
        return p;
    }
    while (!rem.is_zero()) {
        Weight hw = choose_leading(spec_, rem);
        Weight e = fundamental_coords(spec_, hw);
        long long c = rem.terms.at(hw);
        p.add(e, c);
        rem.add(monomial(e), -c);
    }
    return p;
}

const FundPolynomial& RepRing::poly(const Weight& hw) const
{
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = polys_.find(hw);
    if (it != polys_.end()) return it->second;
    RepClass r;
    r.add(hw, 1);
    FundPolynomial p = poly(r);
    return polys_.emplace(hw, std::move(p)).first->second;
}

std::vector<long long> RepRing::fundamental_dims() const
{
    std::vector<long long> d;
    for (const auto& f : funds_) d.push_back(dim(f));
    return d;
}

}  // namespace krg
