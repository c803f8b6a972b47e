#include "krg/coeff.hpp"

#include <algorithm>
#include <set>

#include "krg/error.hpp"

namespace krg {

int kr_degree(int b)
{
    static const int d[4] = {0, -1, -2, -4};
    return d[b];
}

const char* kr_name(int b)
{
    static const char* n[4] = {"1", "eta", "eta^2", "mu"};
    return n[b];
}

std::pair<int, long long> kr_basis_mul(int a, int b)
{
    if (a == kOne) return {b, 1};
    if (b == kOne) return {a, 1};
    if (a == kEta && b == kEta) return {kEta2, 1};
    if (a == kMu && b == kMu) return {kOne, 4};
    return {kOne, 0};
}

std::pair<int, long long> kr_complexify(int b)
{
    if (b == kOne) return {0, 1};
    if (b == kMu) return {2, 2};
    return {0, 0};
}

int normalize_degree(int d)
{
    int m = ((-d) % 8 + 8) % 8;
    return -m;
}

namespace {

long long mod2(long long x) { return ((x % 2) + 2) % 2; }

int beta_mod(int j) { return ((j % 4) + 4) % 4; }

}  // namespace

// ---------------------------------------------------------------- KR*(pt), K*(+)

KRPointElement KRPointElement::basis(int b, long long k)
{
    KRPointElement e;
    e.c[b] = k;
    e.normalize();
    return e;
}

void KRPointElement::normalize()
{
    c[kEta] = mod2(c[kEta]);
    c[kEta2] = mod2(c[kEta2]);
}

KRPointElement operator+(const KRPointElement& a, const KRPointElement& b)
{
    KRPointElement r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    r.normalize();
    return r;
}

KRPointElement operator*(const KRPointElement& a, const KRPointElement& b)
{
    KRPointElement r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto [k, f] = kr_basis_mul(i, j);
            r.c[k] += f * a.c[i] * b.c[j];
        }
    r.normalize();
    return r;
}

std::string KRPointElement::str() const
{
    std::vector<SignedTerm> ts;
    for (int b = 0; b < 4; ++b) {
        if (!c[b]) continue;
        long long a = c[b] < 0 ? -c[b] : c[b];
        std::string body = b == kOne ? std::to_string(a) : (a == 1 ? "" : std::to_string(a) + "*") + kr_name(b);
        ts.push_back({c[b] < 0, body});
    }
    return join_terms(ts);
}

KPlusElement KPlusElement::beta(int j, long long k)
{
    KPlusElement e;
    e.c[beta_mod(j)] = k;
    return e;
}

KPlusElement operator+(const KPlusElement& a, const KPlusElement& b)
{
    KPlusElement r;
    for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

KPlusElement operator*(const KPlusElement& a, const KPlusElement& b)
{
    KPlusElement r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.c[(i + j) % 4] += a.c[i] * b.c[j];
    return r;
}

KPlusElement KPlusElement::conj() const
{
    KPlusElement r = *this;
    r.c[1] = -r.c[1];
    r.c[3] = -r.c[3];
    return r;
}

KPlusElement complexify(const KRPointElement& a)
{
    KPlusElement r;
    for (int b = 0; b < 4; ++b) {
        auto [j, f] = kr_complexify(b);
        r.c[j] += f * a.c[b];
    }
    return r;
}

KRPointElement realify(const KPlusElement& a)
{
    // r(1)=2, r(beta)=eta^2, r(beta^2)=mu, r(beta^3)=0
    KRPointElement r;
    r.c[kOne] = 2 * a.c[0];
    r.c[kEta2] = a.c[1];
    r.c[kMu] = a.c[2];
    r.normalize();
    return r;
}

// ---------------------------------------------------------------- complex side

void ComplexCoeff::add(int j, const Weight& x, long long c)
{
    if (c == 0) return;
    auto key = std::make_pair(beta_mod(j), x);
    auto it = terms.find(key);
    if (it == terms.end()) terms.emplace(key, c);
    else if ((it->second += c) == 0) terms.erase(it);
}

void ComplexCoeff::add(const ComplexCoeff& o, long long k)
{
    for (const auto& [key, c] : o.terms) add(key.first, key.second, k * c);
}

ComplexCoeff complex_mul(const RepRing& ring, const ComplexCoeff& a, const ComplexCoeff& b)
{
    ComplexCoeff r;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms)
            for (const auto& [z, m] : ring.mul(ka.second, kb.second).terms)
                r.add(ka.first + kb.first, z, ca * cb * m);
    return r;
}

ComplexCoeff complex_conj(const RepRing& ring, const ComplexCoeff& a)
{
    ComplexCoeff r;
    for (const auto& [k, c] : a.terms) r.add(k.first, ring.conj(k.second), (k.first % 2 ? -c : c));
    return r;
}

// ---------------------------------------------------------------- CoeffElement

CoeffElement CoeffElement::integer(std::shared_ptr<const RepRing> ring, long long k)
{
    return basis(std::move(ring), kOne, k);
}

CoeffElement CoeffElement::basis(std::shared_ptr<const RepRing> ring, int b, long long k)
{
    CoeffElement e(ring);
    e.add_free(b, ring->trivial(), k);
    return e;
}

void CoeffElement::add_free(int b, const Weight& x, long long c)
{
    if (b == kEta || b == kEta2) c = mod2(c);
    if (c == 0) return;
    auto key = std::make_pair(b, x);
    auto it = free_.find(key);
    if (it == free_.end()) {
        free_.emplace(key, c);
        return;
    }
    it->second += c;
    if (b == kEta || b == kEta2) it->second = mod2(it->second);
    if (it->second == 0) free_.erase(it);
}

void CoeffElement::add_realified(const Weight& x, int j, long long c)
{
    if (c == 0) return;
    j = beta_mod(j);
    TypeTag t = ring_->type(x);
    if (t == TypeTag::C) {
        Weight y = x;
        if (!ring_->is_c_plus(x)) {
            y = ring_->conj(x);
            if (j % 2) c = -c;
        }
        auto key = std::make_pair(y, j);
        auto it = r_.find(key);
        if (it == r_.end()) r_.emplace(key, c);
        else if ((it->second += c) == 0) r_.erase(it);
        return;
    }
    // r(c(X) beta^i) = X r(beta^i); c(X_H) = beta^2 X
    int i = t == TypeTag::H ? beta_mod(j + 2) : j;
    switch (i) {
    case 0: add_free(kOne, x, 2 * c); break;
    case 1: add_free(kEta2, x, c); break;
    case 2: add_free(kMu, x, c); break;
    default: break;
    }
}

void CoeffElement::add(const CoeffElement& o, long long k)
{
    if (!ring_) ring_ = o.ring_;
    else if (o.ring_ && o.ring_ != ring_) throw Error(ErrorCode::MixedGroup, "coefficients over different groups");
    for (const auto& [key, c] : o.free_) add_free(key.first, key.second, k * c);
    for (const auto& [key, c] : o.r_) {
        auto it = r_.find(key);
        if (it == r_.end()) {
            if (k * c != 0) r_.emplace(key, k * c);
        } else if ((it->second += k * c) == 0) {
            r_.erase(it);
        }
    }
}

CoeffElement CoeffElement::operator-() const
{
    CoeffElement r(ring_);
    r.add(*this, -1);
    return r;
}

CoeffElement operator+(const CoeffElement& a, const CoeffElement& b)
{
    CoeffElement r = a;
    r.add(b);
    return r;
}

CoeffElement operator-(const CoeffElement& a, const CoeffElement& b)
{
    CoeffElement r = a;
    r.add(b, -1);
    return r;
}

int free_degree(const RepRing& ring, int b, const Weight& x)
{
    return normalize_degree(kr_degree(b) + (ring.type(x) == TypeTag::H ? -4 : 0));
}

int r_degree(int j) { return normalize_degree(-2 * j); }

std::vector<int> CoeffElement::degrees() const
{
    std::set<int> ds;
    for (const auto& [k, c] : free_) ds.insert(free_degree(*ring_, k.first, k.second));
    for (const auto& [k, c] : r_) ds.insert(r_degree(k.second));
    return std::vector<int>(ds.rbegin(), ds.rend());
}

namespace {

void require_same(const CoeffElement& a, const CoeffElement& b)
{
    if (a.ring() && b.ring() && a.ring() != b.ring())
        throw Error(ErrorCode::MixedGroup, "coefficients over different groups");
}

ComplexCoeff r_argument(const CoeffElement& a)
{
    ComplexCoeff x;
    for (const auto& [k, c] : a.rpart()) x.add(k.second, k.first, c);
    return x;
}

ComplexCoeff complexify_free(const CoeffElement& a)
{
    ComplexCoeff x;
    const RepRing& ring = *a.ring();
    for (const auto& [k, c] : a.free()) {
        auto [j, f] = kr_complexify(k.first);
        if (!f) continue;
        if (ring.type(k.second) == TypeTag::H) j += 2;
        x.add(j, k.second, f * c);
    }
    return x;
}

}  // namespace

CoeffElement coeff_mul(const CoeffElement& a, const CoeffElement& b)
{
    require_same(a, b);
    auto ringp = a.ring() ? a.ring() : b.ring();
    CoeffElement out(ringp);
    if (!ringp) return out;
    const RepRing& ring = *ringp;

    for (const auto& [ka, ca] : a.free())
        for (const auto& [kb, cb] : b.free()) {
            auto [bb, f] = kr_basis_mul(ka.first, kb.first);
            if (!f) continue;
            int d = (ring.type(ka.second) == TypeTag::H) + (ring.type(kb.second) == TypeTag::H);
            d %= 2;
            long long base = ca * cb * f;
            for (const auto& [z, m] : ring.mul(ka.second, kb.second).terms) {
                TypeTag t = ring.type(z);
                if (t == TypeTag::C) {
                    if (!ring.is_c_plus(z)) continue;
                    auto [j, g] = kr_complexify(bb);
                    if (!g) continue;
                    out.add_realified(z, 2 * d + j, m * base * g);
                    continue;
                }
                bool need_mu = (t == TypeTag::R && d == 1) || (t == TypeTag::H && d == 0);
                if (need_mu) {
                    if (m % 2) throw Error(ErrorCode::NotRealClass, "odd multiplicity of a mismatched type");
                    auto [b2, g] = kr_basis_mul(bb, kMu);
                    if (g) out.add_free(b2, z, (m / 2) * base * g);
                } else {
                    out.add_free(bb, z, m * base);
                }
            }
        }

    ComplexCoeff xa = r_argument(a), xb = r_argument(b);
    ComplexCoeff term;
    if (!xb.is_zero()) term.add(complex_mul(ring, complexify_free(a), xb));
    if (!xa.is_zero()) term.add(complex_mul(ring, xa, complexify_free(b)));
    if (!xa.is_zero() && !xb.is_zero()) {
        ComplexCoeff y = xb;
        y.add(complex_conj(ring, xb));
        term.add(complex_mul(ring, xa, y));
    }
    out.add(realify(ringp, term));
    return out;
}

ComplexCoeff complexify(const CoeffElement& a)
{
    if (!a.ring()) return {};
    ComplexCoeff x = complexify_free(a);
    ComplexCoeff y = r_argument(a);
    x.add(y);
    x.add(complex_conj(*a.ring(), y));
    return x;
}

CoeffElement realify(std::shared_ptr<const RepRing> ring, const ComplexCoeff& x)
{
    CoeffElement out(ring);
    for (const auto& [k, c] : x.terms) out.add_realified(k.second, k.first, c);
    return out;
}

CoeffElement from_rep_natural(std::shared_ptr<const RepRing> ring, const RepClass& p)
{
    CoeffElement out(ring);
    for (const auto& [x, m] : p.terms) {
        TypeTag t = ring->type(x);
        if (t != TypeTag::C) {
            out.add_free(kOne, x, m);
            continue;
        }
        auto it = p.terms.find(ring->conj(x));
        if (it == p.terms.end() || it->second != m)
            throw Error(ErrorCode::NotRealClass, "unbalanced conjugate pair " + to_string(x));
        if (ring->is_c_plus(x)) out.add_realified(x, 0, m);
    }
    return out;
}

CoeffElement from_rep_fixed(std::shared_ptr<const RepRing> ring, const RepClass& p, bool quaternionic)
{
    CoeffElement out(ring);
    TypeTag native = quaternionic ? TypeTag::H : TypeTag::R;
    for (const auto& [x, m] : p.terms) {
        TypeTag t = ring->type(x);
        if (t == TypeTag::C) {
            auto it = p.terms.find(ring->conj(x));
            if (it == p.terms.end() || it->second != m)
                throw Error(ErrorCode::NotRealClass, "unbalanced conjugate pair " + to_string(x));
            if (ring->is_c_plus(x)) out.add_realified(x, quaternionic ? 2 : 0, m);
        } else if (t == native) {
            out.add_free(kOne, x, m);
        } else {
            if (m % 2) throw Error(ErrorCode::NotRealClass, "odd multiplicity of " + to_string(x));
            out.add_free(kMu, x, m / 2);
        }
    }
    return out;
}

// ---------------------------------------------------------------- degree table

DegreeDescription degree_rank(const TypeRanks& n, int q)
{
    if (q < 0 || q > 7) throw Error(ErrorCode::ParseError, "degree index out of range");
    DegreeDescription d;
    d.q = q;
    long long r = n.r, c = n.c / 2, h = n.h;
    switch (q) {
    case 0: d.group = "RR(G)"; d.formula = "Z^(#R+#H+#Cpairs)"; d.free_rank = r + h + c; break;
    case 1: d.group = "RR(G)/rho(R(G))"; d.formula = "(Z/2)^#R"; d.z2_rank = r; break;
    case 2: d.group = "R(G)/j(RH(G))"; d.formula = "(Z/2)^#R + Z^#Cpairs"; d.z2_rank = r; d.free_rank = c; break;
    case 3: d.group = "0"; d.formula = "0"; break;
    case 4: d.group = "RH(G)"; d.formula = "Z^(#H+#Cpairs+#R)"; d.free_rank = h + c + r; break;
    case 5: d.group = "RH(G)/eta(R(G))"; d.formula = "(Z/2)^#H"; d.z2_rank = h; break;
    case 6: d.group = "R(G)/i(RR(G))"; d.formula = "(Z/2)^#H + Z^#Cpairs"; d.z2_rank = h; d.free_rank = c; break;
    case 7: d.group = "0"; d.formula = "0"; break;
    }
    return d;
}

DegreeDescription degree_rank(const GroupSpec& spec, int q)
{
    if (spec.family == Family::FiniteProduct) {
        std::string name;
        for (const auto& f : spec.finite_factors) name += (name.empty() ? "" : "x") + f;
        return degree_rank(real_quat_tables(builtin_table(name)).R, q);
    }
    // a compact Lie group of positive dimension or a torus has infinitely many irreducibles
    DegreeDescription d = degree_rank(TypeRanks{1, 2, 1}, q);
    d.infinite = d.free_rank > 0 || d.z2_rank > 0;
    d.free_rank = d.z2_rank = 0;
    return d;
}

// ---------------------------------------------------------------- rendering

std::string join_terms(const std::vector<SignedTerm>& ts)
{
    if (ts.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < ts.size(); ++i) {
        if (i == 0) s += (ts[i].negative ? "-" : "") + ts[i].body;
        else s += (ts[i].negative ? " - " : " + ") + ts[i].body;
    }
    return s;
}

namespace {

std::vector<std::pair<Weight, long long>> sorted_terms(const FundPolynomial& p)
{
    std::vector<std::pair<Weight, long long>> ts(p.terms.begin(), p.terms.end());
    std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
        if (x.first.sum() != y.first.sum()) return x.first.sum() > y.first.sum();
        return x.first > y.first;
    });
    return ts;
}

std::string mono_string(const Weight& e)
{
    FundPolynomial p(e.size());
    p.add(e, 1);
    return e.is_zero() ? std::string() : p.render();
}

std::string join_factors(const std::vector<std::string>& fs)
{
    std::string s;
    for (const auto& f : fs) {
        if (f.empty()) continue;
        if (!s.empty()) s += "*";
        s += f;
    }
    return s.empty() ? "1" : s;
}

}  // namespace

std::string mod2_poly_string(const FundPolynomial& p0)
{
    FundPolynomial p = p0.mod2();
    auto ts = sorted_terms(p);
    if (ts.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : ts) {
        if (e.is_zero()) {
            s += ts.size() > 1 ? "-1" : "1";
            continue;
        }
        if (!s.empty()) s += "+";
        s += mono_string(e);
    }
    return s;
}

std::vector<SignedTerm> scaled_terms(const std::vector<std::string>& prefix, const FundPolynomial& p0,
                                     const std::vector<std::string>& suffix, bool mod2, bool expand)
{
    std::vector<SignedTerm> out;
    FundPolynomial p = mod2 ? p0.mod2() : p0;
    if (p.is_zero()) return out;
    auto ts = sorted_terms(p);
    if (ts.size() > 1 && (mod2 || !expand)) {
        bool neg = false;
        std::string inner;
        if (mod2) {
            inner = mod2_poly_string(p);
        } else {
            if (ts.front().second < 0) {
                neg = true;
                p = -p;
            }
            inner = p.render();
        }
        std::vector<std::string> fs = prefix;
        fs.push_back("(" + inner + ")");
        fs.insert(fs.end(), suffix.begin(), suffix.end());
        out.push_back({neg, join_factors(fs)});
        return out;
    }
    for (const auto& [e, c] : ts) {
        long long a = c < 0 ? -c : c;
        std::vector<std::string> fs;
        if (a != 1) fs.push_back(std::to_string(a));
        fs.insert(fs.end(), prefix.begin(), prefix.end());
        fs.push_back(mono_string(e));
        fs.insert(fs.end(), suffix.begin(), suffix.end());
        out.push_back({c < 0, join_factors(fs)});
    }
    return out;
}

std::string beta_string(int j)
{
    j = beta_mod(j);
    if (j == 0) return "";
    if (j == 1) return "beta";
    return "beta^" + std::to_string(j);
}

namespace {

std::vector<SignedTerm> r_terms(const FundPolynomial& p0, const std::string& tail,
                                const std::vector<std::string>& outer_suffix)
{
    std::vector<SignedTerm> out;
    FundPolynomial p = p0;
    if (p.is_zero()) return out;
    auto ts = sorted_terms(p);
    bool neg = false;
    std::string arg;
    if (ts.size() == 1) {
        long long c = ts[0].second;
        neg = c < 0;
        long long a = neg ? -c : c;
        std::vector<std::string> fs{mono_string(ts[0].first), tail};
        std::string inner = join_factors(fs);
        std::vector<std::string> outer;
        if (a != 1) outer.push_back(std::to_string(a));
        outer.push_back("r(" + inner + ")");
        outer.insert(outer.end(), outer_suffix.begin(), outer_suffix.end());
        out.push_back({neg, join_factors(outer)});
        return out;
    }
    if (ts.front().second < 0) {
        neg = true;
        p = -p;
    }
    std::string inner = tail.empty() ? p.render() : "(" + p.render() + ")*" + tail;
    std::vector<std::string> outer{"r(" + inner + ")"};
    outer.insert(outer.end(), outer_suffix.begin(), outer_suffix.end());
    out.push_back({neg, join_factors(outer)});
    return out;
}

}  // namespace

std::vector<SignedTerm> coeff_terms(const CoeffElement& a, const std::vector<std::string>& suffix)
{
    std::vector<SignedTerm> out;
    if (!a.ring() || a.is_zero()) return out;
    const RepRing& ring = *a.ring();
    int l = ring.num_fundamentals();
    for (int b = 0; b < 4; ++b) {
        FundPolynomial p(l);
        for (const auto& [k, c] : a.free())
            if (k.first == b) p += c * ring.poly(k.second);
        std::vector<std::string> prefix;
        if (b != kOne) prefix.push_back(kr_name(b));
        auto ts = scaled_terms(prefix, p, suffix, b == kEta || b == kEta2, b == kOne);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    for (int j = 0; j < 4; ++j) {
        FundPolynomial p(l);
        for (const auto& [k, c] : a.rpart())
            if (k.second == j) p += c * ring.poly(k.first);
        auto ts = r_terms(p, beta_string(j), suffix);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return out;
}

std::string render(const CoeffElement& a) { return join_terms(coeff_terms(a, {})); }

std::string render(const RepRing& ring, const ComplexCoeff& a)
{
    int l = ring.num_fundamentals();
    std::vector<SignedTerm> out;
    for (int j = 0; j < 4; ++j) {
        FundPolynomial p(l);
        for (const auto& [k, c] : a.terms)
            if (k.first == j) p += c * ring.poly(k.second);
        std::vector<std::string> suffix;
        if (j) suffix.push_back(beta_string(j));
        auto ts = scaled_terms({}, p, suffix, false, false);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return join_terms(out);
}

}  // namespace krg
