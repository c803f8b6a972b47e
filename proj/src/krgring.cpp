#include "krg/krgring.hpp"

#include <algorithm>
#include <bit>

#include "krg/error.hpp"

namespace krg {

namespace {

constexpr int kMaxSymbols = 24;

FormMask bit(int i) { return FormMask(1) << i; }

int inversions(const std::vector<int>& seq)
{
    int inv = 0;
    for (size_t a = 0; a < seq.size(); ++a)
        for (size_t b = a + 1; b < seq.size(); ++b) inv += seq[a] > seq[b];
    return inv;
}

std::vector<int> bits_of(std::uint32_t m)
{
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

}  // namespace

// ---------------------------------------------------------------- generators and forms

int Generator::degree() const
{
    switch (kind) {
    case GenKind::dR: return -1;
    case GenKind::dH: return -5;
    case GenKind::lam: return 0;
    }
    return 0;
}

std::string Generator::name() const
{
    switch (kind) {
    case GenKind::dR: return "dR(" + std::to_string(label) + ")";
    case GenKind::dH: return "dH(" + std::to_string(label) + ")";
    case GenKind::lam: return "lam" + std::to_string(label);
    }
    return "";
}

void ComplexForm::add(int j, FormMask m, const FundPolynomial& p)
{
    if (p.is_zero()) return;
    auto key = std::make_pair(((j % 4) + 4) % 4, m);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) terms.erase(it);
}

void ComplexForm::add(const ComplexForm& o, long long k)
{
    for (const auto& [key, p] : o.terms) add(key.first, key.second, k * p);
}

// ---------------------------------------------------------------- elements

void KRGElement::add_free(GenMask d, const CoeffElement& c, long long k)
{
    if (c.is_zero() || k == 0) return;
    auto it = free_.find(d);
    if (it == free_.end()) {
        CoeffElement e(c.ring());
        e.add(c, k);
        if (!e.is_zero()) free_.emplace(d, std::move(e));
        return;
    }
    it->second.add(c, k);
    if (it->second.is_zero()) free_.erase(it);
}

void KRGElement::add_rterm(const RTermKey& key, long long c)
{
    if (c == 0) return;
    auto it = r_.find(key);
    if (it == r_.end()) r_.emplace(key, c);
    else if ((it->second += c) == 0) r_.erase(it);
}

void KRGElement::add(const KRGElement& o, long long k)
{
    if (!alg_) alg_ = o.alg_;
    else if (o.alg_ && o.alg_ != alg_) throw Error(ErrorCode::MixedGroup, "elements of different rings");
    for (const auto& [d, c] : o.free_) add_free(d, c, k);
    for (const auto& [key, c] : o.r_) add_rterm(key, k * c);
}

KRGElement KRGElement::operator-() const
{
    KRGElement r(alg_);
    r.add(*this, -1);
    return r;
}

KRGElement operator+(const KRGElement& a, const KRGElement& b)
{
    KRGElement r = a;
    r.add(b);
    return r;
}

KRGElement operator-(const KRGElement& a, const KRGElement& b)
{
    KRGElement r = a;
    r.add(b, -1);
    return r;
}

namespace {

int monomial_degree(const KRAlgebra& alg, GenMask d)
{
    int s = 0;
    for (int g : bits_of(d)) s += alg.generators()[g].degree();
    return s;
}

}  // namespace

std::map<int, KRGElement> KRGElement::by_degree() const
{
    std::map<int, KRGElement> out;
    if (!alg_) return out;
    const RepRing& ring = *alg_->coeff_ring();
    auto slot = [&](int d) -> KRGElement& { return out.try_emplace(d, alg_).first->second; };
    for (const auto& [d, c] : free_) {
        int gd = monomial_degree(*alg_, d);
        for (const auto& [k, v] : c.free()) {
            CoeffElement e(c.ring());
            e.add_free(k.first, k.second, v);
            slot(normalize_degree(free_degree(ring, k.first, k.second) + gd)).add_free(d, e);
        }
        for (const auto& [k, v] : c.rpart()) {
            CoeffElement e(c.ring());
            e.add_realified(k.first, k.second, v);
            slot(normalize_degree(r_degree(k.second) + gd)).add_free(d, e);
        }
    }
    for (const auto& [key, c] : r_) {
        int deg = normalize_degree(-2 * key.j - popcount(key.m) + monomial_degree(*alg_, key.d));
        slot(deg).add_rterm(key, c);
    }
    return out;
}

std::vector<int> KRGElement::degrees() const
{
    std::vector<int> ds;
    for (const auto& [d, e] : by_degree()) ds.push_back(d);
    std::sort(ds.rbegin(), ds.rend());
    return ds;
}

// ---------------------------------------------------------------- algebra context

KRAlgebra::KRAlgebra(Kind kind, const GroupSpec& spec) : kind_(kind), spec_(spec)
{
    if (!spec_.is_lie()) throw Error(ErrorCode::UnsupportedGroup, "finite groups have no ring presentation");
    if (kind_ == Kind::Torus) {
        if (spec_.family != Family::Torus || spec_.involution != Involution::ComplexConjugation)
            throw Error(ErrorCode::WrongSpec, "torus ring needs a torus with complex conjugation");
    } else if (spec_.family == Family::Torus) {
        throw Error(ErrorCode::UnsupportedGroup, "tori are handled by the torus ring");
    }
    gring_ = RepRing::make(spec_);
    cring_ = kind_ == Kind::Nonequivariant ? std::shared_ptr<const RepRing>(RepRing::point()) : gring_;
    int l = gring_->num_fundamentals();
    if (l > kMaxSymbols) throw Error(ErrorCode::UnsupportedGroup, "rank too large");
    sym_perm_ = gring_->fund_perm();
    for (int p : sym_perm_)
        if (p < 0) throw Error(ErrorCode::UnsupportedGroup, spec_.key() + ": conjugation does not permute the fundamentals");
    coeff_perm_ = cring_->fund_perm();
    for (int i = 0; i < l; ++i) sym_type_.push_back(gring_->type(gring_->fundamental(i)));
    dims_ = gring_->fundamental_dims();

    int pairs = 0;
    for (int i = 0; i < l; ++i) {
        switch (sym_type_[i]) {
        case TypeTag::R: gens_.push_back({GenKind::dR, i, -1, i + 1}); break;
        case TypeTag::H: gens_.push_back({GenKind::dH, i, -1, i + 1}); break;
        case TypeTag::C:
            if (i < sym_perm_[i]) gens_.push_back({GenKind::lam, i, sym_perm_[i], ++pairs});
            break;
        }
    }
    std::stable_sort(gens_.begin(), gens_.end(), [](const Generator& a, const Generator& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.symbol < b.symbol;
    });
    sym_gen_.assign(l, -1);
    for (int g = 0; g < static_cast<int>(gens_.size()); ++g) {
        sym_gen_[gens_[g].symbol] = g;
        if (gens_[g].partner >= 0) sym_gen_[gens_[g].partner] = g;
    }
    squares_.resize(gens_.size());
}

std::shared_ptr<const KRAlgebra> KRAlgebra::equivariant(const GroupSpec& spec)
{
    return std::make_shared<KRAlgebra>(Kind::Equivariant, spec);
}

std::shared_ptr<const KRAlgebra> KRAlgebra::nonequivariant(const GroupSpec& spec)
{
    return std::make_shared<KRAlgebra>(Kind::Nonequivariant, spec);
}

std::shared_ptr<const KRAlgebra> KRAlgebra::torus(int n)
{
    return std::make_shared<KRAlgebra>(Kind::Torus, build_group(Family::Torus, n, Involution::ComplexConjugation));
}

int KRAlgebra::find_generator(GenKind kind, int label) const
{
    for (int g = 0; g < static_cast<int>(gens_.size()); ++g)
        if (gens_[g].kind == kind && gens_[g].label == label) return g;
    return -1;
}

std::string KRAlgebra::monomial_name(GenMask d) const
{
    std::string s;
    for (int g : bits_of(d)) s += (s.empty() ? "" : "*") + gens_[g].name();
    return s;
}

KRGElement KRAlgebra::zero() const { return KRGElement(shared_from_this()); }

KRGElement KRAlgebra::scalar(const CoeffElement& c) const
{
    KRGElement e = zero();
    e.add_free(0, c);
    return e;
}

KRGElement KRAlgebra::integer(long long k) const { return scalar(CoeffElement::integer(cring_, k)); }

KRGElement KRAlgebra::basis(int b) const { return scalar(CoeffElement::basis(cring_, b)); }

KRGElement KRAlgebra::monomial(GenMask d) const
{
    KRGElement e = zero();
    e.add_free(d, CoeffElement::integer(cring_, 1));
    return e;
}

KRGElement KRAlgebra::generator(int g) const { return monomial(GenMask(1) << g); }

FundPolynomial KRAlgebra::coeff_poly(const FundPolynomial& p) const
{
    if (kind_ != Kind::Nonequivariant) return p;
    return FundPolynomial::constant(0, p.evaluate(dims_));
}

CoeffElement KRAlgebra::coefficient_class(const FundPolynomial& p, bool quaternionic) const
{
    if (kind_ == Kind::Nonequivariant) {
        RepClass r;
        r.add(cring_->trivial(), p.evaluate(dims_));
        return from_rep_fixed(cring_, r, quaternionic);
    }
    return from_rep_fixed(cring_, cring_->decompose_poly(p), quaternionic);
}

// ---------------------------------------------------------------- complex forms

ComplexForm KRAlgebra::empty_form() const { return ComplexForm(cring_->num_fundamentals(), num_symbols()); }

ComplexForm KRAlgebra::generator_form(int g) const
{
    ComplexForm z = empty_form();
    const Generator& gen = gens_[g];
    FundPolynomial one = FundPolynomial::constant(z.ncoef, 1);
    switch (gen.kind) {
    case GenKind::dR: z.add(0, bit(gen.symbol), one); break;
    case GenKind::dH: z.add(2, bit(gen.symbol), one); break;
    case GenKind::lam: z.add(3, bit(gen.symbol) | bit(gen.partner), one); break;
    }
    return z;
}

ComplexForm KRAlgebra::monomial_form(GenMask d) const
{
    ComplexForm z = empty_form();
    z.add(0, 0, FundPolynomial::constant(z.ncoef, 1));
    for (int g : bits_of(d)) z = form_mul(z, generator_form(g));
    return z;
}

ComplexForm KRAlgebra::form_mul(const ComplexForm& a, const ComplexForm& b) const
{
    ComplexForm r = empty_form();
    for (const auto& [ka, pa] : a.terms)
        for (const auto& [kb, pb] : b.terms) {
            int s = merge_sign(ka.second, kb.second);
            if (s) r.add(ka.first + kb.first, ka.second | kb.second, s * (pa * pb));
        }
    return r;
}

ComplexForm KRAlgebra::conj(const ComplexForm& a) const
{
    ComplexForm r = empty_form();
    for (const auto& [k, p] : a.terms) {
        int s = 1;
        FormMask m = permute_mask(k.second, sym_perm_, &s);
        if (k.first % 2) s = -s;
        r.add(k.first, m, s * p.permuted(coeff_perm_));
    }
    return r;
}

ComplexForm KRAlgebra::complexify(const CoeffElement& c) const
{
    ComplexForm z = empty_form();
    for (const auto& [k, v] : krg::complexify(c).terms) z.add(k.first, 0, v * cring_->poly(k.second));
    return z;
}

ComplexForm KRAlgebra::rterm_form(const RTermKey& key, long long c) const
{
    ComplexForm y = empty_form();
    y.add(key.j, key.m, c * cring_->poly(key.x));
    if (!key.d) return y;
    return form_mul(monomial_form(key.d), y);
}

ComplexForm KRAlgebra::complexify(const KRGElement& a) const
{
    ComplexForm z = empty_form();
    for (const auto& [d, c] : a.free()) {
        ComplexForm cc = complexify(c);
        if (!cc.is_zero()) z.add(d ? form_mul(cc, monomial_form(d)) : cc);
    }
    ComplexForm y = empty_form();
    for (const auto& [key, c] : a.rterms()) y.add(rterm_form(key, c));
    z.add(y);
    z.add(conj(y));
    return z;
}

void KRAlgebra::add_realified_term(KRGElement& out, int j, FormMask m, const Weight& x, long long c) const
{
    if (c == 0) return;
    std::vector<int> seq;
    GenMask d = 0;
    int shift = 0;
    FormMask used = 0;
    for (int i : bits_of(m))
        if (sym_type_[i] == TypeTag::R) {
            seq.push_back(i);
            d |= GenMask(1) << sym_gen_[i];
            used |= bit(i);
        }
    for (int i : bits_of(m))
        if (sym_type_[i] == TypeTag::H) {
            seq.push_back(i);
            d |= GenMask(1) << sym_gen_[i];
            used |= bit(i);
            shift -= 2;
        }
    for (int i : bits_of(m))
        if (sym_type_[i] == TypeTag::C && i < sym_perm_[i] && (m & bit(sym_perm_[i]))) {
            seq.push_back(i);
            seq.push_back(sym_perm_[i]);
            d |= GenMask(1) << sym_gen_[i];
            used |= bit(i) | bit(sym_perm_[i]);
            shift -= 3;
        }
    FormMask rem = m & ~used;
    for (int i : bits_of(rem)) seq.push_back(i);
    long long coef = inversions(seq) % 2 ? -c : c;
    int jj = (((j + shift) % 4) + 4) % 4;

    if (!rem) {
        CoeffElement e(cring_);
        e.add_realified(x, jj, coef);
        out.add_free(d, e);
        return;
    }
    // the lowest pair touched must contribute its first member
    int lowest = -1, lowest_pair = 1 << 30;
    for (int i : bits_of(rem)) {
        int p = std::min(i, sym_perm_[i]);
        if (p < lowest_pair) {
            lowest_pair = p;
            lowest = i;
        }
    }
    Weight xx = x;
    if (lowest != lowest_pair) {
        int s = 1;
        rem = permute_mask(rem, sym_perm_, &s);
        xx = cring_->conj(x);
        coef *= s;
        if (jj % 2) coef = -coef;
    }
    out.add_rterm({d, xx, jj, rem}, coef);
}

KRGElement KRAlgebra::realify(const ComplexForm& z) const
{
    KRGElement out = zero();
    for (const auto& [k, p] : z.terms) {
        if (kind_ == Kind::Nonequivariant) {
            add_realified_term(out, k.first, k.second, cring_->trivial(), p.constant_term());
            continue;
        }
        for (const auto& [x, n] : cring_->decompose_poly(p).terms) add_realified_term(out, k.first, k.second, x, n);
    }
    return out;
}

KRGElement KRAlgebra::normalize(const KRGElement& a) const
{
    KRGElement out = zero();
    for (const auto& [d, c] : a.free()) {
        CoeffElement e(cring_);
        for (const auto& [k, v] : c.free()) e.add_free(k.first, k.second, v);
        for (const auto& [k, v] : c.rpart()) e.add_realified(k.first, k.second, v);
        out.add_free(d, e);
    }
    for (const auto& [key, c] : a.rterms()) {
        ComplexForm y = empty_form();
        y.add(key.j, key.m, c * cring_->poly(key.x));
        KRGElement r = realify(y);
        out.add(key.d ? mul(monomial(key.d), r) : r);
    }
    return out;
}

// ---------------------------------------------------------------- multiplication

KRGElement KRAlgebra::mul(const KRGElement& a, const KRGElement& b) const
{
    if ((a.algebra() && a.algebra().get() != this) || (b.algebra() && b.algebra().get() != this))
        throw Error(ErrorCode::MixedGroup, "elements of different rings");
    KRGElement res = zero();
    for (const auto& [da, ca] : a.free())
        for (const auto& [db, cb] : b.free()) {
            CoeffElement c = coeff_mul(ca, cb);
            if (c.is_zero()) continue;
            KRGElement m = mono_mul(da, db);
            for (const auto& [d, cm] : m.free()) res.add_free(d, coeff_mul(c, cm));
            if (!m.rterms().empty()) {
                ComplexForm cc = complexify(c), y = empty_form();
                for (const auto& [key, v] : m.rterms()) y.add(rterm_form(key, v));
                if (!cc.is_zero()) res.add(realify(form_mul(cc, y)));
            }
        }
    if (a.rterms().empty() && b.rterms().empty()) return res;

    auto free_form = [&](const KRGElement& e) {
        ComplexForm z = empty_form();
        for (const auto& [d, c] : e.free()) {
            ComplexForm cc = complexify(c);
            if (!cc.is_zero()) z.add(d ? form_mul(cc, monomial_form(d)) : cc);
        }
        return z;
    };
    auto r_form = [&](const KRGElement& e) {
        ComplexForm y = empty_form();
        for (const auto& [key, v] : e.rterms()) y.add(rterm_form(key, v));
        return y;
    };
    ComplexForm ya = r_form(a), yb = r_form(b);
    ComplexForm z = empty_form();
    if (!yb.is_zero()) z.add(form_mul(free_form(a), yb));
    if (!ya.is_zero()) z.add(form_mul(ya, free_form(b)));
    if (!ya.is_zero() && !yb.is_zero()) {
        ComplexForm s = yb;
        s.add(conj(yb));
        z.add(form_mul(ya, s));
    }
    res.add(realify(z));
    return res;
}

KRGElement KRAlgebra::mono_mul(GenMask a, GenMask b) const
{
    if (!b) return monomial(a);
    if (!a) return monomial(b);
    std::lock_guard<std::recursive_mutex> lk(mu_);
    auto it = mono_cache_.find({a, b});
    if (it != mono_cache_.end()) return it->second;
    KRGElement e = monomial(a);
    for (int g : bits_of(b)) e = right_generator(e, g);
    mono_cache_.emplace(std::make_pair(a, b), e);
    return e;
}

KRGElement KRAlgebra::right_generator(const KRGElement& e, int g) const
{
    KRGElement out = zero();
    GenMask gb = GenMask(1) << g;
    GenMask above = ~((gb << 1) - 1);
    GenMask odd_mask = 0;
    for (int i = 0; i < static_cast<int>(gens_.size()); ++i)
        if (gens_[i].odd()) odd_mask |= GenMask(1) << i;
    bool godd = gens_[g].odd();
    for (const auto& [d, c] : e.free()) {
        int s = (godd && std::popcount(d & above & odd_mask) % 2) ? -1 : 1;
        if (!(d & gb)) {
            out.add_free(d | gb, c, s);
            continue;
        }
        GenMask lo = d & (gb - 1), hi = d & above;
        KRGElement piece = mul(mul(monomial(lo), square(g)), monomial(hi));
        out.add(mul(scalar(c), piece), s);
    }
    if (!e.rterms().empty()) {
        ComplexForm y = empty_form();
        for (const auto& [key, v] : e.rterms()) y.add(rterm_form(key, v));
        out.add(realify(form_mul(y, generator_form(g))));
    }
    return out;
}

const KRGElement& KRAlgebra::square(int g) const
{
    std::lock_guard<std::recursive_mutex> lk(mu_);
    if (!squares_[g]) squares_[g] = compute_square(g);
    return *squares_[g];
}

KRGElement KRAlgebra::compute_square(int g) const
{
    const Generator& gen = gens_[g];
    if (gen.kind == GenKind::lam) return zero();
    CoeffElement lead(cring_);
    const Weight& f = gring_->fundamental(gen.symbol);
    switch (kind_) {
    case Kind::Torus: lead.add_free(kEta, cring_->trivial(), 1); break;
    case Kind::Nonequivariant: lead.add_free(kEta, cring_->trivial(), dims_[gen.symbol]); break;
    case Kind::Equivariant: lead.add_free(kEta, f, 1); break;
    }
    KRGElement sq = zero();
    sq.add_free(GenMask(1) << g, lead);
    if (kind_ == Kind::Torus) return sq;
    Character alt = exterior_power(spec_, 2, gring_->character(f));
    FundPolynomial p = gring_->poly(decompose(spec_, alt));
    // 2 eta = 0 makes the sign of the second term irrelevant
    sq.add(mul(basis(kEta), lift(p, false)));
    return sq;
}

KRGElement KRAlgebra::lift(const FundPolynomial& p, bool quaternionic) const
{
    KRGElement res = zero();
    ComplexForm y = empty_form();
    for (int k = 0; k < num_symbols(); ++k) {
        FundPolynomial dp = p.derivative(k);
        if (dp.is_zero()) continue;
        switch (sym_type_[k]) {
        case TypeTag::R:
            res.add_free(GenMask(1) << sym_gen_[k], coefficient_class(dp, quaternionic));
            break;
        case TypeTag::H:
            res.add_free(GenMask(1) << sym_gen_[k], coefficient_class(dp, !quaternionic));
            break;
        case TypeTag::C:
            if (k < sym_perm_[k]) y.add(quaternionic ? 2 : 0, bit(k), coeff_poly(dp));
            break;
        }
    }
    res.add(realify(y));
    return res;
}

// ---------------------------------------------------------------- rendering

namespace {

std::string join_factors(const std::vector<std::string>& fs)
{
    std::string s;
    for (const auto& f : fs) {
        if (f.empty()) continue;
        s += (s.empty() ? "" : "*") + f;
    }
    return s.empty() ? "1" : s;
}

std::vector<std::string> symbol_names(FormMask m)
{
    std::vector<std::string> out;
    for (int i : bits_of(m)) out.push_back("dG(" + std::to_string(i + 1) + ")");
    return out;
}

bool mono_less(GenMask a, GenMask b)
{
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    auto x = bits_of(a), y = bits_of(b);
    return x < y;
}

}  // namespace

std::string KRAlgebra::render(const KRGElement& a) const
{
    std::vector<GenMask> ds;
    for (const auto& [d, c] : a.free()) ds.push_back(d);
    std::sort(ds.begin(), ds.end(), mono_less);
    std::vector<SignedTerm> out;
    for (GenMask d : ds) {
        std::vector<std::string> suffix;
        for (int g : bits_of(d)) suffix.push_back(gens_[g].name());
        auto ts = coeff_terms(a.free().at(d), suffix);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    // r-terms grouped by (monomial, beta power, form)
    std::map<std::tuple<GenMask, int, FormMask>, FundPolynomial> groups;
    for (const auto& [key, c] : a.rterms()) {
        auto k = std::make_tuple(key.d, key.j, key.m);
        auto it = groups.try_emplace(k, FundPolynomial(cring_->num_fundamentals())).first;
        it->second += c * cring_->poly(key.x);
    }
    std::vector<std::tuple<GenMask, int, FormMask>> keys;
    for (const auto& [k, p] : groups)
        if (!p.is_zero()) keys.push_back(k);
    std::stable_sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
        if (std::get<0>(x) != std::get<0>(y)) return mono_less(std::get<0>(x), std::get<0>(y));
        return std::make_pair(std::get<1>(x), std::get<2>(x)) < std::make_pair(std::get<1>(y), std::get<2>(y));
    });
    for (const auto& k : keys) {
        const FundPolynomial& p = groups.at(k);
        auto [d, j, m] = k;
        std::vector<std::string> tail{beta_string(j)};
        for (const auto& s : symbol_names(m)) tail.push_back(s);
        std::vector<std::string> outer;
        bool neg = false;
        if (p.terms.size() == 1) {
            auto [e, c] = *p.terms.begin();
            neg = c < 0;
            long long abs = neg ? -c : c;
            if (abs != 1) outer.push_back(std::to_string(abs));
            for (int g : bits_of(d)) outer.push_back(gens_[g].name());
            FundPolynomial mono(p.nvars);
            mono.add(e, 1);
            std::vector<std::string> inner{e.is_zero() ? "" : mono.render()};
            inner.insert(inner.end(), tail.begin(), tail.end());
            outer.push_back("r(" + join_factors(inner) + ")");
        } else {
            FundPolynomial q = p;
            std::vector<std::pair<Weight, long long>> ts(p.terms.begin(), p.terms.end());
            auto lead = std::max_element(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
                if (x.first.sum() != y.first.sum()) return x.first.sum() < y.first.sum();
                return x.first < y.first;
            });
            if (lead->second < 0) {
                neg = true;
                q = -p;
            }
            for (int g : bits_of(d)) outer.push_back(gens_[g].name());
            std::vector<std::string> inner{"(" + q.render() + ")"};
            inner.insert(inner.end(), tail.begin(), tail.end());
            outer.push_back("r(" + join_factors(inner) + ")");
        }
        out.push_back({neg, join_factors(outer)});
    }
    return join_terms(out);
}

std::string KRAlgebra::render(const ComplexForm& z) const
{
    std::vector<std::pair<int, FormMask>> keys;
    for (const auto& [k, p] : z.terms) keys.push_back(k);
    std::stable_sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
        if (x.second != y.second) return mono_less(x.second, y.second);
        return x.first < y.first;
    });
    std::vector<SignedTerm> out;
    for (const auto& k : keys) {
        std::vector<std::string> suffix;
        if (k.first) suffix.push_back(beta_string(k.first));
        for (const auto& s : symbol_names(k.second)) suffix.push_back(s);
        auto ts = scaled_terms({}, z.terms.at(k), suffix, false, false);
        out.insert(out.end(), ts.begin(), ts.end());
    }
    return join_terms(out);
}

// ---------------------------------------------------------------- maps between rings

KRGElement kr_mul(const KRGElement& a, const KRGElement& b)
{
    auto alg = a.algebra() ? a.algebra() : b.algebra();
    if (!alg) return KRGElement();
    return alg->mul(a, b);
}

ComplexForm complexify_krg(const KRGElement& a)
{
    if (!a.algebra()) return {};
    return a.algebra()->complexify(a);
}

KRGElement forget_to_kr(const KRGElement& a, const std::shared_ptr<const KRAlgebra>& ne)
{
    const KRAlgebra& alg = *a.algebra();
    if (ne->kind() != KRAlgebra::Kind::Nonequivariant || !(ne->spec() == alg.spec()))
        throw Error(ErrorCode::WrongSpec, "forgetful map needs the nonequivariant ring of the same group");
    const RepRing& ring = *alg.coeff_ring();
    const auto& pt = ne->coeff_ring();
    KRGElement out = ne->zero();
    for (const auto& [d, c] : a.free()) {
        CoeffElement e(pt);
        for (const auto& [k, v] : c.free()) {
            long long dim = ring.dim(k.second);
            if (ring.type(k.second) == TypeTag::H) {
                auto [b2, f] = kr_basis_mul(k.first, kMu);
                e.add_free(b2, pt->trivial(), v * f * (dim / 2));
            } else {
                e.add_free(k.first, pt->trivial(), v * dim);
            }
        }
        for (const auto& [k, v] : c.rpart()) e.add_realified(pt->trivial(), k.second, v * ring.dim(k.first));
        out.add_free(d, e);
    }
    for (const auto& [key, c] : a.rterms())
        out.add_rterm({key.d, pt->trivial(), key.j, key.m}, c * ring.dim(key.x));
    return out;
}

namespace {

void require_unitary_conj(const KRAlgebra& g, const KRAlgebra& t)
{
    const GroupSpec& s = g.spec();
    if (g.kind() != KRAlgebra::Kind::Equivariant || s.family != Family::UnitaryU ||
        s.involution != Involution::ComplexConjugation)
        throw Error(ErrorCode::WrongSpec, "torus restriction needs U(n) with complex conjugation");
    if (t.kind() != KRAlgebra::Kind::Torus || t.num_symbols() != s.rank)
        throw Error(ErrorCode::WrongSpec, "torus ring of the wrong rank");
}

CoeffElement restrict_coefficient(const CoeffElement& c, const RepRing& from, const std::shared_ptr<const RepRing>& to)
{
    CoeffElement e(to);
    for (const auto& [k, v] : c.free())
        for (const auto& [w, m] : from.character(k.second)) e.add_free(k.first, w, v * m);
    if (!c.rpart().empty()) throw Error(ErrorCode::WrongSpec, "complex-type coefficients do not occur for U(n)");
    return e;
}

}  // namespace

KRGElement restrict_generator_to_torus(const KRAlgebra& g, int gen, const std::shared_ptr<const KRAlgebra>& t)
{
    require_unitary_conj(g, *t);
    KRGElement out = t->zero();
    const Weight& f = g.group_ring()->fundamental(g.generators()[gen].symbol);
    for (const auto& [tau, mult] : g.group_ring()->character(f))
        for (int i = 0; i < tau.size(); ++i) {
            if (tau[i] == 0) continue;
            CoeffElement e(t->coeff_ring());
            e.add_free(kOne, tau, mult * tau[i]);
            out.add_free(GenMask(1) << t->generator_of_symbol(i), e);
        }
    return out;
}

KRGElement restrict_to_torus(const KRGElement& a, const std::shared_ptr<const KRAlgebra>& t)
{
    const KRAlgebra& g = *a.algebra();
    require_unitary_conj(g, *t);
    if (!a.rterms().empty()) throw Error(ErrorCode::WrongSpec, "complex-type classes do not occur for U(n)");
    KRGElement out = t->zero();
    for (const auto& [d, c] : a.free()) {
        KRGElement term = t->scalar(restrict_coefficient(c, *g.coeff_ring(), t->coeff_ring()));
        for (int gen : bits_of(d)) term = t->mul(term, restrict_generator_to_torus(g, gen, t));
        out.add(term);
    }
    return out;
}

// ---------------------------------------------------------------- sampling

std::vector<Weight> small_irreducibles(const RepRing& ring, int bound)
{
    std::vector<Weight> out;
    if (ring.is_point()) return {ring.trivial()};
    const GroupSpec& spec = ring.spec();
    bool torus = spec.family == Family::Torus;
    int l = torus ? spec.rank : ring.num_fundamentals();
    int lo = torus ? -bound : 0, width = torus ? 2 * bound + 1 : bound + 1;
    Weight a(l);
    for (int code = 0;; ++code) {
        int c = code;
        for (int i = 0; i < l; ++i) {
            a[i] = lo + c % width;
            c /= width;
        }
        if (c) break;
        out.push_back(torus ? a : weight_from_fundamental_coords(spec, a));
    }
    return out;
}

CoeffElement random_coefficient(const std::shared_ptr<const RepRing>& ring, std::mt19937& rng, const SampleOptions& opt)
{
    auto irreps = small_irreducibles(*ring, opt.weight_bound);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(irreps.size()) - 1);
    std::uniform_int_distribution<int> coef(-opt.max_coeff, opt.max_coeff), basis(0, 3), beta(0, 3);
    CoeffElement e(ring);
    for (int t = 0; t < opt.terms; ++t) {
        const Weight& x = irreps[pick(rng)];
        if (ring->type(x) == TypeTag::C) e.add_realified(x, beta(rng), coef(rng));
        else e.add_free(basis(rng), x, coef(rng));
    }
    return e;
}

KRGElement random_element(const std::shared_ptr<const KRAlgebra>& alg, std::mt19937& rng, const SampleOptions& opt)
{
    int ng = static_cast<int>(alg->generators().size());
    auto random_mono = [&]() {
        GenMask d = 0;
        std::uniform_int_distribution<int> cnt(0, std::min(opt.max_generators, ng));
        std::uniform_int_distribution<int> pick(0, std::max(ng - 1, 0));
        int k = ng ? cnt(rng) : 0;
        for (int i = 0; i < k; ++i) d |= GenMask(1) << pick(rng);
        return d;
    };
    SampleOptions one = opt;
    one.terms = 1;
    KRGElement e = alg->zero();
    for (int t = 0; t < opt.terms; ++t) e.add_free(random_mono(), random_coefficient(alg->coeff_ring(), rng, one));

    std::vector<int> csyms;
    for (int i = 0; i < alg->num_symbols(); ++i)
        if (alg->symbol_type(i) == TypeTag::C) csyms.push_back(i);
    if (opt.rterms && !csyms.empty()) {
        auto irreps = small_irreducibles(*alg->coeff_ring(), opt.weight_bound);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(irreps.size()) - 1);
        std::uniform_int_distribution<int> coef(-opt.max_coeff, opt.max_coeff), beta(0, 3);
        std::uniform_int_distribution<int> sub(1, (1 << csyms.size()) - 1);
        for (int t = 0; t < std::max(1, opt.terms / 2); ++t) {
            FormMask m = 0;
            int s = sub(rng);
            for (size_t i = 0; i < csyms.size(); ++i)
                if (s >> i & 1) m |= bit(csyms[i]);
            ComplexForm y = alg->empty_form();
            y.add(beta(rng), m, coef(rng) * alg->coeff_ring()->poly(irreps[pick(rng)]));
            e.add(alg->mul(alg->monomial(random_mono()), alg->realify(y)));
        }
    }
    return e;
}

// ---------------------------------------------------------------- formulas

FundPolynomial unitary_wedge(const KRAlgebra& alg, int k)
{
    int n = alg.spec().rank;
    int l = alg.group_ring()->num_fundamentals();
    if (k == 0) return FundPolynomial::constant(l, 1);
    if (k < 0 || k > n) return FundPolynomial(l);
    return FundPolynomial::variable(l, k - 1);
}

namespace {

void require_unitary(const KRAlgebra& alg, Involution inv)
{
    if (alg.spec().family != Family::UnitaryU || alg.spec().involution != inv)
        throw Error(ErrorCode::WrongSpec, "formula applies to U(n) with a different involution");
}

// eta * coefficient * element, with coefficient a class of the given parity type
KRGElement eta_times(const KRAlgebra& alg, const FundPolynomial& coef, bool quaternionic, const KRGElement& x)
{
    if (coef.is_zero() || x.is_zero()) return alg.zero();
    CoeffElement c = coeff_mul(CoeffElement::basis(alg.coeff_ring(), kEta), alg.coefficient_class(coef, quaternionic));
    return alg.mul(alg.scalar(c), x);
}

}  // namespace

KRGElement unitary_real_square_formula(const KRAlgebra& alg, int k)
{
    require_unitary(alg, Involution::ComplexConjugation);
    KRGElement out = alg.zero();
    for (int i = 1; i <= 2 * k; ++i)
        out.add(eta_times(alg, unitary_wedge(alg, 2 * k - i), false, alg.lift(unitary_wedge(alg, i), false)));
    return out;
}

KRGElement unitary_quaternionic_square_formula(const KRAlgebra& alg, int p)
{
    require_unitary(alg, Involution::SymplecticType);
    KRGElement out = alg.zero();
    auto W = [&](int i) { return unitary_wedge(alg, i); };
    if (p % 2) {
        int k = (p + 1) / 2;
        for (int j = 1; j <= 2 * k - 1; ++j) {
            out.add(eta_times(alg, W(4 * k - 2 * j - 1), true, alg.lift(W(2 * j - 1), true)));
            out.add(eta_times(alg, W(4 * k - 2 * j - 2), false, alg.lift(W(2 * j), false)));
        }
    } else {
        int k = p / 2;
        for (int j = 1; j <= 2 * k; ++j) {
            out.add(eta_times(alg, W(4 * k - 2 * j + 1), true, alg.lift(W(2 * j - 1), true)));
            out.add(eta_times(alg, W(4 * k - 2 * j), false, alg.lift(W(2 * j), false)));
        }
    }
    return out;
}

FundPolynomial symplectic_sigma(const KRAlgebra& alg, int j)
{
    if (alg.spec().family != Family::Symplectic) throw Error(ErrorCode::WrongSpec, "symplectic formula on another group");
    const RepRing& ring = *alg.group_ring();
    int l = ring.num_fundamentals();
    const Character& std_char = ring.character(ring.fundamental(0));
    int dim = static_cast<int>(char_dim(std_char));
    auto wedge = [&](int k) -> FundPolynomial {
        if (k < 0 || k > dim) return FundPolynomial(l);
        if (k == 0) return FundPolynomial::constant(l, 1);
        return ring.poly(decompose(ring.spec(), exterior_power(ring.spec(), k, std_char)));
    };
    return wedge(j) - wedge(j - 2);
}

KRGElement symplectic_square_formula(const KRAlgebra& alg, int j)
{
    auto S = [&](int i) { return symplectic_sigma(alg, i); };
    KRGElement out = alg.zero();
    if (j % 2 == 0) {
        int k = j / 2;
        for (int i = 1; i <= 2 * k; ++i) {
            out.add(eta_times(alg, S(4 * k - 2 * i), false, alg.lift(S(2 * i), false)));
            out.add(eta_times(alg, S(4 * k - 2 * i + 1), true, alg.lift(S(2 * i - 1), true)));
        }
    } else {
        int k = (j + 1) / 2;
        for (int i = 1; i <= 2 * k - 1; ++i) {
            out.add(eta_times(alg, S(4 * k - 2 - 2 * i), false, alg.lift(S(2 * i), false)));
            out.add(eta_times(alg, S(4 * k - 1 - 2 * i), true, alg.lift(S(2 * i - 1), true)));
        }
    }
    return out;
}

}  // namespace krg
