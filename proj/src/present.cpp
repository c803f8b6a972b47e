#include <algorithm>
#include <bit>
#include <functional>
#include <random>

#include "krg/error.hpp"
#include "krg/krgring.hpp"

namespace krg {

namespace {

std::shared_ptr<const KRAlgebra> algebra_for(const GroupSpec& spec)
{
    if (spec.family == Family::Torus) return KRAlgebra::torus(spec.rank);
    return KRAlgebra::equivariant(spec);
}

std::string fund_name(int i) { return "[w" + std::to_string(i + 1) + "]"; }

ComplexForm unit_form(const KRAlgebra& a, int j, FormMask m, const FundPolynomial& p)
{
    ComplexForm y = a.empty_form();
    y.add(j, m, p);
    return y;
}

std::string r_class_name(int j, FormMask m)
{
    std::string s = "r(";
    bool first = true;
    if (j) {
        s += beta_string(j);
        first = false;
    }
    for (int i = 0; m >> i; ++i)
        if (m >> i & 1) {
            s += (first ? "" : "*") + std::string("dG(") + std::to_string(i + 1) + ")";
            first = false;
        }
    return s + ")";
}

}  // namespace

RingPresentation present_ring(const GroupSpec& spec)
{
    auto alg = algebra_for(spec);
    RingPresentation p;
    p.group = spec.token();
    p.involution = involution_name(spec.involution);
    for (int i = 0; i < alg->num_symbols(); ++i)
        p.fundamental_types.push_back(fund_name(i) + ": " + type_char(alg->symbol_type(i)));
    for (const auto& g : alg->generators()) {
        std::string src = g.kind == GenKind::lam
                              ? std::string("C ") + fund_name(g.symbol) + "," + fund_name(g.partner)
                              : std::string(1, type_char(alg->symbol_type(g.symbol))) + " " + fund_name(g.symbol);
        p.generators.push_back({g.name(), g.degree(), src});
    }
    for (int g = 0; g < static_cast<int>(alg->generators().size()); ++g)
        p.relations.push_back(alg->generators()[g].name() + "^2 = " + alg->render(alg->square(g)));
    p.relations.push_back("2*eta = 0");
    p.relations.push_back("eta^3 = 0");
    p.relations.push_back("eta*mu = 0");
    p.relations.push_back("mu^2 = 4");

    std::vector<int> csyms;
    for (int i = 0; i < alg->num_symbols(); ++i)
        if (alg->symbol_type(i) == TypeTag::C && i < alg->symbol_conj(i)) csyms.push_back(i);
    if (!csyms.empty()) {
        p.has_rclasses = true;
        p.relations.push_back("eta*r(x) = 0");
        p.relations.push_back("mu*r(x*beta^i) = 2*r(x*beta^(i+2))");
        p.relations.push_back("r(x)*r(y) = r(x*(y + conj(y)))");
        FundPolynomial one = FundPolynomial::constant(alg->coeff_ring()->num_fundamentals(), 1);
        for (int k : csyms)
            for (int j = 0; j < 4; ++j) {
                auto r = alg->realify(unit_form(*alg, j, FormMask(1) << k, one));
                p.relations.push_back(r_class_name(j, FormMask(1) << k) + "^2 = " + alg->render(alg->mul(r, r)));
            }
    }
    for (int q = 0; q < 8; ++q) p.coefficient_degrees.push_back(degree_rank(spec, q));
    return p;
}

// ---------------------------------------------------------------- verification

namespace {

struct Suite {
    std::vector<CheckResult> out;

    void equal(const std::string& name, const KRAlgebra& a, const KRGElement& lhs, const KRGElement& rhs)
    {
        bool ok = lhs == rhs;
        out.push_back({name, ok, ok ? "" : a.render(lhs) + " vs " + a.render(rhs)});
    }
    void equal(const std::string& name, const KRAlgebra& a, const ComplexForm& lhs, const ComplexForm& rhs)
    {
        bool ok = lhs == rhs;
        out.push_back({name, ok, ok ? "" : a.render(lhs) + " vs " + a.render(rhs)});
    }
    void text(const std::string& name, const std::string& lhs, const std::string& rhs)
    {
        bool ok = lhs == rhs;
        out.push_back({name, ok, ok ? "" : lhs + " vs " + rhs});
    }
    void count(const std::string& name, int failures, int total, const std::string& first)
    {
        out.push_back({name + " (" + std::to_string(total) + " samples)", failures == 0,
                       failures ? std::to_string(failures) + " failures; first: " + first : ""});
    }
};

CoeffElement eta_class(const KRAlgebra& a, const FundPolynomial& p, bool quaternionic)
{
    return coeff_mul(CoeffElement::basis(a.coeff_ring(), kEta), a.coefficient_class(p, quaternionic));
}

// eta (phi d(phi) - lift(wedge^2 phi)) assembled from characters
KRGElement general_square_rhs(const KRAlgebra& a, int g)
{
    const Generator& gen = a.generators()[g];
    const RepRing& ring = *a.group_ring();
    const Weight& f = ring.fundamental(gen.symbol);
    bool h = gen.kind == GenKind::dH;
    FundPolynomial phi = ring.poly(f);
    FundPolynomial alt = ring.poly(decompose(a.spec(), exterior_power(a.spec(), 2, ring.character(f))));
    KRGElement lead = a.mul(a.scalar(eta_class(a, phi, h)), a.generator(g));
    return lead - a.mul(a.basis(kEta), a.lift(alt, false));
}

void generic_checks(Suite& s, const std::shared_ptr<const KRAlgebra>& a, const VerifyOptions& opt)
{
    for (int g = 0; g < static_cast<int>(a->generators().size()); ++g) {
        const Generator& gen = a->generators()[g];
        auto x = a->generator(g);
        auto sq = a->mul(x, x);
        if (gen.kind == GenKind::lam) {
            s.equal(gen.name() + "^2 = 0", *a, sq, a->zero());
            continue;
        }
        if (a->kind() == KRAlgebra::Kind::Equivariant)
            s.equal(gen.name() + "^2 matches the general square formula", *a, sq, general_square_rhs(*a, g));
        s.equal("c(" + gen.name() + "^2) = 0", *a, a->complexify(sq), a->empty_form());
    }
    if (a->kind() != KRAlgebra::Kind::Equivariant) return;

    auto ne = KRAlgebra::nonequivariant(a->spec());
    std::mt19937 rng(opt.seed);
    int fc = 0, ff = 0, fa = 0, fg = 0, fn = 0;
    std::string c1, c2, c3, c4, c5;
    for (int i = 0; i < opt.samples; ++i) {
        auto x = random_element(a, rng), y = random_element(a, rng), z = random_element(a, rng);
        auto xy = a->mul(x, y);
        if (!(a->complexify(xy) == a->form_mul(a->complexify(x), a->complexify(y))) && !fc++) c1 = a->render(x) + " ; " + a->render(y);
        if (!(forget_to_kr(xy, ne) == ne->mul(forget_to_kr(x, ne), forget_to_kr(y, ne))) && !ff++) c2 = a->render(x) + " ; " + a->render(y);
        if (!(a->mul(xy, z) == a->mul(x, a->mul(y, z))) && !fa++) c3 = a->render(x) + " ; " + a->render(y) + " ; " + a->render(z);
        if (!(a->normalize(xy) == xy) && !fn++) c5 = a->render(xy);
        for (const auto& [p, xp] : x.by_degree())
            for (const auto& [q, yq] : y.by_degree()) {
                auto l = a->mul(xp, yq), r = a->mul(yq, xp);
                bool odd = (p % 2) && (q % 2);
                if (!(l == (odd ? -r : r)) && !fg++) c4 = a->render(xp) + " ; " + a->render(yq);
            }
    }
    s.count("complexification is multiplicative", fc, opt.samples, c1);
    s.count("forgetful map is multiplicative", ff, opt.samples, c2);
    s.count("associativity", fa, opt.samples, c3);
    s.count("graded commutativity", fg, opt.samples, c4);
    s.count("normal form idempotence", fn, opt.samples, c5);

    // forgotten squares against the nonequivariant ring
    for (int g = 0; g < static_cast<int>(a->generators().size()); ++g) {
        auto x = a->generator(g);
        auto fx = forget_to_kr(x, ne);
        s.equal("forget(" + a->generators()[g].name() + "^2) = forget(" + a->generators()[g].name() + ")^2", *ne,
                forget_to_kr(a->mul(x, x), ne), ne->mul(fx, fx));
    }
}

void unitary_conj_checks(Suite& s, const std::shared_ptr<const KRAlgebra>& a)
{
    int n = a->spec().rank;
    auto t = KRAlgebra::torus(n);
    const RepRing& ring = *a->group_ring();
    Character std_char = ring.character(ring.fundamental(0));
    for (int k = 1; k <= n; ++k) {
        FundPolynomial direct = ring.poly(decompose(a->spec(), exterior_power(a->spec(), k, std_char)));
        s.text("wedge^" + std::to_string(k) + " of the standard representation is [w" + std::to_string(k) + "]",
               direct.render(), unitary_wedge(*a, k).render());
    }
    for (int k = 1; k <= n; ++k) {
        int g = a->find_generator(GenKind::dR, k);
        auto x = a->generator(g);
        auto rx = restrict_generator_to_torus(*a, g, t);
        auto torus_sq = t->mul(rx, rx);
        std::string nm = "dR(" + std::to_string(k) + ")^2";
        s.equal(nm + ": torus restriction of the general square formula", *t, torus_sq,
                restrict_to_torus(general_square_rhs(*a, g), t));
        auto cor = unitary_real_square_formula(*a, k);
        s.equal(nm + ": torus restriction of the exterior-power expansion", *t, torus_sq, restrict_to_torus(cor, t));
        s.equal(nm + ": exterior-power expansion", *a, a->mul(x, x), cor);
    }
}

void unitary_symp_checks(Suite& s, const std::shared_ptr<const KRAlgebra>& a)
{
    int n = a->spec().rank;
    for (int k = 1; k <= n; ++k) {
        GenKind kind = k % 2 ? GenKind::dH : GenKind::dR;
        int g = a->find_generator(kind, k);
        std::string nm = (k % 2 ? "dH(" : "dR(") + std::to_string(k) + ")";
        if (g < 0) {
            s.out.push_back({nm + " present", false, "missing generator"});
            continue;
        }
        auto x = a->generator(g);
        auto rhs = unitary_quaternionic_square_formula(*a, k);
        s.equal(nm + "^2: exterior-power expansion", *a, a->mul(x, x), rhs);
        s.equal(nm + "^2: complexifications agree", *a, a->complexify(a->mul(x, x)), a->complexify(rhs));
    }
}

void symplectic_checks(Suite& s, const std::shared_ptr<const KRAlgebra>& a)
{
    int m = a->spec().rank;
    for (int j = 1; j <= m; ++j) {
        int g = a->find_generator(j % 2 ? GenKind::dH : GenKind::dR, j);
        auto x = a->generator(g);
        std::string nm = (j % 2 ? "dH(" : "dR(") + std::to_string(j) + ")^2";
        s.equal(nm + ": sigma expansion", *a, a->mul(x, x), symplectic_square_formula(*a, j));
    }
    auto c1 = KRAlgebra::equivariant(build_group(Family::Symplectic, 1, Involution::Trivial));
    auto su2 = KRAlgebra::equivariant(build_group(Family::SpecialUnitary, 2, Involution::Trivial));
    s.text("Sp(2) and SU(2) squares agree", c1->render(c1->square(0)), su2->render(su2->square(0)));
    s.text("SU(2) square", su2->render(su2->square(0)), "eta*[w1]*dH(1)");
}

void g2_checks(Suite& s, const std::shared_ptr<const KRAlgebra>& a)
{
    const RepRing& ring = *a->group_ring();
    auto s1 = FundPolynomial::variable(2, 0), s2 = FundPolynomial::variable(2, 1);
    FundPolynomial one = FundPolynomial::constant(2, 1);
    FundPolynomial alt1 = ring.poly(decompose(a->spec(), exterior_power(a->spec(), 2, ring.character(ring.fundamental(0)))));
    FundPolynomial alt2 = ring.poly(decompose(a->spec(), exterior_power(a->spec(), 2, ring.character(ring.fundamental(1)))));
    s.text("wedge^2 of the 7-dimensional representation", alt1.render(), (s1 + s2).render());
    s.text("wedge^2 of the adjoint representation", alt2.render(),
           (s1.pow(3) - s1.pow(2) - 2 * (s1 * s2) - s1).render());
    auto d1 = a->generator(0), d2 = a->generator(1);
    auto e1 = a->mul(a->scalar(eta_class(*a, s1 - one, false)), d1) + a->mul(a->basis(kEta), d2);
    auto e2 = a->mul(a->scalar(eta_class(*a, s1 * s1 - one, false)), d1) + a->mul(a->scalar(eta_class(*a, s2, false)), d2);
    s.equal("dR(1)^2 = eta((s1-1)dR(1) + dR(2))", *a, a->mul(d1, d1), e1);
    s.equal("dR(2)^2 = eta((s1^2-1)dR(1) + s2 dR(2))", *a, a->mul(d2, d2), e2);
}

void complex_checks(Suite& s, const std::shared_ptr<const KRAlgebra>& a)
{
    const auto& cr = a->coeff_ring();
    auto irreps = small_irreducibles(*cr, 1);
    int bad_eta = 0, bad_mu = 0, bad_sq = 0, bad_c = 0, total = 0;
    std::string f1, f2, f3, f4;
    for (int k = 0; k < a->num_symbols(); ++k) {
        if (a->symbol_type(k) != TypeTag::C || k > a->symbol_conj(k)) continue;
        int lam = a->generator_of_symbol(k);
        for (const auto& x : irreps)
            for (int i = 0; i < 4; ++i) {
                ++total;
                auto r = a->realify(unit_form(*a, i, FormMask(1) << k, cr->poly(x)));
                if (!a->mul(a->basis(kEta), r).is_zero() && !bad_eta++) f1 = a->render(r);
                auto shifted = a->realify(unit_form(*a, i + 2, FormMask(1) << k, 2 * cr->poly(x)));
                if (!(a->mul(a->basis(kMu), r) == shifted) && !bad_mu++) f2 = a->render(r);
                auto sq = a->mul(r, r);
                // degree -1 and -5 classes square to eta^2 x conj(x) lam; the others to 0
                KRGElement expect = a->zero();
                if (i % 2 == 0) {
                    CoeffElement c = coeff_mul(CoeffElement::basis(cr, kEta2),
                                               from_rep_fixed(cr, cr->mul(x, cr->conj(x)), false));
                    expect = a->mul(a->scalar(c), a->generator(lam));
                }
                if (!(sq == expect) && !bad_sq++) f3 = a->render(r) + "^2 = " + a->render(sq);
                auto z = a->complexify(r);
                if (!(a->complexify(sq) == a->form_mul(z, z)) && !bad_c++) f4 = a->render(r);
            }
        s.equal("lam" + std::to_string(a->generators()[lam].label) + "^2 = 0", *a,
                a->mul(a->generator(lam), a->generator(lam)), a->zero());
    }
    s.count("eta kills r-classes", bad_eta, total, f1);
    s.count("mu shifts r-classes by beta^2", bad_mu, total, f2);
    s.count("r-class squares have the degree-determined shape", bad_sq, total, f3);
    s.count("r-class squares commute with complexification", bad_c, total, f4);
}

}  // namespace

std::vector<CheckResult> verify_suite(const GroupSpec& spec, const VerifyOptions& opt)
{
    auto a = algebra_for(spec);
    Suite s;
    generic_checks(s, a, opt);
    switch (spec.family) {
    case Family::UnitaryU:
        if (spec.involution == Involution::ComplexConjugation) unitary_conj_checks(s, a);
        else unitary_symp_checks(s, a);
        break;
    case Family::Symplectic: symplectic_checks(s, a); break;
    case Family::ExceptionalG2: g2_checks(s, a); break;
    case Family::SpecialUnitary: complex_checks(s, a); break;
    case Family::Torus: {
        for (int i = 0; i < spec.rank; ++i) {
            auto x = a->generator(i);
            s.equal("dR(" + std::to_string(i + 1) + ")^2 = eta*dR(" + std::to_string(i + 1) + ")", *a, a->mul(x, x),
                    a->mul(a->basis(kEta), x));
        }
        break;
    }
    default: break;
    }
    return s.out;
}

}  // namespace krg
