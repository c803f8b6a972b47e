#include "krg/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace krg {

namespace {

enum class NodeKind { Int, Eta, Mu, Beta, Fund, DR, DH, Lam, DG, R, Add, Mul, Pow, Neg };

struct Node {
    NodeKind kind;
    int pos = 0;
    long long value = 0;  // integer, index, or exponent
    std::vector<std::unique_ptr<Node>> kids;
    std::vector<int> signs;  // for Add: +1/-1 per child
};

using NodePtr = std::unique_ptr<Node>;

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    NodePtr parse()
    {
        NodePtr e = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return e;
    }

private:
    const std::string& s_;
    size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseFailure(static_cast<int>(i_), msg); }
    [[noreturn]] void fail_at(size_t p, const std::string& msg) const { throw ParseFailure(static_cast<int>(p), msg); }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c)
    {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool accept(char c)
    {
        if (!peek(c)) return false;
        ++i_;
        return true;
    }
    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool keyword(const char* k)
    {
        skip();
        size_t n = std::char_traits<char>::length(k);
        if (s_.compare(i_, n, k) != 0) return false;
        // keywords must not run into further letters
        if (i_ + n < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_ + n]))) return false;
        i_ += n;
        return true;
    }
    long long integer()
    {
        skip();
        size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected an integer");
        if (i_ - start > 15) fail_at(start, "integer too large");
        return std::stoll(s_.substr(start, i_ - start));
    }
    long long index()
    {
        size_t p = (skip(), i_);
        long long v = integer();
        if (v < 1) fail_at(p, "indices start at 1");
        return v;
    }

    NodePtr make(NodeKind k, size_t pos, long long v = 0)
    {
        auto n = std::make_unique<Node>();
        n->kind = k;
        n->pos = static_cast<int>(pos);
        n->value = v;
        return n;
    }

    NodePtr expr()
    {
        skip();
        auto sum = make(NodeKind::Add, i_);
        int sign = 1;
        if (accept('-')) sign = -1;
        else accept('+');
        sum->kids.push_back(term());
        sum->signs.push_back(sign);
        while (true) {
            if (accept('+')) sign = 1;
            else if (accept('-')) sign = -1;
            else break;
            sum->kids.push_back(term());
            sum->signs.push_back(sign);
        }
        if (sum->kids.size() == 1 && sum->signs[0] == 1) return std::move(sum->kids[0]);
        return sum;
    }

    NodePtr term()
    {
        skip();
        auto prod = make(NodeKind::Mul, i_);
        prod->kids.push_back(factor());
        while (accept('*')) prod->kids.push_back(factor());
        if (prod->kids.size() == 1) return std::move(prod->kids[0]);
        return prod;
    }

    NodePtr factor()
    {
        NodePtr a = atom();
        while (accept('^')) {
            skip();
            size_t p = i_;
            bool neg = accept('-');
            long long e = integer();
            if (e > 64) fail_at(p, "exponent too large");
            auto pw = make(NodeKind::Pow, p, neg ? -e : e);
            pw->kids.push_back(std::move(a));
            a = std::move(pw);
        }
        return a;
    }

    NodePtr atom()
    {
        skip();
        size_t p = i_;
        if (i_ >= s_.size()) fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(s_[i_]))) return make(NodeKind::Int, p, integer());
        if (accept('(')) {
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (accept('[')) {
            if (!accept('w')) fail("expected 'w'");
            long long k = index();
            expect(']');
            return make(NodeKind::Fund, p, k);
        }
        if (keyword("eta")) return make(NodeKind::Eta, p);
        if (keyword("mu")) return make(NodeKind::Mu, p);
        if (keyword("beta")) return make(NodeKind::Beta, p);
        if (s_.compare(i_, 3, "lam") == 0) {
            i_ += 3;
            if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected an index after 'lam'");
            return make(NodeKind::Lam, p, index());
        }
        for (auto [name, kind] : {std::pair{"dR", NodeKind::DR}, std::pair{"dH", NodeKind::DH}, std::pair{"dG", NodeKind::DG}}) {
            if (s_.compare(i_, 2, name) == 0) {
                i_ += 2;
                expect('(');
                long long k = index();
                expect(')');
                return make(kind, p, k);
            }
        }
        if (s_.compare(i_, 1, "r") == 0) {
            ++i_;
            expect('(');
            auto n = make(NodeKind::R, p);
            n->kids.push_back(expr());
            expect(')');
            return n;
        }
        fail("unexpected '" + std::string(1, s_[i_]) + "'");
    }
};

// Evaluation.

class Evaluator {
public:
    explicit Evaluator(std::shared_ptr<const KRAlgebra> alg) : alg_(std::move(alg)) {}

    KRGElement real(const Node& n)
    {
        if (auto p = pure(n)) return from_poly(*p, n.pos);
        switch (n.kind) {
        case NodeKind::Eta: return alg_->basis(kEta);
        case NodeKind::Mu: return alg_->basis(kMu);
        case NodeKind::Beta: throw ParseFailure(n.pos, "beta is only allowed inside r(...)");
        case NodeKind::DG: throw ParseFailure(n.pos, "dG is only allowed inside r(...)");
        case NodeKind::DR: return alg_->generator(generator(n, GenKind::dR));
        case NodeKind::DH: return alg_->generator(generator(n, GenKind::dH));
        case NodeKind::Lam: return alg_->generator(generator(n, GenKind::lam));
        case NodeKind::R: return alg_->realify(complex(*n.kids[0]));
        case NodeKind::Add: {
            // a class may be spread over several monomials sharing the same remaining factors
            struct Group {
                FundPolynomial rep;
                std::vector<const Node*> rest;
                int pos;
            };
            std::map<std::string, Group> groups;
            std::vector<std::string> order;
            for (size_t i = 0; i < n.kids.size(); ++i) {
                const Node& t = *n.kids[i];
                FundPolynomial rep = FundPolynomial::constant(nvars(), n.signs[i]);
                std::vector<const Node*> rest;
                split(t, rep, rest);
                std::string key;
                for (const Node* r : rest) key += serialize(*r) + ";";
                auto [it, fresh] = groups.try_emplace(key, Group{FundPolynomial(nvars()), rest, t.pos});
                if (fresh) order.push_back(key);
                it->second.rep += rep;
            }
            KRGElement s = alg_->zero();
            for (const auto& key : order) {
                const Group& g = groups.at(key);
                if (g.rep.is_zero()) continue;
                KRGElement rest = alg_->integer(1);
                for (const Node* r : g.rest) rest = alg_->mul(rest, real(*r));
                s.add(alg_->mul(from_poly(g.rep, g.pos), rest));
            }
            return s;
        }
        case NodeKind::Mul: {
            // representation factors are collected first; they are central
            FundPolynomial rep = FundPolynomial::constant(nvars(), 1);
            std::vector<const Node*> rest;
            split(n, rep, rest);
            KRGElement out = alg_->integer(1);
            for (const Node* r : rest) out = alg_->mul(out, real(*r));
            return alg_->mul(from_poly(rep, n.pos), out);
        }
        case NodeKind::Pow: {
            if (n.value < 0) throw ParseFailure(n.pos, "negative exponent on a non-representation factor");
            KRGElement base = real(*n.kids[0]), out = alg_->integer(1);
            for (long long i = 0; i < n.value; ++i) out = alg_->mul(out, base);
            return out;
        }
        default: break;
        }
        throw ParseFailure(n.pos, "cannot evaluate");
    }

    ComplexForm complex(const Node& n)
    {
        ComplexForm z = alg_->empty_form();
        FundPolynomial one = FundPolynomial::constant(nvars(), 1);
        if (auto p = pure(n)) {
            z.add(0, 0, *p);
            return z;
        }
        switch (n.kind) {
        case NodeKind::Eta: return z;
        case NodeKind::Mu: z.add(2, 0, 2 * one); return z;
        case NodeKind::Beta: z.add(1, 0, one); return z;
        case NodeKind::DG: {
            if (n.value > alg_->num_symbols()) throw ParseFailure(n.pos, "no symbol dG(" + std::to_string(n.value) + ")");
            z.add(0, FormMask(1) << (n.value - 1), one);
            return z;
        }
        case NodeKind::DR: return alg_->generator_form(generator(n, GenKind::dR));
        case NodeKind::DH: return alg_->generator_form(generator(n, GenKind::dH));
        case NodeKind::Lam: return alg_->generator_form(generator(n, GenKind::lam));
        case NodeKind::R: {
            ComplexForm y = complex(*n.kids[0]);
            z.add(y);
            z.add(alg_->conj(y));
            return z;
        }
        case NodeKind::Add:
            for (size_t i = 0; i < n.kids.size(); ++i) z.add(complex(*n.kids[i]), n.signs[i]);
            return z;
        case NodeKind::Mul: {
            z.add(0, 0, one);
            for (const auto& k : n.kids) z = alg_->form_mul(z, complex(*k));
            return z;
        }
        case NodeKind::Pow: {
            if (n.value < 0) throw ParseFailure(n.pos, "negative exponent on a non-representation factor");
            ComplexForm base = complex(*n.kids[0]);
            z.add(0, 0, one);
            for (long long i = 0; i < n.value; ++i) z = alg_->form_mul(z, base);
            return z;
        }
        default: break;
        }
        throw ParseFailure(n.pos, "cannot evaluate");
    }

private:
    std::shared_ptr<const KRAlgebra> alg_;

    int nvars() const { return alg_->coeff_ring()->num_fundamentals(); }

    // representation part and remaining factors of a product
    void split(const Node& t, FundPolynomial& rep, std::vector<const Node*>& rest)
    {
        if (auto p = pure(t)) {
            rep = rep * *p;
            return;
        }
        if (t.kind != NodeKind::Mul) {
            rest.push_back(&t);
            return;
        }
        for (const auto& k : t.kids) {
            if (auto p = pure(*k)) rep = rep * *p;
            else rest.push_back(k.get());
        }
    }

    static std::string serialize(const Node& n)
    {
        std::string s = std::to_string(static_cast<int>(n.kind)) + ":" + std::to_string(n.value) + "(";
        for (size_t i = 0; i < n.kids.size(); ++i)
            s += (n.signs.empty() ? "" : (n.signs[i] < 0 ? "-" : "+")) + serialize(*n.kids[i]) + ",";
        return s + ")";
    }
    bool torus() const { return alg_->spec().family == Family::Torus; }

    int generator(const Node& n, GenKind kind)
    {
        int g = alg_->find_generator(kind, static_cast<int>(n.value));
        if (g < 0) {
            const char* name = kind == GenKind::dR ? "dR(" : kind == GenKind::dH ? "dH(" : "lam";
            std::string full = std::string(name) + std::to_string(n.value) + (kind == GenKind::lam ? "" : ")");
            throw ParseFailure(n.pos, "no generator " + full + " for " + alg_->spec().token());
        }
        return g;
    }

    // polynomial value of a subexpression built from integers and fundamentals only
    std::optional<FundPolynomial> pure(const Node& n)
    {
        switch (n.kind) {
        case NodeKind::Int: return FundPolynomial::constant(nvars(), n.value);
        case NodeKind::Fund: {
            if (n.value > nvars()) throw ParseFailure(n.pos, "no fundamental [w" + std::to_string(n.value) + "]");
            if (alg_->kind() == KRAlgebra::Kind::Nonequivariant)
                throw ParseFailure(n.pos, "the nonequivariant ring has integer coefficients");
            return FundPolynomial::variable(nvars(), static_cast<int>(n.value - 1));
        }
        case NodeKind::Add: {
            FundPolynomial s(nvars());
            for (size_t i = 0; i < n.kids.size(); ++i) {
                auto p = pure(*n.kids[i]);
                if (!p) return std::nullopt;
                s += n.signs[i] * *p;
            }
            return s;
        }
        case NodeKind::Mul: {
            FundPolynomial s = FundPolynomial::constant(nvars(), 1);
            for (const auto& k : n.kids) {
                auto p = pure(*k);
                if (!p) return std::nullopt;
                s = s * *p;
            }
            return s;
        }
        case NodeKind::Pow: {
            auto p = pure(*n.kids[0]);
            if (!p) return std::nullopt;
            if (n.value >= 0) return p->pow(static_cast<int>(n.value));
            return inverse_power(*n.kids[0], *p, -n.value, n.pos);
        }
        default: return std::nullopt;
        }
    }

    FundPolynomial inverse_power(const Node& base, const FundPolynomial& p, long long k, int pos)
    {
        const GroupSpec& spec = alg_->spec();
        if (spec.family == Family::UnitaryU && base.kind == NodeKind::Fund && base.value == spec.rank)
            throw Error(ErrorCode::UnclassifiableTwisted,
                        "inverse powers of the determinant have no type under " + spec.key());
        if (!torus() || p.terms.size() != 1 || p.terms.begin()->second != 1)
            throw ParseFailure(pos, "negative exponents are only allowed on torus characters");
        Weight e = p.terms.begin()->first;
        for (int i = 0; i < e.size(); ++i) e[i] = static_cast<int>(-k * e[i]);
        FundPolynomial q(nvars());
        q.add(e, 1);
        return q;
    }

    KRGElement from_poly(const FundPolynomial& p, int pos)
    {
        const auto& ring = alg_->coeff_ring();
        if (alg_->kind() == KRAlgebra::Kind::Nonequivariant) {
            RepClass r;
            r.add(ring->trivial(), p.constant_term());
            return alg_->scalar(from_rep_natural(ring, r));
        }
        try {
            return alg_->scalar(from_rep_natural(ring, ring->decompose_poly(p)));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::NotRealClass)
                throw ParseFailure(pos, "representation is not self-conjugate; use r(...) for complex classes");
            throw;
        }
    }
};

}  // namespace

KRGElement parse_element(const std::shared_ptr<const KRAlgebra>& alg, const std::string& text)
{
    Parser p(text);
    NodePtr n = p.parse();
    return Evaluator(alg).real(*n);
}

ComplexForm parse_complex(const std::shared_ptr<const KRAlgebra>& alg, const std::string& text)
{
    Parser p(text);
    NodePtr n = p.parse();
    return Evaluator(alg).complex(*n);
}

}  // namespace krg
