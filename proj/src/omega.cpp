#include "krg/omega.hpp"

#include <algorithm>
#include <bit>

#include "krg/error.hpp"

namespace krg {

int popcount(FormMask m) { return std::popcount(m); }

int merge_sign(FormMask a, FormMask b)
{
    if (a & b) return 0;
    // each symbol of b passes the symbols of a with larger index
    int swaps = 0;
    for (FormMask x = b; x; x &= x - 1) {
        FormMask low = (x & -x) - 1;
        swaps += std::popcount(a & ~low & ~(x & -x));
    }
    return swaps % 2 ? -1 : 1;
}

FormMask permute_mask(FormMask m, const std::vector<int>& perm, int* sign)
{
    std::vector<int> seq;
    for (int i = 0; m >> i; ++i)
        if (m >> i & 1) {
            if (i >= static_cast<int>(perm.size()) || perm[i] < 0)
                throw Error(ErrorCode::UnsupportedGroup, "conjugation does not permute the fundamentals");
            seq.push_back(perm[i]);
        }
    int inv = 0;
    FormMask out = 0;
    for (size_t a = 0; a < seq.size(); ++a) {
        out |= FormMask(1) << seq[a];
        for (size_t b = a + 1; b < seq.size(); ++b) inv += seq[a] > seq[b];
    }
    if (sign) *sign = inv % 2 ? -1 : 1;
    return out;
}

DifferentialForm DifferentialForm::scalar(const FundPolynomial& p)
{
    DifferentialForm f(p.nvars);
    f.add(0, p);
    return f;
}

DifferentialForm DifferentialForm::symbol(int n, int i)
{
    DifferentialForm f(n);
    f.add(FormMask(1) << i, FundPolynomial::constant(n, 1));
    return f;
}

void DifferentialForm::add(FormMask m, const FundPolynomial& p)
{
    if (p.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
        terms.emplace(m, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero()) terms.erase(it);
}

DifferentialForm DifferentialForm::operator-() const
{
    DifferentialForm r(nvars);
    for (const auto& [m, p] : terms) r.terms.emplace(m, -p);
    return r;
}

DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b)
{
    for (const auto& [m, p] : b.terms) a.add(m, p);
    return a;
}

DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b)
{
    for (const auto& [m, p] : b.terms) a.add(m, -p);
    return a;
}

DifferentialForm operator*(const FundPolynomial& p, const DifferentialForm& a)
{
    DifferentialForm r(a.nvars);
    for (const auto& [m, q] : a.terms) r.add(m, p * q);
    return r;
}

std::vector<int> DifferentialForm::degrees() const
{
    std::vector<int> ds;
    for (const auto& [m, p] : terms) {
        int d = -(popcount(m) % 8);
        if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
    }
    std::sort(ds.rbegin(), ds.rend());
    return ds;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b)
{
    if (a.nvars != b.nvars) throw Error(ErrorCode::MixedGroup, "forms over different groups");
    DifferentialForm r(a.nvars);
    for (const auto& [ma, pa] : a.terms)
        for (const auto& [mb, pb] : b.terms) {
            int s = merge_sign(ma, mb);
            if (s) r.add(ma | mb, s * (pa * pb));
        }
    return r;
}

DifferentialForm delta_G(const FundPolynomial& p)
{
    DifferentialForm r(p.nvars);
    for (int i = 0; i < p.nvars; ++i) r.add(FormMask(1) << i, p.derivative(i));
    return r;
}

DifferentialForm delta_G(const RepRing& ring, const RepClass& a) { return delta_G(ring.poly(a)); }

DifferentialForm conj_star(const RepRing& ring, const DifferentialForm& a)
{
    const auto& perm = ring.fund_perm();
    DifferentialForm r(a.nvars);
    for (const auto& [m, p] : a.terms) {
        int s = 1;
        FormMask pm = permute_mask(m, perm, &s);
        if (std::any_of(perm.begin(), perm.end(), [](int x) { return x < 0; }))
            throw Error(ErrorCode::UnsupportedGroup, "conjugation does not permute the fundamentals");
        r.add(pm, s * p.permuted(perm));
    }
    return r;
}

void IntegerForm::add(FormMask m, long long c)
{
    if (c == 0) return;
    auto it = terms.find(m);
    if (it == terms.end()) terms.emplace(m, c);
    else if ((it->second += c) == 0) terms.erase(it);
}

IntegerForm wedge(const IntegerForm& a, const IntegerForm& b)
{
    if (a.nvars != b.nvars) throw Error(ErrorCode::MixedGroup, "forms over different groups");
    IntegerForm r(a.nvars);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            int s = merge_sign(ma, mb);
            if (s) r.add(ma | mb, s * ca * cb);
        }
    return r;
}

IntegerForm augment(const DifferentialForm& a, const std::vector<long long>& dims)
{
    IntegerForm r(a.nvars);
    for (const auto& [m, p] : a.terms) r.add(m, p.evaluate(dims));
    return r;
}

IntegerForm augment(const RepRing& ring, const DifferentialForm& a) { return augment(a, ring.fundamental_dims()); }

std::string mask_string(FormMask m, const char* prefix)
{
    std::string s;
    for (int i = 0; m >> i; ++i)
        if (m >> i & 1) {
            if (!s.empty()) s += "^";
            s += std::string(prefix) + "[w" + std::to_string(i + 1) + "]";
        }
    return s;
}

namespace {

struct Piece {
    bool negative;
    std::string body;
};

std::string join(const std::vector<Piece>& ps)
{
    if (ps.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i == 0) s += (ps[i].negative ? "-" : "") + ps[i].body;
        else s += (ps[i].negative ? " - " : " + ") + ps[i].body;
    }
    return s;
}

std::vector<FormMask> ordered_masks(const std::vector<FormMask>& ms)
{
    std::vector<FormMask> out = ms;
    std::sort(out.begin(), out.end(), [](FormMask a, FormMask b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        // lexicographic on increasing index lists
        while (a && b) {
            int x = std::countr_zero(a), y = std::countr_zero(b);
            if (x != y) return x < y;
            a &= a - 1;
            b &= b - 1;
        }
        return false;
    });
    return out;
}

}  // namespace

std::string render(const DifferentialForm& a)
{
    std::vector<FormMask> ms;
    for (const auto& [m, p] : a.terms) ms.push_back(m);
    std::vector<Piece> out;
    for (FormMask m : ordered_masks(ms)) {
        const FundPolynomial& p = a.terms.at(m);
        std::string sym = mask_string(m);
        bool neg = false;
        std::string coef;
        if (p.terms.size() == 1) {
            long long c = p.terms.begin()->second;
            neg = c < 0;
            FundPolynomial q = neg ? -p : p;
            coef = q.render();
            if (coef == "1" && !sym.empty()) coef.clear();
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
            coef = sym.empty() ? q.render() : "(" + q.render() + ")";
        }
        std::string body = coef;
        if (!sym.empty()) body = coef.empty() ? sym : coef + "·" + sym;
        out.push_back({neg, body});
    }
    return join(out);
}

std::string render(const IntegerForm& a)
{
    std::vector<FormMask> ms;
    for (const auto& [m, c] : a.terms) ms.push_back(m);
    std::vector<Piece> out;
    for (FormMask m : ordered_masks(ms)) {
        long long c = a.terms.at(m);
        long long k = c < 0 ? -c : c;
        std::string sym = mask_string(m);
        std::string body = sym.empty() ? std::to_string(k) : (k == 1 ? sym : std::to_string(k) + "·" + sym);
        out.push_back({c < 0, body});
    }
    return join(out);
}

}  // namespace krg
