#include "krg/finoracle.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "krg/error.hpp"

namespace krg {

namespace {

using Poly = std::vector<long long>;

Poly poly_divide(Poly num, const Poly& den)
{
    // exact division by a monic polynomial
    int dn = static_cast<int>(den.size()) - 1;
    if (static_cast<int>(num.size()) - 1 < dn) return {0};
    Poly q(num.size() - dn, 0);
    for (int i = static_cast<int>(num.size()) - 1; i >= dn; --i) {
        long long c = num[i];
        q[i - dn] = c;
        for (int j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

const Poly& cyclotomic_poly(int n)
{
    static std::map<int, Poly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Poly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide(p, cyclotomic_poly(d));
    return cache.emplace(n, p).first->second;
}

}  // namespace

Cyclotomic::Cyclotomic(int n, long long a) : n_(n), c_(n, 0)
{
    if (n < 1) throw Error(ErrorCode::TableError, "bad root order");
    c_[0] = a;
}

Cyclotomic Cyclotomic::root(int n, int j, long long c)
{
    Cyclotomic z(n);
    z.c_[((j % n) + n) % n] = c;
    return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
    if (o.n_ != n_) {
        int m = std::lcm(n_, o.n_);
        *this = lift(m);
        Cyclotomic b = o.lift(m);
        for (int i = 0; i < m; ++i) c_[i] += b.c_[i];
        return *this;
    }
    for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic operator*(const Cyclotomic& a0, const Cyclotomic& b0)
{
    int m = std::lcm(a0.n_, b0.n_);
    Cyclotomic a = a0.lift(m), b = b0.lift(m);
    Cyclotomic r(m);
    for (int i = 0; i < m; ++i) {
        if (!a.c_[i]) continue;
        for (int j = 0; j < m; ++j) r.c_[(i + j) % m] += a.c_[i] * b.c_[j];
    }
    return r;
}

Cyclotomic operator*(long long k, Cyclotomic a)
{
    for (auto& x : a.c_) x *= k;
    return a;
}

Cyclotomic Cyclotomic::conj() const
{
    Cyclotomic r(n_);
    for (int i = 0; i < n_; ++i) r.c_[(n_ - i) % n_] += c_[i];
    return r;
}

Cyclotomic Cyclotomic::lift(int m) const
{
    if (m == n_) return *this;
    if (m % n_ != 0) throw Error(ErrorCode::TableError, "incompatible root orders");
    Cyclotomic r(m);
    int s = m / n_;
    for (int i = 0; i < n_; ++i) r.c_[i * s] = c_[i];
    return r;
}

std::vector<long long> Cyclotomic::reduced() const
{
    const Poly& phi = cyclotomic_poly(n_);
    int d = static_cast<int>(phi.size()) - 1;
    Poly r = c_;
    for (int i = static_cast<int>(r.size()) - 1; i >= d; --i) {
        long long c = r[i];
        if (!c) continue;
        for (int j = 0; j <= d; ++j) r[i - d + j] -= c * phi[j];
    }
    r.resize(d);
    return r;
}

bool Cyclotomic::equals(const Cyclotomic& o) const
{
    int m = std::lcm(n_, o.n_);
    Cyclotomic diff = lift(m);
    diff += (-1) * o.lift(m);
    auto r = diff.reduced();
    return std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
}

bool Cyclotomic::is_integer(long long* value) const
{
    auto r = reduced();
    for (size_t i = 1; i < r.size(); ++i)
        if (r[i]) return false;
    if (value) *value = r.empty() ? 0 : r[0];
    return true;
}

std::string Cyclotomic::str() const
{
    std::string s;
    for (int i = 0; i < n_; ++i) {
        long long c = c_[i];
        if (!c) continue;
        std::string t;
        if (i == 0) t = std::to_string(c < 0 ? -c : c);
        else t = ((c == 1 || c == -1) ? "" : std::to_string(c < 0 ? -c : c) + "*") + "z^" + std::to_string(i);
        if (s.empty()) s = (c < 0 ? "-" : "") + t;
        else s += (c < 0 ? "-" : "+") + t;
    }
    return s.empty() ? "0" : s;
}

void CharTable::validate() const
{
    int k = num_classes();
    if (static_cast<int>(square.size()) != k || static_cast<int>(chars.size()) != k)
        throw Error(ErrorCode::TableError, "inconsistent class counts");
    long long total = 0;
    for (long long s : sizes) total += s;
    if (total != order) throw Error(ErrorCode::TableError, "class sizes do not sum to the order");
    for (int q : square)
        if (q < 0 || q >= k) throw Error(ErrorCode::TableError, "bad square class index");
    long long dims = 0;
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(chars[i].size()) != k) throw Error(ErrorCode::TableError, "bad row length");
        long long d;
        if (!chars[i][0].is_integer(&d)) throw Error(ErrorCode::TableError, "non-integer degree");
        dims += d * d;
    }
    if (dims != order) throw Error(ErrorCode::TableError, "sum of squared degrees differs from the order");
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Cyclotomic s(root_order);
            for (int c = 0; c < k; ++c) s += sizes[c] * (chars[i][c] * chars[j][c].conj());
            long long v;
            if (!s.is_integer(&v) || v != (i == j ? order : 0))
                throw Error(ErrorCode::TableError, "row orthogonality fails");
        }
}

int fs_indicator(const CharTable& t, int i)
{
    Cyclotomic s(t.root_order);
    for (int c = 0; c < t.num_classes(); ++c) s += t.sizes[c] * t.chars[i][t.square[c]];
    long long v;
    if (!s.is_integer(&v) || v % t.order != 0) throw Error(ErrorCode::TableError, "indicator is not an integer");
    return static_cast<int>(v / t.order);
}

NineRanks real_quat_tables(const CharTable& t)
{
    int k = t.num_classes();
    NineRanks out;
    std::vector<int> fs(k);
    for (int i = 0; i < k; ++i) fs[i] = fs_indicator(t, i);
    // conjugate partner of each irreducible
    std::vector<int> partner(k, -1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            bool same = true;
            for (int c = 0; c < k && same; ++c) same = t.chars[i][c].conj().equals(t.chars[j][c]);
            if (same) {
                partner[i] = j;
                break;
            }
        }
    int pairs = 0;
    for (int i = 0; i < k; ++i) {
        if (fs[i] == 1) out.R.r++;
        else if (fs[i] == -1) out.R.h++;
        else out.R.c++;
        if (partner[i] != i && partner[i] > i) pairs++;
    }
    // Real representations: irreducible real type, doubled quaternionic, conjugate pairs
    out.RR = {out.R.r, pairs, out.R.h};
    // Quaternionic representations: quaternionic irreducibles, doubled real type, conjugate pairs
    out.RH = {out.R.h, pairs, out.R.r};
    return out;
}

CharTable direct_product(const CharTable& a, const CharTable& b)
{
    CharTable t;
    t.name = a.name + "x" + b.name;
    t.order = a.order * b.order;
    t.root_order = std::lcm(a.root_order, b.root_order);
    int ka = a.num_classes(), kb = b.num_classes();
    for (int i = 0; i < ka; ++i)
        for (int j = 0; j < kb; ++j) {
            t.sizes.push_back(a.sizes[i] * b.sizes[j]);
            t.square.push_back(a.square[i] * kb + b.square[j]);
        }
    for (int x = 0; x < ka; ++x)
        for (int y = 0; y < kb; ++y) {
            std::vector<Cyclotomic> row;
            for (int i = 0; i < ka; ++i)
                for (int j = 0; j < kb; ++j)
                    row.push_back((a.chars[x][i] * b.chars[y][j]).lift(t.root_order));
            t.chars.push_back(row);
        }
    return t;
}

CharTable cyclic_table(int n)
{
    if (n < 1) throw Error(ErrorCode::TableError, "bad cyclic order");
    CharTable t;
    t.name = "C" + std::to_string(n);
    t.order = n;
    t.root_order = n;
    for (int a = 0; a < n; ++a) {
        t.sizes.push_back(1);
        t.square.push_back((2 * a) % n);
    }
    for (int b = 0; b < n; ++b) {
        std::vector<Cyclotomic> row;
        for (int a = 0; a < n; ++a) row.push_back(Cyclotomic::root(n, a * b));
        t.chars.push_back(row);
    }
    return t;
}

CharTable trivial_table()
{
    CharTable t = cyclic_table(1);
    t.name = "trivial";
    return t;
}

CharTable quaternion_table()
{
    // classes: 1, -1, {i,-i}, {j,-j}, {k,-k}
    CharTable t;
    t.name = "Q8";
    t.order = 8;
    t.root_order = 1;
    t.sizes = {1, 1, 2, 2, 2};
    t.square = {0, 0, 1, 1, 1};
    std::vector<std::vector<int>> rows = {
        {1, 1, 1, 1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {1, 1, -1, -1, 1}, {2, -2, 0, 0, 0}};
    for (const auto& r : rows) {
        std::vector<Cyclotomic> row;
        for (int v : r) row.emplace_back(1, v);
        t.chars.push_back(row);
    }
    return t;
}

namespace {

std::vector<std::string> split_product(const std::string& name)
{
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : name) {
        if (ch == 'x' || ch == '*') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

bool single_builtin(const std::string& s, CharTable* out)
{
    if (s == "trivial" || s == "1" || s == "C1") {
        if (out) *out = trivial_table();
        return true;
    }
    if (s == "Q8") {
        if (out) *out = quaternion_table();
        return true;
    }
    if (s == "V4" || s == "K4" || s == "Klein") {
        if (out) {
            *out = direct_product(cyclic_table(2), cyclic_table(2));
            out->name = "V4";
        }
        return true;
    }
    if (s.size() >= 2 && s[0] == 'C' && s.size() <= 4 &&
        std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        int n = std::stoi(s.substr(1));
        if (n < 1 || n > 360) return false;
        if (out) *out = cyclic_table(n);
        return true;
    }
    return false;
}

}  // namespace

bool is_builtin_name(const std::string& name)
{
    for (const auto& p : split_product(name))
        if (!single_builtin(p, nullptr)) return false;
    return true;
}

CharTable builtin_table(const std::string& name)
{
    auto parts = split_product(name);
    CharTable t;
    if (!single_builtin(parts[0], &t)) throw Error(ErrorCode::TableError, "unknown group '" + name + "'");
    for (size_t i = 1; i < parts.size(); ++i) {
        CharTable u;
        if (!single_builtin(parts[i], &u)) throw Error(ErrorCode::TableError, "unknown group '" + name + "'");
        t = direct_product(t, u);
    }
    t.name = name;
    return t;
}

namespace {

Cyclotomic parse_entry(const std::string& src, int n)
{
    std::string s;
    for (char ch : src)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Error(ErrorCode::TableError, "empty table entry");
    Cyclotomic v(n);
    size_t i = 0;
    auto fail = [&]() { throw Error(ErrorCode::TableError, "bad table entry '" + src + "'"); };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        long long coef = 1;
        bool have_num = false;
        size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i > st) {
            coef = std::stoll(s.substr(st, i - st));
            have_num = true;
        }
        int j = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_num) fail();
            ++i;
            if (i >= s.size() || s[i] != 'z') fail();
        }
        if (i < s.size() && s[i] == 'z') {
            ++i;
            j = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t js = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                if (i == js) fail();
                j = std::stoi(s.substr(js, i - js));
            }
        } else if (!have_num) {
            fail();
        }
        v += Cyclotomic::root(n, j, sign * coef);
        if (i < s.size() && s[i] != '+' && s[i] != '-') fail();
    }
    return v;
}

}  // namespace

CharTable parse_table(const std::string& text)
{
    std::istringstream in(text);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw Error(ErrorCode::TableError, "empty table");
    CharTable t;
    {
        std::istringstream h(lines[0]);
        int k;
        if (!(h >> t.order >> k) || t.order < 1 || k < 1) throw Error(ErrorCode::TableError, "bad header");
        int e;
        t.root_order = (h >> e) ? e : static_cast<int>(t.order);
        if (static_cast<int>(lines.size()) != k + 2) throw Error(ErrorCode::TableError, "expected k+2 lines");
        std::istringstream cl(lines[1]);
        for (int i = 0; i < k; ++i) {
            long long s;
            int q;
            if (!(cl >> s >> q)) throw Error(ErrorCode::TableError, "bad class line");
            t.sizes.push_back(s);
            t.square.push_back(q);
        }
        for (int r = 0; r < k; ++r) {
            std::vector<Cyclotomic> row;
            std::string cell;
            std::istringstream rs(lines[2 + r]);
            while (std::getline(rs, cell, ';')) row.push_back(parse_entry(cell, t.root_order));
            if (static_cast<int>(row.size()) != k) throw Error(ErrorCode::TableError, "bad row length");
            t.chars.push_back(row);
        }
    }
    t.validate();
    return t;
}

std::string format_table(const CharTable& t)
{
    std::ostringstream out;
    out << t.order << " " << t.num_classes();
    if (t.root_order != t.order) out << " " << t.root_order;
    out << "\n";
    for (int i = 0; i < t.num_classes(); ++i) out << (i ? " " : "") << t.sizes[i] << " " << t.square[i];
    out << "\n";
    for (const auto& row : t.chars) {
        for (size_t i = 0; i < row.size(); ++i) out << (i ? ";" : "") << row[i].str();
        out << "\n";
    }
    return out.str();
}

std::string format_ranks(const NineRanks& r)
{
    std::ostringstream out;
    auto line = [&](const char* name, const TypeRanks& x) {
        out << name << ": R=" << x.r << " C=" << x.c << " H=" << x.h << "\n";
    };
    line("R", r.R);
    line("RR", r.RR);
    line("RH", r.RH);
    return out.str();
}

}  // namespace krg
