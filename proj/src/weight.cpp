#include "krg/weight.hpp"
#include "krg/error.hpp"

namespace krg {

const char* error_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::OddRankSymplectic: return "OddRankSymplectic";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::InvalidInvolution: return "InvalidInvolution";
    case ErrorCode::NonDominant: return "NonDominant";
    case ErrorCode::NonInvariantInput: return "NonInvariantInput";
    case ErrorCode::VirtualInput: return "VirtualInput";
    case ErrorCode::NonPolynomial: return "NonPolynomial";
    case ErrorCode::UnclassifiableTwisted: return "UnclassifiableTwisted";
    case ErrorCode::MixedGroup: return "MixedGroup";
    case ErrorCode::WrongSpec: return "WrongSpec";
    case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::NotRealClass: return "NotRealClass";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::TableError: return "TableError";
    }
    return "Error";
}

Weight::Weight(int size) : n(size)
{
    if (size < 0 || size > kMaxRank)
        throw Error(ErrorCode::UnsupportedGroup, "rank out of range");
}

Weight::Weight(std::initializer_list<int> xs) : Weight(static_cast<int>(xs.size()))
{
    int i = 0;
    for (int x : xs) c[i++] = x;
}

Weight Weight::from_vector(const std::vector<int>& v)
{
    Weight w(static_cast<int>(v.size()));
    for (int i = 0; i < w.n; ++i) w.c[i] = v[i];
    return w;
}

std::vector<int> Weight::to_vector() const
{
    return std::vector<int>(c.begin(), c.begin() + n);
}

bool Weight::is_zero() const
{
    for (int i = 0; i < n; ++i)
        if (c[i]) return false;
    return true;
}

int Weight::sum() const
{
    int s = 0;
    for (int i = 0; i < n; ++i) s += c[i];
    return s;
}

Weight& Weight::operator+=(const Weight& o)
{
    for (int i = 0; i < n; ++i) c[i] += o.c[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o)
{
    for (int i = 0; i < n; ++i) c[i] -= o.c[i];
    return *this;
}

Weight operator*(int k, Weight a)
{
    for (int i = 0; i < a.n; ++i) a.c[i] *= k;
    return a;
}

Weight Weight::operator-() const
{
    Weight r = *this;
    for (int i = 0; i < n; ++i) r.c[i] = -r.c[i];
    return r;
}

std::strong_ordering Weight::operator<=>(const Weight& o) const
{
    if (n != o.n) return n <=> o.n;
    for (int i = 0; i < n; ++i)
        if (c[i] != o.c[i]) return c[i] <=> o.c[i];
    return std::strong_ordering::equal;
}

bool Weight::operator==(const Weight& o) const
{
    return (*this <=> o) == std::strong_ordering::equal;
}

std::string to_string(const Weight& w)
{
    std::string s = "(";
    for (int i = 0; i < w.n; ++i) {
        if (i) s += ",";
        s += std::to_string(w.c[i]);
    }
    return s + ")";
}

}  // namespace krg
