#ifndef KRG_FINORACLE_HPP
#define KRG_FINORACLE_HPP

#include <string>
#include <vector>

namespace krg {

// Element of Z[z]/(z^N - 1) interpreted in Q(zeta_N); equality modulo the cyclotomic polynomial.
class Cyclotomic {
public:
    Cyclotomic() = default;
    explicit Cyclotomic(int n, long long a = 0);
    static Cyclotomic root(int n, int j, long long c = 1);

    int order() const { return n_; }
    const std::vector<long long>& coeffs() const { return c_; }

    Cyclotomic& operator+=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(long long k, Cyclotomic a);
    Cyclotomic conj() const;
    Cyclotomic lift(int m) const;  // view in Q(zeta_m), n | m

    // coefficients in the basis 1..z^{phi(N)-1}
    std::vector<long long> reduced() const;
    bool equals(const Cyclotomic& o) const;
    bool is_integer(long long* value = nullptr) const;
    std::string str() const;

private:
    int n_ = 1;
    std::vector<long long> c_{0};
};

struct CharTable {
    std::string name;
    long long order = 1;
    int root_order = 1;             // z is a primitive root_order-th root of unity
    std::vector<long long> sizes;   // class sizes
    std::vector<int> square;        // class of g^2
    std::vector<std::vector<Cyclotomic>> chars;

    int num_classes() const { return static_cast<int>(sizes.size()); }
    void validate() const;
};

struct TypeRanks {
    int r = 0, c = 0, h = 0;
    bool operator==(const TypeRanks& o) const { return r == o.r && c == o.c && h == o.h; }
};

struct NineRanks {
    TypeRanks R, RR, RH;
};

int fs_indicator(const CharTable& t, int i);
NineRanks real_quat_tables(const CharTable& t);
CharTable direct_product(const CharTable& a, const CharTable& b);

CharTable cyclic_table(int n);
CharTable quaternion_table();
CharTable trivial_table();
// names: trivial, C<n>, Q8, V4 (also Klein, K4), and products joined by 'x'
CharTable builtin_table(const std::string& name);
bool is_builtin_name(const std::string& name);

CharTable parse_table(const std::string& text);
std::string format_table(const CharTable& t);
std::string format_ranks(const NineRanks& r);

}  // namespace krg

#endif
