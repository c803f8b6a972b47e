#ifndef KRG_WEIGHT_HPP
#define KRG_WEIGHT_HPP

#include <array>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace krg {

inline constexpr int kMaxRank = 10;

// Small fixed-capacity integer vector. Used for weights and exponent vectors.
struct Weight {
    std::array<int, kMaxRank> c{};
    int n = 0;

    Weight() = default;
    explicit Weight(int size);
    Weight(std::initializer_list<int> xs);
    static Weight from_vector(const std::vector<int>& v);
    std::vector<int> to_vector() const;

    int size() const { return n; }
    int& operator[](int i) { return c[i]; }
    int operator[](int i) const { return c[i]; }

    bool is_zero() const;
    int sum() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int k, Weight a);
    Weight operator-() const;

    std::strong_ordering operator<=>(const Weight& o) const;
    bool operator==(const Weight& o) const;
};

std::string to_string(const Weight& w);

}  // namespace krg

#endif
