#include "doctest.h"

#include "krg/error.hpp"
#include "krg/finoracle.hpp"

using namespace krg;

TEST_CASE("Frobenius-Schur indicators")
{
    auto q8 = quaternion_table();
    CHECK(fs_indicator(q8, 4) == -1);
    CHECK(fs_indicator(q8, 0) == 1);
    auto c3 = cyclic_table(3);
    CHECK(fs_indicator(c3, 1) == 0);
    CHECK(fs_indicator(c3, 2) == 0);
    auto c4 = cyclic_table(4);
    CHECK(fs_indicator(c4, 2) == 1);
    CHECK(fs_indicator(c4, 1) == 0);
}

TEST_CASE("nine ranks")
{
    auto t = builtin_table("Q8xC3");
    auto r = real_quat_tables(t);
    CHECK(r.R == TypeRanks{4, 10, 1});
    CHECK(r.RR == TypeRanks{4, 5, 1});
    CHECK(r.RH == TypeRanks{1, 5, 4});

    auto triv = real_quat_tables(trivial_table());
    CHECK(triv.R == TypeRanks{1, 0, 0});
    CHECK(triv.RR == TypeRanks{1, 0, 0});
    CHECK(triv.RH == TypeRanks{0, 0, 1});

    auto c3 = real_quat_tables(cyclic_table(3));
    CHECK(c3.R == TypeRanks{1, 2, 0});
    CHECK(c3.RR == TypeRanks{1, 1, 0});
    CHECK(c3.RH == TypeRanks{0, 1, 1});  // doubled trivial is the sole H-type generator
}

TEST_CASE("rank equalities between real and quaternionic tables")
{
    for (const char* name : {"Q8", "C2", "C3", "C4", "C5", "C6", "V4", "Q8xC3", "Q8xQ8", "C3xC4", "trivial"}) {
        auto t = builtin_table(name);
        CHECK_NOTHROW(t.validate());
        auto r = real_quat_tables(t);
        CHECK(r.RR.r == r.R.r);
        CHECK(r.RR.h == r.R.h);
        CHECK(r.RH.r == r.R.h);
        CHECK(r.RH.h == r.R.r);
        CHECK(2 * r.RR.c == r.R.c);
        CHECK(2 * r.RH.c == r.R.c);
        for (int i = 0; i < t.num_classes(); ++i) {
            int fs = fs_indicator(t, i);
            CHECK((fs >= -1 && fs <= 1));
            bool self_conj = true;
            for (int c = 0; c < t.num_classes(); ++c)
                self_conj = self_conj && t.chars[i][c].conj().equals(t.chars[i][c]);
            CHECK((fs == 0) == !self_conj);
        }
    }
}

TEST_CASE("direct products")
{
    CHECK(builtin_table("Q8xC3").num_classes() == 15);
    CHECK(builtin_table("C2xC2").num_classes() == 4);
    auto q = quaternion_table();
    auto p = direct_product(q, trivial_table());
    CHECK(p.num_classes() == q.num_classes());
    CHECK(real_quat_tables(p).R == real_quat_tables(q).R);
    for (const auto& row : builtin_table("V4").chars) {
        long long d;
        CHECK(row[0].is_integer(&d));
        CHECK(d == 1);
    }
}

TEST_CASE("text format round trip")
{
    for (const char* name : {"Q8", "C4", "Q8xC3", "V4"}) {
        auto t = builtin_table(name);
        auto u = parse_table(format_table(t));
        CHECK(real_quat_tables(u).R == real_quat_tables(t).R);
        CHECK(format_table(u) == format_table(t));
    }
    auto t = parse_table("3 3\n1 0 1 2 1 1\n1;1;1\n1;z;z^2\n1;z^2;z^4\n");
    CHECK(real_quat_tables(t).R == TypeRanks{1, 2, 0});
    CHECK_THROWS_AS(parse_table("3 3\n1 0 1 2 1 1\n1;1;1\n1;z;z^2\n"), Error);
    CHECK_THROWS_AS(parse_table("2 2\n1 0 1 0\n1;1\n1;2\n"), Error);
    CHECK_THROWS_AS(builtin_table("Foo"), Error);
}

TEST_CASE("cyclotomic arithmetic")
{
    // 1 + z + z^2 = 0 for a primitive cube root
    Cyclotomic s = Cyclotomic(3, 1) + Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2);
    long long v = 5;
    CHECK(s.is_integer(&v));
    CHECK(v == 0);
    CHECK((Cyclotomic::root(4, 1) * Cyclotomic::root(4, 1)).equals(Cyclotomic(1, -1)));
    CHECK(Cyclotomic::root(6, 2).equals(Cyclotomic::root(3, 1)));
}
