#include "doctest.h"

#include <random>

#include "cpcount/arith.hpp"

using namespace cpcount;
using namespace cpcount::arith;

TEST_CASE("mod_rep canonical representatives") {
    CHECK(mod_rep(7, 5).value == 2);
    CHECK(mod_rep(-1, 5).value == 4);
    CHECK(mod_rep(13, 3).value == 1);
    CHECK_THROWS_AS(mod_rep(3, 0), InvalidInput);
}

TEST_CASE("mod_rep bounds and divisibility") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> kd(-1000000, 1000000), dd(1, 5000);
    for (int it = 0; it < 500; ++it) {
        Int k = kd(rng), d = dd(rng);
        Int v = mod_rep(k, d).value;
        CHECK(v >= 0);
        CHECK(v < d);
        CHECK((k - v) % d == 0);
    }
}

TEST_CASE("floor_same_residue") {
    Prime p3(3);
    CHECK(floor_same_residue(13, 9, p3) == 13);
    CHECK(floor_same_residue(13, 10, p3) == 12);
    CHECK(floor_same_residue(5, 5, Prime(7)) == 5);
    CHECK(floor_same_residue(5, 5, Prime(2)) == 5);

    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> dist(-500, 500);
    for (int pi : {2, 3, 5, 7}) {
        Prime p(pi);
        for (int it = 0; it < 200; ++it) {
            Int n = dist(rng), j = dist(rng);
            Int nj = floor_same_residue(n, j, p);
            CHECK(nj <= n);
            CHECK(mod_val(nj - j, pi - 1) == 0);
            CHECK(nj > n - (pi - 1));
        }
    }
}

TEST_CASE("p_valuation") {
    Prime p3(3);
    CHECK(p_valuation(15, p3) == 1);
    CHECK(p_valuation(9, p3) == 2);
    CHECK(p_valuation(7, p3) == 0);
    CHECK(p_valuation(-54, p3) == 3);
    CHECK_THROWS_AS(p_valuation(0, p3), InvalidInput);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> dist(1, 100000);
    for (int it = 0; it < 200; ++it) {
        Int n = dist(rng);
        Int e = p_valuation(n, p3);
        Int pe = 1;
        for (Int i = 0; i < e; ++i) pe *= 3;
        CHECK(n % pe == 0);
        CHECK(n % (pe * 3) != 0);
    }
}

TEST_CASE("atiyah_todd_valuation_bound") {
    CHECK(atiyah_todd_valuation_bound(5, Prime(3)) == 2);
    CHECK(atiyah_todd_valuation_bound(1, Prime(3)) == 0);
    CHECK(atiyah_todd_valuation_bound(1, Prime(2)) == 0);
    CHECK(atiyah_todd_valuation_bound(9, Prime(5)) == 2);
    CHECK_THROWS_AS(atiyah_todd_valuation_bound(0, Prime(3)), InvalidInput);
}

TEST_CASE("is_metastable") {
    CHECK(is_metastable(9, 13));
    CHECK_FALSE(is_metastable(5, 5));
    CHECK_FALSE(is_metastable(2, 5));
    CHECK(is_metastable(3, 6));  // boundary n = 2r
    for (long long r = 1; r <= 40; ++r)
        for (long long n = 1; n <= 40; ++n)
            CHECK(is_metastable(r, n) == (2 * r >= n && r < n));
}

TEST_CASE("floor_div rounds toward minus infinity") {
    CHECK(floor_div(-1, 2) == -1);
    CHECK(floor_div(1, 2) == 0);
    CHECK(floor_div(-4, 2) == -2);
    CHECK(floor_div(7, -2) == -4);
}

TEST_CASE("Prime validates primality") {
    CHECK_THROWS_AS(Prime(1), InvalidInput);
    CHECK_THROWS_AS(Prime(4), InvalidInput);
    CHECK_THROWS_AS(Prime(91), InvalidInput);  // 7 * 13
    CHECK(Prime(2).value() == 2);
    CHECK(Prime(97).value() == 97);
    CHECK(Prime(Int("1000000007")).value() == Int("1000000007"));
}
