#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../src/arith.hpp"

#include <set>

using namespace gt;

TEST_CASE("r_part basic values") {
    CHECK(r_part(Bigint(360), 2) == 8);
    CHECK(r_part(Bigint(360), 3) == 9);
    CHECK(r_part(Bigint(360), 5) == 5);
    CHECK(r_part(Bigint(360), 7) == 1);
    CHECK(r_part(Bigint("11072935641600"), 7) == 117649);
    CHECK(r_part_u64(11072935641600ull, 7) == 117649);
}

TEST_CASE("r_part multiplicativity across distinct primes") {
    for (std::uint64_t n : {360ull, 95040ull, 11072935641600ull, 604800ull}) {
        auto ps = prime_divisors(Bigint(n));
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j) {
                Bigint prod = r_part(Bigint(n), ps[i]) * r_part(Bigint(n), ps[j]);
                CHECK(Bigint(n) % prod == 0);
            }
    }
}

TEST_CASE("prime_divisors") {
    auto pd = prime_divisors(Bigint("11072935641600"));
    CHECK(pd == std::vector<std::uint64_t>{2, 3, 5, 7, 19, 43});
    CHECK(prime_divisors(Bigint(1)).empty());
    CHECK(prime_divisors(Bigint(64)) == std::vector<std::uint64_t>{2});
    // Union property on a few samples.
    auto u = prime_divisors(Bigint(360) * 77);
    CHECK(u == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
}

TEST_CASE("factor_u64 round trips") {
    for (std::uint64_t n : {2ull, 97ull, 443520ull, 175560ull, 11072935641600ull,
                            999999999989ull /* prime */, 1000003ull * 1000033ull}) {
        auto f = factor_u64(n);
        Bigint v = 1;
        for (auto& [p, e] : f) {
            CHECK(is_prime_u64(p));
            v *= bpow(Bigint(p), e);
        }
        CHECK(v == n);
    }
}

TEST_CASE("ppd examples and conventions") {
    CHECK(ppd(2, 6) == std::vector<std::uint64_t>{7});
    CHECK(ppd(2, 4) == std::vector<std::uint64_t>{5});
    CHECK(ppd(7, 2).empty()); // 7+1 is a power of 2
    CHECK(ppd(2, 11) == std::vector<std::uint64_t>{23, 89});
    // 49^3-1 = 2^4*3^2*19*43; 19 and 43 divide neither 49-1 nor 49^2-1.
    CHECK(ppd(49, 3) == std::vector<std::uint64_t>{19, 43});
}

TEST_CASE("ppd congruence r = 1 mod m over the grid") {
    for (std::uint64_t a = 2; a <= 20; ++a)
        for (unsigned m = 2; m <= 14; ++m) {
            if (a == 2 && m == 6) continue; // conventional exception
            for (std::uint64_t r : ppd(a, m)) {
                CHECK(r % m == 1);
                CHECK(r > m);
            }
        }
}

TEST_CASE("FactoredInteger arithmetic") {
    FactoredInteger a(360), b(77);
    auto c = a * b;
    CHECK(c.value() == 27720);
    CHECK(c.exponent_of(2) == 3);
    CHECK(c.exponent_of(11) == 1);
    auto d = c / b;
    CHECK(d == a);
    CHECK(a.p_part(2) == 8);
    CHECK(FactoredInteger(1).value() == 1);
    CHECK(b.divides(c));
    CHECK(!c.divides(b));
    CHECK_THROWS(a / b);
    CHECK(FactoredInteger(11072935641600ull).str() == "2^9*3^2*5^2*7^6*19*43");
}
