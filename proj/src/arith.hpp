// Exact integer arithmetic on factored orders: factorization, r-parts,
// prime divisors, and primitive prime divisors of a^m - 1.
#pragma once

#include "bigint.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace gt {

// Deterministic Miller-Rabin primality for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

// Full factorization of n >= 1 (trial division + Brent-Pollard rho).
std::map<std::uint64_t, unsigned> factor_u64(std::uint64_t n);

// An integer kept in factored form. Exponent arithmetic is exact; the
// expanded value is available as a Bigint.
class FactoredInteger {
public:
    FactoredInteger() = default; // value 1
    explicit FactoredInteger(std::uint64_t n) : f_(factor_u64(n)) {}
    explicit FactoredInteger(std::map<std::uint64_t, unsigned> f);

    static FactoredInteger from_prime_power(std::uint64_t p, unsigned e);

    const std::map<std::uint64_t, unsigned>& factors() const { return f_; }
    Bigint value() const;
    unsigned exponent_of(std::uint64_t p) const;
    Bigint p_part(std::uint64_t p) const;

    FactoredInteger& operator*=(const FactoredInteger& o);
    // Exact division; throws std::domain_error if not divisible.
    FactoredInteger& operator/=(const FactoredInteger& o);
    friend FactoredInteger operator*(FactoredInteger a, const FactoredInteger& b) { return a *= b; }
    friend FactoredInteger operator/(FactoredInteger a, const FactoredInteger& b) { return a /= b; }
    bool operator==(const FactoredInteger& o) const { return f_ == o.f_; }

    bool divides(const FactoredInteger& o) const;
    std::string str() const;

private:
    std::map<std::uint64_t, unsigned> f_; // prime -> exponent, exponents > 0
};

// Largest power of the prime r dividing n (n >= 1). r_part(360,2) = 8.
Bigint r_part(const Bigint& n, std::uint64_t r);
std::uint64_t r_part_u64(std::uint64_t n, std::uint64_t r);

// Sorted prime divisors of n (n must fit in 64 bits).
std::vector<std::uint64_t> prime_divisors(const Bigint& n);

// Primitive prime divisors of a^m - 1: primes r dividing a^m - 1 but not
// a^k - 1 for any 1 <= k < m. Away from the hard-coded exceptional cases,
// each such r satisfies r = 1 (mod m). Exceptions by convention:
// ppd(2,6) = {7}; ppd(a,2) = {} when a+1 is a power of 2.
// Requires a >= 2, m >= 2, and a^m to fit in 64 bits.
std::vector<std::uint64_t> ppd(std::uint64_t a, unsigned m);

} // namespace gt
