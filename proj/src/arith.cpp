#include "arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) { u64 t = a % b; a = b; b = t; }
    return a;
}

// Brent's variant of Pollard rho; n must be odd composite and not a prime power of 2.
u64 pollard_brent(u64 n, u64 c0) {
    if (n % 2 == 0) return 2;
    u64 y = c0 % n, c = (c0 * 2654435761u + 1) % n, m = 128;
    if (c == 0) c = 1;
    u64 g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
        u64 k = 0;
        while (k < r && g == 1) {
            ys = y;
            u64 lim = std::min(m, r - k);
            for (u64 i = 0; i < lim; ++i) {
                y = (mulmod(y, y, n) + c) % n;
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = gcd_u64(q, n);
            k += lim;
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = (mulmod(ys, ys, n) + c) % n;
            g = gcd_u64(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_rec(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    u64 d = n;
    for (u64 c = 1; d == n; ++c) d = pollard_brent(n, c);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic witness set for 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

std::map<u64, unsigned> factor_u64(u64 n) {
    if (n == 0) throw std::domain_error("factor_u64: zero has no factorization");
    std::map<u64, unsigned> out;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) { ++out[p]; n /= p; }
    }
    for (u64 p = 17; p < 20000 && p * p <= n; p += 2) {
        while (n % p == 0) { ++out[p]; n /= p; }
    }
    factor_rec(n, out);
    return out;
}

FactoredInteger::FactoredInteger(std::map<u64, unsigned> f) : f_(std::move(f)) {
    for (auto it = f_.begin(); it != f_.end();) {
        if (it->second == 0) it = f_.erase(it);
        else {
            if (!is_prime_u64(it->first))
                throw std::domain_error("FactoredInteger: non-prime base");
            ++it;
        }
    }
}

FactoredInteger FactoredInteger::from_prime_power(u64 p, unsigned e) {
    FactoredInteger r;
    if (e > 0) {
        if (!is_prime_u64(p)) throw std::domain_error("from_prime_power: non-prime base");
        r.f_[p] = e;
    }
    return r;
}

Bigint FactoredInteger::value() const {
    Bigint v = 1;
    for (auto& [p, e] : f_) v *= bpow(Bigint(p), e);
    return v;
}

unsigned FactoredInteger::exponent_of(u64 p) const {
    auto it = f_.find(p);
    return it == f_.end() ? 0u : it->second;
}

Bigint FactoredInteger::p_part(u64 p) const { return bpow(Bigint(p), exponent_of(p)); }

FactoredInteger& FactoredInteger::operator*=(const FactoredInteger& o) {
    for (auto& [p, e] : o.f_) f_[p] += e;
    return *this;
}

FactoredInteger& FactoredInteger::operator/=(const FactoredInteger& o) {
    for (auto& [p, e] : o.f_) {
        auto it = f_.find(p);
        if (it == f_.end() || it->second < e)
            throw std::domain_error("FactoredInteger: inexact division");
        it->second -= e;
        if (it->second == 0) f_.erase(it);
    }
    return *this;
}

bool FactoredInteger::divides(const FactoredInteger& o) const {
    for (auto& [p, e] : f_) {
        if (o.exponent_of(p) < e) return false;
    }
    return true;
}

std::string FactoredInteger::str() const {
    if (f_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [p, e] : f_) {
        if (!first) os << "*";
        first = false;
        os << p;
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

Bigint r_part(const Bigint& n, u64 r) {
    if (n <= 0) throw std::domain_error("r_part: n must be positive");
    if (r < 2) throw std::domain_error("r_part: r must be a prime");
    Bigint part = 1, m = n;
    while (m % r == 0) { part *= r; m /= r; }
    return part;
}

u64 r_part_u64(u64 n, u64 r) { return to_u64(r_part(Bigint(n), r)); }

std::vector<u64> prime_divisors(const Bigint& n) {
    u64 v = to_u64(n);
    if (v == 0) throw std::domain_error("prime_divisors: zero");
    std::vector<u64> out;
    for (auto& [p, e] : factor_u64(v)) out.push_back(p);
    return out;
}

std::vector<u64> ppd(u64 a, unsigned m) {
    if (a < 2 || m < 2) throw std::domain_error("ppd: need a >= 2, m >= 2");
    // Hard-coded exceptional cases of Zsigmondy's theorem, by convention:
    // (2,6) is treated as having primitive prime divisor 7 even though
    // ord_7(2) = 3; for m = 2 with a+1 a power of 2 there is none.
    if (a == 2 && m == 6) return {7};
    if (m == 2 && ((a + 1) & a) == 0) return {};
    // Guard a^m within 64 bits.
    u128 pw = 1;
    for (unsigned i = 0; i < m; ++i) {
        pw *= a;
        if (pw > (u128)UINT64_MAX) throw std::overflow_error("ppd: a^m exceeds 64 bits");
    }
    u64 am = (u64)pw;
    std::vector<u64> out;
    for (auto& [r, e] : factor_u64(am - 1)) {
        bool primitive = true;
        for (unsigned k = 1; k < m && primitive; ++k) {
            if (powmod(a % r, k, r) == 1 % r) primitive = false;
        }
        if (primitive) out.push_back(r);
    }
    return out;
}

} // namespace gt
