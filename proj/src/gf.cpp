#include "gf.hpp"

#include "arith.hpp"

#include <stdexcept>

namespace gt {

namespace {

using Poly = std::vector<std::uint32_t>; // coefficients, constant term first

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    // m is monic of degree >= 1.
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        std::uint32_t lead = a.back();
        std::size_t shift = a.size() - 1 - dm;
        if (lead) {
            for (std::size_t i = 0; i <= dm; ++i) {
                std::uint32_t& c = a[shift + i];
                c = (c + p * p - lead * m[i] % (p * p)) % p; // c - lead*m[i] mod p
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

bool poly_divides(const Poly& d, Poly a, std::uint32_t p) {
    return poly_mod(std::move(a), d, p).empty();
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
    const std::size_t f = m.size() - 1;
    // Trial division by every monic polynomial of degree 1..f/2.
    for (std::size_t d = 1; 2 * d <= f; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t c = 0; c < count; ++c) {
            Poly u(d + 1, 0);
            std::uint64_t t = c;
            for (std::size_t i = 0; i < d; ++i) {
                u[i] = static_cast<std::uint32_t>(t % p);
                t /= p;
            }
            u[d] = 1;
            if (poly_divides(u, m, p)) return false;
        }
    }
    return true;
}

} // namespace

Gf::Gf(std::uint32_t p, std::uint32_t f) : p_(p), f_(f) {
    if (!is_prime_u64(p)) throw std::invalid_argument("Gf: p must be prime");
    if (f < 1 || f > 8) throw std::invalid_argument("Gf: need 1 <= f <= 8");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < f; ++i) q *= p;
    if (q > 256) throw std::invalid_argument("Gf: field too large for table representation");
    q_ = static_cast<std::uint32_t>(q);

    if (f_ == 1) {
        modulus_ = {0, 1}; // x, a formality for f = 1
    } else {
        for (std::uint32_t c = 0;; ++c) {
            if (c >= q_) throw std::logic_error("Gf: no irreducible modulus found");
            Poly m(f_ + 1, 0);
            std::uint32_t t = c;
            for (std::uint32_t i = 0; i < f_; ++i) {
                m[i] = t % p_;
                t /= p_;
            }
            m[f_] = 1;
            if (is_irreducible(m, p_)) {
                modulus_ = m;
                break;
            }
        }
    }

    auto decode = [&](std::uint32_t v) {
        Poly a(f_, 0);
        for (std::uint32_t i = 0; i < f_; ++i) {
            a[i] = v % p_;
            v /= p_;
        }
        return a;
    };
    auto encode = [&](const Poly& a) {
        std::uint32_t v = 0;
        for (std::size_t i = a.size(); i-- > 0;) v = v * p_ + a[i];
        return v;
    };

    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        Poly pa = decode(a);
        Poly na(f_, 0);
        for (std::uint32_t i = 0; i < f_; ++i) na[i] = (p_ - pa[i]) % p_;
        neg_[a] = encode(na);
        for (std::uint32_t b = 0; b < q_; ++b) {
            Poly pb = decode(b);
            Poly s(f_, 0);
            for (std::uint32_t i = 0; i < f_; ++i) s[i] = (pa[i] + pb[i]) % p_;
            add_[a * q_ + b] = encode(s);
            Poly prod(2 * f_ - 1, 0);
            for (std::uint32_t i = 0; i < f_; ++i)
                for (std::uint32_t j = 0; j < f_; ++j)
                    prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
            Poly r = f_ == 1 ? Poly{prod[0] % p_} : poly_mod(std::move(prod), modulus_, p_);
            r.resize(f_, 0);
            mul_[a * q_ + b] = encode(r);
        }
    }

    inv_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }

    for (std::uint32_t a = 1; a < q_; ++a)
        if (mult_order(a) == q_ - 1) {
            generator_ = a;
            break;
        }
}

std::uint32_t Gf::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("Gf::inv: zero");
    return inv_[a];
}

std::uint32_t Gf::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t Gf::mult_order(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("Gf::mult_order: zero");
    std::uint32_t ord = 1, x = a;
    while (x != 1) {
        x = mul(x, a);
        ++ord;
    }
    return ord;
}

bool Gf::is_square(std::uint32_t a) const {
    if (a == 0) return true;
    return pow(a, (q_ - 1) / (p_ == 2 ? 1 : 2)) == 1 || p_ == 2;
}

bool Gf::is_cube(std::uint32_t a) const {
    if (a == 0) return true;
    if ((q_ - 1) % 3 != 0) return true;
    return pow(a, (q_ - 1) / 3) == 1;
}

std::uint32_t Gf::from_int(std::int64_t n) const {
    std::int64_t m = n % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return static_cast<std::uint32_t>(m);
}

std::string Gf::modulus_string() const {
    if (f_ == 1) return "x";
    std::string s;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        if (modulus_[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(modulus_[i]);
        } else {
            if (modulus_[i] != 1) s += std::to_string(modulus_[i]) + "*";
            s += i == 1 ? "x" : "x^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace gt
