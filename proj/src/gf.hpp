#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gt {

// Small finite field F_{p^f} with full lookup tables. Elements are encoded
// as integers 0..q-1: the element sum a_i * x^i (a_i in F_p) is encoded as
// sum a_i * p^i, so 0 and 1 are the field's zero and one and the prime
// subfield occupies 0..p-1. For f >= 2 the modulus is the monic irreducible
// x^f + a_{f-1} x^{f-1} + ... + a_0 whose coefficient encoding
// sum a_i * p^i is smallest; it is recorded by modulus_string().
class Gf {
public:
    Gf(std::uint32_t p, std::uint32_t f);

    std::uint32_t p() const { return p_; }
    std::uint32_t f() const { return f_; }
    std::uint32_t q() const { return q_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + neg_[b]]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }

    // Multiplicative order of a nonzero element.
    std::uint32_t mult_order(std::uint32_t a) const;
    // Smallest-encoded primitive element.
    std::uint32_t generator() const { return generator_; }

    bool is_square(std::uint32_t a) const; // 0 counts as a square
    bool is_cube(std::uint32_t a) const;

    std::uint32_t from_int(std::int64_t n) const; // image of an integer in the prime subfield

    const std::vector<std::uint32_t>& modulus() const { return modulus_; } // degree f+1, monic
    std::string modulus_string() const;

private:
    std::uint32_t p_, f_, q_;
    std::vector<std::uint32_t> modulus_; // coefficients a_0..a_f with a_f == 1
    std::vector<std::uint32_t> add_, mul_, neg_;
    std::vector<std::uint32_t> inv_;
    std::uint32_t generator_ = 0;
};

} // namespace gt
