// Arbitrary-precision integer alias and small helpers shared across modules.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gt {

using Bigint = boost::multiprecision::cpp_int;

inline Bigint bpow(Bigint base, std::uint64_t exp) {
    Bigint r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

// Narrow to uint64_t, throwing when the value does not fit.
inline std::uint64_t to_u64(const Bigint& v) {
    if (v < 0 || v > Bigint(UINT64_MAX))
        throw std::overflow_error("to_u64: value out of range: " + v.str());
    return v.convert_to<std::uint64_t>();
}

} // namespace gt
