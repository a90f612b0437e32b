// Seeded random number generation. Every randomized routine takes an Rng so
// runs are reproducible from the seed recorded in reports.
#pragma once

#include <cstdint>
#include <random>

namespace gt {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), eng_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // Uniform value in [0, n).
    std::uint64_t below(std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_);
    }

    bool coin() { return below(2) == 1; }

    std::mt19937_64& engine() { return eng_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 eng_;
};

// Fixed default seed: keeps artifacts byte-identical across runs.
inline constexpr std::uint64_t kDefaultSeed = 20260822ULL;

} // namespace gt
