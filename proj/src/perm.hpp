#pragma once

#include "bigint.hpp"

#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gt {

// Permutation of {0, ..., degree-1}, acting on the right: the image of a
// point p under g is g[p], and (g * h)[p] == h[g[p]] (apply g, then h).
// Text I/O uses 1-indexed cycle notation; everything internal is 0-indexed.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::size_t degree) : img_(degree) {
        for (std::size_t i = 0; i < degree; ++i) img_[i] = static_cast<std::uint32_t>(i);
    }

    static Perm from_images(std::vector<std::uint32_t> img);
    // Product of pairwise-disjoint cycles, 0-indexed points.
    static Perm from_cycles(std::size_t degree,
                            const std::vector<std::vector<std::uint32_t>>& cycles);
    // Parses 1-indexed disjoint cycle notation, e.g. "(1,2,3)(4,5)"; "()" is
    // the identity. Separators may be commas or spaces.
    static Perm parse_cycles(std::size_t degree, std::string_view text);

    std::size_t degree() const { return img_.size(); }

    std::uint32_t operator[](std::uint32_t p) const {
        assert(p < img_.size());
        return img_[p];
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    // First point moved, or degree() for the identity.
    std::uint32_t first_moved() const {
        for (std::size_t i = 0; i < img_.size(); ++i)
            if (img_[i] != i) return static_cast<std::uint32_t>(i);
        return static_cast<std::uint32_t>(img_.size());
    }

    std::vector<std::uint32_t> moved_points() const;

    Perm operator*(const Perm& h) const {
        assert(degree() == h.degree());
        Perm r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = h.img_[img_[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<std::uint32_t>(i);
        return r;
    }

    // h^{-1} * (*this) * h.
    Perm conjugated_by(const Perm& h) const;

    Perm power(std::int64_t e) const;

    // Exact order (lcm of cycle lengths); arbitrary precision since the lcm
    // can overflow 64 bits at large degree.
    Bigint order() const;

    // Nontrivial cycles; each starts at its smallest point, listed in
    // increasing order of that point.
    std::vector<std::vector<std::uint32_t>> cycles() const;
    std::string cycle_string() const; // 1-indexed; "()" for the identity

    const std::vector<std::uint32_t>& images() const { return img_; }

    // Non-cryptographic 64-bit FNV-1a over the image words.
    std::uint64_t hash() const;

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<std::uint32_t> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& g) const { return static_cast<std::size_t>(g.hash()); }
};

// Restriction of g to an invariant point set: result has degree
// points.size() and maps i to the position of points[i]^g within points.
// Throws if the set is not g-invariant.
Perm relabel(const Perm& g, const std::vector<std::uint32_t>& points);

} // namespace gt
