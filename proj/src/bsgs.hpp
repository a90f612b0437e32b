#pragma once

#include "bigint.hpp"
#include "perm.hpp"
#include "rng.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gt {

// Finite permutation group with a verified base and strong generating set.
//
// Construction runs a randomized warm start (sifting pseudo-random products)
// followed by a deterministic verification sweep that checks every Schreier
// generator at every level, so the resulting order and membership tests are
// exact, not Monte Carlo. A prescribed base prefix may be supplied; one chain
// level is created for each prescribed point, in order, even when the orbit
// at that level is a singleton. This makes stabilizers of point tuples read
// off the chain directly and keeps canonical-coset walks deterministic.
class PermGroup {
public:
    PermGroup() = default; // trivial group of degree 0

    explicit PermGroup(std::size_t degree) : degree_(degree) {}

    PermGroup(std::size_t degree, std::vector<Perm> generators,
              std::vector<std::uint32_t> prescribed_base = {},
              std::uint64_t seed = kDefaultSeed);

    std::size_t degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Perm>& strong_generators() const { return strong_; }
    const Bigint& order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    bool contains(const Perm& g) const;
    // Residue after stripping through the chain, with the level at which
    // stripping stopped (== chain_length() when it ran through; the element
    // is a member iff the residue is the identity).
    std::pair<Perm, std::size_t> sift(const Perm& g) const;

    std::size_t chain_length() const { return chain_.size(); }
    std::uint32_t base_point(std::size_t level) const { return chain_[level].base; }
    std::vector<std::uint32_t> base() const;
    const std::vector<std::uint32_t>& level_orbit(std::size_t level) const {
        return chain_[level].orbit;
    }
    bool level_orbit_contains(std::size_t level, std::uint32_t p) const {
        return chain_[level].tree_parent[p] >= 0;
    }
    // Element u of the level's group with base_point(level)^u == p.
    Perm transversal(std::size_t level, std::uint32_t p) const;

    // Exactly uniform over the group (independent transversal choices).
    Perm random_element(Rng& rng) const;

    // All elements, via the unique chain factorization. Throws if the order
    // exceeds the cap.
    std::vector<Perm> elements(std::uint64_t cap) const;

    PermGroup point_stabilizer(std::uint32_t p) const;
    // Pointwise stabilizer of the tuple, with an orbit-stabilizer order
    // cross-check against this group's order.
    PermGroup stabilizer_of_points(const std::vector<std::uint32_t>& pts) const;

    std::vector<std::uint32_t> orbit_of(std::uint32_t p) const;
    std::vector<std::vector<std::uint32_t>> orbits() const;
    bool is_transitive() const;

private:
    struct Level {
        std::uint32_t base = 0;
        std::vector<std::uint32_t> gen_idx; // strong_ indices fixing all earlier bases
        std::vector<std::uint32_t> orbit;   // discovery order; orbit[0] == base
        std::vector<std::int32_t> tree_parent; // -1 outside orbit; base points to itself
        std::vector<std::int32_t> tree_gen;    // strong_ index labeling edge parent -> point
        std::size_t checked_orbit = 0; // Schreier pairs verified up to this rectangle
        std::size_t checked_gens = 0;
    };

    void add_level(std::uint32_t base);
    void register_strong(Perm g); // g != identity; fixes a prefix of the base
    void extend_orbit(std::size_t level);
    std::pair<Perm, std::size_t> sift_from(std::size_t level, Perm g) const;
    std::optional<std::size_t> verify_level(std::size_t level);
    void build(const std::vector<std::uint32_t>& prescribed, std::uint64_t seed);

    std::size_t degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<Perm> strong_, strong_inv_;
    std::vector<Level> chain_;
    Bigint order_ = 1;
};

} // namespace gt
