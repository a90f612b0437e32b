#pragma once

#include "bsgs.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace gt {

struct U32VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct U64VecHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::uint64_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Orbit of a state under right actions of group generators, with
// back-pointers for word reconstruction. states[0] is the root.
template <class State, class StateHash>
struct Orbit {
    std::vector<State> states;
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> via; // generator index labeling parent -> state
    std::unordered_map<State, std::uint32_t, StateHash> index;

    std::optional<std::uint32_t> find(const State& s) const {
        auto it = index.find(s);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
};

// Breadth-first orbit exploration; act(state, k) applies generator k on the
// right. Throws length_error when the orbit would exceed cap states.
template <class State, class StateHash, class Act>
Orbit<State, StateHash> orbit_explore(State root, std::size_t ngens, Act&& act,
                                      std::uint64_t cap) {
    Orbit<State, StateHash> o;
    o.index.emplace(root, 0);
    o.states.push_back(std::move(root));
    o.parent.push_back(0);
    o.via.push_back(0);
    for (std::uint32_t i = 0; i < o.states.size(); ++i) {
        for (std::uint32_t k = 0; k < ngens; ++k) {
            State next = act(o.states[i], k);
            if (o.index.count(next)) continue;
            if (o.states.size() >= cap)
                throw std::length_error("orbit_explore: cap exceeded");
            o.index.emplace(next, static_cast<std::uint32_t>(o.states.size()));
            o.states.push_back(std::move(next));
            o.parent.push_back(i);
            o.via.push_back(k);
        }
    }
    return o;
}

// Group element carrying the root to states[idx] (product of the edge
// generators along the tree path).
template <class State, class StateHash>
Perm orbit_word(const Orbit<State, StateHash>& o, std::uint32_t idx,
                const std::vector<Perm>& gens, std::size_t degree) {
    std::vector<std::uint32_t> labels;
    for (std::uint32_t i = idx; i != 0; i = o.parent[i]) labels.push_back(o.via[i]);
    Perm w(degree);
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) w = w * gens[*it];
    return w;
}

// Schreier generators of the stabilizer of the root (complete by Schreier's
// lemma: one generator per (state, group generator) pair).
template <class State, class StateHash, class Act>
std::vector<Perm> orbit_stabilizer_gens(const Orbit<State, StateHash>& o,
                                        const std::vector<Perm>& gens,
                                        std::size_t degree, Act&& act) {
    std::vector<Perm> words;
    words.reserve(o.states.size());
    for (std::uint32_t i = 0; i < o.states.size(); ++i)
        words.push_back(orbit_word(o, i, gens, degree));
    std::vector<Perm> out;
    std::unordered_map<Perm, bool, PermHash> seen;
    for (std::uint32_t i = 0; i < o.states.size(); ++i)
        for (std::uint32_t k = 0; k < gens.size(); ++k) {
            auto j = o.find(act(o.states[i], k));
            if (!j) throw std::logic_error("orbit_stabilizer_gens: orbit not closed");
            Perm s = words[i] * gens[k] * words[*j].inverse();
            if (s.is_identity()) continue;
            if (seen.emplace(s, true).second) out.push_back(std::move(s));
        }
    return out;
}

// Stabilizer of a point set (as an unordered set), with an orbit-stabilizer
// order certificate against |G|.
PermGroup set_stabilizer(const PermGroup& G, const std::vector<std::uint32_t>& set,
                         std::uint64_t cap = 1u << 24);

// Element mapping one point set onto another, if any; nullopt is a proof of
// non-existence (the full orbit was enumerated).
std::optional<Perm> set_transporter(const PermGroup& G,
                                    const std::vector<std::uint32_t>& src,
                                    const std::vector<std::uint32_t>& dst,
                                    std::uint64_t cap = 1u << 24);

// Element g with src[i]^g == dst[i] for all i, via a stabilizer chain with
// the source tuple as prescribed base; nullopt is a proof of non-existence.
std::optional<Perm> tuple_transporter(const PermGroup& G,
                                      const std::vector<std::uint32_t>& src,
                                      const std::vector<std::uint32_t>& dst);

// Orbit representatives (smallest point of each orbit) of the group
// generated by `gens` acting on 0..npoints-1.
std::vector<std::uint32_t> orbit_reps_on_points(const std::vector<Perm>& gens,
                                                std::size_t npoints);

PermGroup conjugated_group(const PermGroup& H, const Perm& c);

// Right-coset space H\G with G acting on the right. Each coset is stored by
// its canonical representative: the unique element of the coset whose image
// vector is lexicographically least, computed greedily down a stabilizer
// chain of H whose base is the sorted support of H.
class CosetTable {
public:
    CosetTable(const PermGroup& G, const PermGroup& H, std::uint64_t max_index);

    std::size_t index() const { return reps_.size(); }
    const Perm& rep(std::size_t i) const { return reps_[i]; }
    std::uint32_t coset_of(const Perm& g) const;
    // Permutation induced on the coset space.
    Perm action_of(const Perm& g) const;
    const std::vector<Perm>& gen_images() const { return gen_images_; }

    Perm canonical(Perm x) const;

private:
    PermGroup hchain_;
    std::vector<Perm> reps_;
    std::unordered_map<Perm, std::uint32_t, PermHash> idx_;
    std::vector<Perm> gen_images_;
};

} // namespace gt
