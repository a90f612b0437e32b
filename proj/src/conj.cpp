#include "conj.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gt {

std::vector<std::uint64_t> subgroup_fingerprint(const std::vector<Perm>& elements) {
    std::vector<std::uint64_t> key;
    key.reserve(elements.size());
    for (const Perm& g : elements) key.push_back(g.hash());
    std::sort(key.begin(), key.end());
    return key;
}

namespace {

// Conjugation orbit of a subgroup's element set under G's generators, with
// back-pointers. Node i's subgroup is root^{word(i)}; only fingerprints are
// stored, elements are reconstructed from the root on demand.
struct SubgroupOrbit {
    std::vector<std::uint32_t> parent, via;
    std::vector<std::vector<std::uint32_t>> edges; // edges[i][k]: node i under gen k
    std::unordered_map<std::vector<std::uint64_t>, std::uint32_t, U64VecHash> index;
    std::size_t size = 0;
    std::optional<std::uint32_t> hit; // set when a target fingerprint is found

    Perm word(std::uint32_t i, const std::vector<Perm>& gens, std::size_t degree) const {
        std::vector<std::uint32_t> labels;
        for (std::uint32_t j = i; j != 0; j = parent[j]) labels.push_back(via[j]);
        Perm w(degree);
        for (auto it = labels.rbegin(); it != labels.rend(); ++it) w = w * gens[*it];
        return w;
    }
};

SubgroupOrbit subgroup_orbit(const PermGroup& G, const std::vector<Perm>& root_elements,
                             const std::vector<std::uint64_t>* target,
                             std::uint64_t orbit_cap) {
    const auto& gens = G.generators();
    const std::size_t degree = G.degree();
    SubgroupOrbit o;
    auto root_key = subgroup_fingerprint(root_elements);
    if (target && root_key == *target) {
        o.hit = 0;
    }
    o.index.emplace(std::move(root_key), 0);
    o.parent = {0};
    o.via = {0};
    o.size = 1;
    if (o.hit) return o;

    for (std::uint32_t i = 0; i < o.size; ++i) {
        Perm w = o.word(i, gens, degree);
        o.edges.emplace_back(gens.size());
        for (std::uint32_t k = 0; k < gens.size(); ++k) {
            Perm m = w * gens[k];
            Perm minv = m.inverse();
            std::vector<std::uint64_t> key;
            key.reserve(root_elements.size());
            for (const Perm& e : root_elements) key.push_back((minv * (e * m)).hash());
            std::sort(key.begin(), key.end());
            auto it = o.index.find(key);
            if (it != o.index.end()) {
                o.edges[i][k] = it->second;
                continue;
            }
            if (o.size >= orbit_cap) throw std::length_error("subgroup_orbit: cap exceeded");
            bool is_target = target && key == *target;
            std::uint32_t j = static_cast<std::uint32_t>(o.size++);
            o.index.emplace(std::move(key), j);
            o.parent.push_back(i);
            o.via.push_back(k);
            o.edges[i][k] = j;
            if (is_target) {
                o.hit = j;
                return o;
            }
        }
    }
    return o;
}

// Schreier generators of the fingerprint stabilizer, each explicitly checked
// to normalize the root subgroup, so a fingerprint collision cannot smuggle
// in a non-normalizing element.
std::vector<Perm> verified_normalizer_gens(const PermGroup& G, const PermGroup& H,
                                           const std::vector<Perm>& root_elements,
                                           const SubgroupOrbit& o) {
    const auto& gens = G.generators();
    const std::size_t degree = G.degree();
    std::vector<Perm> words;
    words.reserve(o.size);
    for (std::uint32_t i = 0; i < o.size; ++i) words.push_back(o.word(i, gens, degree));
    std::vector<Perm> out;
    std::unordered_set<Perm, PermHash> seen;
    for (std::uint32_t i = 0; i < o.size; ++i) {
        for (std::uint32_t k = 0; k < gens.size(); ++k) {
            Perm m = words[i] * gens[k];
            Perm minv = m.inverse();
            std::vector<std::uint64_t> key;
            key.reserve(root_elements.size());
            for (const Perm& e : root_elements) key.push_back((minv * (e * m)).hash());
            std::sort(key.begin(), key.end());
            auto it = o.index.find(key);
            if (it == o.index.end())
                throw std::logic_error("verified_normalizer_gens: orbit not closed");
            Perm s = m * words[it->second].inverse();
            if (s.is_identity() || !seen.insert(s).second) continue;
            for (const Perm& h : H.generators())
                if (!H.contains(h.conjugated_by(s)))
                    throw std::logic_error(
                        "verified_normalizer_gens: fingerprint collision detected");
            out.push_back(std::move(s));
        }
    }
    return out;
}

} // namespace

PermGroup normalizer(const PermGroup& G, const PermGroup& H, std::uint64_t elem_cap,
                     std::uint64_t orbit_cap) {
    auto elements = H.elements(elem_cap);
    auto orbit = subgroup_orbit(G, elements, nullptr, orbit_cap);
    auto ngens = verified_normalizer_gens(G, H, elements, orbit);
    for (const Perm& h : H.generators()) ngens.push_back(h);
    PermGroup N(G.degree(), std::move(ngens));
    if (N.order() * orbit.size != G.order())
        throw std::logic_error("normalizer: orbit-stabilizer mismatch");
    return N;
}

PermGroup centralizer(const PermGroup& G, const Perm& x, std::uint64_t orbit_cap) {
    const auto& gens = G.generators();
    auto act = [&](const Perm& s, std::uint32_t k) { return s.conjugated_by(gens[k]); };
    auto orb = orbit_explore<Perm, PermHash>(x, gens.size(), act, orbit_cap);
    auto sgens = orbit_stabilizer_gens(orb, gens, G.degree(), act);
    PermGroup C(G.degree(), std::move(sgens));
    if (C.order() * orb.states.size() != G.order())
        throw std::logic_error("centralizer: orbit-stabilizer mismatch");
    return C;
}

std::uint64_t conjugacy_class_size(const PermGroup& G, const Perm& x, std::uint64_t cap) {
    const auto& gens = G.generators();
    auto act = [&](const Perm& s, std::uint32_t k) { return s.conjugated_by(gens[k]); };
    auto orb = orbit_explore<Perm, PermHash>(x, gens.size(), act, cap);
    return orb.states.size();
}

std::vector<Perm> conjugacy_class(const PermGroup& G, const Perm& x, std::uint64_t cap) {
    const auto& gens = G.generators();
    auto act = [&](const Perm& s, std::uint32_t k) { return s.conjugated_by(gens[k]); };
    auto orb = orbit_explore<Perm, PermHash>(x, gens.size(), act, cap);
    return orb.states;
}

std::optional<Perm> subgroup_transporter(const PermGroup& G, const PermGroup& K,
                                         const PermGroup& L, std::uint64_t elem_cap,
                                         std::uint64_t orbit_cap) {
    if (K.order() != L.order()) return std::nullopt;
    auto kelem = K.elements(elem_cap);
    auto lelem = L.elements(elem_cap);
    auto target = subgroup_fingerprint(lelem);
    auto orbit = subgroup_orbit(G, kelem, &target, orbit_cap);
    if (orbit.hit) {
        Perm g = orbit.word(*orbit.hit, G.generators(), G.degree());
        for (const Perm& k : K.generators())
            if (!L.contains(k.conjugated_by(g)))
                throw std::logic_error("subgroup_transporter: fingerprint collision detected");
        return g;
    }
    // The orbit closed without reaching L. Certify the enumeration with the
    // verified normalizer before accepting this as a non-conjugacy proof.
    auto ngens = verified_normalizer_gens(G, K, kelem, orbit);
    for (const Perm& h : K.generators()) ngens.push_back(h);
    PermGroup N(G.degree(), std::move(ngens));
    if (N.order() * orbit.size != G.order())
        throw std::logic_error("subgroup_transporter: orbit-stabilizer mismatch");
    return std::nullopt;
}

std::vector<PermGroup> subgroup_class(const PermGroup& G, const PermGroup& K,
                                      std::uint64_t elem_cap, std::uint64_t orbit_cap) {
    auto kelem = K.elements(elem_cap);
    auto orbit = subgroup_orbit(G, kelem, nullptr, orbit_cap);
    std::vector<PermGroup> out;
    out.reserve(orbit.size);
    for (std::uint32_t i = 0; i < orbit.size; ++i) {
        Perm w = orbit.word(i, G.generators(), G.degree());
        out.push_back(conjugated_group(K, w));
    }
    return out;
}

} // namespace gt
