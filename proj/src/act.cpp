#include "act.hpp"

#include <algorithm>

namespace gt {

namespace {

std::vector<std::uint32_t> sorted_image(const std::vector<std::uint32_t>& set,
                                        const Perm& g) {
    std::vector<std::uint32_t> img;
    img.reserve(set.size());
    for (std::uint32_t p : set) img.push_back(g[p]);
    std::sort(img.begin(), img.end());
    return img;
}

// Union of generator supports, sorted: the only points any element of the
// generated group can move.
std::vector<std::uint32_t> group_support(const PermGroup& H) {
    std::vector<bool> moved(H.degree(), false);
    for (const Perm& g : H.generators())
        for (std::uint32_t p : g.moved_points()) moved[p] = true;
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 0; p < H.degree(); ++p)
        if (moved[p]) out.push_back(p);
    return out;
}

} // namespace

PermGroup set_stabilizer(const PermGroup& G, const std::vector<std::uint32_t>& set,
                         std::uint64_t cap) {
    std::vector<std::uint32_t> root = set;
    std::sort(root.begin(), root.end());
    const auto& gens = G.generators();
    auto act = [&](const std::vector<std::uint32_t>& s, std::uint32_t k) {
        return sorted_image(s, gens[k]);
    };
    auto orb = orbit_explore<std::vector<std::uint32_t>, U32VecHash>(root, gens.size(), act, cap);
    auto sgens = orbit_stabilizer_gens(orb, gens, G.degree(), act);
    PermGroup stab(G.degree(), std::move(sgens));
    if (stab.order() * orb.states.size() != G.order())
        throw std::logic_error("set_stabilizer: orbit-stabilizer mismatch");
    return stab;
}

std::optional<Perm> set_transporter(const PermGroup& G,
                                    const std::vector<std::uint32_t>& src,
                                    const std::vector<std::uint32_t>& dst,
                                    std::uint64_t cap) {
    std::vector<std::uint32_t> root = src, target = dst;
    std::sort(root.begin(), root.end());
    std::sort(target.begin(), target.end());
    if (root.size() != target.size()) return std::nullopt;
    const auto& gens = G.generators();
    auto act = [&](const std::vector<std::uint32_t>& s, std::uint32_t k) {
        return sorted_image(s, gens[k]);
    };
    auto orb = orbit_explore<std::vector<std::uint32_t>, U32VecHash>(root, gens.size(), act, cap);
    auto hit = orb.find(target);
    if (!hit) return std::nullopt;
    return orbit_word(orb, *hit, gens, G.degree());
}

std::optional<Perm> tuple_transporter(const PermGroup& G,
                                      const std::vector<std::uint32_t>& src,
                                      const std::vector<std::uint32_t>& dst) {
    if (src.size() != dst.size())
        throw std::invalid_argument("tuple_transporter: length mismatch");
    PermGroup chain(G.degree(), G.generators(), src);
    std::vector<std::uint32_t> target = dst;
    Perm acc(G.degree());
    for (std::size_t i = 0; i < src.size(); ++i) {
        std::uint32_t y = target[i];
        if (!chain.level_orbit_contains(i, y)) return std::nullopt;
        Perm u = chain.transversal(i, y);
        acc = u * acc;
        Perm uinv = u.inverse();
        for (std::size_t j = i + 1; j < target.size(); ++j) target[j] = uinv[target[j]];
    }
    for (std::size_t i = 0; i < src.size(); ++i)
        if (acc[src[i]] != dst[i]) throw std::logic_error("tuple_transporter: verification failed");
    return acc;
}

std::vector<std::uint32_t> orbit_reps_on_points(const std::vector<Perm>& gens,
                                                std::size_t npoints) {
    std::vector<bool> seen(npoints, false);
    std::vector<std::uint32_t> reps;
    for (std::uint32_t p = 0; p < npoints; ++p) {
        if (seen[p]) continue;
        reps.push_back(p);
        std::vector<std::uint32_t> todo{p};
        seen[p] = true;
        while (!todo.empty()) {
            std::uint32_t x = todo.back();
            todo.pop_back();
            for (const Perm& g : gens) {
                std::uint32_t y = g[x];
                if (!seen[y]) {
                    seen[y] = true;
                    todo.push_back(y);
                }
            }
        }
    }
    return reps;
}

PermGroup conjugated_group(const PermGroup& H, const Perm& c) {
    std::vector<Perm> gens;
    gens.reserve(H.generators().size());
    for (const Perm& g : H.generators()) gens.push_back(g.conjugated_by(c));
    return PermGroup(H.degree(), std::move(gens));
}

CosetTable::CosetTable(const PermGroup& G, const PermGroup& H, std::uint64_t max_index)
    : hchain_(H.degree(), H.generators(), group_support(H)) {
    if (H.degree() != G.degree())
        throw std::invalid_argument("CosetTable: degree mismatch");
    for (const Perm& g : H.generators())
        if (!G.contains(g)) throw std::invalid_argument("CosetTable: H is not a subgroup of G");

    Perm root = canonical(Perm(G.degree()));
    idx_.emplace(root, 0);
    reps_.push_back(std::move(root));
    const auto& gens = G.generators();
    std::vector<std::vector<std::uint32_t>> images(gens.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Perm next = canonical(reps_[i] * gens[k]);
            auto it = idx_.find(next);
            std::uint32_t j;
            if (it == idx_.end()) {
                if (reps_.size() >= max_index)
                    throw std::length_error("CosetTable: index cap exceeded");
                j = static_cast<std::uint32_t>(reps_.size());
                idx_.emplace(next, j);
                reps_.push_back(std::move(next));
            } else {
                j = it->second;
            }
            images[k].push_back(j);
        }
    }
    for (std::size_t k = 0; k < gens.size(); ++k) {
        images[k].resize(reps_.size());
        gen_images_.push_back(Perm::from_images(std::move(images[k])));
    }
}

Perm CosetTable::canonical(Perm x) const {
    // Greedy minimization of the image vector position by position; at the
    // level with base point b, choosing orbit point c makes x[c] the value
    // at position b, and the minimizing c is unique because x is injective.
    for (std::size_t lvl = 0; lvl < hchain_.chain_length(); ++lvl) {
        const auto& orbit = hchain_.level_orbit(lvl);
        if (orbit.size() == 1) continue;
        std::uint32_t best = orbit[0];
        for (std::uint32_t c : orbit)
            if (x[c] < x[best]) best = c;
        if (best != hchain_.base_point(lvl)) x = hchain_.transversal(lvl, best) * x;
    }
    return x;
}

std::uint32_t CosetTable::coset_of(const Perm& g) const {
    auto it = idx_.find(canonical(g));
    if (it == idx_.end()) throw std::invalid_argument("CosetTable::coset_of: not in the group");
    return it->second;
}

Perm CosetTable::action_of(const Perm& g) const {
    std::vector<std::uint32_t> img(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) img[i] = coset_of(reps_[i] * g);
    return Perm::from_images(std::move(img));
}

} // namespace gt
