#include "bsgs.hpp"

#include <algorithm>
#include <stdexcept>

namespace gt {

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators,
                     std::vector<std::uint32_t> prescribed_base, std::uint64_t seed)
    : degree_(degree), gens_(std::move(generators)) {
    for (const Perm& g : gens_)
        if (g.degree() != degree_)
            throw std::invalid_argument("PermGroup: generator degree mismatch");
    build(prescribed_base, seed);
}

void PermGroup::add_level(std::uint32_t base) {
    if (base >= degree_) throw std::invalid_argument("PermGroup: base point out of range");
    Level L;
    L.base = base;
    L.orbit = {base};
    L.tree_parent.assign(degree_, -1);
    L.tree_gen.assign(degree_, -1);
    L.tree_parent[base] = static_cast<std::int32_t>(base);
    chain_.push_back(std::move(L));
}

void PermGroup::extend_orbit(std::size_t level) {
    Level& L = chain_[level];
    for (std::size_t qi = 0; qi < L.orbit.size(); ++qi) {
        std::uint32_t p = L.orbit[qi];
        for (std::uint32_t k : L.gen_idx) {
            std::uint32_t q = strong_[k][p];
            if (L.tree_parent[q] < 0) {
                L.tree_parent[q] = static_cast<std::int32_t>(p);
                L.tree_gen[q] = static_cast<std::int32_t>(k);
                L.orbit.push_back(q);
            }
        }
    }
}

void PermGroup::register_strong(Perm g) {
    strong_inv_.push_back(g.inverse());
    strong_.push_back(std::move(g));
    const std::uint32_t k = static_cast<std::uint32_t>(strong_.size() - 1);
    const Perm& s = strong_.back();
    std::size_t lvl = 0;
    for (;;) {
        if (lvl == chain_.size()) add_level(s.first_moved());
        chain_[lvl].gen_idx.push_back(k);
        extend_orbit(lvl);
        if (s[chain_[lvl].base] != chain_[lvl].base) break;
        ++lvl;
    }
}

Perm PermGroup::transversal(std::size_t level, std::uint32_t p) const {
    const Level& L = chain_[level];
    if (L.tree_parent[p] < 0)
        throw std::invalid_argument("PermGroup::transversal: point not in orbit");
    std::vector<std::uint32_t> labels;
    for (std::uint32_t q = p; q != L.base; q = static_cast<std::uint32_t>(L.tree_parent[q]))
        labels.push_back(static_cast<std::uint32_t>(L.tree_gen[q]));
    Perm u(degree_);
    for (auto it = labels.rbegin(); it != labels.rend(); ++it) u = u * strong_[*it];
    return u;
}

std::pair<Perm, std::size_t> PermGroup::sift_from(std::size_t level, Perm g) const {
    for (std::size_t i = level; i < chain_.size(); ++i) {
        const Level& L = chain_[i];
        std::uint32_t p = g[L.base];
        if (p == L.base) continue;
        if (L.tree_parent[p] < 0) return {std::move(g), i};
        while (p != L.base) {
            g = g * strong_inv_[static_cast<std::uint32_t>(L.tree_gen[p])];
            p = static_cast<std::uint32_t>(L.tree_parent[p]);
        }
    }
    return {std::move(g), chain_.size()};
}

std::pair<Perm, std::size_t> PermGroup::sift(const Perm& g) const {
    if (g.degree() != degree_) throw std::invalid_argument("PermGroup::sift: degree mismatch");
    return sift_from(0, g);
}

bool PermGroup::contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    return sift(g).first.is_identity();
}

std::optional<std::size_t> PermGroup::verify_level(std::size_t level) {
    extend_orbit(level);
    for (std::size_t gs = 0; gs < chain_[level].gen_idx.size(); ++gs) {
        for (std::size_t pi = 0; pi < chain_[level].orbit.size(); ++pi) {
            const Level& L = chain_[level];
            if (gs < L.checked_gens && pi < L.checked_orbit) continue;
            const std::uint32_t p = L.orbit[pi];
            const Perm& s = strong_[L.gen_idx[gs]];
            // Schreier generator u_p * s * u_{p^s}^{-1}; the tail inverse is
            // applied by walking the tree edges backwards.
            Perm w = transversal(level, p) * s;
            std::uint32_t c = w[L.base];
            while (c != L.base) {
                w = w * strong_inv_[static_cast<std::uint32_t>(L.tree_gen[c])];
                c = static_cast<std::uint32_t>(L.tree_parent[c]);
            }
            if (w.is_identity()) continue;
            auto [residue, drop] = sift_from(level + 1, std::move(w));
            if (!residue.is_identity()) {
                register_strong(std::move(residue));
                return drop; // this level and the dropout level gained pairs
            }
        }
    }
    chain_[level].checked_gens = chain_[level].gen_idx.size();
    chain_[level].checked_orbit = chain_[level].orbit.size();
    return std::nullopt;
}

void PermGroup::build(const std::vector<std::uint32_t>& prescribed, std::uint64_t seed) {
    for (std::size_t i = 0; i < prescribed.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (prescribed[i] == prescribed[j])
                throw std::invalid_argument("PermGroup: duplicate prescribed base point");
        add_level(prescribed[i]);
    }
    for (const Perm& g : gens_)
        if (!g.is_identity()) register_strong(g);

    if (!strong_.empty()) {
        // Warm start: sift pseudo-random products and add what fails to
        // strip. Exactness comes from the verification sweep below.
        Rng rng(seed);
        std::vector<Perm> slots;
        while (slots.size() < 10)
            for (const Perm& g : gens_) {
                if (!g.is_identity()) slots.push_back(g);
                if (slots.size() >= 10) break;
            }
        Perm acc(degree_);
        auto mutate = [&] {
            std::size_t i = rng.below(slots.size());
            std::size_t j = rng.below(slots.size());
            if (i == j) j = (j + 1) % slots.size();
            slots[i] = rng.coin() ? slots[i] * slots[j] : slots[j] * slots[i];
            acc = acc * slots[i];
        };
        for (int burn = 0; burn < 50; ++burn) mutate();
        for (int draw = 0; draw < 48; ++draw) {
            mutate();
            mutate();
            auto [residue, drop] = sift_from(0, acc);
            (void)drop;
            if (!residue.is_identity()) register_strong(std::move(residue));
        }
    }

    // Deterministic sweep: verify levels bottom-up; a residue added at a
    // deeper level re-opens that level (and only levels at or above it have
    // unverified pairs left, tracked by the per-level rectangles).
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain_.size()) - 1;
    while (i >= 0) {
        auto jump = verify_level(static_cast<std::size_t>(i));
        if (jump)
            i = static_cast<std::ptrdiff_t>(*jump);
        else
            --i;
    }

    order_ = 1;
    for (const Level& L : chain_) order_ *= static_cast<std::uint64_t>(L.orbit.size());
}

std::vector<std::uint32_t> PermGroup::base() const {
    std::vector<std::uint32_t> b;
    b.reserve(chain_.size());
    for (const Level& L : chain_) b.push_back(L.base);
    return b;
}

Perm PermGroup::random_element(Rng& rng) const {
    Perm g(degree_);
    for (std::size_t i = chain_.size(); i-- > 0;) {
        const Level& L = chain_[i];
        g = g * transversal(i, L.orbit[rng.below(L.orbit.size())]);
    }
    return g;
}

std::vector<Perm> PermGroup::elements(std::uint64_t cap) const {
    if (order_ > cap) throw std::length_error("PermGroup::elements: order exceeds cap");
    std::vector<Perm> out{Perm(degree_)};
    for (std::size_t i = chain_.size(); i-- > 0;) {
        const Level& L = chain_[i];
        if (L.orbit.size() == 1) continue;
        std::vector<Perm> trans;
        trans.reserve(L.orbit.size());
        for (std::uint32_t p : L.orbit) trans.push_back(transversal(i, p));
        std::vector<Perm> next;
        next.reserve(out.size() * trans.size());
        for (const Perm& e : out)
            for (const Perm& u : trans) next.push_back(e * u);
        out = std::move(next);
    }
    return out;
}

PermGroup PermGroup::point_stabilizer(std::uint32_t p) const {
    return stabilizer_of_points({p});
}

PermGroup PermGroup::stabilizer_of_points(const std::vector<std::uint32_t>& pts) const {
    PermGroup re(degree_, gens_, pts);
    std::vector<Perm> sgens;
    if (re.chain_.size() > pts.size())
        for (std::uint32_t k : re.chain_[pts.size()].gen_idx) sgens.push_back(re.strong_[k]);
    PermGroup stab(degree_, std::move(sgens));
    Bigint prefix = 1;
    for (std::size_t i = 0; i < pts.size(); ++i)
        prefix *= static_cast<std::uint64_t>(re.chain_[i].orbit.size());
    if (prefix * stab.order() != order_)
        throw std::logic_error("PermGroup::stabilizer_of_points: orbit-stabilizer mismatch");
    return stab;
}

std::vector<std::uint32_t> PermGroup::orbit_of(std::uint32_t p) const {
    std::vector<std::uint32_t> orbit{p};
    std::vector<bool> seen(degree_, false);
    seen[p] = true;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi)
        for (const Perm& g : gens_) {
            std::uint32_t q = g[orbit[qi]];
            if (!seen[q]) {
                seen[q] = true;
                orbit.push_back(q);
            }
        }
    return orbit;
}

std::vector<std::vector<std::uint32_t>> PermGroup::orbits() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(degree_, false);
    for (std::uint32_t p = 0; p < degree_; ++p) {
        if (seen[p]) continue;
        auto orb = orbit_of(p);
        for (std::uint32_t q : orb) seen[q] = true;
        out.push_back(std::move(orb));
    }
    return out;
}

bool PermGroup::is_transitive() const {
    return degree_ > 0 && orbit_of(0).size() == degree_;
}

} // namespace gt
