#include "perm.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace gt {

Perm Perm::from_images(std::vector<std::uint32_t> img) {
    std::vector<bool> seen(img.size(), false);
    for (std::uint32_t v : img) {
        if (v >= img.size() || seen[v])
            throw std::invalid_argument("Perm::from_images: not a bijection");
        seen[v] = true;
    }
    Perm r;
    r.img_ = std::move(img);
    return r;
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<std::uint32_t>>& cycles) {
    Perm r(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
        for (std::uint32_t p : cyc) {
            if (p >= degree) throw std::invalid_argument("Perm::from_cycles: point out of range");
            if (used[p]) throw std::invalid_argument("Perm::from_cycles: cycles not disjoint");
            used[p] = true;
        }
        for (std::size_t i = 0; i + 1 < cyc.size(); ++i) r.img_[cyc[i]] = cyc[i + 1];
        if (cyc.size() > 1) r.img_[cyc.back()] = cyc.front();
    }
    return r;
}

Perm Perm::parse_cycles(std::size_t degree, std::string_view text) {
    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw std::invalid_argument("Perm::parse_cycles: expected '('");
        ++i;
        std::vector<std::uint32_t> cyc;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            std::uint64_t v = 0;
            bool got = false;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
                got = true;
                ++i;
            }
            if (!got) throw std::invalid_argument("Perm::parse_cycles: expected a point");
            if (v == 0 || v > degree)
                throw std::invalid_argument("Perm::parse_cycles: point out of range (1-indexed)");
            cyc.push_back(static_cast<std::uint32_t>(v - 1));
            skip_ws();
            if (i < text.size() && (text[i] == ',' || text[i] == ' ')) ++i;
        }
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
        skip_ws();
    }
    return from_cycles(degree, cycles);
}

std::vector<std::uint32_t> Perm::moved_points() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

Perm Perm::conjugated_by(const Perm& h) const { return h.inverse() * (*this * h); }

Perm Perm::power(std::int64_t e) const {
    Perm b = e < 0 ? inverse() : *this;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    Perm acc(degree());
    while (k) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

Bigint Perm::order() const {
    Bigint ord = 1;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        std::uint64_t len = 0;
        std::uint32_t p = static_cast<std::uint32_t>(i);
        do {
            seen[p] = true;
            p = img_[p];
            ++len;
        } while (p != i);
        ord = boost::multiprecision::lcm(ord, Bigint(len));
    }
    return ord;
}

std::vector<std::vector<std::uint32_t>> Perm::cycles() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) continue;
        std::vector<std::uint32_t> cyc;
        std::uint32_t p = static_cast<std::uint32_t>(i);
        do {
            seen[p] = true;
            cyc.push_back(p);
            p = img_[p];
        } while (p != i);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Perm::cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& cyc : cs) {
        s += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(cyc[i] + 1);
        }
        s += ')';
    }
    return s;
}

std::uint64_t Perm::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t v : img_) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

Perm relabel(const Perm& g, const std::vector<std::uint32_t>& points) {
    std::unordered_map<std::uint32_t, std::uint32_t> to_new;
    to_new.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] >= g.degree()) throw std::invalid_argument("relabel: point out of range");
        if (!to_new.emplace(points[i], static_cast<std::uint32_t>(i)).second)
            throw std::invalid_argument("relabel: duplicate point");
    }
    std::vector<std::uint32_t> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto it = to_new.find(g[points[i]]);
        if (it == to_new.end())
            throw std::invalid_argument("relabel: point set is not invariant");
        img[i] = it->second;
    }
    return Perm::from_images(std::move(img));
}

} // namespace gt
