#include "fmat.hpp"

#include <stdexcept>

namespace gt {

FMat FMat::identity(const Gf* field, std::size_t n) {
    FMat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FMat FMat::from_entries(const Gf* field, std::size_t rows, std::size_t cols,
                        std::vector<std::uint32_t> entries) {
    if (entries.size() != rows * cols)
        throw std::invalid_argument("FMat::from_entries: wrong entry count");
    for (std::uint32_t v : entries)
        if (v >= field->q()) throw std::invalid_argument("FMat::from_entries: entry out of range");
    FMat m(field, rows, cols);
    m.a_ = std::move(entries);
    return m;
}

FMat FMat::operator*(const FMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("FMat: shape mismatch in product");
    const Gf& F = *field_;
    FMat r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint32_t aik = at(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.a_[i * o.cols_ + j] =
                    F.add(r.a_[i * o.cols_ + j], F.mul(aik, o.at(k, j)));
        }
    return r;
}

FMat FMat::operator+(const FMat& o) const {
    FMat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_[i]);
    return r;
}

FMat FMat::operator-(const FMat& o) const {
    FMat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], o.a_[i]);
    return r;
}

FMat FMat::scaled(std::uint32_t c) const {
    FMat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->mul(a_[i], c);
    return r;
}

FMat FMat::transposed() const {
    FMat r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

FMat FMat::power(std::uint64_t e) const {
    FMat acc = identity(field_, rows_);
    FMat b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

bool FMat::is_identity() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

bool FMat::is_scalar() const {
    std::uint32_t d = at(0, 0);
    if (d == 0) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? d : 0u)) return false;
    return true;
}

std::uint32_t FMat::trace() const {
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t = field_->add(t, at(i, i));
    return t;
}

std::uint32_t FMat::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("FMat::determinant: not square");
    const Gf& F = *field_;
    FMat m = *this;
    std::uint32_t det = 1;
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < cols_; ++j) {
                std::uint32_t t = m.at(col, j);
                m.set(col, j, m.at(pivot, j));
                m.set(pivot, j, t);
            }
            det = F.neg(det);
        }
        det = F.mul(det, m.at(col, col));
        std::uint32_t pinv = F.inv(m.at(col, col));
        for (std::size_t i = col + 1; i < rows_; ++i) {
            std::uint32_t factor = F.mul(m.at(i, col), pinv);
            if (!factor) continue;
            for (std::size_t j = col; j < cols_; ++j)
                m.set(i, j, F.sub(m.at(i, j), F.mul(factor, m.at(col, j))));
        }
    }
    return det;
}

std::optional<FMat> FMat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("FMat::inverse: not square");
    const Gf& F = *field_;
    FMat m = *this;
    FMat inv = identity(field_, rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && m.at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < cols_; ++j) {
                std::uint32_t t = m.at(col, j);
                m.set(col, j, m.at(pivot, j));
                m.set(pivot, j, t);
                t = inv.at(col, j);
                inv.set(col, j, inv.at(pivot, j));
                inv.set(pivot, j, t);
            }
        std::uint32_t pinv = F.inv(m.at(col, col));
        for (std::size_t j = 0; j < cols_; ++j) {
            m.set(col, j, F.mul(m.at(col, j), pinv));
            inv.set(col, j, F.mul(inv.at(col, j), pinv));
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == col) continue;
            std::uint32_t factor = m.at(i, col);
            if (!factor) continue;
            for (std::size_t j = 0; j < cols_; ++j) {
                m.set(i, j, F.sub(m.at(i, j), F.mul(factor, m.at(col, j))));
                inv.set(i, j, F.sub(inv.at(i, j), F.mul(factor, inv.at(col, j))));
            }
        }
    }
    return inv;
}

std::uint64_t FMat::order(std::uint64_t cap) const {
    if (!inverse()) throw std::domain_error("FMat::order: singular matrix");
    FMat x = *this;
    std::uint64_t ord = 1;
    while (!x.is_identity()) {
        x = x * *this;
        if (++ord > cap) throw std::length_error("FMat::order: cap exceeded");
    }
    return ord;
}

std::uint64_t FMat::hash() const {
    std::uint64_t h = 1469598103934665603ull ^ (rows_ * 1315423911ull) ^ cols_;
    for (std::uint32_t v : a_) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

std::size_t rref_in_place(FMat& m) {
    const Gf& F = *m.field();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::uint32_t t = m.at(rank, j);
                m.set(rank, j, m.at(pivot, j));
                m.set(pivot, j, t);
            }
        std::uint32_t pinv = F.inv(m.at(rank, col));
        for (std::size_t j = 0; j < m.cols(); ++j) m.set(rank, j, F.mul(m.at(rank, j), pinv));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank) continue;
            std::uint32_t factor = m.at(i, col);
            if (!factor) continue;
            for (std::size_t j = 0; j < m.cols(); ++j)
                m.set(i, j, F.sub(m.at(i, j), F.mul(factor, m.at(rank, j))));
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<std::uint32_t>> nullspace(const FMat& m) {
    const Gf& F = *m.field();
    FMat r = m;
    std::size_t rank = rref_in_place(r);
    // Identify pivot columns.
    std::vector<std::size_t> pivot_col(rank);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0, col = 0; i < rank; ++i) {
        while (col < m.cols() && r.at(i, col) == 0) ++col;
        pivot_col[i] = col;
        is_pivot[col] = true;
    }
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = F.neg(r.at(i, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<std::uint32_t>> solve(const FMat& m,
                                                const std::vector<std::uint32_t>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
    FMat aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, m.cols(), b[i]);
    }
    rref_in_place(aug);
    std::vector<std::uint32_t> x(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t col = 0;
        while (col < m.cols() && aug.at(i, col) == 0) ++col;
        if (col == m.cols()) {
            if (aug.at(i, m.cols()) != 0) return std::nullopt; // inconsistent row
        } else {
            x[col] = aug.at(i, m.cols());
        }
    }
    return x;
}

FMat sym_square(const FMat& m) {
    if (m.rows() != 2 || m.cols() != 2)
        throw std::invalid_argument("sym_square: expects a 2x2 matrix");
    const Gf& F = *m.field();
    std::uint32_t a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
    FMat s(m.field(), 3, 3);
    s.set(0, 0, F.mul(a, a));
    s.set(0, 1, F.mul(a, b));
    s.set(0, 2, F.mul(b, b));
    s.set(1, 0, F.add(F.mul(a, c), F.mul(a, c)));
    s.set(1, 1, F.add(F.mul(a, d), F.mul(b, c)));
    s.set(1, 2, F.add(F.mul(b, d), F.mul(b, d)));
    s.set(2, 0, F.mul(c, c));
    s.set(2, 1, F.mul(c, d));
    s.set(2, 2, F.mul(d, d));
    return s;
}

std::optional<FMat> frame_matrix(const Gf* field,
                                 const std::vector<std::vector<std::uint32_t>>& targets) {
    const Gf& F = *field;
    if (targets.empty()) return std::nullopt;
    const std::size_t n = targets[0].size();
    if (targets.size() != n + 1) throw std::invalid_argument("frame_matrix: needs n+1 vectors");
    // Solve sum_i lambda_i * targets[i] = targets[n] for the lambda_i.
    FMat sys(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) sys.set(i, j, targets[j][i]);
    auto lambda = solve(sys, targets[n]);
    if (!lambda) return std::nullopt;
    for (std::uint32_t l : *lambda)
        if (l == 0) return std::nullopt; // not in general position
    FMat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, F.mul((*lambda)[i], targets[i][j]));
    if (m.determinant() == 0) return std::nullopt;
    return m;
}

ProjectiveSpace::ProjectiveSpace(const Gf* field, std::size_t n) : field_(field), n_(n) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= field->q();
        if (total > (1ull << 28)) throw std::invalid_argument("ProjectiveSpace: too large");
    }
    index_.assign(total, UINT32_MAX);
    std::vector<std::uint32_t> v(n, 0);
    // Lexicographic enumeration, leftmost coordinate most significant; a
    // vector is kept iff its first nonzero coordinate is 1.
    for (std::uint64_t code = 1; code < total; ++code) {
        std::uint64_t t = code;
        for (std::size_t i = n; i-- > 0;) {
            v[i] = static_cast<std::uint32_t>(t % field->q());
            t /= field->q();
        }
        std::size_t lead = 0;
        while (lead < n && v[lead] == 0) ++lead;
        if (v[lead] != 1) continue;
        index_[code] = static_cast<std::uint32_t>(points_.size());
        points_.push_back(v);
    }
}

std::uint64_t ProjectiveSpace::encode(const std::vector<std::uint32_t>& v) const {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n_; ++i) code = code * field_->q() + v[i];
    return code;
}

std::vector<std::uint32_t> ProjectiveSpace::normalized(std::vector<std::uint32_t> v) const {
    std::size_t lead = 0;
    while (lead < n_ && v[lead] == 0) ++lead;
    if (lead == n_) throw std::invalid_argument("ProjectiveSpace: zero vector");
    std::uint32_t c = field_->inv(v[lead]);
    for (std::size_t i = 0; i < n_; ++i) v[i] = field_->mul(v[i], c);
    return v;
}

std::uint32_t ProjectiveSpace::index_of(const std::vector<std::uint32_t>& v) const {
    std::uint32_t idx = index_[encode(normalized(v))];
    if (idx == UINT32_MAX) throw std::logic_error("ProjectiveSpace: unindexed point");
    return idx;
}

Perm ProjectiveSpace::perm_of(const FMat& m) const {
    if (m.rows() != n_ || m.cols() != n_)
        throw std::invalid_argument("ProjectiveSpace::perm_of: shape mismatch");
    const Gf& F = *field_;
    std::vector<std::uint32_t> img(points_.size());
    std::vector<std::uint32_t> w(n_);
    for (std::size_t pi = 0; pi < points_.size(); ++pi) {
        const auto& v = points_[pi];
        for (std::size_t j = 0; j < n_; ++j) {
            std::uint32_t s = 0;
            for (std::size_t i = 0; i < n_; ++i) s = F.add(s, F.mul(v[i], m.at(i, j)));
            w[j] = s;
        }
        img[pi] = index_of(w);
    }
    return Perm::from_images(std::move(img));
}

std::vector<Perm> ProjectiveSpace::perms_of(const std::vector<FMat>& mats) const {
    std::vector<Perm> out;
    out.reserve(mats.size());
    for (const FMat& m : mats) out.push_back(perm_of(m));
    return out;
}

} // namespace gt
