#pragma once

#include "gf.hpp"
#include "perm.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gt {

// Dense matrix over a small finite field. Vectors are rows and matrices act
// on the right (v -> v*M), so mapping matrices to permutations of projective
// points is a homomorphism under this library's left-to-right composition.
class FMat {
public:
    FMat() = default;
    FMat(const Gf* field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static FMat identity(const Gf* field, std::size_t n);
    static FMat from_entries(const Gf* field, std::size_t rows, std::size_t cols,
                             std::vector<std::uint32_t> entries);

    const Gf* field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint32_t v) { a_[i * cols_ + j] = v; }
    const std::vector<std::uint32_t>& entries() const { return a_; }

    FMat operator*(const FMat& o) const;
    FMat operator+(const FMat& o) const;
    FMat operator-(const FMat& o) const;
    FMat scaled(std::uint32_t c) const;
    FMat transposed() const;
    FMat power(std::uint64_t e) const;

    bool is_identity() const;
    bool is_scalar() const; // nonzero multiple of the identity
    std::uint32_t trace() const;
    std::uint32_t determinant() const;
    std::optional<FMat> inverse() const;

    // Multiplicative order; requires invertibility. Guarded by a cap.
    std::uint64_t order(std::uint64_t cap = 1u << 24) const;

    std::uint64_t hash() const;
    friend bool operator==(const FMat&, const FMat&) = default;

private:
    const Gf* field_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> a_;
};

struct FMatHash {
    std::size_t operator()(const FMat& m) const { return static_cast<std::size_t>(m.hash()); }
};

// In-place reduced row echelon form; returns the rank.
std::size_t rref_in_place(FMat& m);

// Basis of {x : M x^T == 0}, i.e. the kernel of the right action on columns;
// each basis vector has length cols().
std::vector<std::vector<std::uint32_t>> nullspace(const FMat& m);

// One solution x of M x^T == b^T, if any.
std::optional<std::vector<std::uint32_t>> solve(const FMat& m,
                                                const std::vector<std::uint32_t>& b);

// Induced action on symmetric square: 2x2 -> 3x3 on the basis
// {e1.e1, e1.e2 + e2.e1, e2.e2}; multiplicative, kernel {+I, -I},
// determinant cubes.
FMat sym_square(const FMat& m);

// Matrix sending the standard projective frame e1, ..., en, e1+...+en to the
// given n+1 vectors (as rows, up to scalars); empty if the target vectors
// are not in general position.
std::optional<FMat> frame_matrix(const Gf* field,
                                 const std::vector<std::vector<std::uint32_t>>& targets);

// Projective points of the row space F^n: each point is represented by its
// unique vector whose first nonzero coordinate is 1, enumerated in
// lexicographic order (leftmost coordinate most significant).
struct ProjectiveSpace {
    ProjectiveSpace(const Gf* field, std::size_t n);

    const Gf* field() const { return field_; }
    std::size_t dim() const { return n_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<std::uint32_t>& point(std::size_t i) const { return points_[i]; }

    std::uint32_t index_of(const std::vector<std::uint32_t>& v) const; // normalizes first
    std::vector<std::uint32_t> normalized(std::vector<std::uint32_t> v) const;

    // Permutation induced by an invertible matrix.
    Perm perm_of(const FMat& m) const;
    std::vector<Perm> perms_of(const std::vector<FMat>& mats) const;

private:
    std::uint64_t encode(const std::vector<std::uint32_t>& v) const;

    const Gf* field_;
    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> points_;
    std::vector<std::uint32_t> index_; // encoded normalized vector -> point index
};

} // namespace gt
