#pragma once

#include <optional>
#include <vector>

#include "hhint/fp.hpp"

namespace hhint {

class Subspace;

// Incremental Gaussian elimination over F_p.
//
// Rows are held fully reduced (RREF invariant: unit pivots, pivot columns
// clear elsewhere, rows ordered by pivot column), so the engine doubles as an
// online rank/solve oracle: feed constraint rows as they are generated and
// dependent rows vanish on arrival. Internally rows are flat uint32 buffers
// with the modulus hoisted out of the inner loops; the Fp-typed API converts
// at the boundary.
class RowReducer {
  public:
    RowReducer(Index cols, uint32_t p);

    // Returns true if the row was independent (rank grew).
    bool add_row(const FVector& row);
    bool add_raw(std::vector<uint32_t> row);

    // Residual of v after elimination against the stored rows; v is not kept.
    std::vector<uint32_t> reduce_raw(std::vector<uint32_t> row) const;
    FVector reduce(const FVector& row) const;

    Index cols() const { return cols_; }
    uint32_t p() const { return p_; }
    Index rank() const { return static_cast<Index>(rows_.size()); }
    const std::vector<Index>& pivots() const { return pivots_; }

    // The RREF basis as a rank x cols matrix.
    FMatrix basis() const;
    // Null space of the row set, as a canonical subspace of F_p^cols.
    Subspace kernel() const;

    std::vector<uint32_t> to_raw(const FVector& row) const;
    FVector from_raw(const std::vector<uint32_t>& row) const;

  private:
    Index cols_;
    uint32_t p_;
    std::vector<std::vector<uint32_t>> rows_;  // sorted by pivot column
    std::vector<Index> pivots_;                // pivots_[i] = pivot column of rows_[i]
};

// Linear subspace of F_p^ambient held by its unique RREF basis, so two
// subspaces are equal iff their representations are bitwise equal.
class Subspace {
  public:
    static Subspace span(const FMatrix& rows, uint32_t p);
    static Subspace span(const std::vector<FVector>& rows, Index ambient, uint32_t p);
    static Subspace zero(Index ambient, uint32_t p);
    static Subspace full(Index ambient, uint32_t p);

    Index ambient() const { return ambient_; }
    Index dim() const { return basis_.rows(); }
    uint32_t p() const { return p_; }
    const FMatrix& basis() const { return basis_; }
    const std::vector<Index>& pivots() const { return pivots_; }
    FVector basis_row(Index i) const { return basis_.row(i).transpose(); }

    bool member(const FVector& v) const;
    // Residual of v after reduction against the basis; zero iff member.
    FVector reduce(const FVector& v) const;
    bool contains(const Subspace& other) const;

    friend Subspace sum(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);
    friend bool operator==(const Subspace& a, const Subspace& b);
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    Subspace(FMatrix basis, std::vector<Index> pivots, Index ambient, uint32_t p)
        : basis_(std::move(basis)), pivots_(std::move(pivots)), ambient_(ambient), p_(p) {}

    FMatrix basis_;
    std::vector<Index> pivots_;
    Index ambient_;
    uint32_t p_;
};

struct RrefResult {
    FMatrix rref;  // same shape as the input, zero rows at the bottom
    std::vector<Index> pivots;
    Index rank;
};

// Unique reduced row echelon form. Pivoting is deterministic: within each
// column the first unreduced nonzero row is chosen, which pins byte-identical
// output for identical input.
template <typename Derived>
RrefResult rref(const Eigen::MatrixBase<Derived>& m);

struct LinearSolution {
    FVector particular;  // free variables set to zero
    Subspace kernel;
};

// Solves m x = b; empty when inconsistent.
template <typename Derived>
std::optional<LinearSolution> solve(const Eigen::MatrixBase<Derived>& m, const FVector& b);

template <typename Derived>
Subspace kernel_of(const Eigen::MatrixBase<Derived>& m, uint32_t p);

// Matrix product skipping zero entries of the left factor. Matches a * b but
// runs in O(nnz(a) * cols(b)); the structure matrices this library meets are
// mostly sparse (group algebras: permutation matrices).
FMatrix mul_sparse_aware(const FMatrix& a, const FMatrix& b);

FMatrix from_rows(const std::vector<FVector>& rows, Index cols, uint32_t p);

namespace detail {
RrefResult rref_impl(const FMatrix& m);
std::optional<LinearSolution> solve_impl(const FMatrix& m, const FVector& b);
Subspace kernel_impl(const FMatrix& m, uint32_t p);
}  // namespace detail

template <typename Derived>
RrefResult rref(const Eigen::MatrixBase<Derived>& m) {
    return detail::rref_impl(m.eval());
}

template <typename Derived>
std::optional<LinearSolution> solve(const Eigen::MatrixBase<Derived>& m, const FVector& b) {
    return detail::solve_impl(m.eval(), b);
}

template <typename Derived>
Subspace kernel_of(const Eigen::MatrixBase<Derived>& m, uint32_t p) {
    return detail::kernel_impl(m.eval(), p);
}

}  // namespace hhint
