#include "hhint/linalg.hpp"

#include <algorithm>

namespace hhint {

namespace {

// row -= f * other, elementwise mod p. f is in [1, p).
void axpy_sub(std::vector<uint32_t>& row, const std::vector<uint32_t>& other, uint32_t f,
              uint32_t p) {
    const uint64_t g = p - f;  // row += (p - f) * other avoids signed arithmetic
    const size_t n = row.size();
    for (size_t c = 0; c < n; ++c) {
        row[c] = static_cast<uint32_t>((row[c] + g * other[c]) % p);
    }
}

uint32_t inv_mod(uint32_t v, uint32_t p) {
    return static_cast<uint32_t>(Fp::raw(v, p).inverse().value());
}

}  // namespace

RowReducer::RowReducer(Index cols, uint32_t p) : cols_(cols), p_(p) { require_prime(p); }

std::vector<uint32_t> RowReducer::to_raw(const FVector& row) const {
    if (row.size() != cols_) throw DimensionError("row length vs reducer width");
    std::vector<uint32_t> raw(static_cast<size_t>(cols_));
    for (Index c = 0; c < cols_; ++c)
        raw[static_cast<size_t>(c)] = static_cast<uint32_t>(row(c).matched(p_).value());
    return raw;
}

FVector RowReducer::from_raw(const std::vector<uint32_t>& row) const {
    FVector v = fzvec(cols_, p_);
    for (Index c = 0; c < cols_; ++c) v(c) = Fp::raw(row[static_cast<size_t>(c)], p_);
    return v;
}

std::vector<uint32_t> RowReducer::reduce_raw(std::vector<uint32_t> row) const {
    // Stored rows are RREF: each stored pivot column is zero in every other
    // stored row, so a single pass eliminates completely.
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t f = row[static_cast<size_t>(pivots_[i])];
        if (f != 0) axpy_sub(row, rows_[i], f, p_);
    }
    return row;
}

FVector RowReducer::reduce(const FVector& row) const { return from_raw(reduce_raw(to_raw(row))); }

bool RowReducer::add_raw(std::vector<uint32_t> row) {
    row = reduce_raw(std::move(row));
    size_t lead = row.size();
    for (size_t c = 0; c < row.size(); ++c) {
        if (row[c] != 0) {
            lead = c;
            break;
        }
    }
    if (lead == row.size()) return false;

    if (row[lead] != 1) {
        const uint64_t inv = inv_mod(row[lead], p_);
        for (size_t c = lead; c < row.size(); ++c)
            row[c] = static_cast<uint32_t>((row[c] * inv) % p_);
    }
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t f = rows_[i][lead];
        if (f != 0) axpy_sub(rows_[i], row, f, p_);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), static_cast<Index>(lead));
    size_t at = static_cast<size_t>(pos - pivots_.begin());
    pivots_.insert(pos, static_cast<Index>(lead));
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(row));
    return true;
}

bool RowReducer::add_row(const FVector& row) { return add_raw(to_raw(row)); }

FMatrix RowReducer::basis() const {
    FMatrix m = fzeros(rank(), cols_, p_);
    for (Index r = 0; r < rank(); ++r)
        for (Index c = 0; c < cols_; ++c)
            m(r, c) = Fp::raw(rows_[static_cast<size_t>(r)][static_cast<size_t>(c)], p_);
    return m;
}

Subspace RowReducer::kernel() const {
    std::vector<FVector> out;
    size_t next_pivot = 0;
    for (Index f = 0; f < cols_; ++f) {
        if (next_pivot < pivots_.size() && pivots_[next_pivot] == f) {
            ++next_pivot;
            continue;
        }
        FVector x = fzvec(cols_, p_);
        x(f) = Fp(1, p_);
        for (size_t i = 0; i < rows_.size(); ++i)
            x(pivots_[i]) = -Fp::raw(rows_[i][static_cast<size_t>(f)], p_);
        out.push_back(std::move(x));
    }
    return Subspace::span(out, cols_, p_);
}

Subspace Subspace::span(const FMatrix& rows, uint32_t p) {
    RowReducer red(rows.cols(), p);
    for (Index r = 0; r < rows.rows(); ++r) red.add_row(rows.row(r).transpose());
    return Subspace(red.basis(), red.pivots(), rows.cols(), p);
}

Subspace Subspace::span(const std::vector<FVector>& rows, Index ambient, uint32_t p) {
    RowReducer red(ambient, p);
    for (const FVector& r : rows) red.add_row(r);
    return Subspace(red.basis(), red.pivots(), ambient, p);
}

Subspace Subspace::zero(Index ambient, uint32_t p) {
    require_prime(p);
    return Subspace(fzeros(0, ambient, p), {}, ambient, p);
}

Subspace Subspace::full(Index ambient, uint32_t p) {
    std::vector<Index> piv(static_cast<size_t>(ambient));
    for (Index i = 0; i < ambient; ++i) piv[static_cast<size_t>(i)] = i;
    return Subspace(fidentity(ambient, p), std::move(piv), ambient, p);
}

FVector Subspace::reduce(const FVector& v) const {
    if (v.size() != ambient_) throw DimensionError("vector vs subspace ambient");
    FVector r = v;
    for (Index i = 0; i < dim(); ++i) {
        Fp f = r(pivots_[static_cast<size_t>(i)]).matched(p_);
        if (!f.is_zero()) r -= f * basis_.row(i).transpose();
    }
    return r;
}

bool Subspace::member(const FVector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("subspace ambients differ");
    for (Index i = 0; i < other.dim(); ++i)
        if (!member(other.basis_row(i))) return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw DimensionError("subspace ambients differ");
    if (a.p_ != b.p_) throw MixedModulusError(a.p_, b.p_);
    RowReducer red(a.ambient_, a.p_);
    for (Index i = 0; i < a.dim(); ++i) red.add_row(a.basis_row(i));
    for (Index i = 0; i < b.dim(); ++i) red.add_row(b.basis_row(i));
    return Subspace(red.basis(), red.pivots(), a.ambient_, a.p_);
}

// Intersection via the kernel of the stacked relation S^T u - T^T w = 0: a
// vector lies in both spans iff it is u.S = w.T for some coefficient pair.
Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw DimensionError("subspace ambients differ");
    if (a.p_ != b.p_) throw MixedModulusError(a.p_, b.p_);
    const Index r = a.dim(), s = b.dim();
    FMatrix rel = fzeros(a.ambient_, r + s, a.p_);
    for (Index i = 0; i < r; ++i)
        for (Index c = 0; c < a.ambient_; ++c) rel(c, i) = a.basis_(i, c);
    for (Index i = 0; i < s; ++i)
        for (Index c = 0; c < b.ambient_; ++c) rel(c, r + i) = -b.basis_(i, c);
    Subspace k = kernel_of(rel, a.p_);
    std::vector<FVector> gens;
    for (Index i = 0; i < k.dim(); ++i) {
        FVector uv = k.basis_row(i);
        FVector v = fzvec(a.ambient_, a.p_);
        for (Index j = 0; j < r; ++j)
            if (!uv(j).is_zero()) v += uv(j) * a.basis_.row(j).transpose();
        gens.push_back(std::move(v));
    }
    return Subspace::span(gens, a.ambient_, a.p_);
}

bool operator==(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_ || a.p_ != b.p_ || a.dim() != b.dim()) return false;
    return a.pivots_ == b.pivots_ && is_zero(FMatrix(a.basis_ - b.basis_));
}

namespace detail {

RrefResult rref_impl(const FMatrix& m) {
    uint32_t p = modulus_of(m);
    if (p == 0) throw BadModulusError(0);
    RowReducer red(m.cols(), p);
    for (Index r = 0; r < m.rows(); ++r) red.add_row(m.row(r).transpose());
    RrefResult out{fzeros(m.rows(), m.cols(), p), red.pivots(), red.rank()};
    out.rref.topRows(red.rank()) = red.basis();
    return out;
}

std::optional<LinearSolution> solve_impl(const FMatrix& m, const FVector& b) {
    if (m.rows() != b.size()) throw DimensionError("matrix rows vs rhs length");
    uint32_t p = modulus_of(m);
    if (p == 0) p = modulus_of(b);
    if (p == 0) throw BadModulusError(0);
    const Index n = m.cols();

    RowReducer red(n + 1, p);
    for (Index r = 0; r < m.rows(); ++r) {
        FVector row(n + 1);
        row.head(n) = m.row(r).transpose();
        row(n) = b(r);
        red.add_row(row);
    }

    std::vector<Index> mpivots;
    FVector particular = fzvec(n, p);
    const FMatrix rr = red.basis();
    for (Index i = 0; i < red.rank(); ++i) {
        Index c = red.pivots()[static_cast<size_t>(i)];
        if (c == n) return std::nullopt;  // pivot in the rhs column: inconsistent
        mpivots.push_back(c);
        particular(c) = rr(i, n);
    }

    // The first n columns of the reduced rows form the RREF of m; its kernel
    // is read off the free columns.
    RowReducer mred(n, p);
    for (Index i = 0; i < red.rank(); ++i) {
        FVector row = rr.row(i).transpose().head(n);
        mred.add_raw(mred.to_raw(row));
    }
    return LinearSolution{std::move(particular), mred.kernel()};
}

Subspace kernel_impl(const FMatrix& m, uint32_t p) {
    RowReducer red(m.cols(), p);
    for (Index r = 0; r < m.rows(); ++r) red.add_row(m.row(r).transpose());
    return red.kernel();
}

}  // namespace detail

FMatrix mul_sparse_aware(const FMatrix& a, const FMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("inner dimensions of product");
    uint32_t p = modulus_of(a);
    if (p == 0) p = modulus_of(b);
    if (p == 0) throw BadModulusError(0);
    FMatrix out = fzeros(a.rows(), b.cols(), p);
    for (Index r = 0; r < a.rows(); ++r) {
        for (Index k = 0; k < a.cols(); ++k) {
            const Fp& f = a(r, k);
            if (f.is_zero()) continue;
            out.row(r) += f * b.row(k);
        }
    }
    return out;
}

FMatrix from_rows(const std::vector<FVector>& rows, Index cols, uint32_t p) {
    FMatrix m = fzeros(static_cast<Index>(rows.size()), cols, p);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionError("row length in from_rows");
        m.row(static_cast<Index>(r)) = rows[r].transpose();
    }
    return m;
}

}  // namespace hhint
