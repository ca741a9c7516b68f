#include "hhint/fp.hpp"

#include <ostream>

namespace hhint {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_prime(uint32_t p) {
    thread_local uint32_t last_ok = 0;
    if (p == last_ok) return;
    if (p < 2 || p >= (1u << 15) || !is_prime(p)) throw BadModulusError(p);
    last_ok = p;
}

std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.value(); }

FMatrix fzeros(Index rows, Index cols, uint32_t p) {
    require_prime(p);
    FMatrix m(rows, cols);
    m.setConstant(Fp::raw(0, p));
    return m;
}

FMatrix fidentity(Index n, uint32_t p) {
    FMatrix m = fzeros(n, n, p);
    for (Index i = 0; i < n; ++i) m(i, i) = Fp::raw(1 % p, p);
    return m;
}

FVector fzvec(Index n, uint32_t p) {
    require_prime(p);
    FVector v(n);
    v.setConstant(Fp::raw(0, p));
    return v;
}

FVector funit(Index n, Index i, uint32_t p) {
    FVector v = fzvec(n, p);
    v(i) = Fp::raw(1 % p, p);
    return v;
}

uint32_t modulus_of(const FMatrix& m) {
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            if (uint32_t p = m(r, c).mod()) return p;
    return 0;
}

uint32_t modulus_of(const FVector& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (uint32_t p = v(i).mod()) return p;
    return 0;
}

FMatrix fmat(uint32_t p, std::initializer_list<std::initializer_list<long long>> rows) {
    Index nr = static_cast<Index>(rows.size());
    Index nc = nr == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    FMatrix m = fzeros(nr, nc, p);
    Index r = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != nc)
            throw DimensionError("ragged rows in fmat literal");
        Index c = 0;
        for (long long v : row) m(r, c++) = Fp(v, p);
        ++r;
    }
    return m;
}

FVector fvec(uint32_t p, std::initializer_list<long long> entries) {
    FVector v = fzvec(static_cast<Index>(entries.size()), p);
    Index i = 0;
    for (long long e : entries) v(i++) = Fp(e, p);
    return v;
}

bool is_zero(const FMatrix& m) {
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) return false;
    return true;
}

bool is_zero(const FVector& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

}  // namespace hhint
