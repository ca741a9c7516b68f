#include "hhint/cochains.hpp"

#include "hhint/errors.hpp"
#include "hhint/linalg.hpp"

namespace hhint {

namespace {

// Dimension guard for the generator-free degree-2 fallback (d^3 x d^2 dense
// system).
constexpr Index kFullSolveBound = 24;

bool odd(long long x) { return x & 1; }

// acc += sign * m * v, iterating the nonzeros of v (structure matrices are
// sparse, so m * v as a sum of scaled columns beats the dense product).
void add_matvec(FVector& acc, const FMatrix& m, const FVector& v, bool negate) {
    for (Index q = 0; q < v.size(); ++q) {
        if (v(q).is_zero()) continue;
        if (negate)
            acc -= m.col(q) * v(q);
        else
            acc += m.col(q) * v(q);
    }
}

void check_same_algebra(const Algebra& a, const Cochain& f) {
    if (f.m.rows() != a.dim() || f.m.cols() != cochain_cols(a.dim(), f.degree))
        throw DimensionError("cochain shape does not match the algebra");
}

std::vector<Index> first_tuple(int len) { return std::vector<Index>(static_cast<size_t>(len), 0); }

bool next_tuple(std::vector<Index>& t, Index d) {
    for (size_t i = t.size(); i-- > 0;) {
        if (++t[i] < d) return true;
        t[i] = 0;
    }
    return false;
}

}  // namespace

Index cochain_cols(Index d, int degree) {
    if (degree < 0 || degree > 3) throw DegreeError(degree);
    Index cols = 1;
    for (int i = 0; i < degree; ++i) cols *= d;
    return cols;
}

Index flat_index(Index d, const std::vector<Index>& tuple) {
    Index flat = 0;
    for (Index t : tuple) {
        if (t < 0 || t >= d) throw DimensionError("tuple entry outside the basis range");
        flat = flat * d + t;
    }
    return flat;
}

Cochain zero_cochain(const Algebra& a, int degree) {
    return Cochain{degree, fzeros(a.dim(), cochain_cols(a.dim(), degree), a.p())};
}

Cochain element_cochain(const Algebra& a, const FVector& v) {
    if (v.size() != a.dim()) throw DimensionError("element has wrong length");
    FMatrix m(a.dim(), 1);
    m.col(0) = v;
    return Cochain{0, std::move(m)};
}

Cochain endo_cochain(const Algebra& a, const FMatrix& f) {
    if (f.rows() != a.dim() || f.cols() != a.dim())
        throw DimensionError("endomorphism has wrong shape");
    return Cochain{1, f};
}

Cochain multiplication_cochain(const Algebra& a) {
    Index d = a.dim();
    Cochain mu = zero_cochain(a, 2);
    for (Index i = 0; i < d; ++i)
        for (Index j = 0; j < d; ++j) mu.m.col(i * d + j) = a.basis_product(i, j);
    return mu;
}

Cochain operator+(const Cochain& f, const Cochain& g) {
    if (f.degree != g.degree) throw DimensionError("cochain degrees differ");
    return Cochain{f.degree, FMatrix(f.m + g.m)};
}

Cochain operator-(const Cochain& f, const Cochain& g) {
    if (f.degree != g.degree) throw DimensionError("cochain degrees differ");
    return Cochain{f.degree, FMatrix(f.m - g.m)};
}

Cochain operator*(const Fp& c, const Cochain& f) {
    return Cochain{f.degree, FMatrix(f.m * c)};
}

Cochain circle_i(const Algebra& a, const Cochain& f, const Cochain& g, int i) {
    check_same_algebra(a, f);
    check_same_algebra(a, g);
    if (i < 1 || i > f.degree) throw DegreeError(i);
    Index d = a.dim();
    int rdeg = f.degree + g.degree - 1;
    Cochain out = zero_cochain(a, rdeg);

    std::vector<Index> tuple = first_tuple(rdeg);
    std::vector<Index> ftuple(static_cast<size_t>(f.degree), 0);
    Index col = 0;
    do {
        // tuple = (pre, mid, post); g eats mid, the result feeds slot i of f.
        std::vector<Index> mid(tuple.begin() + (i - 1), tuple.begin() + (i - 1) + g.degree);
        FVector v = g.m.col(flat_index(d, mid));
        for (int s = 0; s < i - 1; ++s) ftuple[static_cast<size_t>(s)] = tuple[static_cast<size_t>(s)];
        for (int s = i; s < f.degree; ++s)
            ftuple[static_cast<size_t>(s)] = tuple[static_cast<size_t>(s + g.degree - 1)];
        for (Index q = 0; q < d; ++q) {
            if (v(q).is_zero()) continue;
            ftuple[static_cast<size_t>(i - 1)] = q;
            out.m.col(col) += f.m.col(flat_index(d, ftuple)) * v(q);
        }
        ++col;
    } while (rdeg > 0 && next_tuple(tuple, d));
    return out;
}

Cochain circle(const Algebra& a, const Cochain& f, const Cochain& g) {
    int rdeg = f.degree + g.degree - 1;
    if (rdeg < 0) throw DegreeError(rdeg);
    Cochain out = zero_cochain(a, rdeg);
    for (int i = 1; i <= f.degree; ++i) {
        Cochain term = circle_i(a, f, g, i);
        if (odd(static_cast<long long>(i - 1) * (g.degree - 1)))
            out.m -= term.m;
        else
            out.m += term.m;
    }
    return out;
}

Cochain graded_bracket(const Algebra& a, const Cochain& f, const Cochain& g) {
    Cochain fg = circle(a, f, g);
    Cochain gf = circle(a, g, f);
    if (odd(static_cast<long long>(f.degree - 1) * (g.degree - 1)))
        return Cochain{fg.degree, FMatrix(fg.m + gf.m)};
    return Cochain{fg.degree, FMatrix(fg.m - gf.m)};
}

Cochain cup(const Algebra& a, const Cochain& f, const Cochain& g) {
    check_same_algebra(a, f);
    check_same_algebra(a, g);
    Index d = a.dim();
    int rdeg = f.degree + g.degree;
    Cochain out = zero_cochain(a, rdeg);
    std::vector<Index> tuple = first_tuple(rdeg);
    Index col = 0;
    do {
        std::vector<Index> left(tuple.begin(), tuple.begin() + f.degree);
        std::vector<Index> right(tuple.begin() + f.degree, tuple.end());
        out.m.col(col) = a.mul(f.m.col(flat_index(d, left)), g.m.col(flat_index(d, right)));
        ++col;
    } while (rdeg > 0 && next_tuple(tuple, d));
    return out;
}

namespace {

// Column flat(x, y) of the degree-1 differential: f(x)y + xf(y) - f(xy).
FVector diff1_col(const Algebra& a, const FMatrix& f, Index x, Index y) {
    FVector acc = fzvec(a.dim(), a.p());
    acc += a.right_mul(y) * f.col(x);
    acc += a.left_mul(x) * f.col(y);
    add_matvec(acc, f, a.basis_product(x, y), true);
    return acc;
}

// Column flat(x, y, z) of the degree-2 differential:
// c(x,y)z - x c(y,z) + c(xy, z) - c(x, yz).
FVector diff2_col(const Algebra& a, const FMatrix& c, Index x, Index y, Index z) {
    Index d = a.dim();
    FVector acc = fzvec(d, a.p());
    acc += a.right_mul(z) * c.col(x * d + y);
    acc -= a.left_mul(x) * c.col(y * d + z);
    FVector xy = a.basis_product(x, y);
    for (Index q = 0; q < d; ++q)
        if (!xy(q).is_zero()) acc += c.col(q * d + z) * xy(q);
    FVector yz = a.basis_product(y, z);
    for (Index q = 0; q < d; ++q)
        if (!yz(q).is_zero()) acc -= c.col(x * d + q) * yz(q);
    return acc;
}

}  // namespace

Cochain differential(const Algebra& a, const Cochain& f) {
    check_same_algebra(a, f);
    Index d = a.dim();
    if (f.degree == 0) return Cochain{1, FMatrix(a.left_op(f.m.col(0)) - a.right_op(f.m.col(0)))};
    if (f.degree == 1) {
        Cochain out = zero_cochain(a, 2);
        for (Index x = 0; x < d; ++x)
            for (Index y = 0; y < d; ++y) out.m.col(x * d + y) = diff1_col(a, f.m, x, y);
        return out;
    }
    if (f.degree == 2) {
        Cochain out = zero_cochain(a, 3);
        for (Index x = 0; x < d; ++x)
            for (Index y = 0; y < d; ++y)
                for (Index z = 0; z < d; ++z)
                    out.m.col((x * d + y) * d + z) = diff2_col(a, f.m, x, y, z);
        return out;
    }
    throw DegreeError(f.degree + 1);
}

bool is_cocycle(const Algebra& a, const Cochain& f) {
    check_same_algebra(a, f);
    Index d = a.dim();
    if (f.degree == 0) {
        FVector v = f.m.col(0);
        return is_zero(FMatrix(a.left_op(v) - a.right_op(v)));
    }
    if (f.degree == 1) {
        for (Index x = 0; x < d; ++x)
            for (Index y = 0; y < d; ++y)
                if (!is_zero(diff1_col(a, f.m, x, y))) return false;
        return true;
    }
    if (f.degree == 2) {
        for (Index x = 0; x < d; ++x)
            for (Index y = 0; y < d; ++y)
                for (Index z = 0; z < d; ++z)
                    if (!is_zero(diff2_col(a, f.m, x, y, z))) return false;
        return true;
    }
    throw DegreeError(f.degree + 1);
}

namespace {

std::optional<Cochain> solve_coboundary1(const Algebra& a, const Cochain& rhs) {
    // (da)(x) = a x - x a: stack (R_x - L_x) over all x against the columns
    // of rhs.
    Index d = a.dim();
    FMatrix m(d * d, d);
    FVector b(d * d);
    for (Index x = 0; x < d; ++x) {
        m.block(x * d, 0, d, d) = a.right_mul(x) - a.left_mul(x);
        b.segment(x * d, d) = rhs.m.col(x);
    }
    auto sol = solve(m, b);
    if (!sol) return std::nullopt;
    return element_cochain(a, sol->particular);
}

std::optional<Cochain> solve_coboundary2_full(const Algebra& a, const Cochain& rhs) {
    Index d = a.dim();
    uint32_t p = a.p();
    if (d > kFullSolveBound)
        throw Error("degree-2 coboundary solve without generators is capped at dimension " +
                    std::to_string(kFullSolveBound));
    auto val = [p](const Fp& x) { return static_cast<uint32_t>(x.matched(p).value()); };

    // Unknown alpha(r, c) at raw column r*d + c; equation rows indexed by
    // (i, j, component k):  (R_j a_i + L_i a_j - a (e_i e_j))_k = rhs_k.
    RowReducer red(d * d + 1, p);
    bool inconsistent = false;
    for (Index i = 0; i < d && !inconsistent; ++i)
        for (Index j = 0; j < d && !inconsistent; ++j) {
            FVector w = a.basis_product(i, j);
            for (Index k = 0; k < d; ++k) {
                std::vector<uint32_t> row(static_cast<size_t>(d * d + 1), 0);
                for (Index l = 0; l < d; ++l) {
                    uint32_t rv = val(a.right_mul(j)(k, l));
                    if (rv) {
                        auto& s = row[static_cast<size_t>(l * d + i)];
                        s = (s + rv) % p;
                    }
                    uint32_t lv = val(a.left_mul(i)(k, l));
                    if (lv) {
                        auto& s = row[static_cast<size_t>(l * d + j)];
                        s = (s + lv) % p;
                    }
                    uint32_t wv = val(w(l));
                    if (wv) {
                        auto& s = row[static_cast<size_t>(k * d + l)];
                        s = (s + p - wv) % p;
                    }
                }
                row[static_cast<size_t>(d * d)] = val(rhs.m(k, i * d + j));
                red.add_raw(std::move(row));
                if (!red.pivots().empty() && red.pivots().back() == d * d) {
                    inconsistent = true;
                    break;
                }
            }
        }
    if (inconsistent) return std::nullopt;

    FMatrix alpha = fzeros(d, d, p);
    FMatrix basis = red.basis();
    for (Index r = 0; r < red.rank(); ++r) {
        // Free unknowns at zero, so each pivot unknown equals its augmented
        // entry in the RREF.
        Index piv = red.pivots()[static_cast<size_t>(r)];
        alpha(piv / d, piv % d) = basis(r, d * d);
    }
    return endo_cochain(a, alpha);
}

}  // namespace

std::optional<Cochain> solve_coboundary(const Algebra& a, const Cochain& rhs) {
    check_same_algebra(a, rhs);
    if (rhs.degree == 1) return solve_coboundary1(a, rhs);
    if (rhs.degree != 2) throw DegreeError(rhs.degree);
    if (!is_cocycle(a, rhs)) return std::nullopt;

    Index d = a.dim();
    uint32_t p = a.p();
    std::optional<Cochain> result;
    if (!a.has_generators()) {
        result = solve_coboundary2_full(a, rhs);
    } else {
        Index g = static_cast<Index>(a.gens().size());
        Index unit_idx = -1;
        for (Index i = 0; i < d; ++i)
            if (a.expr(i).tag == BasisExpr::Tag::Unit) unit_idx = i;
        Index slots = g + (unit_idx >= 0 ? 1 : 0);
        Index uwidth = slots * d;

        auto sel = [&](Index t) {
            FMatrix s = fzeros(d, uwidth, p);
            for (Index k = 0; k < d; ++k) s(k, t * d + k) = Fp(1, p);
            return s;
        };
        std::vector<FMatrix> selmat;
        for (Index t = 0; t < slots; ++t) selmat.push_back(sel(t));

        // alpha(e_i) = prop[i] u + off[i]: prescribed on products by
        // alpha(g h) = alpha(g) h + g alpha(h) - rhs(g, h).
        std::vector<FMatrix> prop(static_cast<size_t>(d));
        std::vector<FVector> off(static_cast<size_t>(d), fzvec(d, p));
        for (Index i = 0; i < d; ++i) {
            const BasisExpr& e = a.expr(i);
            if (e.tag == BasisExpr::Tag::Unit)
                prop[static_cast<size_t>(i)] = selmat[static_cast<size_t>(g)];
            else if (e.tag == BasisExpr::Tag::Gen)
                prop[static_cast<size_t>(i)] = selmat[static_cast<size_t>(e.gen)];
        }
        for (Index i = 0; i < d; ++i) {
            const BasisExpr& e = a.expr(i);
            if (e.tag != BasisExpr::Tag::Prod) continue;
            Index gt = a.gens()[static_cast<size_t>(e.gen)];
            prop[static_cast<size_t>(i)] =
                mul_sparse_aware(a.right_mul(e.rest), selmat[static_cast<size_t>(e.gen)]) +
                mul_sparse_aware(a.left_mul(gt), prop[static_cast<size_t>(e.rest)]);
            off[static_cast<size_t>(i)] = a.left_mul(gt) * off[static_cast<size_t>(e.rest)] -
                                          rhs.m.col(gt * d + e.rest);
        }

        RowReducer red(uwidth + 1, p);
        auto feed = [&](const FMatrix& block, const FVector& c) {
            std::vector<uint32_t> row(static_cast<size_t>(uwidth + 1));
            for (Index r = 0; r < d; ++r) {
                for (Index q = 0; q < uwidth; ++q)
                    row[static_cast<size_t>(q)] =
                        static_cast<uint32_t>(block(r, q).matched(p).value());
                row[static_cast<size_t>(uwidth)] =
                    static_cast<uint32_t>(c(r).matched(p).value());
                red.add_raw(std::vector<uint32_t>(row));
            }
        };
        for (Index t = 0; t < g; ++t) {
            Index gt = a.gens()[static_cast<size_t>(t)];
            for (Index j = 0; j < d; ++j) {
                FVector w = a.basis_product(gt, j);
                FMatrix block = fzeros(d, uwidth, p);
                FVector cvec = fzvec(d, p);
                for (Index k = 0; k < d; ++k)
                    if (!w(k).is_zero()) {
                        block += prop[static_cast<size_t>(k)] * w(k);
                        cvec -= off[static_cast<size_t>(k)] * w(k);
                    }
                block -= mul_sparse_aware(a.right_mul(j), selmat[static_cast<size_t>(t)]);
                block -= mul_sparse_aware(a.left_mul(gt), prop[static_cast<size_t>(j)]);
                cvec += a.left_mul(gt) * off[static_cast<size_t>(j)];
                cvec -= rhs.m.col(gt * d + j);
                // block = -A and cvec = -b for the equation A u = b, so the
                // augmented rows [block | cvec] encode the same system.
                feed(block, cvec);
            }
        }
        if (unit_idx >= 0)
            for (Index j = 0; j < d; ++j)
                feed(mul_sparse_aware(a.right_mul(j), selmat[static_cast<size_t>(g)]),
                     rhs.m.col(unit_idx * d + j));

        bool inconsistent = false;
        for (Index piv : red.pivots())
            if (piv == uwidth) inconsistent = true;
        if (inconsistent) return std::nullopt;

        FVector u = fzvec(uwidth, p);
        FMatrix basis = red.basis();
        for (Index r = 0; r < red.rank(); ++r)
            u(red.pivots()[static_cast<size_t>(r)]) = basis(r, uwidth);
        FMatrix alpha = fzeros(d, d, p);
        for (Index i = 0; i < d; ++i)
            alpha.col(i) = prop[static_cast<size_t>(i)] * u + off[static_cast<size_t>(i)];
        result = endo_cochain(a, alpha);
    }

    if (result) {
        // The reduced system is a subset of the full one; re-verify.
        const FMatrix& alpha = result->m;
        for (Index i = 0; i < d; ++i)
            for (Index j = 0; j < d; ++j)
                if (!is_zero(FVector(diff1_col(a, alpha, i, j) - rhs.m.col(i * d + j))))
                    throw Error("internal: coboundary solution fails verification");
    }
    return result;
}

}  // namespace hhint
