#include "hhint/derivations.hpp"

#include <algorithm>

#include "hhint/errors.hpp"

namespace hhint {

namespace {

// Subset checks on endomorphism spaces cost dim^2 * d^2 field operations;
// above this dimension the internal invariant asserts are skipped.
constexpr Index kInvariantCheckBound = 64;

// Selector matrix for generator slot t: picks the t-th image block out of the
// stacked unknown vector, D(e_gen) = S_t u.
FMatrix selector(Index d, Index gens, Index t, uint32_t p) {
    FMatrix s = fzeros(d, gens * d, p);
    for (Index k = 0; k < d; ++k) s(k, t * d + k) = Fp(1, p);
    return s;
}

// prop[i] is the d x (#gens * d) matrix with D(e_i) = prop[i] * u, where u
// stacks the generator images. Unit-tagged elements map to zero (derivations
// kill the unit), generators to selectors, and products propagate through
// Leibniz: D(g * rest) = D(g) * rest + g * D(rest).
std::vector<FMatrix> propagation_matrices(const Algebra& a) {
    Index d = a.dim();
    Index g = static_cast<Index>(a.gens().size());
    uint32_t p = a.p();
    std::vector<FMatrix> prop(static_cast<size_t>(d));
    std::vector<FMatrix> sel;
    for (Index t = 0; t < g; ++t) sel.push_back(selector(d, g, t, p));

    for (Index i = 0; i < d; ++i) {
        const BasisExpr& e = a.expr(i);
        if (e.tag == BasisExpr::Tag::Unit)
            prop[static_cast<size_t>(i)] = fzeros(d, g * d, p);
        else if (e.tag == BasisExpr::Tag::Gen)
            prop[static_cast<size_t>(i)] = sel[static_cast<size_t>(e.gen)];
    }
    for (Index i = 0; i < d; ++i) {
        const BasisExpr& e = a.expr(i);
        if (e.tag != BasisExpr::Tag::Prod) continue;
        Index gt = a.gens()[static_cast<size_t>(e.gen)];
        prop[static_cast<size_t>(i)] =
            mul_sparse_aware(a.right_mul(e.rest), sel[static_cast<size_t>(e.gen)]) +
            mul_sparse_aware(a.left_mul(gt), prop[static_cast<size_t>(e.rest)]);
    }
    return prop;
}

}  // namespace

FVector vec_endo(const FMatrix& m) {
    Index d = m.rows();
    FVector v(d * m.cols());
    for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < m.cols(); ++c) v(r * m.cols() + c) = m(r, c);
    return v;
}

FMatrix unvec_endo(const FVector& v, Index d) {
    if (v.size() != d * d) throw DimensionError("flattened endomorphism has wrong length");
    FMatrix m(d, d);
    for (Index r = 0; r < d; ++r)
        for (Index c = 0; c < d; ++c) m(r, c) = v(r * d + c);
    return m;
}

Subspace derivation_space(const Algebra& a) {
    return a.has_generators() ? derivation_space_reduced(a) : derivation_space_allpairs(a);
}

Subspace derivation_space_allpairs(const Algebra& a) {
    Index d = a.dim();
    uint32_t p = a.p();
    auto val = [p](const Fp& x) { return static_cast<uint32_t>(x.matched(p).value()); };

    // Row for (i, j, k): coefficient of D(r, c) at raw column r*d + c in
    //   D(e_i e_j)_k - (D(e_i) e_j)_k - (e_i D(e_j))_k.
    RowReducer red(d * d, p);
    for (Index i = 0; i < d; ++i) {
        const FMatrix& li = a.left_mul(i);
        for (Index j = 0; j < d; ++j) {
            FVector w = a.basis_product(i, j);
            const FMatrix& rj = a.right_mul(j);
            std::vector<std::vector<uint32_t>> rows(
                static_cast<size_t>(d), std::vector<uint32_t>(static_cast<size_t>(d * d), 0));
            for (Index l = 0; l < d; ++l) {
                uint32_t wl = val(w(l));
                if (wl)
                    for (Index k = 0; k < d; ++k) {
                        uint32_t& slot = rows[static_cast<size_t>(k)][static_cast<size_t>(k * d + l)];
                        slot = (slot + wl) % p;
                    }
            }
            for (Index k = 0; k < d; ++k)
                for (Index l = 0; l < d; ++l) {
                    uint32_t rv = val(rj(k, l));
                    if (rv) {
                        uint32_t& slot = rows[static_cast<size_t>(k)][static_cast<size_t>(l * d + i)];
                        slot = (slot + p - rv) % p;
                    }
                    uint32_t lv = val(li(k, l));
                    if (lv) {
                        uint32_t& slot = rows[static_cast<size_t>(k)][static_cast<size_t>(l * d + j)];
                        slot = (slot + p - lv) % p;
                    }
                }
            for (auto& row : rows) red.add_raw(std::move(row));
        }
    }
    return red.kernel();
}

Subspace derivation_space_reduced(const Algebra& a) {
    if (!a.has_generators()) throw Error("algebra carries no generator decomposition");
    Index d = a.dim();
    Index g = static_cast<Index>(a.gens().size());
    uint32_t p = a.p();
    std::vector<FMatrix> prop = propagation_matrices(a);

    RowReducer red(g * d, p);
    for (Index t = 0; t < g && red.rank() < g * d; ++t) {
        Index gt = a.gens()[static_cast<size_t>(t)];
        for (Index j = 0; j < d; ++j) {
            FVector w = a.basis_product(gt, j);
            FMatrix block = fzeros(d, g * d, p);
            for (Index k = 0; k < d; ++k)
                if (!w(k).is_zero()) block += prop[static_cast<size_t>(k)] * w(k);
            block -= mul_sparse_aware(a.left_mul(gt), prop[static_cast<size_t>(j)]);
            block.block(0, t * d, d, d) -= a.right_mul(j);
            for (Index r = 0; r < d; ++r)
                red.add_raw(red.to_raw(block.row(r).transpose()));
        }
    }

    Subspace uker = red.kernel();
    Index h = uker.dim();
    if (h == 0) return Subspace::zero(d * d, p);
    FMatrix umat = uker.basis().transpose();
    std::vector<FMatrix> endos(static_cast<size_t>(h), fzeros(d, d, p));
    for (Index i = 0; i < d; ++i) {
        FMatrix cols = mul_sparse_aware(prop[static_cast<size_t>(i)], umat);  // d x h
        for (Index c = 0; c < h; ++c) endos[static_cast<size_t>(c)].col(i) = cols.col(c);
    }
    std::vector<FVector> flat;
    flat.reserve(static_cast<size_t>(h));
    for (const FMatrix& e : endos) flat.push_back(vec_endo(e));
    return Subspace::span(flat, d * d, p);
}

Subspace inner_derivations(const Algebra& a) {
    Index d = a.dim();
    std::vector<FVector> ads;
    ads.reserve(static_cast<size_t>(d));
    for (Index i = 0; i < d; ++i)
        ads.push_back(vec_endo(FMatrix(a.left_mul(i) - a.right_mul(i))));
    return Subspace::span(ads, d * d, a.p());
}

bool is_derivation(const Algebra& a, const FMatrix& d) {
    Index n = a.dim();
    if (d.rows() != n || d.cols() != n) throw DimensionError("endomorphism has wrong shape");
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            FVector lhs = d * a.basis_product(i, j);
            FVector rhs = a.right_mul(j) * d.col(i) + a.left_mul(i) * d.col(j);
            if (!is_zero(FVector(lhs - rhs))) return false;
        }
    return true;
}

FMatrix derivation_from_generator_images(const Algebra& a, const std::vector<FVector>& images) {
    if (!a.has_generators()) throw Error("algebra carries no generator decomposition");
    Index d = a.dim();
    uint32_t p = a.p();
    if (images.size() != a.gens().size())
        throw DimensionError("expected one image per generator");
    for (const FVector& v : images)
        if (v.size() != d) throw DimensionError("generator image has wrong length");

    FMatrix dm = fzeros(d, d, p);
    for (Index i = 0; i < d; ++i) {
        const BasisExpr& e = a.expr(i);
        if (e.tag == BasisExpr::Tag::Gen) dm.col(i) = images[static_cast<size_t>(e.gen)];
    }
    for (Index i = 0; i < d; ++i) {
        const BasisExpr& e = a.expr(i);
        if (e.tag != BasisExpr::Tag::Prod) continue;
        Index gt = a.gens()[static_cast<size_t>(e.gen)];
        // The generator image comes straight from `images`: e_i = g * rest
        // may have i == gt (g = g * unit), so dm.col(gt) is not usable yet.
        dm.col(i) = a.right_mul(e.rest) * images[static_cast<size_t>(e.gen)] +
                    a.left_mul(gt) * dm.col(e.rest);
    }

    // Leibniz on (generator, basis) pairs is the full defining constraint set
    // for a map built by propagation.
    for (Index gt : a.gens())
        for (Index j = 0; j < d; ++j) {
            FVector lhs = dm * a.basis_product(gt, j);
            FVector rhs = a.right_mul(j) * dm.col(gt) + a.left_mul(gt) * dm.col(j);
            if (!is_zero(FVector(lhs - rhs)))
                throw NotADerivationError("images violate the relation " + a.label(gt) + " * " +
                                          a.label(j));
        }
    return dm;
}

HH1 hh1(const Algebra& a) {
    Subspace der = derivation_space(a);
    Subspace inn = inner_derivations(a);
    if (a.dim() <= kInvariantCheckBound && !der.contains(inn))
        throw Error("internal: inner derivations escaped the derivation space");

    std::vector<FMatrix> reps;
    for (Index r = 0; r < der.dim(); ++r) {
        Index piv = der.pivots()[static_cast<size_t>(r)];
        if (!std::binary_search(inn.pivots().begin(), inn.pivots().end(), piv))
            reps.push_back(unvec_endo(der.basis_row(r), a.dim()));
    }
    if (static_cast<Index>(reps.size()) != der.dim() - inn.dim())
        throw Error("internal: pivot filtration miscounted the quotient");
    return HH1{std::move(der), std::move(inn), std::move(reps)};
}

FMatrix bracket(const FMatrix& x, const FMatrix& y) {
    return FMatrix(x * y - y * x);
}

FMatrix p_power(const FMatrix& d, uint32_t p) {
    require_prime(p);
    FMatrix result = fidentity(d.rows(), p);
    FMatrix base = d;
    for (uint32_t e = p; e; e >>= 1) {
        if (e & 1) result = FMatrix(result * base);
        if (e > 1) base = FMatrix(base * base);
    }
    return result;
}

FMatrix central_scale(const Algebra& a, const FVector& z, const FMatrix& d) {
    if (!a.center().member(z)) throw NotCentralError();
    return FMatrix(a.left_op(z) * d);
}

bool preserves_radical(const Algebra& a, const FMatrix& d) {
    const Subspace& rad = a.radical();
    for (Index r = 0; r < rad.dim(); ++r)
        if (!rad.member(FVector(d * rad.basis_row(r)))) return false;
    return true;
}

Subspace bracket_span(const Subspace& s) {
    Index n = s.dim();
    Index d = 0;
    while (d * d < s.ambient()) ++d;
    if (d * d != s.ambient()) throw DimensionError("ambient space is not an endomorphism space");

    std::vector<FVector> brackets;
    for (Index i = 0; i < n; ++i) {
        FMatrix x = unvec_endo(s.basis_row(i), d);
        for (Index j = i + 1; j < n; ++j)
            brackets.push_back(vec_endo(bracket(x, unvec_endo(s.basis_row(j), d))));
    }
    return Subspace::span(brackets, s.ambient(), s.p());
}

const Subspace& require_bracket_closed(const Subspace& s) {
    if (!s.contains(bracket_span(s))) throw NotBracketClosedError();
    return s;
}

std::vector<Index> derived_series_dims(const Subspace& s) {
    require_bracket_closed(s);
    std::vector<Index> dims{s.dim()};
    Subspace cur = s;
    while (cur.dim() > 0) {
        Subspace next = bracket_span(cur);  // closed once s is: [s', s'] <= span[s, s]
        dims.push_back(next.dim());
        if (next.dim() == cur.dim()) break;
        cur = std::move(next);
    }
    return dims;
}

SolvabilityReport solvability(const Algebra& a) {
    HH1 h = hh1(a);
    Index d = a.dim();
    uint32_t p = a.p();

    SolvabilityReport report;
    report.series.push_back(h.dim());
    std::vector<FMatrix> reps = std::move(h.reps);
    Index prev = h.dim();
    while (prev > 0) {
        // Inn is an ideal, so [S + Inn, S + Inn] + Inn = [reps, reps] + Inn:
        // only the representatives feed the next term.
        std::vector<FVector> rows;
        for (Index r = 0; r < h.inn.dim(); ++r) rows.push_back(h.inn.basis_row(r));
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = i + 1; j < reps.size(); ++j)
                rows.push_back(vec_endo(bracket(reps[i], reps[j])));
        Subspace next = Subspace::span(rows, d * d, p);
        Index next_dim = next.dim() - h.inn.dim();
        report.series.push_back(next_dim);
        if (next_dim == prev) break;

        reps.clear();
        for (Index r = 0; r < next.dim(); ++r) {
            Index piv = next.pivots()[static_cast<size_t>(r)];
            if (!std::binary_search(h.inn.pivots().begin(), h.inn.pivots().end(), piv))
                reps.push_back(unvec_endo(next.basis_row(r), d));
        }
        prev = next_dim;
    }
    report.solvable = report.series.back() == 0;
    return report;
}

std::vector<FMatrix> witt_basis(const Algebra& a) {
    if (a.kind() != AlgebraKind::TruncPoly || !a.has_generators())
        throw Error("witt basis needs a truncated polynomial algebra with variables");
    Index d = a.dim();
    Index r = static_cast<Index>(a.gens().size());
    uint32_t p = a.p();

    std::vector<FMatrix> basis;
    basis.reserve(static_cast<size_t>(r * d));
    for (Index var = 0; var < r; ++var)
        for (Index m = 0; m < d; ++m) {
            std::vector<FVector> images(static_cast<size_t>(r), fzvec(d, p));
            images[static_cast<size_t>(var)] = funit(d, m, p);
            basis.push_back(derivation_from_generator_images(a, images));
        }
    return basis;
}

}  // namespace hhint
