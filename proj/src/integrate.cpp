#include "hhint/integrate.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hhint/errors.hpp"

namespace hhint {

namespace {

// Lift search is refused above this dimension: a joint solve streams d^3 rows
// of width d^2 + dim Der + 1, which stops being interactive around here.
constexpr Index kLiftDimBound = 32;
constexpr int kMaxLiftOrder = 4096;

bool vanishes(const FVector& v) {
    for (Index i = 0; i < v.size(); ++i)
        if (!v(i).is_zero()) return false;
    return true;
}

bool same_matrix(const FMatrix& a, const FMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Index r = 0; r < a.rows(); ++r)
        for (Index c = 0; c < a.cols(); ++c)
            if (!(a(r, c) - b(r, c)).is_zero()) return false;
    return true;
}

bool zero_matrix(const FMatrix& a) {
    for (Index r = 0; r < a.rows(); ++r)
        for (Index c = 0; c < a.cols(); ++c)
            if (!a(r, c).is_zero()) return false;
    return true;
}

void check_family(const Algebra& a, const std::vector<FMatrix>& coeffs, const char* who) {
    if (coeffs.empty())
        throw DimensionError(std::string(who) + ": empty coefficient list");
    for (const FMatrix& m : coeffs)
        if (m.rows() != a.dim() || m.cols() != a.dim())
            throw DimensionError(std::string(who) + ": coefficient shape is not dim x dim");
}

// sum over i + j = n of alpha_i(e_x) alpha_j(e_y), treating missing
// coefficients as zero; lo = 1 restricts to the interior pairs i, j >= 1.
FVector convolution_term(const Algebra& a, const std::vector<FMatrix>& coeffs, int n,
                         Index x, Index y, int lo) {
    FVector acc = fzvec(a.dim(), a.p());
    const int size = static_cast<int>(coeffs.size());
    for (int i = lo; i <= n - lo; ++i) {
        const int j = n - i;
        if (i >= size || j >= size) continue;
        acc += a.mul(coeffs[static_cast<size_t>(i)].col(x),
                     coeffs[static_cast<size_t>(j)].col(y));
    }
    return acc;
}

}  // namespace

std::optional<int> hs_first_violation(const Algebra& a, const std::vector<FMatrix>& coeffs) {
    check_family(a, coeffs, "hs_first_violation");
    const Index d = a.dim();
    for (int n = 0; n < static_cast<int>(coeffs.size()); ++n) {
        const FMatrix& an = coeffs[static_cast<size_t>(n)];
        for (Index x = 0; x < d; ++x)
            for (Index y = 0; y < d; ++y) {
                FVector lhs = convolution_term(a, coeffs, n, x, y, 0);
                FVector rhs = an * a.basis_product(x, y);
                if (!vanishes(lhs - rhs)) return n;
            }
    }
    return std::nullopt;
}

std::vector<FMatrix> hs_compose(const Algebra& a, const std::vector<FMatrix>& f,
                                const std::vector<FMatrix>& g) {
    check_family(a, f, "hs_compose");
    check_family(a, g, "hs_compose");
    const size_t n = std::min(f.size(), g.size());
    std::vector<FMatrix> out;
    out.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        FMatrix acc = fzeros(a.dim(), a.dim(), a.p());
        for (size_t i = 0; i <= k; ++i) acc += f[i] * g[k - i];
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<FMatrix> hs_inverse(const Algebra& a, const std::vector<FMatrix>& f) {
    check_family(a, f, "hs_inverse");
    const FMatrix id = fidentity(a.dim(), a.p());
    if (!same_matrix(f[0], id))
        throw DimensionError("hs_inverse: leading coefficient must be the identity");
    std::vector<FMatrix> out{id};
    for (size_t n = 1; n < f.size(); ++n) {
        FMatrix acc = fzeros(a.dim(), a.dim(), a.p());
        for (size_t i = 1; i <= n; ++i) acc += f[i] * out[n - i];
        out.push_back(fzeros(a.dim(), a.dim(), a.p()) - acc);
    }
    return out;
}

std::vector<FMatrix> hs_conjugation(const Algebra& a, const FVector& x, int order) {
    if (order < 0) throw DimensionError("hs_conjugation: negative order");
    const Index d = a.dim();
    const FMatrix lx = a.left_op(x);
    const FMatrix rx = a.right_op(x);
    // (1 + xt) y (1 + xt)^{-1} with (1 + xt)^{-1} = sum_j (-x)^j t^j; only
    // the j = n and j = n-1 inverse terms meet the two left-factor terms, so
    // alpha_n = (-1)^n (R_x^n - L_x R_x^{n-1}) for n >= 1.
    std::vector<FMatrix> out{fidentity(d, a.p())};
    FMatrix rpow = fidentity(d, a.p());  // R_x^{n-1} entering iteration n
    for (int n = 1; n <= order; ++n) {
        FMatrix term = rpow * rx - lx * rpow;
        if (n % 2 != 0) term = fzeros(d, d, a.p()) - term;
        out.push_back(std::move(term));
        rpow = rpow * rx;
    }
    return out;
}

std::vector<FMatrix> hs_scale(const Algebra& a, const std::vector<FMatrix>& f,
                              const FVector& z) {
    check_family(a, f, "hs_scale");
    if (!a.center().member(z)) throw NotCentralError();
    const FMatrix lz = a.left_op(z);
    std::vector<FMatrix> out;
    FMatrix zpow = fidentity(a.dim(), a.p());
    for (size_t i = 0; i < f.size(); ++i) {
        if (i > 0) zpow = zpow * lz;
        out.push_back(zpow * f[i]);
    }
    return out;
}

int family_offset(const std::vector<FMatrix>& coeffs) {
    for (size_t n = 1; n < coeffs.size(); ++n)
        if (!is_zero(coeffs[n])) return static_cast<int>(n);
    return 0;
}

Cochain hs_obstruction(const Algebra& a, const std::vector<FMatrix>& coeffs) {
    check_family(a, coeffs, "hs_obstruction");
    const Index d = a.dim();
    const int n = static_cast<int>(coeffs.size());
    Cochain obs = zero_cochain(a, 2);
    for (Index x = 0; x < d; ++x)
        for (Index y = 0; y < d; ++y)
            obs.m.col(x * d + y) = convolution_term(a, coeffs, n, x, y, 1);
    // A multiplicative prefix forces the next obstruction to be a cocycle;
    // failure here means the supplied coefficients were not a valid family.
    if (!is_cocycle(a, obs))
        throw NotMultiplicativeError("obstruction at order " + std::to_string(n) +
                                     " is not a 2-cocycle; the coefficient family is "
                                     "not multiplicative through order " +
                                     std::to_string(n - 1));
    return obs;
}

std::optional<FMatrix> hs_extend_once(const Algebra& a, const std::vector<FMatrix>& coeffs) {
    Cochain obs = hs_obstruction(a, coeffs);
    Cochain rhs = zero_cochain(a, 2) - obs;
    std::optional<Cochain> sol = solve_coboundary(a, rhs);
    if (!sol) return std::nullopt;
    return sol->m;
}

std::optional<int> certify_polynomial(const Algebra& a, const std::vector<FMatrix>& maps) {
    const Index d = a.dim();
    std::vector<FMatrix> padded{fidentity(d, a.p())};
    for (const FMatrix& m : maps) padded.push_back(m);
    // Zero-pad far enough that every nonvacuous identity is checked: with
    // coefficients vanishing above r, all convolution terms vanish above 2r.
    const size_t r = maps.size();
    for (size_t i = 0; i <= r; ++i) padded.push_back(fzeros(d, d, a.p()));
    return hs_first_violation(a, padded);
}

std::vector<FMatrix> generator_substitution(const Algebra& a, const FMatrix& dm, int order) {
    if (!a.has_generators())
        throw DimensionError("generator_substitution: algebra has no generator presentation");
    if (dm.rows() != a.dim() || dm.cols() != a.dim())
        throw DimensionError("generator_substitution: map shape is not dim x dim");
    if (order < 0) throw DimensionError("generator_substitution: negative order");
    const Index d = a.dim();
    const uint32_t p = a.p();
    const Index w = static_cast<Index>(order) + 1;

    // Series of each generator under g -> g + d(g) t, columns = t-powers.
    std::vector<FMatrix> genser;
    genser.reserve(a.gens().size());
    for (Index g : a.gens()) {
        FMatrix s = fzeros(d, w, p);
        s.col(0) = funit(d, g, p);
        if (w > 1) s.col(1) = dm.col(g);
        genser.push_back(std::move(s));
    }

    // Propagate multiplicatively along the factorization e_i = g * rest;
    // rest always has a smaller index, so one forward pass suffices. The
    // generator series is read from genser, never from ser, because the
    // generator element itself may be tagged as the product g * 1.
    std::vector<FMatrix> ser(static_cast<size_t>(d));
    for (Index i = 0; i < d; ++i) {
        const BasisExpr& e = a.expr(i);
        if (e.tag == BasisExpr::Tag::Unit) {
            FMatrix s = fzeros(d, w, p);
            s.col(0) = funit(d, i, p);
            ser[static_cast<size_t>(i)] = std::move(s);
        } else if (e.tag == BasisExpr::Tag::Gen) {
            ser[static_cast<size_t>(i)] = genser[static_cast<size_t>(e.gen)];
        } else {
            const FMatrix& u = genser[static_cast<size_t>(e.gen)];
            const FMatrix& v = ser[static_cast<size_t>(e.rest)];
            FMatrix s = fzeros(d, w, p);
            for (Index n = 0; n < w; ++n)
                for (Index k = 0; k <= n; ++k)
                    s.col(n) += a.mul(u.col(k), v.col(n - k));
            ser[static_cast<size_t>(i)] = std::move(s);
        }
    }

    std::vector<FMatrix> out;
    out.reserve(static_cast<size_t>(w));
    for (Index n = 0; n < w; ++n) {
        FMatrix an = fzeros(d, d, p);
        for (Index i = 0; i < d; ++i) an.col(i) = ser[static_cast<size_t>(i)].col(n);
        out.push_back(std::move(an));
    }
    return out;
}

namespace {

// Depth-first lift search. A node is a concrete prefix alpha_0..alpha_{m-1}
// together with one particular solution cm of the order-m equation; the full
// solution set at order m is cm + Der. Extending to order m+1 is a linear
// solve, done jointly in alpha_{m+1} and the Der-coordinates v of alpha_m:
// for m >= 2 the obstruction depends on alpha_m only through the convolution
// pairs (1, m) and (m, 1), hence linearly, via alpha_1(x) v(y) + v(x)
// alpha_1(y). Joint infeasibility therefore refutes the whole coset at once.
class LiftSearch {
public:
    LiftSearch(const Algebra& a, const FMatrix& d1, int target, uint64_t budget,
               uint64_t branch_cap)
        : a_(a), d_(a.dim()), p_(a.p()), target_(target), budget_(budget),
          cap_(branch_cap), der_(derivation_space(a)) {
        h_ = der_.dim();
        for (Index s = 0; s < h_; ++s)
            derbasis_.push_back(unvec_endo(der_.basis_row(s), d_));
        // v-block columns of the joint system; independent of search depth
        // since they only involve alpha_1.
        for (Index s = 0; s < h_; ++s) {
            FMatrix t = fzeros(d_, d_ * d_, p_);
            const FMatrix& vs = derbasis_[static_cast<size_t>(s)];
            for (Index x = 0; x < d_; ++x)
                for (Index y = 0; y < d_; ++y)
                    t.col(x * d_ + y) =
                        a.mul(d1.col(x), vs.col(y)) + a.mul(vs.col(x), d1.col(y));
            vterm_.push_back(std::move(t));
        }
    }

    enum class Kind { Found, Refuted, Inconclusive };
    struct Outcome {
        Kind kind;
        int order = 0;  // Refuted: least order no extension of the node reaches
    };

    Outcome explore(std::vector<FMatrix>& coeffs, const FMatrix& cm) {
        const int m = static_cast<int>(coeffs.size());
        best_ = std::max(best_, m);
        if (m == target_) {
            witness_ = coeffs;
            witness_.push_back(cm);
            return {Kind::Found};
        }
        if (nodes_ >= budget_) return {Kind::Inconclusive};
        ++nodes_;

        // Interior convolution at order m+1 with alpha_m frozen at cm.
        std::vector<FMatrix> cat = coeffs;
        cat.push_back(cm);
        FMatrix base = fzeros(d_, d_ * d_, p_);
        for (Index x = 0; x < d_; ++x)
            for (Index y = 0; y < d_; ++y)
                base.col(x * d_ + y) = convolution_term(a_, cat, m + 1, x, y, 1);

        // Stream the joint system: unknowns (vec alpha_{m+1} | v), equations
        // d(alpha_{m+1})(x, y) + base(x, y) + sum_s v_s vterm_s(x, y) = 0.
        const Index unknowns = d_ * d_ + h_;
        RowReducer hom(unknowns, p_);
        RowReducer aug(unknowns + 1, p_);
        std::vector<uint32_t> row(static_cast<size_t>(unknowns) + 1);
        for (Index x = 0; x < d_; ++x) {
            const FMatrix& lx = a_.left_mul(x);
            for (Index y = 0; y < d_; ++y) {
                const FMatrix& ry = a_.right_mul(y);
                const FVector prod = a_.basis_product(x, y);
                for (Index k = 0; k < d_; ++k) {
                    std::fill(row.begin(), row.end(), 0u);
                    auto bump = [&](Index col, uint32_t val) {
                        uint32_t& slot = row[static_cast<size_t>(col)];
                        slot = (slot + val) % p_;
                    };
                    for (Index l = 0; l < d_; ++l) {
                        bump(l * d_ + x, ry(k, l).value());
                        bump(l * d_ + y, lx(k, l).value());
                        const uint32_t pv = prod(l).value();
                        bump(k * d_ + l, pv == 0 ? 0u : p_ - pv);
                    }
                    for (Index s = 0; s < h_; ++s)
                        bump(d_ * d_ + s, vterm_[static_cast<size_t>(s)](k, x * d_ + y).value());
                    uint32_t b = base(k, x * d_ + y).value();
                    row[static_cast<size_t>(unknowns)] = b == 0 ? 0u : p_ - b;
                    std::vector<uint32_t> hrow(row.begin(), row.end() - 1);
                    hom.add_raw(std::move(hrow));
                    aug.add_raw(row);
                }
            }
        }

        if (!aug.pivots().empty() && aug.pivots().back() == unknowns)
            return {Kind::Refuted, m + 1};

        // Particular joint solution with free unknowns zero.
        FVector part = fzvec(unknowns, p_);
        {
            FMatrix rb = aug.basis();
            for (Index r = 0; r < aug.rank(); ++r)
                part(aug.pivots()[static_cast<size_t>(r)]) = rb(r, unknowns);
        }
        FVector w0 = part.tail(h_);
        if (m + 1 == target_) {
            witness_ = coeffs;
            witness_.push_back(with_coset(cm, w0));
            witness_.push_back(unvec_endo(FVector(part.head(d_ * d_)), d_));
            return {Kind::Found};
        }

        // Feasible alpha_m choices are cm + (w0 + W) in Der-coordinates,
        // where W is the v-projection of the joint kernel.
        Subspace ker = hom.kernel();
        Subspace wproj = h_ > 0
                             ? Subspace::span(FMatrix(ker.basis().rightCols(h_)), p_)
                             : Subspace::zero(0, p_);
        const Index wd = wproj.dim();
        uint64_t total = 1;
        for (Index i = 0; i < wd && total <= cap_; ++i) total *= p_;
        const bool complete = total <= cap_;
        const uint64_t visit = complete ? total : cap_;

        std::vector<uint32_t> digits(static_cast<size_t>(std::max<Index>(wd, 1)), 0u);
        bool saw_inconclusive = false;
        int refuted_order = 0;
        for (uint64_t c = 0; c < visit; ++c) {
            FVector wv = w0;
            for (Index s = 0; s < wd; ++s)
                if (digits[static_cast<size_t>(s)] != 0)
                    wv += Fp(digits[static_cast<size_t>(s)], p_) *
                          FVector(wproj.basis_row(s));
            // advance odometer (base p, least-significant digit first)
            for (Index s = 0; s < wd; ++s) {
                if (++digits[static_cast<size_t>(s)] < p_) break;
                digits[static_cast<size_t>(s)] = 0;
            }

            std::vector<FMatrix> next = coeffs;
            next.push_back(with_coset(cm, wv));
            if (nodes_ >= budget_) return {Kind::Inconclusive};
            ++nodes_;
            std::optional<FMatrix> ext = hs_extend_once(a_, next);
            if (!ext)
                throw Error("internal: joint-feasible branch has no extension");
            Outcome sub = explore(next, *ext);
            if (sub.kind == Kind::Found) return sub;
            if (sub.kind == Kind::Inconclusive)
                saw_inconclusive = true;
            else
                refuted_order = std::max(refuted_order, sub.order);
        }
        if (complete && !saw_inconclusive) return {Kind::Refuted, refuted_order};
        return {Kind::Inconclusive};
    }

    FMatrix with_coset(const FMatrix& cm, const FVector& w) const {
        FMatrix out = cm;
        for (Index s = 0; s < h_; ++s)
            if (!w(s).is_zero()) out += w(s) * derbasis_[static_cast<size_t>(s)];
        return out;
    }

    const Algebra& a_;
    Index d_;
    uint32_t p_;
    int target_;
    uint64_t budget_;
    uint64_t cap_;
    Subspace der_;
    Index h_ = 0;
    std::vector<FMatrix> derbasis_;
    std::vector<FMatrix> vterm_;
    uint64_t nodes_ = 0;
    int best_ = 1;
    std::vector<FMatrix> witness_;
};

}  // namespace

LiftResult lift(const Algebra& a, const FMatrix& d, const LiftOptions& opt) {
    if (!is_derivation(a, d))
        throw NotADerivationError("lift requires a derivation as its starting coefficient");
    const int target = opt.target < 0 ? static_cast<int>(2 * a.p() * a.p()) : opt.target;
    if (target > kMaxLiftOrder)
        throw BoundError("lift target order " + std::to_string(target) + " > " +
                         std::to_string(kMaxLiftOrder));
    LiftResult res;
    const FMatrix id = fidentity(a.dim(), a.p());
    if (target <= 1) {
        res.status = LiftStatus::LiftedTo;
        res.order = res.best_order = target;
        res.witness = {id};
        if (target == 1) res.witness.push_back(d);
        return res;
    }
    if (a.dim() > kLiftDimBound) {
        res.status = LiftStatus::BudgetExhausted;
        res.best_order = 1;
        return res;
    }

    std::vector<FMatrix> coeffs{id, d};
    res.nodes = 1;
    std::optional<FMatrix> a2 = hs_extend_once(a, coeffs);
    if (!a2) {
        res.status = LiftStatus::ObstructedAt;
        res.order = 2;
        res.best_order = 1;
        return res;
    }
    if (target == 2) {
        res.status = LiftStatus::LiftedTo;
        res.order = res.best_order = 2;
        coeffs.push_back(*a2);
        res.witness = std::move(coeffs);
        return res;
    }

    LiftSearch search(a, d, target, opt.budget, opt.branch_cap);
    LiftSearch::Outcome out = search.explore(coeffs, *a2);
    res.nodes += search.nodes_;
    res.best_order = search.best_;
    switch (out.kind) {
        case LiftSearch::Kind::Found:
            res.status = LiftStatus::LiftedTo;
            res.order = target;
            res.best_order = target;
            res.witness = std::move(search.witness_);
            break;
        case LiftSearch::Kind::Refuted:
            res.status = LiftStatus::ObstructedAt;
            res.order = out.order;
            break;
        case LiftSearch::Kind::Inconclusive:
            res.status = LiftStatus::BudgetExhausted;
            res.order = search.best_;
            break;
    }
    return res;
}

namespace {

// Diagonal derivation counting occurrences of generator t in each basis
// word. A derivation exactly when word degrees add under multiplication
// modulo p (monomial-shaped products); always validated before use.
FMatrix word_weight(const Algebra& a, int t) {
    const Index d = a.dim();
    std::vector<uint32_t> cnt(static_cast<size_t>(d), 0u);
    for (Index i = 0; i < d; ++i) {
        const BasisExpr& e = a.expr(i);
        switch (e.tag) {
            case BasisExpr::Tag::Unit: cnt[static_cast<size_t>(i)] = 0; break;
            case BasisExpr::Tag::Gen:
                cnt[static_cast<size_t>(i)] = e.gen == t ? 1u : 0u;
                break;
            case BasisExpr::Tag::Prod:
                cnt[static_cast<size_t>(i)] =
                    (e.gen == t ? 1u : 0u) + cnt[static_cast<size_t>(e.rest)];
                break;
        }
    }
    FMatrix m = fzeros(d, d, a.p());
    for (Index i = 0; i < d; ++i) m(i, i) = Fp(cnt[static_cast<size_t>(i)], a.p());
    return m;
}

}  // namespace

IntegrabilityReport integrable_report(const Algebra& a, int order, const LiftOptions& opt) {
    const Index d = a.dim();
    const uint32_t p = a.p();
    IntegrabilityReport rep{hh1(a), 0, 0, Subspace::zero(d * d, p), {}};
    rep.target_order = order < 0 ? static_cast<int>(2 * p * p) : order;

    // Certified integrable derivations accumulate in one reducer, seeded
    // with the inner derivations (conjugation by 1 + x t integrates ad_x to
    // every order). Sums and scalar multiples of integrable derivations are
    // integrable (compose families, rescale t), so span membership is sound.
    RowReducer cert(d * d, p);
    for (Index r = 0; r < rep.h.inn.dim(); ++r) cert.add_row(rep.h.inn.basis_row(r));

    // Polynomial certificate for one derivation, if either the zero-padded
    // one-term family or the generator substitution family is multiplicative.
    auto direct = [&](const FMatrix& dm) -> std::optional<int> {
        if (!certify_polynomial(a, {dm})) return 1;
        if (a.has_generators()) {
            std::vector<FMatrix> fam = generator_substitution(a, dm, static_cast<int>(d));
            if (fam.size() >= 2 && same_matrix(fam[1], dm)) {
                size_t r = fam.size() - 1;
                while (r >= 1 && zero_matrix(fam[r])) --r;
                std::vector<FMatrix> maps(fam.begin() + 1,
                                          fam.begin() + 1 + static_cast<long>(r));
                if (!certify_polynomial(a, maps)) return static_cast<int>(r);
            }
        }
        return std::nullopt;
    };

    std::vector<FMatrix> pool;
    if (a.kind() == AlgebraKind::TruncPoly)
        for (FMatrix& wb : witt_basis(a)) pool.push_back(std::move(wb));
    if (a.has_generators())
        for (int t = 0; t < static_cast<int>(a.gens().size()); ++t) {
            FMatrix ww = word_weight(a, t);
            if (is_derivation(a, ww)) pool.push_back(std::move(ww));
        }
    for (const FMatrix& cand : pool)
        if (direct(cand)) cert.add_row(vec_endo(cand));

    // Pass 1: per-representative certificates.
    std::vector<std::optional<int>> direct_len(rep.h.reps.size());
    std::vector<size_t> uncertified;
    for (size_t i = 0; i < rep.h.reps.size(); ++i) {
        direct_len[i] = direct(rep.h.reps[i]);
        if (direct_len[i])
            cert.add_row(vec_endo(rep.h.reps[i]));
        else
            uncertified.push_back(i);
    }
    // Pass 2: the integrable derivations form a subspace, so a combination
    // of two uncertified representatives may still carry a certificate
    // (e.g. when each has the same obstructing component). Small-bounded.
    if (uncertified.size() <= 16 && p <= 13) {
        for (size_t ii = 0; ii < uncertified.size(); ++ii)
            for (size_t jj = ii + 1; jj < uncertified.size(); ++jj)
                for (uint32_t c = 1; c < p; ++c) {
                    FMatrix comb = rep.h.reps[uncertified[ii]] +
                                   Fp(c, p) * rep.h.reps[uncertified[jj]];
                    if (direct(comb)) cert.add_row(vec_endo(comb));
                }
    }

    for (size_t i = 0; i < rep.h.reps.size(); ++i) {
        const FMatrix& r = rep.h.reps[i];
        ClassIntegrability ci;
        ci.index = static_cast<Index>(i);
        if (direct_len[i]) {
            ci.status = IntegrabilityStatus::Certified;
            ci.order = *direct_len[i];
        } else if (vanishes(cert.reduce(vec_endo(r)))) {
            ci.status = IntegrabilityStatus::Certified;
            ci.order = 0;  // spanned by certified derivations and Inn
        } else if (d <= kLiftDimBound) {
            LiftOptions lo = opt;
            lo.target = rep.target_order;
            LiftResult lr = lift(a, r, lo);
            ci.nodes = lr.nodes;
            switch (lr.status) {
                case LiftStatus::LiftedTo:
                    ci.status = IntegrabilityStatus::ReachedOrder;
                    ci.order = lr.order;
                    break;
                case LiftStatus::ObstructedAt:
                    ci.status = IntegrabilityStatus::ObstructedExact;
                    ci.order = lr.order;
                    break;
                case LiftStatus::BudgetExhausted:
                    ci.status = IntegrabilityStatus::Undecided;
                    ci.order = lr.best_order;
                    break;
            }
        } else {
            ci.status = IntegrabilityStatus::Undecided;
        }
        rep.classes.push_back(ci);
    }
    rep.certified_dim = cert.rank() - rep.h.inn.dim();
    rep.certified = cert.rank() == 0 ? Subspace::zero(d * d, p) : Subspace::span(cert.basis(), p);
    return rep;
}

}  // namespace hhint
