#include "hhint/selftest.hpp"

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <utility>

#include "hhint/algebra.hpp"
#include "hhint/cochains.hpp"
#include "hhint/derivations.hpp"
#include "hhint/errors.hpp"
#include "hhint/integrate.hpp"
#include "hhint/symmetric.hpp"

namespace hhint {

namespace {

// ---------------------------------------------------------------- fixtures

// 2x2 matrix algebra over F_p: basis E11, E12, E21, E22, E_ab E_ce =
// [b == c] E_ae. Separable, zero radical, all derivations inner.
Algebra matrix2x2(uint32_t p) {
    const Index d = 4;
    auto at = [](int a, int b) { return static_cast<Index>(2 * a + b); };
    std::vector<FMatrix> lmul(4, fzeros(d, d, p));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int e = 0; e < 2; ++e)
                    if (b == c) lmul[static_cast<size_t>(at(a, b))](at(a, e), at(c, e)) = Fp(1, p);
    FVector unit = fzvec(d, p);
    unit(at(0, 0)) = Fp(1, p);
    unit(at(1, 1)) = Fp(1, p);
    return from_structure_constants(p, std::move(lmul), unit, {"e11", "e12", "e21", "e22"},
                                    "M2");
}

// The fixture pool exercised by the structural items: a field, truncated
// polynomials, Nakayama algebras, group algebras (a 2-group and a symmetric
// group), and a matrix algebra.
struct Fixtures {
    std::vector<Algebra> all;
    Fixtures() {
        all.push_back(from_structure_constants(3, {fidentity(1, 3)}, funit(1, 0, 3), {"1"},
                                               "F3"));
        all.push_back(trunc_poly(2, 1));
        all.push_back(trunc_poly(3, 2));
        all.push_back(nakayama(3, 2, 2));
        all.push_back(nakayama(5, 4, 4));
        all.push_back(group_algebra(2, "(1 2 3 4)"));
        all.push_back(group_algebra(3, "(1 2),(1 2 3)"));
        all.push_back(matrix2x2(3));
    }
};

// Direct (linear-algebra) and closed-form outer-derivation dimensions for
// the small symmetric groups; computed once, shared by two items.
struct SymDirect {
    // (n, p) -> (direct dim over F_p[S_n], partition-formula dim)
    std::map<std::pair<int, uint32_t>, std::pair<Index, int64_t>> table;

    static const char* gens(int n) {
        switch (n) {
            case 2: return "(1 2)";
            case 3: return "(1 2),(1 2 3)";
            case 4: return "(1 2),(1 2 3 4)";
            default: return "(1 2),(1 2 3 4 5)";
        }
    }

    void compute() {
        const std::pair<int, uint32_t> cases[] = {{2, 2}, {3, 2}, {3, 3}, {4, 2},
                                                  {4, 3}, {5, 2}, {5, 3}, {5, 5}};
        for (auto [n, p] : cases) {
            Algebra g = group_algebra(p, gens(n));
            table[{n, p}] = {hh1(g).dim(), hh1_dim_sym(n, p)};
        }
    }
};

// ------------------------------------------------------------------ helpers

bool is_power_of(int n, uint32_t p) {
    if (n < 1) return false;
    while (n % static_cast<int>(p) == 0) n /= static_cast<int>(p);
    return n == 1;
}

template <class F>
SelftestItem guarded(std::string id, std::string name, F&& body) {
    SelftestItem item{std::move(id), std::move(name), false, {}};
    try {
        body(item);
    } catch (const std::exception& e) {
        item.pass = false;
        item.details = std::string("exception: ") + e.what();
    }
    return item;
}

// Polynomial witness family for one derivation: either 1 + D t is already
// multiplicative, or the generator substitution g -> g + D(g) t induces a
// finite multiplicative family (trailing zeros trimmed). nullopt when
// neither certifies.
std::optional<std::vector<FMatrix>> witness_family(const Algebra& a, const FMatrix& dm) {
    if (!certify_polynomial(a, {dm}))
        return std::vector<FMatrix>{fidentity(a.dim(), a.p()), dm};
    if (!a.has_generators()) return std::nullopt;
    std::vector<FMatrix> sub = generator_substitution(a, dm, 2 * static_cast<int>(a.dim()));
    while (sub.size() > 2 && is_zero(sub.back())) sub.pop_back();
    std::vector<FMatrix> maps(sub.begin() + 1, sub.end());
    if (!certify_polynomial(a, maps)) return sub;
    return std::nullopt;
}

std::vector<FMatrix> pad_family(const Algebra& a, std::vector<FMatrix> f, size_t len) {
    while (f.size() < len) f.push_back(fzeros(a.dim(), a.dim(), a.p()));
    return f;
}

FVector random_vec(std::mt19937& rng, Index n, uint32_t p) {
    FVector v = fzvec(n, p);
    for (Index i = 0; i < n; ++i) v(i) = Fp(rng() % p, p);
    return v;
}

FMatrix random_derivation(std::mt19937& rng, const Algebra& a, const Subspace& der) {
    FVector v = fzvec(a.dim() * a.dim(), a.p());
    for (Index r = 0; r < der.dim(); ++r) v += Fp(rng() % a.p(), a.p()) * der.basis_row(r);
    return unvec_endo(v, a.dim());
}

// Random multiplicative family with coefficients 0..n (shorter if an
// extension obstructs along the way). Each extension step is shifted by a
// random derivation, which stays valid: adding a derivation to the top
// coefficient does not change the defect at the orders already fixed.
std::vector<FMatrix> random_family(std::mt19937& rng, const Algebra& a, const Subspace& der,
                                   int n) {
    std::vector<FMatrix> fam{fidentity(a.dim(), a.p()), random_derivation(rng, a, der)};
    while (static_cast<int>(fam.size()) <= n) {
        std::optional<FMatrix> ext = hs_extend_once(a, fam);
        if (!ext) break;
        fam.push_back(FMatrix(*ext + random_derivation(rng, a, der)));
    }
    return fam;
}

// ------------------------------------------------------------------- items

SelftestItem item_validate(const Fixtures& fx, bool negative_control) {
    return guarded("00", "structure constants validate on the fixture pool",
                   [&](SelftestItem& it) {
                       for (const Algebra& a : fx.all) a.validate();
                       if (negative_control) {
                           // Corrupt one product of the six-dimensional Nakayama
                           // fixture (first arrow squared becomes a vertex
                           // idempotent) and re-validate; the throw fails the item.
                           const Algebra& src = fx.all[3];
                           std::vector<FMatrix> lmul;
                           for (Index i = 0; i < src.dim(); ++i) lmul.push_back(src.left_mul(i));
                           lmul[2](0, 2) = Fp(1, src.p());
                           std::vector<std::string> labels = src.labels();
                           Algebra bad = Algebra::unchecked(src.p(), std::move(lmul), src.unit(),
                                                            std::move(labels), src.kind(),
                                                            "corrupted");
                           bad.validate();
                       }
                       it.pass = true;
                       it.details = std::to_string(fx.all.size()) + " fixtures validated" +
                                    (negative_control ? ", corrupted tensor NOT rejected" : "");
                   });
}

SelftestItem item01(const SymDirect& sym) {
    return guarded(
        "01", "symmetric group on p letters over F_p: one outer derivation class (p = 3, 5)",
        [&](SelftestItem& it) {
            auto s3 = sym.table.at({3, 3});
            auto s5 = sym.table.at({5, 5});
            it.pass = s3.first == 1 && s3.second == 1 && s5.first == 1 && s5.second == 1;
            std::ostringstream os;
            os << "S3/F3 direct " << s3.first << " formula " << s3.second << "; S5/F5 direct "
               << s5.first << " formula " << s5.second;
            it.details = os.str();
        });
}

SelftestItem item02(const SymDirect& sym) {
    return guarded("02", "partition formula equals direct computation on S_2..S_5",
                   [&](SelftestItem& it) {
                       it.pass = true;
                       std::ostringstream os;
                       for (const auto& [key, val] : sym.table) {
                           if (val.first != val.second) it.pass = false;
                           os << "(" << key.first << "," << key.second << ")=" << val.first
                              << (val.first == val.second ? "" : "!=") << "";
                           if (val.first != val.second) os << val.second;
                           os << " ";
                       }
                       it.details = os.str();
                   });
}

SelftestItem item03() {
    return guarded("03", "generating series matches per-degree partition sums (n <= 40)",
                   [&](SelftestItem& it) {
                       it.pass = true;
                       int checked = 0;
                       for (uint32_t p : {2u, 3u, 5u, 7u}) {
                           std::vector<int64_t> s = series_coeffs(p, 40);
                           for (int n = 0; n <= 40; ++n, ++checked)
                               if (s[static_cast<size_t>(n)] != hh1_dim_sym(n, p)) it.pass = false;
                       }
                       it.details = std::to_string(checked) + " coefficients compared";
                   });
}

SelftestItem item04() {
    return guarded("04", "the two partition-counting statistics agree (n <= 40)",
                   [&](SelftestItem& it) {
                       it.pass = true;
                       int checked = 0;
                       for (uint32_t p : {2u, 3u, 5u, 7u})
                           for (int n = 0; n <= 40; ++n, ++checked) {
                               LemmaCounts c = lemma_counts(n, p);
                               if (c.without_mult != c.with_mult) it.pass = false;
                           }
                       it.details = std::to_string(checked) + " pairs compared";
                   });
}

SelftestItem item05() {
    return guarded(
        "05", "F_3[x,y]/(x^3,y^3): 16 certified classes, 2 exhaustive refutations, sl2, series",
        [&](SelftestItem& it) {
            Algebra a = trunc_poly(3, 2);
            std::vector<FMatrix> witt = witt_basis(a);
            HH1 h = hh1(a);
            bool dims_ok = h.der.dim() == 18 && h.inn.dim() == 0;

            // Per-element polynomial certification; the two failures must be
            // the constant fields 1*d/dx (index 0) and 1*d/dy (index 9).
            std::vector<size_t> failed;
            for (size_t i = 0; i < witt.size(); ++i)
                if (!witness_family(a, witt[i])) failed.push_back(i);
            bool split_ok = failed == std::vector<size_t>{0, 9};

            bool refute_ok = split_ok;
            for (size_t i : failed) {
                if (preserves_radical(a, witt[i])) refute_ok = false;
                LiftResult lr = lift(a, witt[i]);
                if (lr.status != LiftStatus::ObstructedAt || lr.order != 3) refute_ok = false;
            }

            IntegrabilityReport rep = integrable_report(a);
            bool span_ok = rep.certified_dim == 16;

            // sl2 triple inside the derived subalgebra of the certified span:
            // e = x d/dy, f = y d/dx, h = x d/dx - y d/dy.
            FMatrix e = witt[10], f = witt[2];
            FMatrix hm = FMatrix(witt[1] - witt[11]);
            bool sl2_ok = !is_zero(hm) && is_zero(FMatrix(bracket(e, f) - hm)) &&
                          is_zero(FMatrix(bracket(hm, f) + f + f)) &&
                          is_zero(FMatrix(bracket(hm, e) - e - e));
            Subspace derived = bracket_span(rep.certified);
            sl2_ok = sl2_ok && derived.member(vec_endo(e)) && derived.member(vec_endo(f)) &&
                     derived.member(vec_endo(hm));

            std::vector<Index> series = derived_series_dims(rep.certified);
            bool series_ok = !series.empty() && series.back() > 0;

            it.pass = dims_ok && split_ok && refute_ok && span_ok && sl2_ok && series_ok;
            std::ostringstream os;
            os << "der " << h.der.dim() << ", inner " << h.inn.dim() << ", certified "
               << rep.certified_dim << "/18, refuted-at-3 " << failed.size() << ", series";
            for (Index s : series) os << " " << s;
            it.details = os.str();
        });
}

SelftestItem item06() {
    return guarded(
        "06", "cyclic Nakayama algebras: one outer class, linear certificate for arrow scaling",
        [&](SelftestItem& it) {
            it.pass = true;
            std::ostringstream os;
            for (uint32_t p : {3u, 5u}) {
                int m = static_cast<int>(p) - 1;
                Algebra nk = nakayama(p, m, m);
                Index hd = hh1(nk).dim();
                // Scale the first arrow, fix the other generators.
                std::vector<FVector> images(nk.gens().size(), fzvec(nk.dim(), p));
                images[static_cast<size_t>(m)] =
                    funit(nk.dim(), nk.gens()[static_cast<size_t>(m)], p);
                FMatrix dm = derivation_from_generator_images(nk, images);
                bool linear_cert = !certify_polynomial(nk, {dm}).has_value();
                if (hd != 1 || !linear_cert) it.pass = false;
                os << "p=" << p << ": outer dim " << hd << ", linear certificate "
                   << (linear_cert ? "yes" : "no") << "; ";
            }
            it.details = os.str();
        });
}

SelftestItem item07() {
    return guarded(
        "07", "random truncated automorphisms: obstructions are cocycles and add in cohomology",
        [&](SelftestItem& it) {
            std::mt19937 rng(20260825u);
            std::vector<Algebra> pool;
            pool.push_back(trunc_poly(2, 1));
            pool.push_back(trunc_poly(3, 1));
            pool.push_back(trunc_poly(5, 1));
            pool.push_back(trunc_poly(2, 2));
            pool.push_back(nakayama(3, 2, 1));
            pool.push_back(nakayama(2, 3, 1));
            pool.push_back(group_algebra(2, "(1 2 3 4)"));
            pool.push_back(group_algebra(3, "(1 2 3),(4 5)"));
            std::vector<Subspace> ders;
            for (const Algebra& a : pool) ders.push_back(derivation_space(a));

            int cocycles = 0;
            for (int trial = 0; trial < 200; ++trial) {
                size_t k = rng() % pool.size();
                const Algebra& a = pool[k];
                int n = 1 + static_cast<int>(rng() % 5);
                std::vector<FMatrix> fam = random_family(rng, a, ders[k], n);
                if (hs_first_violation(a, fam)) continue;
                if (is_cocycle(a, hs_obstruction(a, fam))) ++cocycles;
            }

            int additive = 0;
            for (int trial = 0; trial < 100; ++trial) {
                size_t k = rng() % pool.size();
                const Algebra& a = pool[k];
                int n = 1 + static_cast<int>(rng() % 4);
                std::vector<FMatrix> f = random_family(rng, a, ders[k], n);
                std::vector<FMatrix> g = random_family(rng, a, ders[k], n);
                size_t len = std::min(f.size(), g.size());
                f.resize(len);
                g.resize(len);
                std::vector<FMatrix> fg = hs_compose(a, f, g);
                Cochain diff = hs_obstruction(a, fg) - hs_obstruction(a, f) -
                               hs_obstruction(a, g);
                if (solve_coboundary(a, diff)) ++additive;
            }

            it.pass = cocycles == 200 && additive == 100;
            it.details = std::to_string(cocycles) + "/200 cocycles, " + std::to_string(additive) +
                         "/100 additive pairs";
        });
}

SelftestItem item08() {
    return guarded(
        "08", "witness calculus: compositions certify sums; commutator and cube leading terms",
        [&](SelftestItem& it) {
            Algebra a = trunc_poly(3, 2);
            const uint32_t p = a.p();
            std::vector<FMatrix> witt = witt_basis(a);
            std::vector<std::pair<FMatrix, std::vector<FMatrix>>> wits;
            for (size_t i = 0; i < witt.size(); ++i) {
                if (i == 0 || i == 9) continue;  // the two non-integrable fields
                std::optional<std::vector<FMatrix>> w = witness_family(a, witt[i]);
                if (!w) {
                    it.details = "missing witness for class " + std::to_string(i);
                    return;
                }
                wits.emplace_back(witt[i], std::move(*w));
            }

            int sums = 0, comms = 0, powers = 0, total_pairs = 0;
            for (size_t i = 0; i < wits.size(); ++i) {
                // p-th power: offsets 1..p-1 vanish, leading term is the
                // p-th matrix power of the derivation.
                size_t lp = static_cast<size_t>(p) * (wits[i].second.size() - 1) + 1;
                std::vector<FMatrix> fp_ = pad_family(a, wits[i].second, lp);
                std::vector<FMatrix> pw = fp_;
                for (uint32_t k = 1; k < p; ++k) pw = hs_compose(a, pw, fp_);
                bool pow_ok = !hs_first_violation(a, pw).has_value();
                for (uint32_t k = 1; k < p; ++k)
                    if (!is_zero(pw[k])) pow_ok = false;
                if (!is_zero(FMatrix(pw[p] - p_power(wits[i].first, p)))) pow_ok = false;
                if (pow_ok) ++powers;

                for (size_t j = i + 1; j < wits.size(); ++j) {
                    ++total_pairs;
                    const auto& [di, fi] = wits[i];
                    const auto& [dj, fj] = wits[j];

                    size_t ls = fi.size() + fj.size() - 1;
                    std::vector<FMatrix> comp =
                        hs_compose(a, pad_family(a, fi, ls), pad_family(a, fj, ls));
                    std::vector<FMatrix> maps(comp.begin() + 1, comp.end());
                    if (is_zero(FMatrix(comp[1] - di - dj)) &&
                        !certify_polynomial(a, maps).has_value())
                        ++sums;

                    size_t lc = std::max(fi.size(), fj.size()) + 2;
                    std::vector<FMatrix> F = pad_family(a, fi, lc);
                    std::vector<FMatrix> G = pad_family(a, fj, lc);
                    std::vector<FMatrix> K = hs_compose(
                        a, hs_compose(a, F, G), hs_compose(a, hs_inverse(a, F), hs_inverse(a, G)));
                    if (!hs_first_violation(a, K).has_value() && is_zero(K[1]) &&
                        is_zero(FMatrix(K[2] - bracket(di, dj))))
                        ++comms;
                }
            }

            it.pass = sums == total_pairs && comms == total_pairs &&
                      powers == static_cast<int>(wits.size());
            std::ostringstream os;
            os << sums << "/" << total_pairs << " sums, " << comms << "/" << total_pairs
               << " commutators, " << powers << "/" << wits.size() << " cube witnesses";
            it.details = os.str();
        });
}

SelftestItem item09(const Fixtures& fx) {
    return guarded(
        "09", "structural invariants: Leibniz, squared differential, inner codimension, solvers",
        [&](SelftestItem& it) {
            std::mt19937 rng(424243u);
            bool leibniz = true, codim = true, solvers = true;
            int leibniz_n = 0, solver_n = 0;
            std::vector<Subspace> ders;
            for (const Algebra& a : fx.all) {
                Subspace der = derivation_space(a);
                ders.push_back(der);
                for (Index r = 0; r < der.dim(); ++r, ++leibniz_n)
                    if (!is_derivation(a, unvec_endo(der.basis_row(r), a.dim()))) leibniz = false;
                if (inner_derivations(a).dim() != a.dim() - a.center().dim()) codim = false;
                if (a.has_generators() && a.dim() <= 64) {
                    ++solver_n;
                    Subspace full = derivation_space_allpairs(a);
                    if (full.dim() != der.dim()) solvers = false;
                    for (Index r = 0; r < der.dim(); ++r)
                        if (!full.member(der.basis_row(r))) solvers = false;
                }
            }

            int dd_zero = 0;
            for (int trial = 0; trial < 200; ++trial) {
                const Algebra& a = fx.all[static_cast<size_t>(trial) % fx.all.size()];
                // the complex is implemented through degree 3, so the squared
                // differential is expressible for inputs of degree 0 and 1
                int deg = trial % 2;
                Cochain c = zero_cochain(a, deg);
                for (Index r = 0; r < c.m.rows(); ++r)
                    for (Index col = 0; col < c.m.cols(); ++col) c.m(r, col) = Fp(rng() % a.p(), a.p());
                if (is_zero(differential(a, differential(a, c)).m)) ++dd_zero;
            }

            int restricted = 0;
            for (int trial = 0; trial < 50; ++trial) {
                size_t k = static_cast<size_t>(trial) % fx.all.size();
                const Algebra& a = fx.all[k];
                FMatrix d0 = random_derivation(rng, a, ders[k]);
                FVector x = random_vec(rng, a.dim(), a.p());
                FMatrix ad = FMatrix(a.left_op(x) - a.right_op(x));
                FMatrix diffp =
                    FMatrix(p_power(FMatrix(d0 + ad), a.p()) - p_power(d0, a.p()));
                if (inner_derivations(a).member(vec_endo(diffp))) ++restricted;
            }

            it.pass = leibniz && codim && solvers && dd_zero == 200 && restricted == 50;
            std::ostringstream os;
            os << leibniz_n << " Leibniz checks " << (leibniz ? "ok" : "FAILED") << ", "
               << dd_zero << "/200 squared differentials zero, inner codimension "
               << (codim ? "ok" : "FAILED") << ", " << solver_n << " solver agreements "
               << (solvers ? "ok" : "FAILED") << ", " << restricted
               << "/50 p-power perturbations inner";
            it.details = os.str();
        });
}

SelftestItem item10() {
    return guarded(
        "10", "exhaustive refutation orders are powers of the characteristic",
        [&](SelftestItem& it) {
            std::vector<std::pair<uint32_t, int>> orders;

            Algebra a31 = trunc_poly(3, 1);
            LiftResult r31 = lift(a31, derivation_from_generator_images(
                                           a31, {funit(a31.dim(), 0, 3)}));
            if (r31.status == LiftStatus::ObstructedAt) orders.emplace_back(3, r31.order);

            Algebra a32 = trunc_poly(3, 2);
            std::vector<FMatrix> witt = witt_basis(a32);
            for (size_t i : {size_t{0}, size_t{9}}) {
                LiftResult lr = lift(a32, witt[i]);
                if (lr.status == LiftStatus::ObstructedAt) orders.emplace_back(3, lr.order);
            }
            for (const ClassIntegrability& c : integrable_report(a32).classes)
                if (c.status == IntegrabilityStatus::ObstructedExact)
                    orders.emplace_back(3, c.order);

            for (const ClassIntegrability& c : integrable_report(trunc_poly(2, 2)).classes)
                if (c.status == IntegrabilityStatus::ObstructedExact)
                    orders.emplace_back(2, c.order);

            it.pass = !orders.empty();
            std::ostringstream os;
            os << orders.size() << " refutations:";
            for (auto [p, n] : orders) {
                if (!is_power_of(n, p)) it.pass = false;
                os << " " << n << "(p=" << p << ")";
            }
            it.details = os.str();
        });
}

}  // namespace

std::vector<SelftestItem> run_selftest(const SelftestOptions& opt) {
    std::vector<SelftestItem> items;
    Fixtures fx;
    SymDirect sym;
    sym.compute();

    items.push_back(item_validate(fx, opt.negative_control));
    items.push_back(item01(sym));
    items.push_back(item02(sym));
    items.push_back(item03());
    items.push_back(item04());
    items.push_back(item05());
    items.push_back(item06());
    items.push_back(item07());
    items.push_back(item08());
    items.push_back(item09(fx));
    items.push_back(item10());
    return items;
}

bool all_pass(const std::vector<SelftestItem>& items) {
    for (const SelftestItem& it : items)
        if (!it.pass) return false;
    return true;
}

}  // namespace hhint
