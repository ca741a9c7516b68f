#include "hhint/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hhint {

namespace {

constexpr Index kDimBound = 512;
constexpr Index kGroupOrderBound = 5040;

using Perm = std::vector<int>;  // images, 0-based

Perm perm_compose(const Perm& f, const Perm& g) {  // (f.g)(x) = f(g(x))
    Perm out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = f[static_cast<size_t>(g[i])];
    return out;
}

// Parses "(1 2)(3 4), (1 2 3 4 5)" into permutations; points are 1-based.
std::vector<Perm> parse_generator_cycles(const std::string& text, int& n_points) {
    std::vector<std::vector<std::vector<int>>> gens_cycles;
    std::vector<std::vector<int>> current;
    n_points = 0;
    size_t i = 0;
    auto fail = [&](const std::string& msg) { throw ParseError(1, "cycles: " + msg); };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t') {
            ++i;
        } else if (c == ',') {
            if (current.empty()) fail("empty generator");
            gens_cycles.push_back(current);
            current.clear();
            ++i;
        } else if (c == '(') {
            size_t close = text.find(')', i);
            if (close == std::string::npos) fail("unbalanced '('");
            std::istringstream cyc(text.substr(i + 1, close - i - 1));
            std::vector<int> pts;
            int pt;
            while (cyc >> pt) {
                if (pt < 1) fail("points are 1-based");
                n_points = std::max(n_points, pt);
                pts.push_back(pt - 1);
            }
            if (!cyc.eof()) fail("non-integer point");
            current.push_back(pts);
            i = close + 1;
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }
    if (current.empty()) fail("empty generator");
    gens_cycles.push_back(current);

    std::vector<Perm> gens;
    for (const auto& cycles : gens_cycles) {
        Perm g(static_cast<size_t>(n_points));
        for (int j = 0; j < n_points; ++j) g[static_cast<size_t>(j)] = j;
        // Disjoint in practice; composed right-to-left when they are not.
        for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
            const auto& pts = *it;
            if (pts.size() < 2) continue;
            Perm c(static_cast<size_t>(n_points));
            for (int j = 0; j < n_points; ++j) c[static_cast<size_t>(j)] = j;
            for (size_t k = 0; k < pts.size(); ++k)
                c[static_cast<size_t>(pts[k])] = pts[(k + 1) % pts.size()];
            g = perm_compose(c, g);
        }
        gens.push_back(g);
    }
    return gens;
}

std::string perm_label(const Perm& g) {
    std::string out;
    std::vector<bool> seen(g.size(), false);
    for (size_t start = 0; start < g.size(); ++start) {
        if (seen[start] || g[start] == static_cast<int>(start)) continue;
        out += '(';
        size_t pt = start;
        bool first = true;
        while (!seen[pt]) {
            seen[pt] = true;
            if (!first) out += ' ';
            out += std::to_string(pt + 1);
            first = false;
            pt = static_cast<size_t>(g[pt]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

uint64_t fnv1a(uint64_t h, uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
        h ^= (v >> (8 * byte)) & 0xff;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

std::string kind_name(AlgebraKind k) {
    switch (k) {
        case AlgebraKind::Group: return "group";
        case AlgebraKind::TruncPoly: return "trunc-poly";
        case AlgebraKind::Nakayama: return "nakayama";
        default: return "generic";
    }
}

FVector Algebra::mul(const FVector& u, const FVector& v) const {
    if (u.size() != dim_ || v.size() != dim_) throw DimensionError("mul operand length");
    FVector out = fzvec(dim_, p_);
    for (Index i = 0; i < dim_; ++i) {
        Fp ui = u(i).matched(p_);
        if (ui.is_zero()) continue;
        for (Index j = 0; j < dim_; ++j) {
            Fp c = ui * v(j).matched(p_);
            if (!c.is_zero()) out += c * left_mul(i).col(j);
        }
    }
    return out;
}

FMatrix Algebra::left_op(const FVector& a) const {
    FMatrix out = fzeros(dim_, dim_, p_);
    for (Index i = 0; i < dim_; ++i) {
        Fp ai = a(i).matched(p_);
        if (!ai.is_zero()) out += ai * left_mul(i);
    }
    return out;
}

FMatrix Algebra::right_op(const FVector& a) const {
    FMatrix out = fzeros(dim_, dim_, p_);
    for (Index j = 0; j < dim_; ++j) {
        Fp aj = a(j).matched(p_);
        if (!aj.is_zero()) out += aj * right_mul(j);
    }
    return out;
}

FVector Algebra::power(const FVector& a, uint64_t e) const {
    FVector acc = unit_;
    FVector base = a;
    for (; e != 0; e >>= 1) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
    }
    return acc;
}

bool Algebra::is_commutative() const {
    for (Index i = 0; i < dim_; ++i)
        for (Index j = i + 1; j < dim_; ++j)
            if (!is_zero(FVector(basis_product(i, j) - basis_product(j, i)))) return false;
    return true;
}

const Subspace& Algebra::center() const {
    if (!center_) {
        RowReducer red(dim_, p_);
        std::vector<uint32_t> row(static_cast<size_t>(dim_));
        for (Index i = 0; i < dim_ && red.rank() < dim_; ++i) {
            FMatrix delta = left_mul(i) - right_mul(i);
            for (Index r = 0; r < dim_; ++r) {
                for (Index c = 0; c < dim_; ++c)
                    row[static_cast<size_t>(c)] = static_cast<uint32_t>(delta(r, c).value());
                red.add_raw(row);
            }
        }
        center_ = red.kernel();
    }
    return *center_;
}

bool Algebra::radical_known() const {
    if (radical_) return true;
    return is_commutative();
}

const Subspace& Algebra::radical() const {
    if (radical_) return *radical_;
    if (frobenius_radical_) return *frobenius_radical_;
    if (!is_commutative()) throw RadicalUnavailableError();
    // Commutative: the p-power map is linear (Frobenius); iterating it to an
    // exponent >= dim kills exactly the nilpotents, which form the radical.
    FMatrix frob = fzeros(dim_, dim_, p_);
    for (Index i = 0; i < dim_; ++i) frob.col(i) = power(funit(dim_, i, p_), p_);
    Index bound = 1;
    FMatrix it = fidentity(dim_, p_);
    while (bound < dim_) {
        it = mul_sparse_aware(frob, it);
        bound *= static_cast<Index>(p_);
    }
    frobenius_radical_ = kernel_of(it, p_);
    return *frobenius_radical_;
}

uint64_t Algebra::fingerprint() const {
    uint64_t h = 1469598103934665603ull;
    h = fnv1a(h, p_);
    h = fnv1a(h, static_cast<uint64_t>(dim_));
    h = fnv1a(h, static_cast<uint64_t>(kind_));
    for (Index i = 0; i < dim_; ++i)
        h = fnv1a(h, static_cast<uint64_t>(unit_(i).value()));
    for (Index i = 0; i < dim_; ++i)
        for (Index k = 0; k < dim_; ++k)
            for (Index j = 0; j < dim_; ++j)
                h = fnv1a(h, static_cast<uint64_t>(left_mul(i)(k, j).value()));
    return h;
}

void Algebra::finish() {
    require_prime(p_);
    dim_ = static_cast<Index>(lmul_.size());
    if (dim_ < 1) throw DimensionError("algebra needs at least one basis element");
    if (dim_ > kDimBound)
        throw BoundError("dimension " + std::to_string(dim_) + " > " + std::to_string(kDimBound));
    if (labels_.empty()) {
        for (Index i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i));
    }
    if (static_cast<Index>(labels_.size()) != dim_)
        throw DimensionError("label count vs dimension");
    for (const FMatrix& l : lmul_)
        if (l.rows() != dim_ || l.cols() != dim_) throw DimensionError("left_mul block shape");
    if (unit_.size() != dim_) throw DimensionError("unit length");

    rmul_.assign(static_cast<size_t>(dim_), FMatrix());
    for (Index j = 0; j < dim_; ++j) {
        FMatrix r = fzeros(dim_, dim_, p_);
        for (Index i = 0; i < dim_; ++i) r.col(i) = lmul_[static_cast<size_t>(i)].col(j);
        rmul_[static_cast<size_t>(j)] = std::move(r);
    }
    validate();
}

void Algebra::validate() const {
    // Unit laws.
    FMatrix lu = left_op(unit_), ru = right_op(unit_);
    FMatrix id = fidentity(dim_, p_);
    for (Index i = 0; i < dim_; ++i) {
        if (!is_zero(FVector(lu.col(i) - id.col(i))) || !is_zero(FVector(ru.col(i) - id.col(i))))
            throw UnitError(static_cast<int>(i));
    }

    // Associativity on basis triples: (e_i e_j) e_k = e_i (e_j e_k). The
    // whole loop runs on raw residues; column-major copies make the products
    // e_q e_k (column k of L_q) and e_i e_q (column q of L_i) contiguous, and
    // the one-term fast path covers the tensors met in practice (group,
    // monomial, path and matrix-unit products have at most one term).
    const Index d = dim_;
    const uint64_t p64 = p_;
    std::vector<std::vector<uint32_t>> raw(static_cast<size_t>(d));
    std::vector<std::vector<std::pair<Index, uint32_t>>> nz(static_cast<size_t>(d * d));
    for (Index q = 0; q < d; ++q) {
        auto& m = raw[static_cast<size_t>(q)];
        m.assign(static_cast<size_t>(d * d), 0);  // m[c*d + r] = L_q(r, c)
        const FMatrix& l = lmul_[static_cast<size_t>(q)];
        for (Index c = 0; c < d; ++c)
            for (Index r = 0; r < d; ++r) {
                auto v = static_cast<uint32_t>(l(r, c).matched(p_).value());
                m[static_cast<size_t>(c * d + r)] = v;
                if (v) nz[static_cast<size_t>(q * d + c)].emplace_back(r, v);
            }
    }
    std::vector<uint64_t> lhs(static_cast<size_t>(d)), rhs(static_cast<size_t>(d));
    for (Index i = 0; i < d; ++i) {
        for (Index j = 0; j < d; ++j) {
            const auto& mij = nz[static_cast<size_t>(i * d + j)];
            for (Index k = 0; k < d; ++k) {
                const auto& mjk = nz[static_cast<size_t>(j * d + k)];
                bool ok;
                if (mij.size() == 1 && mjk.size() == 1) {
                    const uint32_t* a = &raw[static_cast<size_t>(mij[0].first)]
                                            [static_cast<size_t>(k * d)];
                    const uint32_t* b =
                        &raw[static_cast<size_t>(i)][static_cast<size_t>(mjk[0].first * d)];
                    uint64_t va = mij[0].second, vb = mjk[0].second;
                    ok = true;
                    for (Index r = 0; r < d; ++r)
                        if ((va * a[r]) % p64 != (vb * b[r]) % p64) {
                            ok = false;
                            break;
                        }
                } else {
                    std::fill(lhs.begin(), lhs.end(), 0);
                    std::fill(rhs.begin(), rhs.end(), 0);
                    for (const auto& [q, v] : mij) {
                        const uint32_t* col =
                            &raw[static_cast<size_t>(q)][static_cast<size_t>(k * d)];
                        for (Index r = 0; r < d; ++r) lhs[static_cast<size_t>(r)] += v * col[r];
                    }
                    for (const auto& [q, v] : mjk) {
                        const uint32_t* col =
                            &raw[static_cast<size_t>(i)][static_cast<size_t>(q * d)];
                        for (Index r = 0; r < d; ++r) rhs[static_cast<size_t>(r)] += v * col[r];
                    }
                    ok = true;
                    for (Index r = 0; r < d; ++r)
                        if (lhs[static_cast<size_t>(r)] % p64 != rhs[static_cast<size_t>(r)] % p64) {
                            ok = false;
                            break;
                        }
                }
                if (!ok)
                    throw AssociativityError(static_cast<int>(i), static_cast<int>(j),
                                             static_cast<int>(k));
            }
        }
    }

    // Generator words evaluate to their basis elements.
    for (Index i = 0; i < static_cast<Index>(exprs_.size()); ++i) {
        const BasisExpr& e = exprs_[static_cast<size_t>(i)];
        if (e.tag == BasisExpr::Tag::Unit) {
            if (!is_zero(FVector(unit_ - funit(dim_, i, p_))))
                throw DimensionError("unit-tagged basis element is not the unit");
        } else if (e.tag == BasisExpr::Tag::Prod) {
            Index g = gens_[static_cast<size_t>(e.gen)];
            if (e.rest < 0 || e.rest >= dim_ || e.rest == i)
                throw DimensionError("generator word is not well-founded");
            if (!is_zero(FVector(basis_product(g, e.rest) - funit(dim_, i, p_))))
                throw DimensionError("generator word does not evaluate to its element");
        }
    }

    // Supplied radical must be a proper nilpotent two-sided ideal.
    if (radical_) {
        const Subspace& j = *radical_;
        if (j.dim() >= dim_) throw DimensionError("radical is not proper");
        for (Index i = 0; i < dim_; ++i) {
            FVector ei = funit(dim_, i, p_);
            for (Index r = 0; r < j.dim(); ++r) {
                if (!j.member(mul(ei, j.basis_row(r))) || !j.member(mul(j.basis_row(r), ei)))
                    throw DimensionError("radical is not a two-sided ideal");
            }
        }
        Subspace power = j;
        for (Index step = 0; power.dim() > 0; ++step) {
            if (step > dim_) throw DimensionError("radical is not nilpotent");
            power = subspace_product(*this, power, j);
        }
    }
}

Algebra Algebra::unchecked(uint32_t p, std::vector<FMatrix> left_mul, FVector unit,
                           std::vector<std::string> labels, AlgebraKind kind, std::string name) {
    Algebra a;
    a.p_ = p;
    a.lmul_ = std::move(left_mul);
    a.dim_ = static_cast<Index>(a.lmul_.size());
    a.unit_ = std::move(unit);
    a.labels_ = std::move(labels);
    a.kind_ = kind;
    a.name_ = std::move(name);
    if (a.labels_.empty())
        for (Index i = 0; i < a.dim_; ++i) a.labels_.push_back("e" + std::to_string(i));
    a.rmul_.assign(static_cast<size_t>(a.dim_), FMatrix());
    for (Index j = 0; j < a.dim_; ++j) {
        FMatrix r = fzeros(a.dim_, a.dim_, p);
        for (Index i = 0; i < a.dim_; ++i) r.col(i) = a.lmul_[static_cast<size_t>(i)].col(j);
        a.rmul_[static_cast<size_t>(j)] = std::move(r);
    }
    return a;
}

Algebra from_structure_constants(uint32_t p, std::vector<FMatrix> left_mul, FVector unit,
                                 std::vector<std::string> labels, std::string name) {
    Algebra a;
    a.p_ = p;
    a.lmul_ = std::move(left_mul);
    a.unit_ = std::move(unit);
    a.labels_ = std::move(labels);
    a.kind_ = AlgebraKind::Generic;
    a.name_ = name.empty() ? "structure constants" : std::move(name);
    a.finish();
    return a;
}

Algebra group_algebra(uint32_t p, const std::string& generator_cycles) {
    require_prime(p);
    int n_points = 0;
    std::vector<Perm> gens = parse_generator_cycles(generator_cycles, n_points);

    Perm id(static_cast<size_t>(n_points));
    for (int i = 0; i < n_points; ++i) id[static_cast<size_t>(i)] = i;

    // Breadth-first enumeration; each new element remembers which generator
    // and which earlier element produced it (new = gen * old).
    std::vector<Perm> elems{id};
    std::map<Perm, Index> index{{id, 0}};
    std::vector<BasisExpr> exprs{{BasisExpr::Tag::Unit, -1, -1}};
    for (size_t head = 0; head < elems.size(); ++head) {
        for (size_t g = 0; g < gens.size(); ++g) {
            Perm next = perm_compose(gens[g], elems[head]);
            if (index.count(next)) continue;
            if (static_cast<Index>(elems.size()) >= kGroupOrderBound)
                throw BoundError("group order > " + std::to_string(kGroupOrderBound));
            index[next] = static_cast<Index>(elems.size());
            elems.push_back(next);
            exprs.push_back({BasisExpr::Tag::Prod, static_cast<int>(g),
                             static_cast<Index>(head)});
        }
    }
    const Index d = static_cast<Index>(elems.size());
    if (d > kDimBound) throw BoundError("group algebra dimension > " + std::to_string(kDimBound));

    std::vector<FMatrix> lmul(static_cast<size_t>(d));
    for (Index i = 0; i < d; ++i) {
        FMatrix l = fzeros(d, d, p);
        for (Index j = 0; j < d; ++j) {
            Index k = index.at(perm_compose(elems[static_cast<size_t>(i)],
                                            elems[static_cast<size_t>(j)]));
            l(k, j) = Fp(1, p);
        }
        lmul[static_cast<size_t>(i)] = std::move(l);
    }

    std::vector<std::string> labels;
    for (const Perm& e : elems) labels.push_back(perm_label(e));

    Algebra a;
    a.p_ = p;
    a.lmul_ = std::move(lmul);
    a.unit_ = funit(d, 0, p);
    a.labels_ = std::move(labels);
    a.kind_ = AlgebraKind::Group;
    a.name_ = "F" + std::to_string(p) + "[<" + generator_cycles + ">], order " +
              std::to_string(d);
    a.gens_.clear();
    for (size_t g = 0; g < gens.size(); ++g) {
        auto it = index.find(gens[g]);
        // A generator equal to the identity never gets its own word; remap.
        a.gens_.push_back(it->second);
    }
    a.exprs_ = std::move(exprs);

    // p-group: radical = augmentation ideal, spanned by g - 1.
    Index order = d;
    bool p_group = true;
    while (order > 1) {
        if (order % static_cast<Index>(p) != 0) {
            p_group = false;
            break;
        }
        order /= static_cast<Index>(p);
    }
    if (p_group) {
        std::vector<FVector> aug;
        for (Index i = 1; i < d; ++i) {
            FVector v = funit(d, i, p);
            v(0) = Fp(-1, p);
            aug.push_back(std::move(v));
        }
        a.radical_ = Subspace::span(aug, d, p);
    }

    a.finish();
    return a;
}

Algebra trunc_poly(uint32_t p, int r) {
    require_prime(p);
    if (r < 1) throw DimensionError("trunc_poly needs r >= 1");
    Index d = 1;
    for (int i = 0; i < r; ++i) {
        d *= static_cast<Index>(p);
        if (d > kDimBound) throw BoundError("trunc_poly dimension > " + std::to_string(kDimBound));
    }

    // Monomials as exponent tuples, ordered by (total degree, then tuple
    // lexicographically descending), so F_3[x,y] reads 1, x, y, x2, xy, y2, ...
    std::vector<std::vector<int>> monos;
    std::vector<int> t(static_cast<size_t>(r), 0);
    monos.push_back(t);
    while (true) {
        int i = 0;
        while (i < r && t[static_cast<size_t>(i)] == static_cast<int>(p) - 1) {
            t[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == r) break;
        ++t[static_cast<size_t>(i)];
        monos.push_back(t);
    }
    std::sort(monos.begin(), monos.end(), [](const auto& a, const auto& b) {
        int da = 0, db = 0;
        for (int v : a) da += v;
        for (int v : b) db += v;
        if (da != db) return da < db;
        return a > b;
    });
    std::map<std::vector<int>, Index> index;
    for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<Index>(i);

    auto var_name = [r](int i) {
        if (r <= 3) return std::string(1, "xyz"[i]);
        return "x" + std::to_string(i + 1);
    };
    auto mono_label = [&](const std::vector<int>& m) {
        std::string out;
        for (int i = 0; i < r; ++i) {
            int e = m[static_cast<size_t>(i)];
            if (e == 0) continue;
            if (!out.empty()) out += "*";
            out += var_name(i);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out.empty() ? std::string("1") : out;
    };

    std::vector<FMatrix> lmul(static_cast<size_t>(d));
    for (Index i = 0; i < d; ++i) {
        FMatrix l = fzeros(d, d, p);
        for (Index j = 0; j < d; ++j) {
            std::vector<int> s = monos[static_cast<size_t>(i)];
            bool dead = false;
            for (int v = 0; v < r; ++v) {
                s[static_cast<size_t>(v)] += monos[static_cast<size_t>(j)][static_cast<size_t>(v)];
                if (s[static_cast<size_t>(v)] >= static_cast<int>(p)) dead = true;
            }
            if (!dead) l(index.at(s), j) = Fp(1, p);
        }
        lmul[static_cast<size_t>(i)] = std::move(l);
    }

    Algebra a;
    a.p_ = p;
    a.lmul_ = std::move(lmul);
    a.unit_ = funit(d, 0, p);
    a.kind_ = AlgebraKind::TruncPoly;
    {
        std::string vars, rels;
        for (int i = 0; i < r; ++i) {
            if (i) {
                vars += ",";
                rels += ",";
            }
            vars += var_name(i);
            rels += var_name(i) + "^" + std::to_string(p);
        }
        a.name_ = "F" + std::to_string(p) + "[" + vars + "]/(" + rels + ")";
    }
    for (const auto& m : monos) a.labels_.push_back(mono_label(m));

    for (int v = 0; v < r; ++v) {
        std::vector<int> g(static_cast<size_t>(r), 0);
        g[static_cast<size_t>(v)] = 1;
        a.gens_.push_back(index.at(g));
    }
    for (Index i = 0; i < d; ++i) {
        const auto& m = monos[static_cast<size_t>(i)];
        int deg = 0;
        for (int v : m) deg += v;
        if (deg == 0) {
            a.exprs_.push_back({BasisExpr::Tag::Unit, -1, -1});
        } else {
            int v = 0;
            while (m[static_cast<size_t>(v)] == 0) ++v;
            std::vector<int> rest = m;
            --rest[static_cast<size_t>(v)];
            a.exprs_.push_back({BasisExpr::Tag::Prod, v, index.at(rest)});
        }
    }

    {
        std::vector<FVector> pos;
        for (Index i = 1; i < d; ++i) pos.push_back(funit(d, i, p));
        a.radical_ = Subspace::span(pos, d, p);
    }

    a.finish();
    return a;
}

Algebra nakayama(uint32_t p, int m, int n) {
    require_prime(p);
    if (m < 1 || n < 0) throw DimensionError("nakayama needs m >= 1, n >= 0");
    const Index d = static_cast<Index>(m) * static_cast<Index>(n + 1);
    if (d > kDimBound) throw BoundError("nakayama dimension > " + std::to_string(kDimBound));

    // Basis: paths (start s, length l), ordered by (l, s). Path product is
    // concatenation: (s1,l1)(s2,l2) = (s1, l1+l2) iff s1+l1 = s2 (mod m) and
    // l1+l2 <= n.
    auto idx = [m](int s, int l) { return static_cast<Index>(l * m + s); };
    std::vector<FMatrix> lmul(static_cast<size_t>(d));
    for (int l1 = 0; l1 <= n; ++l1) {
        for (int s1 = 0; s1 < m; ++s1) {
            FMatrix l = fzeros(d, d, p);
            for (int l2 = 0; l2 <= n; ++l2) {
                for (int s2 = 0; s2 < m; ++s2) {
                    if ((s1 + l1) % m == s2 && l1 + l2 <= n)
                        l(idx(s1, l1 + l2), idx(s2, l2)) = Fp(1, p);
                }
            }
            lmul[static_cast<size_t>(idx(s1, l1))] = std::move(l);
        }
    }

    FVector unit = fzvec(d, p);
    for (int s = 0; s < m; ++s) unit(idx(s, 0)) = Fp(1, p);

    std::vector<std::string> labels;
    for (int l = 0; l <= n; ++l) {
        for (int s = 0; s < m; ++s) {
            if (l == 0) {
                labels.push_back("e" + std::to_string(s + 1));
            } else {
                std::string lab;
                for (int k = 0; k < l; ++k) {
                    if (k) lab += "*";
                    lab += "a" + std::to_string((s + k) % m + 1);
                }
                labels.push_back(lab);
            }
        }
    }

    Algebra a;
    a.p_ = p;
    a.lmul_ = std::move(lmul);
    a.unit_ = std::move(unit);
    a.labels_ = std::move(labels);
    a.kind_ = AlgebraKind::Nakayama;
    a.name_ = "nakayama(m=" + std::to_string(m) + ", n=" + std::to_string(n) + ") over F" +
              std::to_string(p);

    if (m == 1) {
        // k[x]/(x^{n+1}): the lone vertex is the unit, the loop generates.
        if (n >= 1) a.gens_.push_back(idx(0, 1));
        for (int l = 0; l <= n; ++l) {
            if (l == 0)
                a.exprs_.push_back({BasisExpr::Tag::Unit, -1, -1});
            else if (l == 1)
                a.exprs_.push_back({BasisExpr::Tag::Gen, 0, -1});
            else
                a.exprs_.push_back({BasisExpr::Tag::Prod, 0, idx(0, l - 1)});
        }
    } else {
        // Generators: the m vertex idempotents, then the m arrows.
        for (int s = 0; s < m; ++s) a.gens_.push_back(idx(s, 0));
        if (n >= 1)
            for (int s = 0; s < m; ++s) a.gens_.push_back(idx(s, 1));
        for (int l = 0; l <= n; ++l) {
            for (int s = 0; s < m; ++s) {
                if (l <= 1)
                    a.exprs_.push_back({BasisExpr::Tag::Gen, l * m + s, -1});
                else
                    a.exprs_.push_back(
                        {BasisExpr::Tag::Prod, m + s, idx((s + 1) % m, l - 1)});
            }
        }
    }

    if (n >= 0) {
        std::vector<FVector> pos;
        for (Index i = static_cast<Index>(m); i < d; ++i) pos.push_back(funit(d, i, p));
        a.radical_ = Subspace::span(pos, d, p);
    }

    a.finish();
    return a;
}

Subspace subspace_product(const Algebra& a, const Subspace& s, const Subspace& t) {
    std::vector<FVector> gens;
    for (Index i = 0; i < s.dim(); ++i)
        for (Index j = 0; j < t.dim(); ++j) gens.push_back(a.mul(s.basis_row(i), t.basis_row(j)));
    return Subspace::span(gens, a.dim(), a.p());
}

Subspace subspace_power(const Algebra& a, const Subspace& s, int k) {
    if (k <= 0) return Subspace::full(a.dim(), a.p());
    Subspace acc = s;
    for (int i = 1; i < k && acc.dim() > 0; ++i) acc = subspace_product(a, acc, s);
    return acc;
}

std::vector<Index> radical_power_dims(const Algebra& a) {
    std::vector<Index> dims;
    Subspace j = a.radical();
    Subspace power = j;
    dims.push_back(power.dim());
    while (power.dim() > 0 && static_cast<Index>(dims.size()) <= a.dim()) {
        power = subspace_product(a, power, j);
        dims.push_back(power.dim());
    }
    return dims;
}

}  // namespace hhint
