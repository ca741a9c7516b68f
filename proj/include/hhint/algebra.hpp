#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hhint/linalg.hpp"

namespace hhint {

enum class AlgebraKind { Generic, Group, TruncPoly, Nakayama };

std::string kind_name(AlgebraKind k);

// How a basis element factors through the designated generators:
//   Unit       the element equals the algebra unit (its image under any
//              derivation is zero),
//   Gen        the element is a generator (its image is a free unknown),
//   Prod       e_i = gens[gen] * e_rest with rest discovered earlier.
struct BasisExpr {
    enum class Tag { Unit, Gen, Prod };
    Tag tag = Tag::Gen;
    int gen = -1;
    Index rest = -1;
};

// Finite-dimensional associative unital algebra over F_p, presented by
// structure constants. left_mul(i) is the matrix of left multiplication by
// e_i, so its column j holds the coordinates of e_i * e_j; the full tensor
// c[i][j][k] is left_mul(i)(k, j). Associativity and the unit laws are
// checked at construction.
class Algebra {
  public:
    uint32_t p() const { return p_; }
    Index dim() const { return dim_; }
    AlgebraKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    const std::string& label(Index i) const { return labels_[static_cast<size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    const FMatrix& left_mul(Index i) const { return lmul_[static_cast<size_t>(i)]; }
    const FMatrix& right_mul(Index j) const { return rmul_[static_cast<size_t>(j)]; }
    // Coordinates of e_i * e_j.
    FVector basis_product(Index i, Index j) const { return left_mul(i).col(j); }
    FVector mul(const FVector& u, const FVector& v) const;
    // Matrix of x -> a * x, resp. x -> x * a.
    FMatrix left_op(const FVector& a) const;
    FMatrix right_op(const FVector& a) const;
    FVector power(const FVector& a, uint64_t e) const;

    const FVector& unit() const { return unit_; }
    bool is_commutative() const;

    // Center as a subspace of the coordinate space, cached after first use.
    const Subspace& center() const;

    // Jacobson radical: supplied by the preset constructor, or computed for
    // commutative algebras as the kernel of an iterated Frobenius map.
    // Throws RadicalUnavailableError when neither applies.
    bool radical_known() const;
    const Subspace& radical() const;

    bool has_generators() const { return !gens_.empty(); }
    const std::vector<Index>& gens() const { return gens_; }
    const BasisExpr& expr(Index i) const { return exprs_[static_cast<size_t>(i)]; }

    // FNV-1a hash of (p, dim, kind, structure constants, unit).
    uint64_t fingerprint() const;

    // Test hook: bypasses validation so fixtures can hold broken tensors.
    static Algebra unchecked(uint32_t p, std::vector<FMatrix> left_mul, FVector unit,
                             std::vector<std::string> labels, AlgebraKind kind,
                             std::string name);
    void validate() const;

    friend Algebra from_structure_constants(uint32_t p, std::vector<FMatrix> left_mul,
                                            FVector unit, std::vector<std::string> labels,
                                            std::string name);
    friend Algebra group_algebra(uint32_t p, const std::string& generator_cycles);
    friend Algebra trunc_poly(uint32_t p, int r);
    friend Algebra nakayama(uint32_t p, int m, int n);

  private:
    Algebra() = default;
    void finish();  // builds rmul_, validates

    uint32_t p_ = 0;
    Index dim_ = 0;
    AlgebraKind kind_ = AlgebraKind::Generic;
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<FMatrix> lmul_, rmul_;
    FVector unit_;
    std::vector<Index> gens_;
    std::vector<BasisExpr> exprs_;
    std::optional<Subspace> radical_;
    mutable std::optional<Subspace> center_;
    mutable std::optional<Subspace> frobenius_radical_;
};

// Generic constructor from the raw tensor.
Algebra from_structure_constants(uint32_t p, std::vector<FMatrix> left_mul, FVector unit,
                                 std::vector<std::string> labels = {}, std::string name = "");

// Group algebra F_p[G] for the permutation group generated by the given
// cycles, e.g. "(1 2),(1 2 3 4 5)" for S_5. Elements are enumerated
// breadth-first from the identity; the group order is capped at 5040. The
// radical is populated when G is a p-group (augmentation ideal).
Algebra group_algebra(uint32_t p, const std::string& generator_cycles);

// Truncated polynomial algebra F_p[x_1..x_r]/(x_i^p), monomial basis in
// graded-lexicographic order. Isomorphic to the group algebra of an
// elementary abelian p-group of rank r.
Algebra trunc_poly(uint32_t p, int r);

// Nakayama algebra: path algebra of the cyclic quiver with m vertices,
// arrows a_v: v -> v+1 (mod m), truncated by paths of length > n. Basis
// ordered by (path length, start vertex); dimension m(n+1).
Algebra nakayama(uint32_t p, int m, int n);

// Span of pairwise products of basis vectors of s and t.
Subspace subspace_product(const Algebra& a, const Subspace& s, const Subspace& t);
// s^k inside a, with s^0 the full space; s^1 = s.
Subspace subspace_power(const Algebra& a, const Subspace& s, int k);

// Dimensions of J, J^2, ... down to zero (or up to dim+1 steps).
std::vector<Index> radical_power_dims(const Algebra& a);

}  // namespace hhint
