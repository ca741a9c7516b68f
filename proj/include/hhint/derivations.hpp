#pragma once

#include <vector>

#include "hhint/algebra.hpp"

namespace hhint {

// Endomorphisms of the coordinate space are d x d matrices acting on column
// vectors from the left. Endomorphism subspaces live in F_p^{d*d} under the
// row-major flattening: entry (r, c) sits at coordinate r*d + c.
FVector vec_endo(const FMatrix& m);
FMatrix unvec_endo(const FVector& v, Index d);

// The derivations of a, D(xy) = D(x)y + x D(y), as a canonical subspace of
// the endomorphism space. Uses the generator-reduced solver when the algebra
// carries a generator decomposition, otherwise the all-pairs solver.
Subspace derivation_space(const Algebra& a);

// Imposes Leibniz on every pair of basis elements (d^3 constraint rows over
// d^2 unknowns). Independent of the generator bookkeeping, so it serves as a
// cross-check for the reduced solver; quadratically more work, keep to small
// dimensions.
Subspace derivation_space_allpairs(const Algebra& a);

// Solves for the generator images only. Leibniz on the pairs (generator,
// basis element) suffices: every basis element is a left-normed word in the
// generators, so the rule propagates to all products by induction on word
// length. Unknown count drops from d^2 to #gens * d.
Subspace derivation_space_reduced(const Algebra& a);

// Inner derivations ad_x = [x, -], spanned by the ad of the basis elements.
// dim Inn = dim a - dim Z(a).
Subspace inner_derivations(const Algebra& a);

// Checks Leibniz on all basis pairs, bailing at the first violation.
bool is_derivation(const Algebra& a, const FMatrix& d);

// The derivation with the prescribed generator images (one coordinate vector
// per entry of a.gens(), in order). Throws NotADerivationError when the
// images violate a defining relation of the algebra.
FMatrix derivation_from_generator_images(const Algebra& a, const std::vector<FVector>& images);

// First Hochschild cohomology HH^1 = Der/Inn with a pinned presentation.
// Class representatives are the RREF basis rows of Der whose pivot column is
// not a pivot of Inn: any nonzero combination of them has its leading entry
// in a non-Inn pivot column, so they are independent modulo Inn, and there
// are dim Der - dim Inn of them (nested RREF pivot sets are nested), so they
// enumerate a basis of the quotient deterministically.
struct HH1 {
    Subspace der;
    Subspace inn;
    std::vector<FMatrix> reps;
    Index dim() const { return der.dim() - inn.dim(); }
};

HH1 hh1(const Algebra& a);

// Lie structure on endomorphisms.
FMatrix bracket(const FMatrix& x, const FMatrix& y);  // xy - yx
// d^p by repeated squaring; in characteristic p the p-th power of a
// derivation is again a derivation (restricted structure).
FMatrix p_power(const FMatrix& d, uint32_t p);
// The derivation x -> z * d(x) for central z; throws NotCentralError when z
// lies outside the center.
FMatrix central_scale(const Algebra& a, const FVector& z, const FMatrix& d);

bool preserves_radical(const Algebra& a, const FMatrix& d);

// span{ [x, y] : x, y basis vectors of s }, inside the same ambient space.
Subspace bracket_span(const Subspace& s);

// Verifies [s, s] <= s; throws NotBracketClosedError otherwise.
const Subspace& require_bracket_closed(const Subspace& s);

// Derived series of a bracket-closed subspace: s >= [s,s] >= ... until the
// dimension stabilizes. Throws NotBracketClosedError if s is not closed.
std::vector<Index> derived_series_dims(const Subspace& s);

// Derived series of the Lie algebra HH^1 = Der/Inn. Since Inn is an ideal,
// the quotient series is computed from class representatives alone:
// S_0 = Der, S_{k+1} = [reps_k, reps_k] + Inn, recording dims modulo Inn
// until they stabilize. Solvable iff the series reaches zero.
struct SolvabilityReport {
    std::vector<Index> series;
    bool solvable = false;
};

SolvabilityReport solvability(const Algebra& a);

// For the truncated polynomial algebra in r variables: the r * p^r
// derivations (monomial) * d/dx_i, ordered variable-major then by monomial
// index. They form a basis of the full derivation algebra (the Jacobson-Witt
// algebra W(r; 1)).
std::vector<FMatrix> witt_basis(const Algebra& a);

}  // namespace hhint
