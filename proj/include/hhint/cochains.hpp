#pragma once

#include <optional>

#include "hhint/algebra.hpp"

namespace hhint {

// Hochschild cochain of degree n: a multilinear map A^n -> A, stored as a
// d x d^n matrix. Column flat(i_1, ..., i_n) holds f(e_{i_1}, ..., e_{i_n}),
// with the big-endian flat index ((i_1 * d + i_2) * d + ...). Degree 0 is a
// single column, an element of A. Degrees above 3 are never materialized
// (the matrix would have d^4 columns); DegreeError guards the boundary.
struct Cochain {
    int degree = 0;
    FMatrix m;
};

// d^degree, throwing DegreeError outside 0..3.
Index cochain_cols(Index d, int degree);
Index flat_index(Index d, const std::vector<Index>& tuple);

Cochain zero_cochain(const Algebra& a, int degree);
Cochain element_cochain(const Algebra& a, const FVector& v);  // degree 0
Cochain endo_cochain(const Algebra& a, const FMatrix& f);     // degree 1
Cochain multiplication_cochain(const Algebra& a);             // degree 2: (x, y) -> xy

Cochain operator+(const Cochain& f, const Cochain& g);
Cochain operator-(const Cochain& f, const Cochain& g);
Cochain operator*(const Fp& c, const Cochain& f);

// Gerstenhaber circle product f o_i g: g substituted into the i-th slot of f
// (1-based), degree deg f + deg g - 1.
Cochain circle_i(const Algebra& a, const Cochain& f, const Cochain& g, int i);
// f o g = sum_i (-1)^{(i-1)(deg g - 1)} f o_i g.
Cochain circle(const Algebra& a, const Cochain& f, const Cochain& g);
// [f, g] = f o g - (-1)^{(deg f - 1)(deg g - 1)} g o f. The multiplication
// cochain mu satisfies [mu, mu] = 0 (associativity), and d = [mu, -] is the
// Hochschild differential below.
Cochain graded_bracket(const Algebra& a, const Cochain& f, const Cochain& g);

// (f cup g)(x.., y..) = f(x..) g(y..), degree deg f + deg g.
Cochain cup(const Algebra& a, const Cochain& f, const Cochain& g);

// Hochschild differential [mu, f], spelled out per degree:
//   deg 0:  (da)(x)      = a x - x a
//   deg 1:  (df)(x, y)   = f(x) y + x f(y) - f(xy)
//   deg 2:  (dc)(x, y, z) = c(x, y) z - x c(y, z) + c(xy, z) - c(x, yz)
// (the global sign of the degree-2 case is opposite to the bar-resolution
// normalization; kernels and images are unaffected). Derivations are exactly
// the degree-1 cocycles, inner derivations the degree-1 coboundaries.
Cochain differential(const Algebra& a, const Cochain& f);

// Streaming cocycle test: checks the columns of differential(f) one at a
// time without materializing them, so it works in degree 2 for large d.
bool is_cocycle(const Algebra& a, const Cochain& f);

// Solves differential(x) = rhs for rhs of degree 1 or 2; nullopt when rhs is
// not a coboundary. Degree-2 systems run over generator images: a solution
// alpha is pinned on products by alpha(gh) = alpha(g)h + g alpha(h) - rhs(g,h),
// and imposing the defining equations on (generator, basis) pairs suffices
// because rhs is first checked to be a cocycle. The full equation set is
// re-verified on the result. The homogeneous solution space in degree 2 is
// the derivation space; in degree 1 the kernel of ad, i.e. the center.
std::optional<Cochain> solve_coboundary(const Algebra& a, const Cochain& rhs);

}  // namespace hhint
