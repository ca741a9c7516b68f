#pragma once

#include <optional>

#include "hhint/cochains.hpp"
#include "hhint/derivations.hpp"

namespace hhint {

// A truncated Hasse-Schmidt family is a sequence alpha_0 = id, alpha_1, ...,
// alpha_N of endomorphisms, encoding the t-linear map
//   Phi = sum_i alpha_i t^i  on  A[t]/(t^{N+1}).
// Phi is an algebra map exactly when every order n <= N satisfies
//   sum_{i+j=n} alpha_i(x) alpha_j(y) = alpha_n(xy),
// and then alpha_1 is a derivation. A derivation integrates to order N when
// it appears as alpha_1 of such a family. Families are passed around as
// vectors of d x d matrices starting at alpha_0.

// First order whose identity fails, checking n = 0 .. size-1; nullopt when
// the whole truncated family is multiplicative.
std::optional<int> hs_first_violation(const Algebra& a, const std::vector<FMatrix>& coeffs);

// Coefficient-wise product of the two maps (valid to the shorter length).
std::vector<FMatrix> hs_compose(const Algebra& a, const std::vector<FMatrix>& f,
                                const std::vector<FMatrix>& g);

// Inverse family: gamma_0 = id, gamma_n = -sum_{i>=1} alpha_i gamma_{n-i}.
std::vector<FMatrix> hs_inverse(const Algebra& a, const std::vector<FMatrix>& f);

// Conjugation by the unit 1 + x t: the family with coefficients
// sum_{i+j=n} (-1)^j L_x^i R_x^j. Its alpha_1 is ad_x, so every inner
// derivation integrates to arbitrary order.
std::vector<FMatrix> hs_conjugation(const Algebra& a, const FVector& x, int order);

// Substitution t -> z t for central z: alpha_i -> L_z^i alpha_i. Throws
// NotCentralError for non-central z.
std::vector<FMatrix> hs_scale(const Algebra& a, const std::vector<FMatrix>& f, const FVector& z);

// Least n >= 1 with alpha_n != 0, or 0 when every coefficient past the
// identity vanishes. For a multiplicative family of offset m, alpha_m is a
// derivation and the family witnesses its integrability shifted by t^m.
int family_offset(const std::vector<FMatrix>& coeffs);

// The order-N obstruction of a family valid through order N-1 (N = size of
// coeffs): obs(x, y) = sum_{i+j=N, i,j>=1} alpha_i(x) alpha_j(y). A further
// coefficient alpha_N extends the family iff d(alpha_N) = -obs, and obs is
// always a 2-cocycle (asserted).
Cochain hs_obstruction(const Algebra& a, const std::vector<FMatrix>& coeffs);

// One extension step: a valid alpha_N for the family, or nullopt when the
// obstruction class in HH^2 is nonzero. The full solution set is the
// returned coefficient plus an arbitrary derivation.
std::optional<FMatrix> hs_extend_once(const Algebra& a, const std::vector<FMatrix>& coeffs);

// Polynomial integrability certificate: maps = alpha_1..alpha_r, checked as
// the infinite family padded with zeros. All identities live in orders
// <= 2r, so a nullopt return proves alpha_1 integrable to every order.
// Otherwise the first violated order.
std::optional<int> certify_polynomial(const Algebra& a, const std::vector<FMatrix>& maps);

// The family obtained by substituting g -> g + d(g) t into the generator
// words of every basis element (coefficients vanish above the longest word,
// so the result is a polynomial candidate for certify_polynomial; it need
// not be multiplicative, e.g. when some d(g) has a nonzero p-th power).
std::vector<FMatrix> generator_substitution(const Algebra& a, const FMatrix& d, int order);

enum class LiftStatus {
    LiftedTo,         // a witness family of the target order was constructed
    ObstructedAt,     // exhaustive: no family of order `order` extends d
    BudgetExhausted,  // search exceeded its budget or branch cap: no verdict
};

struct LiftOptions {
    int target = -1;          // -1: 2 p^2
    uint64_t budget = 1'000'000;  // joint solves across the search tree
    uint64_t branch_cap = 512;    // children enumerated per node
};

struct LiftResult {
    LiftStatus status = LiftStatus::BudgetExhausted;
    int order = 0;       // LiftedTo: the target; ObstructedAt: first unreachable order
    int best_order = 0;  // deepest order for which some family was constructed
    uint64_t nodes = 0;
    std::vector<FMatrix> witness;  // LiftedTo: alpha_0..alpha_target
};

// Depth-first search for a Hasse-Schmidt family extending the derivation d.
// A node holds a concrete prefix alpha_1..alpha_{m-1} plus the full solution
// coset c + Der of the last coefficient alpha_m; the step to order m+1 is a
// single linear solve JOINTLY over alpha_{m+1} and the coset parameter
// (which enters the obstruction linearly, through the convolution pairs
// (1, m) and (m, 1)). An infeasible joint system therefore refutes every
// choice of alpha_m at once, which is what makes ObstructedAt exhaustive
// rather than heuristic. Feasible nodes branch over the coset projection of
// the joint kernel in deterministic RREF order.
LiftResult lift(const Algebra& a, const FMatrix& d, const LiftOptions& opt = {});

enum class IntegrabilityStatus {
    Certified,        // polynomial certificate: integrable to every order
    ObstructedExact,  // exhaustive refutation at `order`
    ReachedOrder,     // witness family up to the target order, no claim beyond
    Undecided,        // budget or dimension guard
};

struct ClassIntegrability {
    Index index = 0;
    IntegrabilityStatus status = IntegrabilityStatus::Undecided;
    int order = 0;  // meaning depends on status, see above
    uint64_t nodes = 0;
};

struct IntegrabilityReport {
    HH1 h;
    int target_order = 0;
    Index certified_dim = 0;  // dim of (certified span + Inn) modulo Inn
    Subspace certified;       // the span itself (vectorized endomorphisms, Inn included)
    std::vector<ClassIntegrability> classes;
};

// Integrability survey of the HH^1 classes. Sound positive reasoning:
// integrable derivations form a subspace containing Inn (families compose,
// rescale, and conjugations integrate every ad_x), so membership of a
// representative in the span of certified derivations + Inn certifies its
// class. Candidates: zero-padded short families, generator substitution, and
// the coordinate derivation bases of the preset kinds. Classes that resist
// certification fall through to the lift search (dimension-guarded).
IntegrabilityReport integrable_report(const Algebra& a, int order = -1,
                                      const LiftOptions& opt = {});

}  // namespace hhint
