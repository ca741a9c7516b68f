#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hhint/cochains.hpp"
#include "hhint/errors.hpp"
#include "hhint/integrate.hpp"

using namespace hhint;

namespace {

bool equal_mat(const FMatrix& a, const FMatrix& b) { return is_zero(FMatrix(a - b)); }

// ad_x as a matrix.
FMatrix inner_of(const Algebra& a, const FVector& x) {
    return FMatrix(a.left_op(x) - a.right_op(x));
}

// Binomial coefficient reduced mod p, via Pascal's rule on exact integers.
uint32_t binom_mod(int n, int k, uint32_t p) {
    if (k < 0 || k > n) return 0;
    std::vector<uint64_t> row(static_cast<size_t>(n) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j - 1)];
    return static_cast<uint32_t>(row[static_cast<size_t>(k)] % p);
}

// Odometer over all p^(d*d) matrices; reused as the brute-force source of
// derivations for the small search oracles.
std::vector<FMatrix> all_derivations(const Algebra& a) {
    const Index d = a.dim();
    const uint32_t p = a.p();
    std::vector<uint32_t> digits(static_cast<size_t>(d * d), 0);
    std::vector<FMatrix> out;
    while (true) {
        FMatrix m = fzeros(d, d, p);
        for (Index r = 0; r < d; ++r)
            for (Index c = 0; c < d; ++c)
                m(r, c) = Fp(digits[static_cast<size_t>(r * d + c)], p);
        if (is_derivation(a, m)) out.push_back(std::move(m));
        size_t i = 0;
        while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
        if (i == digits.size()) break;
    }
    return out;
}

// x d/dx on the one-variable truncated polynomial algebra (grading diagonal).
FMatrix euler_one_var(const Algebra& a) {
    FMatrix m = fzeros(a.dim(), a.dim(), a.p());
    for (Index i = 0; i < a.dim(); ++i) m(i, i) = Fp(static_cast<uint32_t>(i) % a.p(), a.p());
    return m;
}

}  // namespace

TEST_CASE("conjugation by 1 + x t is multiplicative and integrates ad_x") {
    Algebra a = group_algebra(3, "(1 2 3)(4 5)");  // kS3 would do; this is C6... use S3 below
    Algebra s3 = group_algebra(3, "(1 2), (1 2 3)");
    for (Index xi : {Index(1), Index(3)}) {
        FVector x = funit(s3.dim(), xi, 3);
        std::vector<FMatrix> fam = hs_conjugation(s3, x, 12);
        CHECK(fam.size() == 13);
        CHECK(equal_mat(fam[0], fidentity(s3.dim(), 3)));
        CHECK(equal_mat(fam[1], inner_of(s3, x)));
        CHECK(!hs_first_violation(s3, fam).has_value());
    }
    // a group element of order 6 in C6 as well, to cover a commutative case
    FVector g = funit(a.dim(), 1, 3);
    CHECK(!hs_first_violation(a, hs_conjugation(a, g, 8)).has_value());
}

TEST_CASE("family composition and inversion are group operations") {
    Algebra a = trunc_poly(3, 2);
    FMatrix euler = fzeros(a.dim(), a.dim(), 3);
    // total-degree grading: 1, x, y, x^2, xy, y^2, x^2 y, x y^2, x^2 y^2
    const uint32_t degs[] = {0, 1, 1, 2, 2, 2, 3, 3, 4};
    for (Index i = 0; i < a.dim(); ++i) euler(i, i) = Fp(degs[i] % 3, 3);
    REQUIRE(is_derivation(a, euler));

    std::vector<FMatrix> fam = generator_substitution(a, euler, 6);
    REQUIRE(!hs_first_violation(a, fam).has_value());
    std::vector<FMatrix> inv = hs_inverse(a, fam);
    CHECK(!hs_first_violation(a, inv).has_value());

    std::vector<FMatrix> prod = hs_compose(a, fam, inv);
    CHECK(equal_mat(prod[0], fidentity(a.dim(), 3)));
    for (size_t n = 1; n < prod.size(); ++n) CHECK(is_zero(prod[n]));

    // composition of valid families is a valid family; alpha_1 adds up
    std::vector<FMatrix> conj = hs_conjugation(a, funit(a.dim(), 1, 3), 6);
    std::vector<FMatrix> both = hs_compose(a, fam, conj);
    CHECK(!hs_first_violation(a, both).has_value());
    CHECK(equal_mat(both[1], FMatrix(fam[1] + conj[1])));
}

TEST_CASE("substituting t -> z t keeps a family multiplicative for central z") {
    Algebra a = trunc_poly(3, 1);
    std::vector<FMatrix> fam = generator_substitution(a, euler_one_var(a), 4);
    REQUIRE(!hs_first_violation(a, fam).has_value());
    FVector z = funit(a.dim(), 1, 3);  // x, central in a commutative algebra
    std::vector<FMatrix> scaled = hs_scale(a, fam, z);
    CHECK(!hs_first_violation(a, scaled).has_value());
    CHECK(equal_mat(scaled[1], FMatrix(a.left_op(z) * fam[1])));

    Algebra s3 = group_algebra(3, "(1 2), (1 2 3)");
    std::vector<FMatrix> cfam = hs_conjugation(s3, funit(s3.dim(), 1, 3), 3);
    CHECK_THROWS_AS(hs_scale(s3, cfam, funit(s3.dim(), 1, 3)), NotCentralError);
}

TEST_CASE("order-two obstruction is the cup square of the derivation") {
    Algebra a = trunc_poly(3, 1);
    FMatrix e = euler_one_var(a);
    Cochain obs = hs_obstruction(a, {fidentity(a.dim(), 3), e});
    Cochain sq = cup(a, endo_cochain(a, e), endo_cochain(a, e));
    CHECK(is_zero(FMatrix(obs.m - sq.m)));
}

TEST_CASE("an invalid coefficient family is rejected when its obstruction is probed") {
    Algebra a = nakayama(3, 2, 2);
    FMatrix junk = fzeros(a.dim(), a.dim(), 3);
    junk(0, 1) = Fp(1, 3);  // sends e2 to e1: not remotely multiplicative data
    std::vector<FMatrix> fam{fidentity(a.dim(), 3), junk, junk};
    CHECK_THROWS_AS(hs_obstruction(a, fam), NotMultiplicativeError);
}

TEST_CASE("d/dx on F_3[x]/(x^3) extends to order two but not to order three") {
    Algebra a = trunc_poly(3, 1);
    FMatrix ddx = fzeros(3, 3, 3);
    ddx(0, 1) = Fp(1, 3);
    ddx(1, 2) = Fp(2, 3);
    REQUIRE(is_derivation(a, ddx));

    std::vector<FMatrix> fam{fidentity(3, 3), ddx};
    std::optional<FMatrix> a2 = hs_extend_once(a, fam);
    REQUIRE(a2.has_value());
    fam.push_back(*a2);
    CHECK(!hs_first_violation(a, fam).has_value());
    // (x + t + ...)^3 = x^3 + t^3 + ... = t^3 in characteristic 3, but
    // x^3 = 0 must map to 0: the order-three coefficient cannot exist.
    CHECK(!hs_extend_once(a, fam).has_value());

    LiftResult lr = lift(a, ddx, {});
    CHECK(lr.status == LiftStatus::ObstructedAt);
    CHECK(lr.order == 3);
    CHECK(lr.best_order == 2);
}

TEST_CASE("d/dx on F_3[x,y]/(x^3,y^3) is exactly obstructed at order three") {
    Algebra a = trunc_poly(3, 2);
    FMatrix f00 = derivation_from_generator_images(
        a, {funit(a.dim(), 0, 3), fzvec(a.dim(), 3)});
    LiftResult lr = lift(a, f00, {});
    CHECK(lr.status == LiftStatus::ObstructedAt);
    CHECK(lr.order == 3);
    // mixing in an integrable direction does not evade the obstruction
    FMatrix x_dx = derivation_from_generator_images(
        a, {funit(a.dim(), 1, 3), fzvec(a.dim(), 3)});
    LiftResult lr2 = lift(a, FMatrix(f00 + x_dx), {});
    CHECK(lr2.status == LiftStatus::ObstructedAt);
    CHECK(lr2.order == 3);
}

TEST_CASE("x d/dx lifts to high order with a verified witness") {
    Algebra a = trunc_poly(3, 1);
    LiftOptions opt;
    opt.target = 12;
    LiftResult lr = lift(a, euler_one_var(a), opt);
    REQUIRE(lr.status == LiftStatus::LiftedTo);
    CHECK(lr.order == 12);
    CHECK(lr.witness.size() == 13);
    CHECK(equal_mat(lr.witness[1], euler_one_var(a)));
    CHECK(!hs_first_violation(a, lr.witness).has_value());
}

TEST_CASE("lift guards: input validation, order bound, dimension bound") {
    Algebra a = trunc_poly(3, 1);
    FMatrix notder = fzeros(3, 3, 3);
    notder(0, 0) = Fp(1, 3);  // does not annihilate the unit
    CHECK_THROWS_AS(lift(a, notder, {}), NotADerivationError);

    LiftOptions big;
    big.target = 5000;
    CHECK_THROWS_AS(lift(a, euler_one_var(a), big), BoundError);

    Algebra wide = trunc_poly(2, 6);  // dim 64 > the lift dimension guard
    std::vector<FVector> images(wide.gens().size(), fzvec(wide.dim(), 2));
    images[0] = funit(wide.dim(), wide.gens()[0], 2);  // x1 d/dx1
    LiftResult lr = lift(wide, derivation_from_generator_images(wide, images), {});
    CHECK(lr.status == LiftStatus::BudgetExhausted);
    CHECK(lr.nodes == 0);
}

TEST_CASE("a tiny node budget reports exhaustion rather than a verdict") {
    Algebra a = trunc_poly(3, 1);
    LiftOptions opt;
    opt.target = 10;
    opt.budget = 2;
    LiftResult lr = lift(a, euler_one_var(a), opt);
    CHECK(lr.status == LiftStatus::BudgetExhausted);
    CHECK(lr.best_order >= 2);
}

TEST_CASE("group algebra of C4 mod 2: integrability matches the augmentation oracle") {
    // Phi(g)^4 must equal 1; squaring is additive in characteristic 2, so
    // the t^4 coefficient is D(g)^4 = (sum of coordinates of D(g)) * 1.
    // Hence D integrates iff its value on g lies in the augmentation ideal,
    // and the obstruction strikes exactly at order 4.
    Algebra a = group_algebra(2, "(1 2 3 4)");
    const Index g = a.gens()[0];
    std::vector<FMatrix> ders = all_derivations(a);
    REQUIRE(ders.size() == 16);

    int integrable = 0;
    LiftOptions opt;
    opt.target = 6;
    for (const FMatrix& dm : ders) {
        Fp aug(0, 2);
        for (Index r = 0; r < a.dim(); ++r) aug += dm(r, g);
        LiftResult lr = lift(a, dm, opt);
        if (aug.is_zero()) {
            CHECK(lr.status == LiftStatus::LiftedTo);
            CHECK(!hs_first_violation(a, lr.witness).has_value());
            ++integrable;
        } else {
            CHECK(lr.status == LiftStatus::ObstructedAt);
            CHECK(lr.order == 4);
            CHECK(lr.best_order == 3);
        }
    }
    CHECK(integrable == 8);
}

TEST_CASE("polynomial certificates: acceptance and first-violation reporting") {
    Algebra nak = nakayama(3, 2, 2);
    // scale the arrow a1: diagonal on words containing a1; all pairwise
    // products of the scaled basis vectors vanish, so one coefficient works
    FMatrix scale = fzeros(nak.dim(), nak.dim(), 3);
    scale(2, 2) = Fp(1, 3);  // a1
    scale(4, 4) = Fp(1, 3);  // a1*a2
    scale(5, 5) = Fp(1, 3);  // a2*a1
    REQUIRE(is_derivation(nak, scale));
    CHECK(!certify_polynomial(nak, {scale}).has_value());

    Algebra a = trunc_poly(3, 1);
    FMatrix ddx = fzeros(3, 3, 3);
    ddx(0, 1) = Fp(1, 3);
    ddx(1, 2) = Fp(2, 3);
    CHECK(certify_polynomial(a, {ddx}) == 2);  // d/dx(x) d/dx(x) = 1 != 0

    Algebra two = trunc_poly(3, 2);
    FMatrix f00 = derivation_from_generator_images(
        two, {funit(two.dim(), 0, 3), fzvec(two.dim(), 3)});
    std::vector<FMatrix> fam = generator_substitution(two, f00, 4);
    CHECK(equal_mat(fam[1], f00));
    CHECK(certify_polynomial(two, {fam[1], fam[2], fam[3]}) == 3);
}

TEST_CASE("generator substitution matches binomial rescaling on monomials") {
    Algebra a = trunc_poly(3, 2);
    const uint32_t degs[] = {0, 1, 1, 2, 2, 2, 3, 3, 4};
    FMatrix euler = fzeros(a.dim(), a.dim(), 3);
    for (Index i = 0; i < a.dim(); ++i) euler(i, i) = Fp(degs[i] % 3, 3);
    std::vector<FMatrix> fam = generator_substitution(a, euler, 5);
    REQUIRE(fam.size() == 6);
    // x -> x(1+t), y -> y(1+t): a monomial of degree e picks up (1+t)^e, so
    // alpha_n is diagonal with entries binom(e, n)
    for (int n = 0; n <= 5; ++n) {
        FMatrix expect = fzeros(a.dim(), a.dim(), 3);
        for (Index i = 0; i < a.dim(); ++i)
            expect(i, i) = Fp(binom_mod(static_cast<int>(degs[i]), n, 3), 3);
        CHECK(equal_mat(fam[static_cast<size_t>(n)], expect));
    }
}

TEST_CASE("integrability survey of F_3[x,y]/(x^3,y^3)") {
    Algebra a = trunc_poly(3, 2);
    IntegrabilityReport rep = integrable_report(a);
    CHECK(rep.h.dim() == 18);
    CHECK(rep.target_order == 18);
    // integrable derivations = those sending x and y into the radical
    // (the cube of any image must vanish); that span has dimension 16
    CHECK(rep.certified_dim == 16);
    int certified = 0, obstructed = 0;
    for (const ClassIntegrability& ci : rep.classes) {
        if (ci.status == IntegrabilityStatus::Certified) ++certified;
        if (ci.status == IntegrabilityStatus::ObstructedExact) {
            CHECK(ci.order == 3);
            ++obstructed;
        }
    }
    CHECK(certified + obstructed == 18);
    CHECK(obstructed >= 2);
}

TEST_CASE("integrability survey of the C4 group algebra mod 2") {
    Algebra a = group_algebra(2, "(1 2 3 4)");
    IntegrabilityReport rep = integrable_report(a);
    CHECK(rep.h.dim() == 4);       // commutative: no inner derivations
    CHECK(rep.certified_dim == 3);  // augmentation-valued images integrate
    int obstructed = 0;
    for (const ClassIntegrability& ci : rep.classes) {
        CHECK((ci.status == IntegrabilityStatus::Certified ||
               ci.status == IntegrabilityStatus::ObstructedExact));
        if (ci.status == IntegrabilityStatus::ObstructedExact) {
            CHECK(ci.order == 4);
            ++obstructed;
        }
    }
    CHECK(obstructed >= 1);
}

TEST_CASE("integrability survey of the base field is empty") {
    Algebra k = from_structure_constants(3, {fidentity(1, 3)}, funit(1, 0, 3), {"1"}, "F3");
    IntegrabilityReport rep = integrable_report(k);
    CHECK(rep.h.dim() == 0);
    CHECK(rep.classes.empty());
    CHECK(rep.certified_dim == 0);
}

TEST_CASE("integrability survey of a self-injective Nakayama algebra") {
    // cyclic quiver on two vertices, paths of length <= 2: the arrow-scaling
    // classes all integrate (each scaled basis family has square zero)
    Algebra a = nakayama(3, 2, 2);
    IntegrabilityReport rep = integrable_report(a);
    for (const ClassIntegrability& ci : rep.classes)
        CHECK(ci.status == IntegrabilityStatus::Certified);
    CHECK(rep.certified_dim == rep.h.dim());
}
