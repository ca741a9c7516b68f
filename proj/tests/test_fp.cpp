#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hhint/fp.hpp"

using namespace hhint;

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(Fp(1, 4), BadModulusError);
    CHECK_THROWS_AS(Fp(1, 1), BadModulusError);
    CHECK_THROWS_AS(Fp(1, 32771), BadModulusError);  // 2^15 + 3, prime but too large
    CHECK_NOTHROW(Fp(1, 32749));                     // largest prime below 2^15
    CHECK(is_prime(2));
    CHECK(is_prime(7919));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(7917));
}

TEST_CASE("field arithmetic over F_7") {
    Fp a(3, 7), b(5, 7);
    CHECK((a + b).value() == 1);
    CHECK((a - b).value() == 5);
    CHECK((a * b).value() == 1);
    CHECK((a / b).value() == 2);  // 3 * 5^{-1} = 3 * 3 = 9 = 2
    CHECK((-a).value() == 4);
    CHECK(a.pow(6).value() == 1);  // Fermat
    CHECK(Fp(-1, 7).value() == 6);
    CHECK(Fp(700, 7).value() == 0);
}

TEST_CASE("every nonzero element inverts") {
    for (uint32_t p : {2u, 3u, 5u, 13u, 32749u}) {
        uint32_t step = p < 100 ? 1 : 997;
        for (uint32_t v = 1; v < p; v += step) {
            Fp x(v, p);
            CHECK((x * x.inverse()).value() == 1);
        }
    }
    CHECK_THROWS_AS(Fp(0, 5).inverse(), DivisionByZeroError);
}

TEST_CASE("neutral literals adopt the modulus of the other operand") {
    Fp x(4, 5);
    CHECK((x + Fp(3)).value() == 2);
    CHECK((Fp(3) + x).mod() == 5);
    CHECK((x * Fp(0)).is_zero());
    CHECK(Fp(9) == Fp(4, 5));
    CHECK(Fp(2) + Fp(2) == Fp(4));  // both neutral: plain integers
}

TEST_CASE("mixed nonzero moduli throw") {
    Fp a(1, 3), b(1, 5);
    CHECK_THROWS_AS(a + b, MixedModulusError);
    CHECK_THROWS_AS(a * b, MixedModulusError);
    CHECK_THROWS_AS(a == b, MixedModulusError);
}

TEST_CASE("Eigen matrices over Fp: product and sum") {
    FMatrix a = fmat(5, {{1, 2}, {3, 4}});
    FMatrix b = fmat(5, {{0, 1}, {1, 0}});
    FMatrix ab = a * b;
    CHECK(ab(0, 0).value() == 2);
    CHECK(ab(0, 1).value() == 1);
    CHECK(ab(1, 0).value() == 4);
    CHECK(ab(1, 1).value() == 3);

    FMatrix s = a + a;
    CHECK(s(1, 1).value() == 3);

    FMatrix big = fidentity(20, 3);
    CHECK(is_zero(FMatrix(big * big - big)));

    FVector v = fvec(5, {1, 1});
    FVector av = a * v;
    CHECK(av(0).value() == 3);
    CHECK(av(1).value() == 2);

    CHECK(modulus_of(a) == 5);
    CHECK(modulus_of(av) == 5);
}

TEST_CASE("matrix powers stay exact over F_2") {
    // Nilpotent Jordan block: N^3 = 0 but N^2 != 0.
    FMatrix n = fmat(2, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    FMatrix n2 = n * n;
    CHECK_FALSE(is_zero(n2));
    CHECK(is_zero(FMatrix(n2 * n)));
}
