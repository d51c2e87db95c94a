#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "ratdec/errors.hpp"
#include "ratdec/derivation.hpp"

using namespace ratdec;
using testutil::mp;
using testutil::rf;

TEST_CASE("jacobian derivation of X/Y") {
    RationalFunction f = rf("X", "Y");
    // D = Y d/dY + X d/dX for this pencil
    CHECK(jacobian_apply(f, mp("X")) == CofactorVector{mp("X")});
    CHECK(jacobian_apply(f, mp("Y")) == CofactorVector{mp("Y")});
    CHECK(jacobian_apply(f, mp("Y^2")) == CofactorVector{mp("2*Y^2")});
    CHECK(jacobian_apply(f, mp("X + Y")) == CofactorVector{mp("X + Y")});
    CHECK(jacobian_apply(f, mp("7")) == CofactorVector{mp("0")});
}

TEST_CASE("the derivation satisfies the Leibniz rule") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        RationalFunction f = testutil::random_reduced(rng, 2, 3, 5);
        MultiPoly p = testutil::random_poly(rng, 2, 3, 5);
        MultiPoly q = testutil::random_poly(rng, 2, 3, 5);
        CofactorVector dp = jacobian_apply(f, p);
        CofactorVector dq = jacobian_apply(f, q);
        CofactorVector dpq = jacobian_apply(f, p * q);
        REQUIRE(dp.size() == 1);
        CHECK(dpq[0] == p * dq[0] + q * dp[0]);
    }
}

TEST_CASE("cofactor goldens for the non-composite fixture") {
    RationalFunction f = testutil::fixture_noncomposite();
    CofactorVector g1 = cofactor(f, mp("1 + X + Y^2"));
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] ==
          mp("-6*Y^4 + 8*X^2*Y + 7*X*Y^2 - 6*Y^3 + 3*X^2 - 2*X*Y + 3*Y^2 + 2*X + 2*Y - 1"));

    CofactorVector g2 = cofactor(f, mp("X + Y"));
    REQUIRE(g2.size() == 1);
    CHECK(g2[0] ==
          mp("-3*Y^4 - 2*Y^3 + 8*X^2*Y - 6*Y^2 + 4*X*Y + 3*X^2 - 4*Y + 6*X + 3"));
}

TEST_CASE("cofactor basics and failure modes") {
    RationalFunction f = rf("X", "Y");
    CHECK(cofactor(f, mp("X")) == CofactorVector{mp("1")});
    CHECK(cofactor(f, mp("Y")) == CofactorVector{mp("1")});
    CHECK(cofactor(f, mp("Y^2")) == CofactorVector{mp("2")});
    CHECK(cofactor(f, mp("X + Y")) == CofactorVector{mp("1")});
    CHECK_THROWS_AS(cofactor(f, mp("X + 1")), NotDarbouxError);
}

TEST_CASE("cofactors add over products and respect the degree bound") {
    RationalFunction fa = testutil::fixture_noncomposite();
    CofactorVector whole = cofactor(fa, fa.num());
    CofactorVector part1 = cofactor(fa, mp("1 + X + Y^2"));
    CofactorVector part2 = cofactor(fa, mp("X + Y"));
    CHECK(whole[0] == part1[0] + part2[0]);

    std::mt19937_64 rng(57);
    int done = 0;
    while (done < 6) {
        RationalFunction f = testutil::random_reduced(rng, 2, 3, 5, 1);
        int bound = 2 * f.degree() - 2;
        CofactorVector gn = cofactor(f, f.num());
        CofactorVector gd = cofactor(f, f.den());
        CofactorVector gprod = cofactor(f, f.num() * f.den());
        CHECK(gprod[0] == gn[0] + gd[0]);
        CHECK(gn[0].degree() <= bound);
        CHECK(gd[0].degree() <= bound);
        ++done;
    }
}

TEST_CASE("is_first_integral") {
    RationalFunction fa = testutil::fixture_noncomposite();
    CHECK(is_first_integral(fa, fa));
    CHECK(is_first_integral(testutil::fixture_composite(), fa));

    // (X+Y)/Y = 1 + X/Y shares the level sets of X/Y
    CHECK(is_first_integral(rf("X", "Y"), rf("X + Y", "Y")));
    CHECK_FALSE(is_first_integral(rf("X", "Y"), rf("X", "Y^2")));
    CHECK(is_first_integral(rf("X", "Y"), rf("3", "1")));
}
