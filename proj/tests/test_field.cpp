#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pnev/rational.hpp"
#include "support.hpp"

using namespace pnev;

TEST_CASE("valuation of integers and fractions") {
    PrimeContext p2(2), p3(3), p5(5);
    CHECK(p2.valuation(12) == Valuation(2)); // 12 = 4*3
    CHECK(p3.valuation(Rational(1, 9)) == Valuation(-2));
    CHECK(p5.valuation(0).is_infinite());
    CHECK(p2.valuation(Rational(7)) == Valuation(0));
}

TEST_CASE("log_abs") {
    PrimeContext p2(2), p5(5);
    CHECK(*p2.log_abs(2) == Rational(-1));
    CHECK(*p2.log_abs(Rational(1, 2)) == Rational(1));
    CHECK(*p5.log_abs(7) == Rational(0));
    CHECK(!p2.log_abs(0).has_value());
}

TEST_CASE("non-prime context rejected") {
    CHECK_THROWS_AS(PrimeContext(4), FixtureError);
    CHECK_THROWS_AS(PrimeContext(1), FixtureError);
    CHECK_THROWS_AS(PrimeContext(0), FixtureError);
    CHECK_NOTHROW(PrimeContext(97));
    CHECK_NOTHROW(PrimeContext(Integer("1000000007")));
}

TEST_CASE("ultrametric inequality on random pairs") {
    test::Rng rng(1234);
    for (Integer p : {2, 3, 5}) {
        PrimeContext ctx(p);
        for (int trial = 0; trial < 1000; ++trial) {
            Rational a = test::random_rational(rng);
            Rational b = test::random_rational(rng);
            Valuation va = ctx.valuation(a), vb = ctx.valuation(b);
            Valuation vsum = ctx.valuation(a + b);
            Valuation lo = va < vb ? va : vb;
            CHECK(lo <= vsum);
            if (!(va == vb)) CHECK(vsum == lo);
        }
    }
}

TEST_CASE("multiplicativity of valuation") {
    test::Rng rng(99);
    for (Integer p : {2, 3, 5}) {
        PrimeContext ctx(p);
        for (int trial = 0; trial < 1000; ++trial) {
            Rational a = test::random_nonzero_rational(rng);
            Rational b = test::random_nonzero_rational(rng);
            CHECK(ctx.valuation(a * b) == ctx.valuation(a) + ctx.valuation(b));
        }
    }
}

TEST_CASE("rational literal round trip") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-8") == Rational(-8));
    CHECK(rational_str(Rational(-3, 4)) == "-3/4");
    CHECK(rational_str(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}
