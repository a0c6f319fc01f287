#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pnev/series.hpp"
#include "support.hpp"

using namespace pnev;

TEST_CASE("series literal parsing and rendering") {
    TruncatedSeries s = parse_series("1 - 3/2*z^2 + z^5");
    CHECK(s.coefficient(0) == Rational(1));
    CHECK(s.coefficient(2) == Rational(-3, 2));
    CHECK(s.coefficient(5) == Rational(1));
    CHECK(s.degree() == 5);
    CHECK(parse_series(s.str()) == s);
    CHECK(parse_series("0").is_zero());
    CHECK(parse_series("z*z").coefficient(2) == Rational(1));
    CHECK_THROWS_AS(parse_series("1 +"), ParseError);
    CHECK_THROWS_AS(parse_series("q"), ParseError);
}

TEST_CASE("gauss norm of simple polynomials") {
    PrimeContext p2(2);
    CHECK(gauss_norm(parse_series("z"), p2).fn == PLFunction::affine(1, 0));
    PLFunction expect_ramp =
        pl_max({PLFunction::constant(0), PLFunction::affine(1, 0)});
    CHECK(gauss_norm(parse_series("1 + z"), p2).fn == expect_ramp);

    // 2 + z + 4z^2 at p=2: v-vector (1,0,2) -> max(-1, rho, 2rho-2)
    BoundedPL g = gauss_norm(parse_series("2 + z + 4*z^2"), p2);
    CHECK(g.fn.slopes() == std::vector<Rational>{0, 1, 2});
    CHECK(g.fn.breakpoints() == std::vector<Rational>{-1, 2});
    CHECK(!g.certified_to.has_value()); // exact polynomial
    CHECK_THROWS_AS(gauss_norm(parse_series("0"), p2), FixtureError);
}

TEST_CASE("newton polygon") {
    PrimeContext p2(2);
    NewtonPolygon a = newton_polygon(parse_series("z^3"), p2);
    REQUIRE(a.vertices.size() == 1);
    CHECK(a.vertices[0].index == 3);
    CHECK(a.vertices[0].valuation == 0);

    // (z-1)(z-2) = z^2 - 3z + 2
    NewtonPolygon b = newton_polygon(parse_series("2 - 3*z + z^2"), p2);
    REQUIRE(b.vertices.size() == 3);
    CHECK(b.vertices[0].index == 0);
    CHECK(b.vertices[0].valuation == 1);
    CHECK(b.vertices[1].index == 1);
    CHECK(b.vertices[1].valuation == 0);
    CHECK(b.vertices[2].index == 2);
    CHECK(b.vertices[2].valuation == 0);

    NewtonPolygon c = newton_polygon(parse_series("2 + z + 4*z^2"), p2);
    REQUIRE(c.vertices.size() == 3);
    CHECK(c.vertices[2].index == 2);
    CHECK(c.vertices[2].valuation == 2);
}

TEST_CASE("zero count at given radii") {
    PrimeContext p2(2);
    TruncatedSeries cube = parse_series("z^3");
    CHECK(zero_count(cube, p2, -10) == 3);
    CHECK(zero_count(cube, p2, 17) == 3);

    // oracle: phi = (z-1)(z-2); |2| = 2^-1 so one root at rho=-1, one at 0
    TruncatedSeries q = parse_series("2 - 3*z + z^2");
    CHECK(zero_count(q, p2, -1) == 1);
    CHECK(zero_count(q, p2, 0) == 2);
    CHECK(zero_count(q, p2, Rational(-3, 2)) == 0);

    CHECK(zero_count(parse_series("1"), p2, 100) == 0);
}

TEST_CASE("zero count matches the factoring oracle on random products") {
    test::Rng rng(31337);
    for (Integer p : {2, 3, 5}) {
        PrimeContext ctx(p);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Rational> roots;
            std::uniform_int_distribution<int> nf(1, 10);
            TruncatedSeries phi = test::product_of_linear_factors(rng, nf(rng), roots);
            for (int k = 0; k < 20; ++k) {
                Rational rho = test::random_rational(rng, 12, 3);
                CHECK(zero_count(phi, ctx, rho) == test::count_roots_in_disc(roots, ctx, rho));
            }
        }
    }
}

TEST_CASE("counting function from the polygon") {
    PrimeContext p2(2);
    CHECK(counting_pl(parse_series("z"), p2).fn == PLFunction::affine(1, 0));

    PLFunction expect = pl_combine(
        pl_max({PLFunction::constant(0), PLFunction::affine(1, 1)}),
        pl_max({PLFunction::constant(0), PLFunction::affine(1, 0)}), 1, 1);
    CHECK(counting_pl(parse_series("2 - 3*z + z^2"), p2).fn == expect);

    CHECK(counting_pl(parse_series("1 + z"), p2).fn ==
          pl_max({PLFunction::constant(0), PLFunction::affine(1, 0)}));
}

TEST_CASE("Jensen: gauss norm equals counting shifted by first valuation") {
    test::Rng rng(404);
    for (Integer p : {2, 3, 5}) {
        PrimeContext ctx(p);
        for (int trial = 0; trial < 70; ++trial) {
            TruncatedSeries phi = test::random_polynomial(rng, 8);
            Rational v(ctx.valuation(phi.coefficient(phi.order_at_origin())).value());
            PLFunction lhs = gauss_norm(phi, ctx).fn;
            PLFunction rhs = pl_combine(counting_pl(phi, ctx).fn,
                                        PLFunction::constant(v), 1, -1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("counting function slope equals zero count off breakpoints") {
    test::Rng rng(11);
    PrimeContext p3(3);
    for (int trial = 0; trial < 50; ++trial) {
        TruncatedSeries phi = test::random_polynomial(rng, 8);
        BoundedPL n = counting_pl(phi, p3);
        CHECK(n.fn.is_convex());
        for (int k = 0; k < 5; ++k) {
            Rational rho = test::random_rational(rng, 15, 4);
            bool at_bp = false;
            for (const Rational& b : n.fn.breakpoints())
                if (b == rho) at_bp = true;
            if (at_bp) continue;
            Rational slope_here =
                (n.fn.eval(rho + Rational(1, 1000000)) - n.fn.eval(rho)) * 1000000;
            CHECK(slope_here == Rational(zero_count(phi, p3, rho)));
        }
    }
}

TEST_CASE("Gauss's lemma: norm of product is sum of norms") {
    test::Rng rng(8);
    for (Integer p : {2, 5}) {
        PrimeContext ctx(p);
        for (int trial = 0; trial < 60; ++trial) {
            TruncatedSeries a = test::random_polynomial(rng, 6);
            TruncatedSeries b = test::random_polynomial(rng, 6);
            CHECK(gauss_norm(a * b, ctx).fn ==
                  gauss_norm(a, ctx).fn + gauss_norm(b, ctx).fn);
        }
    }
}

TEST_CASE("composition with homogeneous polynomials") {
    std::vector<TruncatedSeries> f{parse_series("1"), parse_series("z"),
                                   parse_series("z^3")};
    MultiPoly q = parse_poly("x1^2 - x0*x2", 3);
    CHECK(compose_homogeneous(q, f) == parse_series("z^2 - z^3"));

    MultiPoly x1 = parse_poly("x1", 3);
    CHECK(compose_homogeneous(x1, f) == parse_series("z"));

    std::vector<TruncatedSeries> g{parse_series("1"), parse_series("z")};
    CHECK(compose_homogeneous(parse_poly("x0 - x1", 2), g) == parse_series("1 - z"));
    CHECK_THROWS_AS(compose_homogeneous(q, g), FixtureError);
}

TEST_CASE("truncated series carry and enforce reliability") {
    PrimeContext p2(2);
    // truncation of 1 + z + z^2 + ... to degree 5, certified to rho <= 3 by
    // the caller; structurally the envelope is carried by index 5 past 0.
    std::vector<Rational> ones(6, Rational(1));
    TruncatedSeries t(ones, 5, Rational(3));
    BoundedPL g = gauss_norm(t, p2);
    REQUIRE(g.certified_to.has_value());
    CHECK(*g.certified_to == Rational(0));
    CHECK(zero_count(t, p2, Rational(-1)) == 0);
    CHECK_THROWS_AS(zero_count(t, p2, Rational(1)), ReliabilityError);
    CHECK_THROWS_AS(zero_count(t, p2, Rational(4)), ReliabilityError);

    // arithmetic propagates the minimum certificate
    TruncatedSeries u(std::vector<Rational>{1, 1}, 8, Rational(1));
    TruncatedSeries prod = t * u;
    CHECK(prod.truncation_degree() == 5);
    CHECK(*prod.reliability_rho() == Rational(1));

    // a bare monomial truncation certifies nothing
    TruncatedSeries bare(std::vector<Rational>{0, 0, 1}, 2, Rational(10));
    CHECK_THROWS_AS(gauss_norm(bare, p2), ReliabilityError);
}
