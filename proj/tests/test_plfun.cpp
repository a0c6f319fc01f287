#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pnev/plfun.hpp"
#include "support.hpp"

using namespace pnev;

namespace {

PLFunction ramp() { // max(0, rho)
    return pl_max({PLFunction::constant(0), PLFunction::affine(1, 0)});
}

} // namespace

TEST_CASE("eval of simple maxima") {
    PLFunction m = ramp();
    CHECK(m.eval(5) == Rational(5));
    CHECK(m.eval(-3) == Rational(0));
    CHECK(m.breakpoints() == std::vector<Rational>{0});

    // max(-1, rho, 2rho-2): expected by evaluating the three affine forms
    PLFunction e = pl_max({PLFunction::constant(-1), PLFunction::affine(1, 0),
                           PLFunction::affine(2, -2)});
    CHECK(e.eval(2) == Rational(2));
    CHECK(e.breakpoints() == std::vector<Rational>{-1, 2});
    CHECK(e.slopes() == std::vector<Rational>{0, 1, 2});
    CHECK(e.is_convex());
}

TEST_CASE("pl_max identity and degenerate input") {
    PLFunction f = pl_max({PLFunction::affine(1, 0), PLFunction::constant(0)});
    CHECK(pl_max({f}) == f);
    CHECK_THROWS_AS(pl_max(std::span<const PLFunction>{}), Error);
}

TEST_CASE("pl_combine basics") {
    PLFunction rho = PLFunction::affine(1, 0);
    CHECK(pl_combine(rho, rho, 1, -1) == PLFunction::constant(0));

    PLFunction m = ramp();
    PLFunction refl = pl_combine(m, rho, 1, -1); // max(-rho, 0)
    CHECK(refl.eval(-4) == Rational(4));
    CHECK(refl.eval(3) == Rational(0));
    CHECK(refl.final_slope() == Rational(0));

    // max(0,6rho) - max(2rho,3rho) = -2rho for rho<=0, 3rho for rho>=0
    PLFunction a = pl_max({PLFunction::constant(0), PLFunction::affine(6, 0)});
    PLFunction b = pl_max({PLFunction::affine(2, 0), PLFunction::affine(3, 0)});
    PLFunction d = pl_combine(a, b, 1, -1);
    CHECK(d.slopes() == std::vector<Rational>{-2, 3});
    CHECK(d.breakpoints() == std::vector<Rational>{0});

    // a difference of convex functions need not be convex: min(rho, 0)
    PLFunction nc = pl_combine(rho, m, 1, -1);
    CHECK(nc.slopes() == std::vector<Rational>{1, 0});
    CHECK(!nc.is_convex());
}

TEST_CASE("final slope") {
    CHECK(ramp().final_slope() == Rational(1));
    CHECK(PLFunction::constant(7).final_slope() == Rational(0));
    PLFunction refl = pl_combine(ramp(), PLFunction::affine(1, 0), 1, -1);
    CHECK(refl.final_slope() == Rational(0));
}

TEST_CASE("sup_gap") {
    PLFunction zero = PLFunction::constant(0);
    CHECK(sup_gap(zero, zero, -5, 5) == Rational(0));
    CHECK(sup_gap(ramp(), PLFunction::affine(1, 0), -5, 5) == Rational(5));
    CHECK(sup_gap(PLFunction::affine(1, 0), ramp(), -5, 5) == Rational(0));
    CHECK_THROWS_AS(sup_gap(zero, zero, 5, -5), FixtureError);
}

TEST_CASE("pl_max agrees with brute-force affine max at random points") {
    test::Rng rng(2024);
    std::uniform_int_distribution<int> nlines(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<std::pair<Rational, Rational>> lines;
        std::vector<PLFunction> fs;
        int n = nlines(rng);
        for (int i = 0; i < n; ++i) {
            Rational s = test::random_rational(rng, 8, 3);
            Rational v = test::random_rational(rng, 8, 3);
            lines.emplace_back(s, v);
            fs.push_back(PLFunction::affine(s, v));
        }
        PLFunction m = pl_max(fs);
        Rational rho = test::random_rational(rng, 30, 5);
        CHECK(m.eval(rho) == test::affine_max_at(lines, rho));
        CHECK(m.is_convex());
    }
}

TEST_CASE("pl_max of piecewise inputs agrees pointwise") {
    test::Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        // build non-affine inputs as maxima/differences of random lines
        auto rand_pl = [&] {
            PLFunction a = PLFunction::affine(test::random_rational(rng, 6, 3),
                                              test::random_rational(rng, 6, 3));
            PLFunction b = PLFunction::affine(test::random_rational(rng, 6, 3),
                                              test::random_rational(rng, 6, 3));
            PLFunction c = pl_max({a, b});
            return pl_combine(c, a, 1, -1); // possibly non-convex
        };
        std::vector<PLFunction> fs{rand_pl(), rand_pl(), rand_pl()};
        PLFunction m = pl_max(fs);
        for (int k = 0; k < 5; ++k) {
            Rational rho = test::random_rational(rng, 40, 7);
            Rational expect = fs[0].eval(rho);
            for (const auto& f : fs) expect = std::max(expect, f.eval(rho));
            CHECK(m.eval(rho) == expect);
        }
    }
}

TEST_CASE("pl_combine is associative and commutative up to canonical form") {
    test::Rng rng(5150);
    for (int trial = 0; trial < 300; ++trial) {
        auto rand_pl = [&] {
            return pl_max({PLFunction::affine(test::random_rational(rng, 6, 3),
                                              test::random_rational(rng, 6, 3)),
                           PLFunction::affine(test::random_rational(rng, 6, 3),
                                              test::random_rational(rng, 6, 3))});
        };
        PLFunction f = rand_pl(), g = rand_pl(), h = rand_pl();
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
    }
}

TEST_CASE("canonical form is unique") {
    // same function assembled two different ways
    PLFunction a = PLFunction::from_pieces({0}, {1, 1}, 3); // fake breakpoint
    PLFunction b = PLFunction::affine(1, 3);
    CHECK(a == b);

    PLFunction c = pl_max({PLFunction::constant(0), PLFunction::affine(1, 0),
                           PLFunction::affine(1, -5)});
    CHECK(c == ramp()); // the shifted copy never contributes
}
