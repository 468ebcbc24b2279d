#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvasym/parse.hpp"
#include "curves.hpp"
#include "oracle.hpp"

using namespace curvasym;
using oracle::CxSeries;
using oracle::RatSeries;

namespace {
Rational rat(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("series arithmetic cancels and merges terms") {
    RatSeries a{{rat(1), rat(2)}, {rat(-1, 2), rat(1, 3)}};
    RatSeries b{{rat(1), rat(-2)}};
    oracle::add_term(a, rat(1), rat(-2));
    CHECK(a.size() == 1);
    CHECK(a.count(rat(-1, 2)) == 1);

    RatSeries p = oracle::mul(b, b);
    REQUIRE(p.size() == 1);
    CHECK(p[rat(2)] == rat(4));
}

TEST_CASE("substitute is plain evaluation for polynomial series") {
    // f(x,y) = y^2 - x with y = z^3: residual z^6 - z.
    auto f = parse_polynomial(curves::kParabola);
    RatSeries y{{rat(3), rat(1)}};
    RatSeries r = oracle::substitute_exact(f, y, false);
    REQUIRE(r.size() == 2);
    CHECK(r[rat(6)] == rat(1));
    CHECK(r[rat(1)] == rat(-1));
}

TEST_CASE("exact root of the parabola cancels completely") {
    auto f = parse_polynomial(curves::kParabola);
    RatSeries y{{rat(1, 2), rat(1)}};
    CHECK(oracle::substitute_exact(f, y, false).empty());

    // Any coefficient bump must break the cancellation.
    RatSeries bumped = y;
    bumped[rat(1, 2)] += rat(1, 1000);
    CHECK_FALSE(oracle::substitute_exact(f, bumped, false).empty());
}

TEST_CASE("fractional exponents multiply on a fixed leaf") {
    // (z^(1/4))^4 = z exactly in the formal model.
    RatSeries s{{rat(1, 4), rat(1)}};
    RatSeries p = oracle::mul(oracle::mul(s, s), oracle::mul(s, s));
    REQUIRE(p.size() == 1);
    CHECK(p[rat(1)] == rat(1));
}

TEST_CASE("chart-side substitution uses the first variable") {
    // g(y,z) = y^2 - z^3 with y = z^(3/2): zero. With y = z: residual in z^2, z^3.
    Poly2 g;
    g.add_term(2, 0, rat(1));
    g.add_term(0, 3, rat(-1));
    RatSeries phi{{rat(3, 2), rat(1)}};
    CHECK(oracle::substitute_exact(g, phi, true).empty());

    RatSeries lin{{rat(1), rat(1)}};
    RatSeries r = oracle::substitute_exact(g, lin, true);
    CHECK(r.size() == 2);
    CHECK_FALSE(oracle::vanishes_above(r, rat(2)));
}

TEST_CASE("complex series residual measurement") {
    // y^2 + 1 at constant series y = i: cancels to rounding.
    Poly2 f;
    f.add_term(0, 2, rat(1));
    f.add_term(0, 0, rat(1));
    CxSeries y{{rat(0), Complex(0.0, 1.0)}};
    CxSeries r = oracle::substitute(f, y, false);
    CHECK(oracle::max_abs_above(r, rat(-1)) < 1e-15);
}

TEST_CASE("max_exponent and cutoff helpers") {
    RatSeries s{{rat(-2), rat(1)}, {rat(5, 3), rat(7)}};
    REQUIRE(oracle::max_exponent(s).has_value());
    CHECK(*oracle::max_exponent(s) == rat(5, 3));
    CHECK(oracle::vanishes_above(s, rat(5, 3)));
    CHECK_FALSE(oracle::vanishes_above(s, rat(1)));
    CHECK_FALSE(oracle::max_exponent(RatSeries{}).has_value());
}
