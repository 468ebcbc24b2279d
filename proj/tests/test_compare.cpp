#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "curvasym/compare.hpp"
#include "curvasym/errors.hpp"
#include "curvasym/parse.hpp"
#include "curves.hpp"

using namespace curvasym;

namespace {
Rational rat(long n, long d = 1) { return make_rational(n, d); }

const InfinityBranch& branch_at(const std::vector<InfinityBranch>& bs, Complex m, long N) {
    auto it = std::find_if(bs.begin(), bs.end(), [&](const InfinityBranch& b) {
        return std::abs(b.point.m - m) < 1e-6 && b.ramification == N;
    });
    REQUIRE(it != bs.end());
    return *it;
}

std::set<std::pair<Rational, long>> exponent_shape(const std::vector<PuiseuxTerm>& terms) {
    std::set<std::pair<Rational, long>> s;
    for (const auto& t : terms) s.insert({t.exponent, std::lround(std::abs(t.coeff) * 1e6)});
    return s;
}
}  // namespace

TEST_CASE("branch convergence with a shared cusp") {
    auto ba = infinity_branches(parse_polynomial(curves::kTwinA), rat(-2), 1e-10);
    auto bp = infinity_branches(parse_polynomial(curves::kTwinPoints), rat(-2), 1e-10);
    const auto& ca = branch_at(ba, {0, 0}, 3);
    const auto& cp = branch_at(bp, {0, 0}, 3);

    auto w = branches_convergent(ca, cp, 1e-6);
    REQUIRE(w.has_value());
    CHECK(w->max_coefficient_deviation <= 1e-6);
    REQUIRE(w->matched_exponents.size() == 2);
    CHECK(w->matched_exponents[0] == rat(2, 3));
    CHECK(w->matched_exponents[1] == rat(0));

    // Shared non-negative parts: coefficient 1 at 2/3 and -1/3 at 0.
    for (const auto* b : {&ca, &cp}) {
        auto nn = nonnegative_part(*b);
        REQUIRE(nn.size() == 2);
        CHECK(nn[0].exponent == rat(2, 3));
        CHECK(std::abs(nn[0].coeff - Complex(1, 0)) < 1e-6);
        CHECK(nn[1].exponent == rat(0));
        CHECK(std::abs(nn[1].coeff - Complex(-1.0 / 3.0, 0.0)) < 1e-6);
    }

    // Witness order does not matter.
    auto back = branches_convergent(cp, ca, 1e-6);
    REQUIRE(back.has_value());
    CHECK(back->max_coefficient_deviation <= 1e-6);
}

TEST_CASE("degree-two branches of different ramification still converge") {
    auto qa = infinity_branches(parse_polynomial(curves::kQuartic), rat(-2), 1e-10);
    auto pa = infinity_branches(parse_polynomial(curves::kParabola), rat(-2), 1e-10);
    REQUIRE(qa.size() == 1);
    REQUIRE(pa.size() == 1);
    CHECK(branch_degree(qa[0]) == 2);
    CHECK(branch_degree(pa[0]) == 2);

    auto w = branches_convergent(qa[0], pa[0], 1e-6);
    REQUIRE(w.has_value());
    CHECK(w->max_coefficient_deviation <= 1e-6);

    // Every leaf on each side converges with some leaf on the other.
    for (long la = 0; la < qa[0].ramification; ++la) {
        bool hit = false;
        for (long lb = 0; lb < pa[0].ramification && !hit; ++lb) {
            hit = leaves_convergent(qa[0], la, pa[0], lb, 1e-6);
        }
        CHECK(hit);
    }
    for (long lb = 0; lb < pa[0].ramification; ++lb) {
        bool hit = false;
        for (long la = 0; la < qa[0].ramification && !hit; ++la) {
            hit = leaves_convergent(qa[0], la, pa[0], lb, 1e-6);
        }
        CHECK(hit);
    }

    // A scaled parabola shares the exponent but not the coefficient.
    auto sc = infinity_branches(parse_polynomial("y^2 - 2*x"), rat(-2), 1e-10);
    REQUIRE(sc.size() == 1);
    CHECK_FALSE(branches_convergent(pa[0], sc[0], 1e-6).has_value());
}

TEST_CASE("full comparison verdict same with exact pairing") {
    auto report = same_asymptotic_behavior(parse_polynomial(curves::kTwinA),
                                           parse_polynomial(curves::kTwinB));
    CHECK(report.same);
    CHECK(report.failure_stage.empty());
    CHECK(report.lambda == 0);
    REQUIRE(report.points.size() == 2);
    CHECK(report.unmatched_a.empty());
    CHECK(report.unmatched_b.empty());
    REQUIRE(report.pairing.size() == 2);

    for (const auto& pe : report.pairing) {
        CHECK(pe.witness.max_coefficient_deviation <= 1e-6);
        const auto& a = report.branches_a[pe.branch_a];
        const auto& b = report.branches_b[pe.branch_b];
        CHECK(std::abs(a.point.m - b.point.m) < 1e-8);
        CHECK(branch_degree(a) == branch_degree(b));
        CHECK(exponent_shape(nonnegative_part(a)) == exponent_shape(nonnegative_part(b)));
    }

    // The cusp pairs at m=0 and the line pairs at m=2.
    std::set<long> matched_points;
    for (const auto& pe : report.pairing) {
        matched_points.insert(std::lround(report.points[pe.point_index].m.real()));
    }
    CHECK(matched_points == std::set<long>{0, 2});
}

TEST_CASE("point-set mismatch fails early without branch work") {
    auto report = same_asymptotic_behavior(parse_polynomial(curves::kTwinA),
                                           parse_polynomial(curves::kTwinPoints));
    CHECK_FALSE(report.same);
    CHECK(report.failure_stage == "points");
    CHECK(report.branches_a.empty());
    CHECK(report.branches_b.empty());
    CHECK(report.pairing.empty());
    REQUIRE(report.diagnostics.size() >= 2);

    bool first_noted = false, second_noted = false;
    for (const auto& d : report.diagnostics) {
        if (d.find("first curve") != std::string::npos) first_noted = true;
        if (d.find("second curve") != std::string::npos) second_noted = true;
    }
    CHECK(first_noted);
    CHECK(second_noted);
}

TEST_CASE("same points but different branches fails at matching") {
    auto report = same_asymptotic_behavior(parse_polynomial(curves::kTwinA),
                                           parse_polynomial(curves::kQuintic));
    CHECK_FALSE(report.same);
    CHECK(report.failure_stage.substr(0, 6) == "branch");
    CHECK(report.unmatched_a.size() + report.unmatched_b.size() > 0);
}

TEST_CASE("verdict is symmetric") {
    auto fwd = same_asymptotic_behavior(parse_polynomial(curves::kTwinA),
                                        parse_polynomial(curves::kTwinB));
    auto rev = same_asymptotic_behavior(parse_polynomial(curves::kTwinB),
                                        parse_polynomial(curves::kTwinA));
    CHECK(fwd.same == rev.same);
    CHECK(fwd.pairing.size() == rev.pairing.size());

    auto fwd2 = same_asymptotic_behavior(parse_polynomial(curves::kTwinA),
                                         parse_polynomial(curves::kQuintic));
    auto rev2 = same_asymptotic_behavior(parse_polynomial(curves::kQuintic),
                                         parse_polynomial(curves::kTwinA));
    CHECK(fwd2.same == rev2.same);
}

TEST_CASE("scalar multiples and a same-same-same chain") {
    Poly2 f = parse_polynomial(curves::kTwinA);
    Poly2 g = parse_polynomial(curves::kTwinB);
    Poly2 g2 = Poly2(rat(2)) * g;

    CHECK(same_asymptotic_behavior(f, Poly2(rat(3)) * f).same);
    CHECK(same_asymptotic_behavior(f, g).same);
    CHECK(same_asymptotic_behavior(g, g2).same);
    CHECK(same_asymptotic_behavior(f, g2).same);  // behavior chains across the pair
}

TEST_CASE("verdict survives a shared shear") {
    Poly2 fa = parse_polynomial(curves::kTwinA);
    Poly2 fb = parse_polynomial(curves::kTwinB);
    Poly2 pa = parse_polynomial(curves::kParabola);
    Poly2 pb = parse_polynomial("y^2 - 2*x");
    for (long lambda : {1L, 2L}) {
        CHECK(same_asymptotic_behavior(apply_shear(fa, lambda), apply_shear(fb, lambda)).same);
        CHECK_FALSE(
            same_asymptotic_behavior(apply_shear(pa, lambda), apply_shear(pb, lambda)).same);
    }
}

TEST_CASE("repeated factors are reduced with a diagnostic") {
    Poly2 f = parse_polynomial(curves::kParabola);
    Poly2 ff = f * f;
    auto report = same_asymptotic_behavior(ff, f);
    CHECK(report.same);
    bool noted = false;
    for (const auto& d : report.diagnostics) {
        if (d.find("square-free") != std::string::npos) noted = true;
    }
    CHECK(noted);
}

TEST_CASE("nearby infinity points make matching ambiguous") {
    Poly2 f = parse_polynomial(curves::kParabola);
    Poly2 split = parse_polynomial("y^2 - 1/1000000000*x*y - 1");
    CHECK_THROWS_AS(same_asymptotic_behavior(f, split), ExpansionError);
}

TEST_CASE("approach profile separates approaching from diverging pairs") {
    auto ba = infinity_branches(parse_polynomial(curves::kTwinA), rat(-2), 1e-10);
    const auto& cusp = branch_at(ba, {0, 0}, 3);
    auto prof = approach_profile(cusp, parse_polynomial(curves::kTwinPoints),
                                 {10.0, 100.0, 1000.0});
    REQUIRE(prof.size() == 3);
    CHECK(prof[0].second > prof[1].second);
    CHECK(prof[1].second > prof[2].second);
    CHECK(prof[2].second < 1e-1);

    auto pa = infinity_branches(parse_polynomial(curves::kParabola), rat(-2), 1e-10);
    auto div = approach_profile(pa[0], parse_polynomial("y^2 - 2*x"), {10.0, 100.0, 1000.0});
    CHECK(div[0].second < div[1].second);
    CHECK(div[1].second < div[2].second);
}

TEST_CASE("hausdorff estimate is symmetric and window-stable for same behavior") {
    Poly2 fa = parse_polynomial(curves::kTwinA);
    Poly2 fb = parse_polynomial(curves::kTwinB);
    double h1 = hausdorff_estimate(fa, fb, 10.0, 64);
    double h2 = hausdorff_estimate(fb, fa, 10.0, 64);
    CHECK(h1 == h2);

    double h20 = hausdorff_estimate(fa, fb, 20.0, 64);
    double h40 = hausdorff_estimate(fa, fb, 40.0, 64);
    CHECK(std::max({h1, h20, h40}) <= 2.0 * h1);

    Poly2 pa = parse_polynomial(curves::kParabola);
    Poly2 pb = parse_polynomial("y^2 - 2*x");
    double g10 = hausdorff_estimate(pa, pb, 10.0, 64);
    double g40 = hausdorff_estimate(pa, pb, 40.0, 64);
    CHECK(g40 >= 1.5 * g10);
}

TEST_CASE("empty sampling windows are reported") {
    CHECK_THROWS_AS(hausdorff_estimate(parse_polynomial("x*y - 10000"),
                                       parse_polynomial("y - x"), 1.0, 16),
                    EmptySampleError);
}
