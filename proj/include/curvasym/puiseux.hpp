#pragma once

#include <map>
#include <string>
#include <vector>

#include "curvasym/bivariate.hpp"
#include "curvasym/numeric.hpp"
#include "curvasym/roots.hpp"

namespace curvasym {

struct PuiseuxTerm {
    Rational exponent;
    Complex coeff;
};

// One conjugacy-class representative of a fractional power series solution y(z),
// ord(y) > 0, exponents ascending. All terms with exponent <= watermark are present
// and correct; every exponent has denominator dividing the ramification index.
struct PuiseuxSeries {
    std::vector<PuiseuxTerm> terms;
    long ramification = 1;
    Rational watermark;
};

// Working polynomial of the expansion: integer y-degree, rational z-exponent.
struct FracKeyLess {
    bool operator()(const std::pair<long, Rational>& a,
                    const std::pair<long, Rational>& b) const {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    }
};
using FracPoly = std::map<std::pair<long, Rational>, Complex, FracKeyLess>;

struct PolygonEdge {
    Rational slope;  // negative slopes drive the expansion (leading exponent = -slope)
    std::pair<long, Rational> from;  // hull vertex (i, j), ascending i
    std::pair<long, Rational> to;
    CxPoly char_poly;  // sum over edge points of c_(i,j) T^(i - i_from)
};

struct NewtonPolygon {
    std::vector<std::pair<long, Rational>> support;  // all (i, j) with nonzero coeff
    std::vector<PolygonEdge> edges;                  // lower hull, increasing slope
};

NewtonPolygon build_newton_polygon(const FracPoly& h);

FracPoly to_frac_poly(const CPoly2& g, double zero_tol);

struct ExpandOptions {
    Rational min_exponent = Rational(-2);  // branch-space target; series are complete
                                           // through exponent 1 - min_exponent
    double tol = 1e-10;
    bool polygon_only = false;  // test hook: pure polygon steps, no Newton lifting
    int singular_cap = 64;
};

struct ExpansionResult {
    std::vector<PuiseuxSeries> classes;  // canonical representatives, deterministic order
    std::vector<std::string> diagnostics;
};

// Newton-Puiseux expansion of g(y,z)=0 at the origin: all solutions with ord(y) > 0,
// grouped into conjugacy classes. Requires g(0,0) = 0 within tol of the largest
// coefficient. Throws ExpansionError on recursion-cap or root-finder failure.
ExpansionResult expand_at_origin(const CPoly2& g, const ExpandOptions& opts);

// Convenience overload matching the operation contract.
std::vector<PuiseuxSeries> expand_at_origin(const CPoly2& g, const Rational& min_exponent,
                                            double tol);

// Term sequence under sigma_epsilon with epsilon = exp(2*pi*i*l/N): coefficient of
// z^(i/N) picks up epsilon^i. Works for negative exponents too (branch series).
std::vector<PuiseuxTerm> conjugate_terms(const std::vector<PuiseuxTerm>& terms, long N,
                                         long l);

// All N conjugates of s, leaf order l = 0..N-1; the input is element 0.
std::vector<PuiseuxSeries> conjugates(const PuiseuxSeries& s);

// Three-way coefficient-sequence comparison used for canonical ordering: walks terms
// in storage order, compares re then im with a tolerance band for ties; 1 means a
// ranks before b. Exponent sequences must match.
int compare_coeff_sequences(const std::vector<PuiseuxTerm>& a,
                            const std::vector<PuiseuxTerm>& b, double tie_tol);

// Index l in [0,N) whose conjugate ranks first under compare_coeff_sequences.
long canonical_conjugation_index(const std::vector<PuiseuxTerm>& terms, long N);

// Deterministic class representative: first nonzero coefficient of maximal real part,
// ties by imaginary part, then by later terms.
PuiseuxSeries canonical_representative(const PuiseuxSeries& s);

// Sum of a_i * (z0^(1/N) * exp(2*pi*i*leaf/N))^(N*e_i), principal root branch.
Complex evaluate_terms(const std::vector<PuiseuxTerm>& terms, long N, Complex z0,
                       long leaf);
Complex evaluate_series(const PuiseuxSeries& s, Complex z0, long leaf);

}  // namespace curvasym
