#pragma once

#include <vector>

#include "curvasym/bivariate.hpp"
#include "curvasym/numeric.hpp"
#include "curvasym/unipoly.hpp"

namespace curvasym {

// Dense univariate polynomial over Complex, ascending coefficients.
struct CxPoly {
    std::vector<Complex> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Complex eval(Complex z) const;
    CxPoly derivative() const;
    double max_coeff_modulus() const;
};

struct RootCluster {
    Complex value;
    int multiplicity = 1;
    double residual = 0.0;  // |p(value)| relative to the largest coefficient modulus
};

struct RootFindOptions {
    double tol = 1e-10;
    int max_iterations = 200;
};

// All complex roots of p, clustered into multiplicity groups. Roots at zero and leading
// zero coefficients (relative magnitude below tol) are handled before iteration.
// Deterministic: fixed initial guesses, no randomness. Throws ExpansionError when the
// iteration fails to reach the residual target.
std::vector<RootCluster> find_roots(const CxPoly& p, const RootFindOptions& opts = {});

// Exact rational roots of p with multiplicity, removed from p by exact deflation.
// Returns the remaining factor in deflated. Candidates come from numeric root finding
// plus continued-fraction reconstruction; every root returned is verified exactly.
struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots;
    RatPoly deflated;
};
RationalRoots extract_rational_roots(const RatPoly& p, double tol = 1e-10);

// Roots y of f(x0, y) = 0, each repeated according to multiplicity, sorted by
// (re, im). Throws DegenerateCurveError when f(x0, .) degenerates to a constant.
std::vector<Complex> resolve_fiber(const BivariatePoly& f, Complex x0, double tol = 1e-10);

// Nearest rational with denominator <= max_den via continued fractions.
Rational rational_reconstruct(double x, long max_den);

}  // namespace curvasym
