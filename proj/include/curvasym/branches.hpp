#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvasym/bivariate.hpp"
#include "curvasym/puiseux.hpp"

namespace curvasym {

struct InfinityPoint {
    Complex m;  // the projective point (1 : m : 0)
    int multiplicity = 1;
    std::optional<Rational> m_rational;  // set when the root was identified exactly
};

// One infinity branch: N leaves (z, r_l(z)) obtained by conjugating r_terms.
// r(z) = m*z + a_1*z^(1-N_1/N) + ... ; terms stored by descending exponent, all <= 1.
// Terms with exponent >= watermark are present and correct.
struct InfinityBranch {
    InfinityPoint point;
    long ramification = 1;  // N: number of leaves
    long degree = 1;        // n: reduced denominator of the nonnegative exponents
    std::vector<PuiseuxTerm> r_terms;
    Rational watermark;
};

struct Leaf {
    const InfinityBranch* branch;
    long index;  // in [0, N)
};

struct InfinityPointSet {
    std::vector<InfinityPoint> points;  // sorted by (re, im)
    bool has_vertical_point = false;    // (0:1:0) lies on the projective closure
};

// Roots m of leading_form(f)(1, m) with multiplicities. Exact rational roots are
// recognized and carried exactly; the rest come from the clustered numeric finder.
InfinityPointSet infinity_points(const BivariatePoly& f, double tol);

// Shear x -> x + lambda*y with the smallest nonnegative integer lambda that removes
// (0:1:0) from infinity for both curves (the same lambda applied to both).
struct PreparedCurves {
    BivariatePoly first;
    BivariatePoly second;
    long lambda = 0;
};
PreparedCurves prepare_pair(const BivariatePoly& f, const BivariatePoly& fbar);
std::pair<BivariatePoly, long> prepare_single(const BivariatePoly& f);

// All infinity branches of f: per infinity point, chart restriction, shift to the
// origin, Puiseux expansion, and the transform exponent e -> 1-e plus the m*z term.
// Requires (0:1:0) off the curve (run prepare first). Branches are ordered by point
// (re, im), then by class order at the point. Expansion diagnostics are appended to
// *diagnostics when given.
std::vector<InfinityBranch> infinity_branches(const BivariatePoly& f,
                                              const Rational& min_exponent, double tol,
                                              std::vector<std::string>* diagnostics = nullptr);

// Terms of r with exponent >= 0 (finitely many). Requires watermark <= 0.
std::vector<PuiseuxTerm> nonnegative_part(const InfinityBranch& b);

// Branch degree n: write the nonnegative exponents as 1 - N_l/N and divide N and the
// N_l by their gcd. n = 1 when the nonnegative part is a polynomial in z.
long branch_degree(const InfinityBranch& b);

// r_l: the leaf-l conjugate of r_terms (coefficient of z^e picks up c_l^(N*(1-e))).
std::vector<PuiseuxTerm> leaf_terms(const InfinityBranch& b, long leaf);

// r_l(z) with the principal branch of z^(1/N).
Complex leaf_value(const InfinityBranch& b, long leaf, Complex z);

// Points (z, r_l(z)) at z = radius * exp(i*angle).
std::vector<std::pair<Complex, Complex>> sample_leaf(const Leaf& leaf,
                                                     const std::vector<double>& radii,
                                                     double angle);

// Deterministic conjugation representative (same ordering as the series canonical form).
InfinityBranch canonical_branch(const InfinityBranch& b);

// The branch reconstructed from leaf l alone; equals canonical_branch(b) for every l.
InfinityBranch branch_from_leaf(const InfinityBranch& b, long leaf);

}  // namespace curvasym
