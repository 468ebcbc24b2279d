#pragma once

#include <utility>
#include <vector>

#include "curvasym/numeric.hpp"

namespace curvasym {

// Dense univariate polynomial over Rational, ascending coefficients, no trailing zeros.
// Used for leading-form root work and as the coefficient ring of the bivariate gcd.
using RatPoly = std::vector<Rational>;

// Drops trailing zero coefficients in place.
void rp_normalize(RatPoly& p);

inline bool rp_is_zero(const RatPoly& p) { return p.empty(); }
inline int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly rp_add(const RatPoly& a, const RatPoly& b);
RatPoly rp_sub(const RatPoly& a, const RatPoly& b);
RatPoly rp_mul(const RatPoly& a, const RatPoly& b);
RatPoly rp_scale(const RatPoly& a, const Rational& c);
RatPoly rp_derivative(const RatPoly& a);

// Quotient and remainder over the field of rationals. Throws on zero divisor.
std::pair<RatPoly, RatPoly> rp_divrem(const RatPoly& a, const RatPoly& b);

// Exact quotient; throws std::logic_error if the remainder is nonzero.
RatPoly rp_div_exact(const RatPoly& a, const RatPoly& b);

// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
RatPoly rp_gcd(RatPoly a, RatPoly b);

// p / gcd(p, p'): same roots, all simple.
RatPoly rp_square_free_part(const RatPoly& p);

Rational rp_eval(const RatPoly& p, const Rational& x);
Complex rp_eval(const RatPoly& p, Complex x);

// Divides by (x - root) exactly. Throws std::logic_error if root is not a root.
RatPoly rp_deflate(const RatPoly& p, const Rational& root);

}  // namespace curvasym
