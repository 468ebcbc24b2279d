#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "curvasym/numeric.hpp"
#include "curvasym/unipoly.hpp"

namespace curvasym {

// Sparse bivariate polynomial with exact rational coefficients.
// The two variables are positional; the same type serves f(x,y) and charts g(y,z).
// Invariant: no zero coefficients are stored.
class Poly2 {
public:
    using Key = std::pair<int, int>;  // (degree in first var, degree in second var)
    using Terms = std::map<Key, Rational>;

    Poly2() = default;
    explicit Poly2(const Rational& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }

    static Poly2 monomial(int i, int j, const Rational& c) {
        Poly2 p;
        if (c != 0) p.terms_[{i, j}] = c;
        return p;
    }
    static Poly2 var_first() { return monomial(1, 0, Rational(1)); }
    static Poly2 var_second() { return monomial(0, 1, Rational(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // -1 for the zero polynomial.
    int total_degree() const;
    int degree_first() const;
    int degree_second() const;

    Rational coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    void add_term(int i, int j, const Rational& c);

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    Poly2 pow(unsigned e) const;

    bool operator==(const Poly2& o) const { return terms_ == o.terms_; }

    Rational eval(const Rational& a, const Rational& b) const;

    // Coefficients of the second variable after substituting the first: p(x0, t) as a
    // dense complex polynomial in t.
    std::vector<Complex> eval_first(Complex x0) const;

    // Second-variable-major view: result[j] = coefficient of (second var)^j in RatPoly
    // over the first variable. Used by the gcd machinery.
    std::vector<RatPoly> second_major() const;
    static Poly2 from_second_major(const std::vector<RatPoly>& rows);

private:
    Terms terms_;
};

using BivariatePoly = Poly2;  // variables (x, y)
using ChartPoly = Poly2;      // variables (y, z)

// Homogeneous trivariate form, keys (deg x, deg y, deg z), no zero coefficients.
using TriPoly = std::map<std::array<int, 3>, Rational>;

// Complex-coefficient chart polynomial in (y, z); produced by shifting a chart to a
// numeric infinity point. Coefficients below no threshold here; callers clean up.
class CPoly2 {
public:
    using Key = std::pair<int, int>;  // (deg y, deg z)
    using Terms = std::map<Key, Complex>;

    CPoly2() = default;
    explicit CPoly2(const ChartPoly& p);

    const Terms& terms() const { return terms_; }
    Terms& terms() { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Complex eval(Complex y, Complex z) const;

private:
    Terms terms_;
};

// Canonical text form: terms ordered by descending total degree, then descending degree
// in the first variable; exact rational coefficients. parse(print(f)) == f.
std::string to_string(const Poly2& p, const char* first = "x", const char* second = "y");

// f(x,y) of total degree d lifted to F(x,y,z) with every term raised to degree d.
TriPoly homogenize(const BivariatePoly& f);

// Terms of maximal total degree.
BivariatePoly leading_form(const BivariatePoly& f);

// g(y,z) = F(1,y,z).
ChartPoly restrict_chart(const TriPoly& F);

// g(y+m, z) with an exact rational shift.
ChartPoly shift_y(const ChartPoly& g, const Rational& m);

// g(y+m, z) with a numeric shift.
CPoly2 shift_y(const ChartPoly& g, Complex m);

// f(x + lambda*y, y).
BivariatePoly apply_shear(const BivariatePoly& f, long lambda);

// f divided by gcd(f, df/dy), with the pure-x content also reduced to its square-free
// part. Result has the same irreducible factors as f, each exactly once.
BivariatePoly square_free_part(const BivariatePoly& f);

// Leading form as a univariate polynomial in the slope: LF(1, m).
RatPoly leading_form_slope_poly(const BivariatePoly& lf);

// True iff the leading form vanishes at (0,1), i.e. the curve passes through the
// vertical infinity point.
bool vanishes_at_vertical(const BivariatePoly& lf);

}  // namespace curvasym
