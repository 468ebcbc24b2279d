#include "curvasym/branches.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "curvasym/errors.hpp"
#include "curvasym/roots.hpp"

namespace curvasym {

InfinityPointSet infinity_points(const BivariatePoly& f, double tol) {
    if (f.total_degree() < 1) throw DegenerateCurveError("curve polynomial is constant");
    BivariatePoly lf = leading_form(f);
    InfinityPointSet out;
    out.has_vertical_point = vanishes_at_vertical(lf);

    RatPoly slope = leading_form_slope_poly(lf);
    if (rp_degree(slope) < 1) return out;  // only the vertical point (if any) at infinity

    RationalRoots exact = extract_rational_roots(slope, tol);
    for (const auto& [r, mult] : exact.roots) {
        InfinityPoint p;
        p.m = Complex(to_double(r), 0.0);
        p.multiplicity = mult;
        p.m_rational = r;
        out.points.push_back(p);
    }
    if (rp_degree(exact.deflated) >= 1) {
        CxPoly residue;
        residue.coeffs.reserve(exact.deflated.size());
        for (const auto& c : exact.deflated) residue.coeffs.push_back(Complex(to_double(c), 0.0));
        for (const auto& rc : find_roots(residue, {tol, 200})) {
            InfinityPoint p;
            p.m = rc.value;
            p.multiplicity = rc.multiplicity;
            out.points.push_back(p);
        }
    }
    std::sort(out.points.begin(), out.points.end(), [](const InfinityPoint& a, const InfinityPoint& b) {
        if (a.m.real() != b.m.real()) return a.m.real() < b.m.real();
        return a.m.imag() < b.m.imag();
    });
    return out;
}

namespace {

bool shear_clears_vertical(const BivariatePoly& f, long lambda) {
    // Leading form of f(x + lambda*y, y) at (0,1) equals leading_form(f)(lambda, 1).
    BivariatePoly lf = leading_form(f);
    Rational acc(0);
    for (const auto& [k, c] : lf.terms()) {
        Rational xpow(1);
        for (int t = 0; t < k.first; ++t) xpow *= Rational(lambda);
        acc += c * xpow;
    }
    return acc != 0;
}

}  // namespace

PreparedCurves prepare_pair(const BivariatePoly& f, const BivariatePoly& fbar) {
    if (f.total_degree() < 1 || fbar.total_degree() < 1) {
        throw DegenerateCurveError("curve polynomial is constant");
    }
    for (long lambda = 0;; ++lambda) {
        if (shear_clears_vertical(f, lambda) && shear_clears_vertical(fbar, lambda)) {
            PreparedCurves out;
            out.first = lambda == 0 ? f : apply_shear(f, lambda);
            out.second = lambda == 0 ? fbar : apply_shear(fbar, lambda);
            out.lambda = lambda;
            return out;
        }
    }
}

std::pair<BivariatePoly, long> prepare_single(const BivariatePoly& f) {
    if (f.total_degree() < 1) throw DegenerateCurveError("curve polynomial is constant");
    for (long lambda = 0;; ++lambda) {
        if (shear_clears_vertical(f, lambda)) {
            return {lambda == 0 ? f : apply_shear(f, lambda), lambda};
        }
    }
}

std::vector<InfinityBranch> infinity_branches(const BivariatePoly& f,
                                              const Rational& min_exponent, double tol,
                                              std::vector<std::string>* diagnostics) {
    InfinityPointSet pts = infinity_points(f, tol);
    if (pts.has_vertical_point) {
        throw DegenerateCurveError("curve passes through (0:1:0); shear the input first");
    }

    ChartPoly g = restrict_chart(homogenize(f));
    std::vector<InfinityBranch> out;
    for (const auto& pt : pts.points) {
        CPoly2 shifted = pt.m_rational ? CPoly2(shift_y(g, *pt.m_rational))
                                       : shift_y(g, pt.m);
        ExpandOptions opts;
        opts.min_exponent = min_exponent;
        opts.tol = tol;
        ExpansionResult expansion = expand_at_origin(shifted, opts);
        if (diagnostics) {
            for (auto& d : expansion.diagnostics) diagnostics->push_back(std::move(d));
        }
        for (const auto& cls : expansion.classes) {
            InfinityBranch b;
            b.point = pt;
            b.ramification = cls.ramification;
            b.watermark = min_exponent;
            if (std::abs(pt.m) > tol) b.r_terms.push_back({Rational(1), pt.m});
            // Class terms come exponent-ascending in phi; e -> 1-e flips that to
            // the descending r(z) order, with the degree-1 point term leading.
            for (const auto& t : cls.terms) {
                b.r_terms.push_back({Rational(1) - t.exponent, t.coeff});
            }
            b.degree = min_exponent <= 0 ? branch_degree(b) : 1;
            out.push_back(std::move(b));
        }
    }
    return out;
}

std::vector<PuiseuxTerm> nonnegative_part(const InfinityBranch& b) {
    if (b.watermark > 0) {
        throw ExpansionError("branch truncated above exponent 0; lower min_exponent");
    }
    std::vector<PuiseuxTerm> out;
    for (const auto& t : b.r_terms) {
        if (t.exponent >= 0) out.push_back(t);
    }
    return out;
}

long branch_degree(const InfinityBranch& b) {
    long g = b.ramification;
    for (const auto& t : nonnegative_part(b)) {
        Rational scaled = (Rational(1) - t.exponent) * Rational(b.ramification);
        if (denominator_long(scaled) != 1) {
            throw ExpansionError("branch exponent outside the 1/N lattice");
        }
        g = std::gcd(g, numerator_long(scaled));
    }
    return b.ramification / g;
}

std::vector<PuiseuxTerm> leaf_terms(const InfinityBranch& b, long leaf) {
    const long N = b.ramification;
    std::vector<PuiseuxTerm> out;
    out.reserve(b.r_terms.size());
    for (const auto& t : b.r_terms) {
        Rational scaled = (Rational(1) - t.exponent) * Rational(N);
        if (denominator_long(scaled) != 1) {
            throw ExpansionError("branch exponent outside the 1/N lattice");
        }
        long nl = numerator_long(scaled) % N;
        out.push_back({t.exponent, t.coeff * root_of_unity(leaf * nl, N)});
    }
    return out;
}

Complex leaf_value(const InfinityBranch& b, long leaf, Complex z) {
    return evaluate_terms(leaf_terms(b, leaf), b.ramification, z, 0);
}

std::vector<std::pair<Complex, Complex>> sample_leaf(const Leaf& leaf,
                                                     const std::vector<double>& radii,
                                                     double angle) {
    std::vector<std::pair<Complex, Complex>> out;
    out.reserve(radii.size());
    for (double rho : radii) {
        if (!(rho > 0.0)) throw std::invalid_argument("sampling radius must be positive");
        Complex z = rho * Complex(std::cos(angle), std::sin(angle));
        out.emplace_back(z, leaf_value(*leaf.branch, leaf.index, z));
    }
    return out;
}

InfinityBranch canonical_branch(const InfinityBranch& b) {
    long best = 0;
    std::vector<PuiseuxTerm> best_terms = b.r_terms;
    for (long l = 1; l < b.ramification; ++l) {
        std::vector<PuiseuxTerm> cand = leaf_terms(b, l);
        if (compare_coeff_sequences(cand, best_terms, 1e-9) > 0) {
            best = l;
            best_terms = std::move(cand);
        }
    }
    if (best == 0) return b;
    InfinityBranch out = b;
    out.r_terms = std::move(best_terms);
    return out;
}

InfinityBranch branch_from_leaf(const InfinityBranch& b, long leaf) {
    InfinityBranch seed = b;
    seed.r_terms = leaf_terms(b, leaf);
    return canonical_branch(seed);
}

}  // namespace curvasym
