#include "curvasym/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "curvasym/errors.hpp"

namespace curvasym {

Complex CxPoly::eval(Complex z) const {
    Complex acc(0.0, 0.0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

CxPoly CxPoly::derivative() const {
    CxPoly d;
    for (std::size_t i = 1; i < coeffs.size(); ++i) {
        d.coeffs.push_back(coeffs[i] * static_cast<double>(i));
    }
    return d;
}

double CxPoly::max_coeff_modulus() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

namespace {

// Core Aberth-Ehrlich simultaneous iteration on a polynomial with nonzero constant
// term and exact degree (leading coefficient significant). Returns approximations and
// the moduli of the final corrections, which bound the root error well in practice.
struct AberthResult {
    std::vector<Complex> roots;
    std::vector<double> last_step;
    // Undamped |p/p'| at the final iterate. Near an m-fold root at distance d
    // this is ~ d/m, which survives the evaluation-noise stagnation that makes
    // the per-iteration corrections unreliable as a cluster scale.
    std::vector<double> newton_mag;
};

// Running magnitude bound for Horner evaluation noise at z.
double eval_noise(const CxPoly& p, Complex z) {
    double s = 0.0, zm = 1.0, az = std::abs(z);
    for (const auto& c : p.coeffs) {
        s += std::abs(c) * zm;
        zm *= az;
    }
    return 4.0 * 2.220446049250313e-16 * s;
}

AberthResult aberth(const std::vector<Complex>& coeffs, double tol, int max_iterations) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    CxPoly p{coeffs};
    CxPoly dp = p.derivative();

    // Deterministic start: points on a circle of radius 1 + max |c_i / c_n| with a
    // fixed irrational angle offset so no initial guess is a symmetry fixed point.
    double radius = 0.0;
    for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(coeffs[i] / coeffs[n]));
    radius = 1.0 + radius;
    std::vector<Complex> z(n);
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (int k = 0; k < n; ++k) {
        double angle = two_pi * (static_cast<double>(k) / n) + 0.4;
        z[k] = std::polar(radius, angle);
    }

    std::vector<double> step(n, 0.0);
    for (int iter = 0; iter < max_iterations; ++iter) {
        double worst = 0.0;
        for (int k = 0; k < n; ++k) {
            Complex pk = p.eval(z[k]);
            Complex dk = dp.eval(z[k]);
            Complex newton = (dk == Complex(0.0, 0.0)) ? Complex(0.0, 0.0) : pk / dk;
            Complex repel(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                if (j != k) repel += 1.0 / (z[k] - z[j]);
            }
            Complex denom = 1.0 - newton * repel;
            Complex w = (denom == Complex(0.0, 0.0)) ? newton : newton / denom;
            z[k] -= w;
            step[k] = std::abs(w);
            worst = std::max(worst, step[k] / (1.0 + std::abs(z[k])));
        }
        if (worst <= tol) break;
    }
    std::vector<double> newton_mag(n, 0.0);
    for (int k = 0; k < n; ++k) {
        // The true residual is only known up to the evaluation noise, so the
        // distance estimate must not collapse when the computed value rounds
        // to zero right next to a multiple root.
        double pk = std::max(std::abs(p.eval(z[k])), eval_noise(p, z[k]));
        double dk = std::abs(dp.eval(z[k]));
        if (dk > 8.0 * eval_noise(dp, z[k])) newton_mag[k] = pk / dk;
    }
    return {std::move(z), std::move(step), std::move(newton_mag)};
}

}  // namespace

std::vector<RootCluster> find_roots(const CxPoly& p, const RootFindOptions& opts) {
    std::vector<Complex> c = p.coeffs;
    double max_mod = 0.0;
    for (const auto& x : c) max_mod = std::max(max_mod, std::abs(x));
    if (max_mod == 0.0) throw ExpansionError("root finding on the zero polynomial");

    // Discard leading coefficients that are pure noise relative to the polynomial.
    while (c.size() > 1 && std::abs(c.back()) <= opts.tol * max_mod) c.pop_back();
    if (c.size() <= 1) return {};

    // Split off roots at the origin exactly.
    int zero_mult = 0;
    while (!c.empty() && std::abs(c.front()) <= opts.tol * max_mod) {
        c.erase(c.begin());
        ++zero_mult;
    }

    std::vector<RootCluster> out;
    if (zero_mult > 0) out.push_back({Complex(0.0, 0.0), zero_mult, 0.0});
    if (c.size() <= 1) return out;

    AberthResult res = aberth(c, opts.tol, opts.max_iterations);

    // Cluster with a radius that accounts for the slow final convergence near a
    // multiple root: the last correction modulus is the right scale there.
    const int n = static_cast<int>(res.roots.size());
    std::vector<int> group(n, -1);
    std::vector<Complex> centers;
    std::vector<int> counts;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        Complex za = res.roots[a], zb = res.roots[b];
        if (za.real() != zb.real()) return za.real() < zb.real();
        return za.imag() < zb.imag();
    });
    for (int idx : order) {
        Complex zi = res.roots[idx];
        double radius = std::max({opts.tol * (1.0 + std::abs(zi)),
                                  8.0 * res.last_step[idx],
                                  8.0 * res.newton_mag[idx]});
        int found = -1;
        for (std::size_t gidx = 0; gidx < centers.size(); ++gidx) {
            if (std::abs(zi - centers[gidx]) <= radius) {
                found = static_cast<int>(gidx);
                break;
            }
        }
        if (found < 0) {
            centers.push_back(zi);
            counts.push_back(1);
            group[idx] = static_cast<int>(centers.size()) - 1;
        } else {
            // Running mean keeps the center stable as members accumulate.
            centers[found] =
                (centers[found] * static_cast<double>(counts[found]) + zi) /
                static_cast<double>(counts[found] + 1);
            counts[found] += 1;
            group[idx] = found;
        }
    }

    // Polish multiple-root centers. The centroid inherits the slow Aberth
    // convergence near an m-fold root, but such a root is a simple zero of the
    // (m-1)-th derivative, where plain Newton restores full precision.
    for (std::size_t gidx = 0; gidx < centers.size(); ++gidx) {
        if (counts[gidx] < 2) continue;
        CxPoly d{c};
        for (int k = 0; k < counts[gidx] - 1; ++k) d = d.derivative();
        CxPoly dd = d.derivative();
        Complex zp = centers[gidx];
        for (int it = 0; it < 30; ++it) {
            Complex dv = dd.eval(zp);
            if (dv == Complex(0.0, 0.0)) break;
            Complex w = d.eval(zp) / dv;
            zp -= w;
            if (std::abs(w) <= 4e-16 * (1.0 + std::abs(zp))) break;
        }
        double spread = 0.0;
        for (int idx = 0; idx < n; ++idx) {
            if (group[idx] == static_cast<int>(gidx))
                spread = std::max(spread, std::abs(res.roots[idx] - centers[gidx]));
        }
        // Keep the polish only when it stayed inside the cluster; otherwise the
        // Newton run was captured by a different zero of the derivative.
        if (std::abs(zp - centers[gidx]) <=
            2.0 * spread + 10.0 * opts.tol * (1.0 + std::abs(centers[gidx]))) {
            centers[gidx] = zp;
        }
    }

    CxPoly reduced{c};
    double reduced_mod = reduced.max_coeff_modulus();
    for (std::size_t gidx = 0; gidx < centers.size(); ++gidx) {
        double residual = std::abs(reduced.eval(centers[gidx])) / reduced_mod;
        out.push_back({centers[gidx], counts[gidx], residual});
    }

    // Residual gate: every cluster center must actually sit on the polynomial.
    for (const auto& r : out) {
        if (!(r.residual <= 10.0 * opts.tol)) {
            std::ostringstream os;
            os << "root finding did not converge: residual " << r.residual << " at ("
               << r.value.real() << ", " << r.value.imag() << ")";
            throw ExpansionError(os.str());
        }
    }
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

Rational rational_reconstruct(double x, long max_den) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("rational reconstruction of a non-finite value");
    }
    if (std::abs(x) > 9e17) {
        Rational exact(x);  // exact binary value; denominator cap will reject it later
        return exact;
    }
    // Continued-fraction convergents of x until the denominator cap.
    long p0 = 1, q0 = 0;  // p/q of previous convergent
    long p1 = static_cast<long>(std::floor(x)), q1 = 1;
    double frac = x - std::floor(x);
    for (int it = 0; it < 64 && frac > 1e-15; ++it) {
        double inv = 1.0 / frac;
        double a_f = std::floor(inv);
        if (a_f > 9e17) break;
        long a = static_cast<long>(a_f);
        long p2 = a * p1 + p0;
        long q2 = a * q1 + q0;
        if (q2 > max_den || q2 < 0) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        frac = inv - a_f;
    }
    return make_rational(p1, q1);
}

RationalRoots extract_rational_roots(const RatPoly& p, double tol) {
    RationalRoots out;
    out.deflated = p;
    if (rp_degree(p) < 1) return out;

    CxPoly num;
    for (const auto& coef : p) num.coeffs.push_back(Complex(to_double(coef), 0.0));
    std::vector<RootCluster> clusters;
    try {
        clusters = find_roots(num, {tol, 200});
    } catch (const ExpansionError&) {
        return out;  // numeric failure: no snapping, caller works numerically
    }

    for (const auto& cl : clusters) {
        if (std::abs(cl.value.imag()) > 1e-8 * (1.0 + std::abs(cl.value))) continue;
        Rational cand = rational_reconstruct(cl.value.real(), 1000000L);
        if (std::abs(to_double(cand) - cl.value.real()) >
            1e-6 * (1.0 + std::abs(cl.value.real()))) {
            continue;
        }
        int mult = 0;
        while (rp_degree(out.deflated) >= 1 && rp_eval(out.deflated, cand) == 0) {
            out.deflated = rp_deflate(out.deflated, cand);
            ++mult;
        }
        if (mult > 0) out.roots.push_back({cand, mult});
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

std::vector<Complex> resolve_fiber(const BivariatePoly& f, Complex x0, double tol) {
    std::vector<Complex> coeffs = f.eval_first(x0);
    CxPoly p{std::move(coeffs)};
    double max_mod = p.max_coeff_modulus();
    if (max_mod == 0.0) {
        throw DegenerateCurveError("fiber polynomial vanishes identically");
    }
    while (p.coeffs.size() > 1 && std::abs(p.coeffs.back()) <= tol * max_mod) {
        p.coeffs.pop_back();
    }
    if (p.degree() < 1) {
        throw DegenerateCurveError("fiber polynomial has no y dependence");
    }
    std::vector<RootCluster> clusters = find_roots(p, {tol, 200});
    std::vector<Complex> out;
    for (const auto& cl : clusters) {
        for (int i = 0; i < cl.multiplicity; ++i) out.push_back(cl.value);
    }
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

}  // namespace curvasym
