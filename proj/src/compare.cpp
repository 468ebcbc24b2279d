#include "curvasym/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "curvasym/errors.hpp"
#include "curvasym/roots.hpp"

namespace curvasym {

namespace {

constexpr double kPointTolBase = 1e-8;

bool same_infinity_point(Complex a, Complex b) {
    return std::abs(a - b) <= kPointTolBase * (1.0 + std::abs(a));
}

std::vector<PuiseuxTerm> nonnegative_terms(const std::vector<PuiseuxTerm>& terms) {
    std::vector<PuiseuxTerm> out;
    for (const auto& t : terms) {
        if (t.exponent >= 0) out.push_back(t);
    }
    return out;
}

double coeff_deviation(Complex a, Complex b) {
    return std::abs(b - a) / (1.0 + std::min(std::abs(a), std::abs(b)));
}

}  // namespace

bool leaves_convergent(const InfinityBranch& a, long leaf_a, const InfinityBranch& b,
                       long leaf_b, double tol) {
    if (a.watermark > 0 || b.watermark > 0) {
        throw ExpansionError("branch truncated above exponent 0; lower min_exponent");
    }
    std::vector<PuiseuxTerm> ra = nonnegative_terms(leaf_terms(a, leaf_a));
    std::vector<PuiseuxTerm> rb = nonnegative_terms(leaf_terms(b, leaf_b));
    if (ra.size() != rb.size()) return false;
    for (std::size_t l = 0; l < ra.size(); ++l) {
        if (ra[l].exponent != rb[l].exponent) return false;
        if (coeff_deviation(ra[l].coeff, rb[l].coeff) > tol) return false;
    }
    return true;
}

std::optional<ConvergenceWitness> branches_convergent(const InfinityBranch& a,
                                                      const InfinityBranch& b,
                                                      double tol) {
    if (a.watermark > 0 || b.watermark > 0) {
        throw ExpansionError("branch truncated above exponent 0; lower min_exponent");
    }
    if (!same_infinity_point(a.point.m, b.point.m)) return std::nullopt;
    long n = branch_degree(a);
    if (n != branch_degree(b)) return std::nullopt;

    std::vector<PuiseuxTerm> pa = nonnegative_part(a);
    std::vector<PuiseuxTerm> pb = nonnegative_part(b);
    if (pa.size() != pb.size()) return std::nullopt;
    std::vector<long> nl(pa.size());
    for (std::size_t l = 0; l < pa.size(); ++l) {
        if (pa[l].exponent != pb[l].exponent) return std::nullopt;
        Rational scaled = (Rational(1) - pa[l].exponent) * Rational(n);
        if (denominator_long(scaled) != 1) {
            throw ExpansionError("nonnegative exponent outside the degree lattice");
        }
        nl[l] = numerator_long(scaled) % n;
    }

    long best_k = -1;
    double best_dev = std::numeric_limits<double>::infinity();
    for (long k = 0; k < n; ++k) {
        double dev = 0.0;
        for (std::size_t l = 0; l < pa.size(); ++l) {
            Complex aligned = pa[l].coeff * root_of_unity(k * nl[l], n);
            dev = std::max(dev, coeff_deviation(aligned, pb[l].coeff));
        }
        if (dev <= tol && dev < best_dev) {
            best_dev = dev;
            best_k = k;
        }
    }
    if (best_k < 0) return std::nullopt;

    ConvergenceWitness w;
    w.conjugation_root = root_of_unity(best_k, n);
    for (const auto& t : pa) w.matched_exponents.push_back(t.exponent);
    w.max_coefficient_deviation = best_dev;
    return w;
}

BehaviorReport same_asymptotic_behavior(const BivariatePoly& f, const BivariatePoly& fbar,
                                        const CompareConfig& config) {
    BehaviorReport report;

    PreparedCurves prep = prepare_pair(f, fbar);
    report.lambda = prep.lambda;

    BivariatePoly fa = square_free_part(prep.first);
    if (fa.total_degree() != prep.first.total_degree()) {
        report.diagnostics.push_back("first curve had repeated factors; square-free part used");
    }
    BivariatePoly fb = square_free_part(prep.second);
    if (fb.total_degree() != prep.second.total_degree()) {
        report.diagnostics.push_back("second curve had repeated factors; square-free part used");
    }

    InfinityPointSet pa = infinity_points(fa, config.tol);
    InfinityPointSet pb = infinity_points(fb, config.tol);

    // Location-only matching of the two point sets.
    std::vector<long> match_ab(pa.points.size(), -1);
    std::vector<long> match_ba(pb.points.size(), -1);
    for (std::size_t i = 0; i < pa.points.size(); ++i) {
        for (std::size_t j = 0; j < pb.points.size(); ++j) {
            if (!same_infinity_point(pa.points[i].m, pb.points[j].m)) continue;
            if (match_ab[i] >= 0 || match_ba[j] >= 0) {
                throw ExpansionError("infinity point matching is ambiguous: "
                                     "two points within matching tolerance");
            }
            match_ab[i] = static_cast<long>(j);
            match_ba[j] = static_cast<long>(i);
        }
    }
    bool points_ok = std::all_of(match_ab.begin(), match_ab.end(), [](long v) { return v >= 0; }) &&
                     std::all_of(match_ba.begin(), match_ba.end(), [](long v) { return v >= 0; });
    report.points = pa.points;
    if (!points_ok) {
        report.same = false;
        report.failure_stage = "points";
        for (std::size_t i = 0; i < match_ab.size(); ++i) {
            if (match_ab[i] < 0) {
                std::ostringstream os;
                os << "infinity point (1 : " << pa.points[i].m.real();
                if (pa.points[i].m.imag() != 0.0) os << (pa.points[i].m.imag() < 0 ? " - " : " + ")
                                                     << std::abs(pa.points[i].m.imag()) << "i";
                os << " : 0) of the first curve has no counterpart";
                report.diagnostics.push_back(os.str());
            }
        }
        for (std::size_t j = 0; j < match_ba.size(); ++j) {
            if (match_ba[j] < 0) {
                std::ostringstream os;
                os << "infinity point (1 : " << pb.points[j].m.real();
                if (pb.points[j].m.imag() != 0.0) os << (pb.points[j].m.imag() < 0 ? " - " : " + ")
                                                     << std::abs(pb.points[j].m.imag()) << "i";
                os << " : 0) of the second curve has no counterpart";
                report.diagnostics.push_back(os.str());
            }
        }
        return report;
    }

    report.branches_a = infinity_branches(fa, config.min_exponent, config.tol,
                                          &report.diagnostics);
    report.branches_b = infinity_branches(fb, config.min_exponent, config.tol,
                                          &report.diagnostics);

    auto point_index_of = [&](Complex m) {
        for (std::size_t i = 0; i < report.points.size(); ++i) {
            if (same_infinity_point(report.points[i].m, m)) return i;
        }
        throw ExpansionError("branch refers to an unlisted infinity point");
    };
    std::vector<std::size_t> pt_a(report.branches_a.size());
    std::vector<std::size_t> pt_b(report.branches_b.size());
    for (std::size_t i = 0; i < report.branches_a.size(); ++i) {
        pt_a[i] = point_index_of(report.branches_a[i].point.m);
    }
    for (std::size_t j = 0; j < report.branches_b.size(); ++j) {
        pt_b[j] = point_index_of(report.branches_b[j].point.m);
    }

    // Bidirectional matching at each shared point.
    std::vector<std::vector<std::optional<ConvergenceWitness>>> witness(
        report.branches_a.size(),
        std::vector<std::optional<ConvergenceWitness>>(report.branches_b.size()));
    for (std::size_t i = 0; i < report.branches_a.size(); ++i) {
        for (std::size_t j = 0; j < report.branches_b.size(); ++j) {
            if (pt_a[i] != pt_b[j]) continue;
            witness[i][j] = branches_convergent(report.branches_a[i], report.branches_b[j],
                                                config.compare_tol);
        }
    }

    std::vector<long> best_for_a(report.branches_a.size(), -1);
    std::vector<long> best_for_b(report.branches_b.size(), -1);
    for (std::size_t i = 0; i < report.branches_a.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < report.branches_b.size(); ++j) {
            if (witness[i][j] && witness[i][j]->max_coefficient_deviation < best) {
                best = witness[i][j]->max_coefficient_deviation;
                best_for_a[i] = static_cast<long>(j);
            }
        }
        if (best_for_a[i] < 0) report.unmatched_a.push_back(i);
    }
    for (std::size_t j = 0; j < report.branches_b.size(); ++j) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < report.branches_a.size(); ++i) {
            if (witness[i][j] && witness[i][j]->max_coefficient_deviation < best) {
                best = witness[i][j]->max_coefficient_deviation;
                best_for_b[j] = static_cast<long>(i);
            }
        }
        if (best_for_b[j] < 0) report.unmatched_b.push_back(j);
    }

    std::vector<bool> b_covered(report.branches_b.size(), false);
    for (std::size_t i = 0; i < report.branches_a.size(); ++i) {
        if (best_for_a[i] < 0) continue;
        std::size_t j = static_cast<std::size_t>(best_for_a[i]);
        report.pairing.push_back({pt_a[i], i, j, *witness[i][j]});
        b_covered[j] = true;
    }
    for (std::size_t j = 0; j < report.branches_b.size(); ++j) {
        if (b_covered[j] || best_for_b[j] < 0) continue;
        std::size_t i = static_cast<std::size_t>(best_for_b[j]);
        report.pairing.push_back({pt_b[j], i, j, *witness[i][j]});
    }

    report.same = report.unmatched_a.empty() && report.unmatched_b.empty();
    if (!report.same) {
        report.failure_stage = !report.unmatched_a.empty() ? "branch_unmatched_forward"
                                                           : "branch_unmatched_backward";
    }
    return report;
}

std::vector<std::pair<double, double>> approach_profile(const InfinityBranch& b,
                                                        const BivariatePoly& fbar,
                                                        const std::vector<double>& radii,
                                                        double tol) {
    std::vector<std::pair<double, double>> out;
    out.reserve(radii.size());
    for (double rho : radii) {
        if (!(rho > 0.0)) throw std::invalid_argument("profile radius must be positive");
        Complex y = leaf_value(b, 0, Complex(rho, 0.0));
        double best = std::numeric_limits<double>::infinity();
        for (Complex q : resolve_fiber(fbar, Complex(rho, 0.0), tol)) {
            best = std::min(best, std::abs(y - q));
        }
        out.emplace_back(rho, best);
    }
    return out;
}

namespace {

struct SamplePoint {
    double x;
    Complex y;
};

std::vector<SamplePoint> window_samples(const BivariatePoly& f, double R, int grid_count,
                                        double tol) {
    std::vector<SamplePoint> pts;
    for (int k = 0; k < grid_count; ++k) {
        double x = -R + 2.0 * R * static_cast<double>(k) / static_cast<double>(grid_count - 1);
        std::vector<Complex> fiber;
        try {
            fiber = resolve_fiber(f, Complex(x, 0.0), tol);
        } catch (const DegenerateCurveError&) {
            continue;  // vertical-line fiber; no finite sample here
        }
        for (Complex y : fiber) {
            if (std::abs(y) <= 10.0 * R) pts.push_back({x, y});
        }
    }
    return pts;
}

double directed_hausdorff(const std::vector<SamplePoint>& from,
                          const std::vector<SamplePoint>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : to) {
            double dx = p.x - q.x;
            double dr = p.y.real() - q.y.real();
            double di = p.y.imag() - q.y.imag();
            best = std::min(best, std::sqrt(dx * dx + dr * dr + di * di));
        }
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff_estimate(const BivariatePoly& f, const BivariatePoly& fbar, double R,
                          int grid_count, double tol) {
    if (!(R > 0.0)) throw std::invalid_argument("window must be positive");
    if (grid_count < 8) throw std::invalid_argument("grid must have at least 8 points");
    std::vector<SamplePoint> sa = window_samples(f, R, grid_count, tol);
    std::vector<SamplePoint> sb = window_samples(fbar, R, grid_count, tol);
    if (sa.empty() || sb.empty()) {
        throw EmptySampleError("no curve points inside the sampling window");
    }
    return std::max(directed_hausdorff(sa, sb), directed_hausdorff(sb, sa));
}

}  // namespace curvasym
