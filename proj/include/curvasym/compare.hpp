#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curvasym/branches.hpp"

namespace curvasym {

// Certificate that two branches converge: the root of unity aligning their
// nonnegative coefficients and the worst normalized coefficient deviation.
struct ConvergenceWitness {
    Complex conjugation_root;
    std::vector<Rational> matched_exponents;  // descending, shared by both branches
    double max_coefficient_deviation = 0.0;
};

// True iff the two leaves' nonnegative-exponent terms agree termwise within
// tol * (1 + min(|a|,|b|)). Requires both watermarks <= 0.
bool leaves_convergent(const InfinityBranch& a, long leaf_a, const InfinityBranch& b,
                       long leaf_b, double tol);

// The branch-level convergence test: same infinity point, equal degrees, identical
// nonnegative exponent sets, and some degree-n root of unity c aligning coefficients
// via a_l -> a_l * c^(n_l) with n_l = n*(1-e_l). Returns the minimal-deviation witness.
std::optional<ConvergenceWitness> branches_convergent(const InfinityBranch& a,
                                                      const InfinityBranch& b, double tol);

struct CompareConfig {
    double tol = 1e-10;
    double compare_tol = 1e-6;
    Rational min_exponent = Rational(-2);
};

struct PairingEntry {
    std::size_t point_index;
    std::size_t branch_a;
    std::size_t branch_b;
    ConvergenceWitness witness;
};

struct BehaviorReport {
    bool same = false;
    std::string failure_stage;  // "", "points", "branch_unmatched_forward",
                                // "branch_unmatched_backward"
    long lambda = 0;
    std::vector<InfinityPoint> points;  // shared infinity points (first curve's data)
    std::vector<InfinityBranch> branches_a;
    std::vector<InfinityBranch> branches_b;
    std::vector<PairingEntry> pairing;
    std::vector<std::size_t> unmatched_a;
    std::vector<std::size_t> unmatched_b;
    std::vector<std::string> diagnostics;
};

// The full decision: shared shear, square-free reduction (with a diagnostic when it
// bites), infinity-point set comparison by location, then bidirectional branch
// matching per shared point. Point mismatch returns early with failure_stage "points"
// and no branch data. Point-matching ambiguity throws.
BehaviorReport same_asymptotic_behavior(const BivariatePoly& f, const BivariatePoly& fbar,
                                        const CompareConfig& config = {});

// Distance evidence for approach: for each radius rho, the vertical distance from the
// leaf-0 point (rho, r(rho)) to the fiber of fbar over rho.
std::vector<std::pair<double, double>> approach_profile(const InfinityBranch& b,
                                                        const BivariatePoly& fbar,
                                                        const std::vector<double>& radii,
                                                        double tol = 1e-10);

// Discrete symmetric Hausdorff distance between point samples of the two curves over
// a real x grid on [-R, R] (grid_count values), keeping fiber points with |y| <= 10R.
// Euclidean metric on C^2. Degenerate fibers are skipped; a side with no samples at
// all raises EmptySampleError.
double hausdorff_estimate(const BivariatePoly& f, const BivariatePoly& fbar, double R,
                          int grid_count, double tol = 1e-10);

}  // namespace curvasym
