#pragma once

#include <string>
#include <utility>
#include <vector>

#include "curvasym/branches.hpp"
#include "curvasym/compare.hpp"

namespace curvasym {

// Text output carries 12 significant digits. JSON output keeps full double
// precision, a fixed key order, and no environment-dependent content, so a
// given input renders byte-identically on every run.

std::string format_double(double v);
std::string format_complex(Complex v);

std::string render_points_text(const std::vector<InfinityPoint>& points, long lambda);
std::string render_points_json(const std::vector<InfinityPoint>& points, long lambda);

std::string render_branches_text(const std::vector<InfinityBranch>& branches, long lambda);
std::string render_branches_json(const std::vector<InfinityBranch>& branches, long lambda);

std::string render_report_text(const BehaviorReport& report);
std::string render_report_json(const BehaviorReport& report);

// Columns: z_re, z_im, y_re, y_im, leaf.
std::string render_samples_csv(const std::vector<std::pair<Complex, Complex>>& points,
                               long leaf);

std::string render_hausdorff_text(const std::vector<std::pair<double, double>>& estimates);
std::string render_hausdorff_json(const std::vector<std::pair<double, double>>& estimates);

}  // namespace curvasym
