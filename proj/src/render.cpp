#include "curvasym/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace curvasym {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Drop a component that is float noise relative to the other one.
static Complex chop(Complex v) {
    double re = v.real(), im = v.imag();
    if (std::abs(im) <= 1e-11 * std::abs(re)) im = 0.0;
    if (std::abs(re) <= 1e-11 * std::abs(im)) re = 0.0;
    return {re, im};
}

std::string format_complex(Complex v) {
    v = chop(v);
    if (v.imag() == 0.0) return format_double(v.real());
    if (v.real() == 0.0) return format_double(v.imag()) + "i";
    std::string s = format_double(v.real());
    s += v.imag() < 0 ? " - " : " + ";
    s += format_double(std::abs(v.imag()));
    s += "i";
    return s;
}

namespace {

std::string point_label(const InfinityPoint& p) {
    return "(1 : " + format_complex(p.m) + " : 0)";
}

// One r(z) term: coefficient times z^exponent, with the usual print shortcuts.
std::string term_to_string(const PuiseuxTerm& t, bool first) {
    Complex c = chop(t.coeff);
    std::string coeff;
    bool negative = false;
    if (c.imag() == 0.0) {
        negative = c.real() < 0;
        coeff = format_double(std::abs(c.real()));
    } else if (c.real() == 0.0) {
        negative = c.imag() < 0;
        coeff = format_double(std::abs(c.imag())) + "i";
    } else {
        coeff = "(" + format_complex(c) + ")";
    }

    std::string zpart;
    if (t.exponent == 1) {
        zpart = "z";
    } else if (t.exponent != 0) {
        std::string e = rational_to_string(t.exponent);
        bool plain = e.find('/') == std::string::npos && e.find('-') == std::string::npos;
        zpart = plain ? "z^" + e : "z^(" + e + ")";
    }

    std::string body;
    if (zpart.empty()) {
        body = coeff;
    } else if (coeff == "1") {
        body = zpart;
    } else {
        body = coeff + "*" + zpart;
    }
    if (first) return negative ? "-" + body : body;
    return (negative ? " - " : " + ") + body;
}

std::string series_to_string(const std::vector<PuiseuxTerm>& terms) {
    if (terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) s += term_to_string(terms[i], i == 0);
    return s;
}

ordered_json point_json(const InfinityPoint& p) {
    Complex m = chop(p.m);
    return ordered_json{{"re", m.real()}, {"im", m.imag()}, {"mult", p.multiplicity}};
}

ordered_json branch_json(const InfinityBranch& b) {
    ordered_json terms = ordered_json::array();
    for (const auto& t : b.r_terms) {
        Complex c = chop(t.coeff);
        terms.push_back(ordered_json{{"exponent", rational_to_string(t.exponent)},
                                     {"re", c.real()},
                                     {"im", c.imag()}});
    }
    return ordered_json{{"point", point_json(b.point)},
                        {"N", b.ramification},
                        {"degree", b.degree},
                        {"watermark", rational_to_string(b.watermark)},
                        {"terms", std::move(terms)}};
}

std::string branch_text_line(const InfinityBranch& b, std::size_t index) {
    std::ostringstream os;
    os << "branch " << index << " at " << point_label(b.point)
       << ": N=" << b.ramification << " degree=" << b.degree
       << " watermark=" << rational_to_string(b.watermark) << "\n"
       << "  r(z) = " << series_to_string(b.r_terms) << "\n";
    return os.str();
}

}  // namespace

std::string render_points_text(const std::vector<InfinityPoint>& points, long lambda) {
    std::ostringstream os;
    os << "lambda: " << lambda << "\n";
    for (const auto& p : points) {
        os << point_label(p) << "  multiplicity " << p.multiplicity << "\n";
    }
    return os.str();
}

std::string render_points_json(const std::vector<InfinityPoint>& points, long lambda) {
    ordered_json pts = ordered_json::array();
    for (const auto& p : points) pts.push_back(point_json(p));
    ordered_json doc{{"lambda", lambda}, {"points", std::move(pts)}};
    return doc.dump(2) + "\n";
}

std::string render_branches_text(const std::vector<InfinityBranch>& branches, long lambda) {
    std::ostringstream os;
    os << "lambda: " << lambda << "\n";
    for (std::size_t i = 0; i < branches.size(); ++i) os << branch_text_line(branches[i], i);
    return os.str();
}

std::string render_branches_json(const std::vector<InfinityBranch>& branches, long lambda) {
    ordered_json bs = ordered_json::array();
    for (const auto& b : branches) bs.push_back(branch_json(b));
    ordered_json doc{{"lambda", lambda}, {"branches", std::move(bs)}};
    return doc.dump(2) + "\n";
}

std::string render_report_text(const BehaviorReport& report) {
    std::ostringstream os;
    os << "verdict: " << (report.same ? "same" : "different") << "\n";
    if (!report.failure_stage.empty()) os << "failure: " << report.failure_stage << "\n";
    os << "lambda: " << report.lambda << "\n";
    for (const auto& d : report.diagnostics) os << "note: " << d << "\n";
    os << "points:";
    for (const auto& p : report.points) os << " " << point_label(p);
    os << "\n";
    if (!report.branches_a.empty()) {
        os << "curve a branches:\n";
        for (std::size_t i = 0; i < report.branches_a.size(); ++i) {
            os << "  " << branch_text_line(report.branches_a[i], i);
        }
    }
    if (!report.branches_b.empty()) {
        os << "curve b branches:\n";
        for (std::size_t i = 0; i < report.branches_b.size(); ++i) {
            os << "  " << branch_text_line(report.branches_b[i], i);
        }
    }
    if (!report.pairing.empty()) {
        os << "pairing:\n";
        for (const auto& pe : report.pairing) {
            os << "  point " << point_label(report.points[pe.point_index]) << ": a."
               << pe.branch_a << " ~ b." << pe.branch_b << "  c = "
               << format_complex(pe.witness.conjugation_root) << "  deviation "
               << format_double(pe.witness.max_coefficient_deviation) << "\n";
        }
    }
    if (!report.unmatched_a.empty()) {
        os << "unmatched in a:";
        for (auto i : report.unmatched_a) os << " " << i;
        os << "\n";
    }
    if (!report.unmatched_b.empty()) {
        os << "unmatched in b:";
        for (auto i : report.unmatched_b) os << " " << i;
        os << "\n";
    }
    return os.str();
}

std::string render_report_json(const BehaviorReport& report) {
    ordered_json pts = ordered_json::array();
    for (const auto& p : report.points) pts.push_back(point_json(p));
    ordered_json pairing = ordered_json::array();
    for (const auto& pe : report.pairing) {
        Complex c = chop(pe.witness.conjugation_root);
        pairing.push_back(ordered_json{
            {"point", pe.point_index},
            {"branch_a", pe.branch_a},
            {"branch_b", pe.branch_b},
            {"witness",
             ordered_json{{"c_re", c.real()},
                          {"c_im", c.imag()},
                          {"deviation", pe.witness.max_coefficient_deviation}}}});
    }
    ordered_json ba = ordered_json::array();
    for (const auto& b : report.branches_a) ba.push_back(branch_json(b));
    ordered_json bb = ordered_json::array();
    for (const auto& b : report.branches_b) bb.push_back(branch_json(b));
    ordered_json doc{
        {"verdict", report.same ? "same" : "different"},
        {"failure_stage",
         report.failure_stage.empty() ? ordered_json(nullptr) : ordered_json(report.failure_stage)},
        {"lambda", report.lambda},
        {"points", std::move(pts)},
        {"branches_a", std::move(ba)},
        {"branches_b", std::move(bb)},
        {"pairing", std::move(pairing)},
        {"unmatched", ordered_json{{"a", report.unmatched_a}, {"b", report.unmatched_b}}},
        {"diagnostics", report.diagnostics}};
    return doc.dump(2) + "\n";
}

std::string render_samples_csv(const std::vector<std::pair<Complex, Complex>>& points,
                               long leaf) {
    std::string s = "z_re,z_im,y_re,y_im,leaf\n";
    for (const auto& [zr, yr] : points) {
        Complex z = chop(zr), y = chop(yr);
        s += format_double(z.real()) + "," + format_double(z.imag()) + "," +
             format_double(y.real()) + "," + format_double(y.imag()) + "," +
             std::to_string(leaf) + "\n";
    }
    return s;
}

std::string render_hausdorff_text(const std::vector<std::pair<double, double>>& estimates) {
    std::string s;
    for (const auto& [window, value] : estimates) {
        s += "window " + format_double(window) + ": " + format_double(value) + "\n";
    }
    return s;
}

std::string render_hausdorff_json(const std::vector<std::pair<double, double>>& estimates) {
    ordered_json arr = ordered_json::array();
    for (const auto& [window, value] : estimates) {
        arr.push_back(ordered_json{{"window", window}, {"estimate", value}});
    }
    ordered_json doc{{"windows", std::move(arr)}};
    return doc.dump(2) + "\n";
}

}  // namespace curvasym
