#include "curvasym/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "curvasym/branches.hpp"
#include "curvasym/compare.hpp"
#include "curvasym/errors.hpp"
#include "curvasym/parse.hpp"
#include "curvasym/render.hpp"

namespace curvasym {
namespace {

struct CliConfig {
    double tol = 1e-10;
    double compare_tol = 1e-6;
    std::string min_exponent = "-2";
    std::vector<double> radii{50.0, 100.0, 200.0};
    int grid_count = 64;
    std::vector<double> windows{20.0};
    std::string format = "text";
    double angle = 0.0;
};

std::string read_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read curve file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

// Curve slots are filled from --curve-a / --curve-b first, then --curve-file
// (first slot only), then any remaining positionals in order.
std::vector<std::string> resolve_curves(const std::string& flag_a, const std::string& flag_b,
                                        const std::string& file,
                                        std::vector<std::string> positionals,
                                        std::size_t wanted) {
    std::vector<std::string> slots;
    std::size_t pos = 0;
    for (std::size_t k = 0; k < wanted; ++k) {
        if (k == 0 && !flag_a.empty()) {
            slots.push_back(flag_a);
        } else if (k == 0 && !file.empty()) {
            slots.push_back(read_curve_file(file));
        } else if (k == 1 && !flag_b.empty()) {
            slots.push_back(flag_b);
        } else if (pos < positionals.size()) {
            slots.push_back(positionals[pos++]);
        } else {
            throw ParseError("missing curve argument (" + std::to_string(wanted) +
                             " needed, " + std::to_string(slots.size()) + " given)");
        }
    }
    if (pos < positionals.size()) {
        throw ParseError("unexpected extra argument '" + positionals[pos] + "'");
    }
    return slots;
}

struct Selector {
    long branch = 0;
    long leaf = 0;
};

Selector parse_selector(const std::string& text) {
    Selector sel;
    std::string b = text, l;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        b = text.substr(0, colon);
        l = text.substr(colon + 1);
    }
    try {
        std::size_t used = 0;
        sel.branch = std::stol(b, &used);
        if (used != b.size()) throw std::invalid_argument(b);
        if (!l.empty()) {
            sel.leaf = std::stol(l, &used);
            if (used != l.size()) throw std::invalid_argument(l);
        }
    } catch (const std::exception&) {
        throw SelectorError("malformed branch selector '" + text + "' (expected B or B:L)");
    }
    if (sel.branch < 0 || sel.leaf < 0) {
        throw SelectorError("branch selector '" + text + "' must be nonnegative");
    }
    return sel;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"infinity branches and asymptotic comparison of implicit plane curves"};
    app.name("curvasym");

    CliConfig cfg;
    std::string flag_a, flag_b, curve_file;
    app.add_option("--tol", cfg.tol, "numeric tolerance for root finding and expansion");
    app.add_option("--compare-tol", cfg.compare_tol, "coefficient comparison tolerance");
    app.add_option("--min-exponent", cfg.min_exponent,
                   "truncation watermark for r(z) exponents, as p/q <= 0");
    app.add_option("--radii", cfg.radii, "sampling radii for sample points")->delimiter(',');
    app.add_option("--grid", cfg.grid_count, "grid points per axis for hausdorff");
    app.add_option("--window", cfg.windows, "hausdorff window half-widths R")->delimiter(',');
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--curve-a", flag_a, "first curve polynomial");
    app.add_option("--curve-b", flag_b, "second curve polynomial");
    app.add_option("--curve-file", curve_file, "file holding the first curve polynomial");
    app.add_option("--angle", cfg.angle, "sampling direction angle in radians");
    app.require_subcommand(1);

    std::vector<std::string> pos_points, pos_branches, pos_compare, pos_sample, pos_hausdorff;
    auto* c_points = app.add_subcommand("points", "infinity points after preparation");
    c_points->add_option("curve", pos_points, "curve polynomial");
    auto* c_branches = app.add_subcommand("branches", "infinity branches with r(z) series");
    c_branches->add_option("curve", pos_branches, "curve polynomial");
    auto* c_compare = app.add_subcommand("compare", "decide same asymptotic behavior");
    c_compare->add_option("curves", pos_compare, "the two curve polynomials");
    auto* c_sample = app.add_subcommand("sample", "sample points of one branch leaf");
    c_sample->add_option("args", pos_sample, "curve polynomial and selector B[:L]");
    auto* c_hausdorff = app.add_subcommand("hausdorff", "windowed Hausdorff estimate");
    c_hausdorff->add_option("curves", pos_hausdorff, "the two curve polynomials");
    for (auto* sub : {c_points, c_branches, c_compare, c_sample, c_hausdorff}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!(cfg.tol > 0)) throw ParseError("tol must be positive");
        if (!(cfg.compare_tol >= cfg.tol)) throw ParseError("compare-tol must be >= tol");
        Rational min_exp = rational_from_string(cfg.min_exponent);
        if (min_exp > 0) throw ParseError("min-exponent must be <= 0");
        for (double r : cfg.radii) {
            if (!(r > 0)) throw ParseError("radii must be positive");
        }
        for (double w : cfg.windows) {
            if (!(w > 0)) throw ParseError("window values must be positive");
        }
        if (cfg.grid_count < 8) throw ParseError("grid must be at least 8");

        bool json = cfg.format == "json";
        bool csv = cfg.format == "csv";

        if (c_points->parsed()) {
            if (csv) throw ParseError("points has no csv format");
            auto curves = resolve_curves(flag_a, flag_b, curve_file, pos_points, 1);
            auto [f, lambda] = prepare_single(parse_polynomial(curves[0]));
            auto pts = infinity_points(f, cfg.tol);
            out << (json ? render_points_json(pts.points, lambda)
                         : render_points_text(pts.points, lambda));
            return 0;
        }

        if (c_branches->parsed()) {
            if (csv) throw ParseError("branches has no csv format");
            auto curves = resolve_curves(flag_a, flag_b, curve_file, pos_branches, 1);
            auto [f, lambda] = prepare_single(parse_polynomial(curves[0]));
            std::vector<std::string> diags;
            auto branches = infinity_branches(f, min_exp, cfg.tol, &diags);
            for (const auto& d : diags) err << "note: " << d << "\n";
            out << (json ? render_branches_json(branches, lambda)
                         : render_branches_text(branches, lambda));
            return 0;
        }

        if (c_compare->parsed()) {
            if (csv) throw ParseError("compare has no csv format");
            auto curves = resolve_curves(flag_a, flag_b, curve_file, pos_compare, 2);
            CompareConfig cc{cfg.tol, cfg.compare_tol, min_exp};
            auto report = same_asymptotic_behavior(parse_polynomial(curves[0]),
                                                   parse_polynomial(curves[1]), cc);
            out << (json ? render_report_json(report) : render_report_text(report));
            return report.same ? 0 : 1;
        }

        if (c_sample->parsed()) {
            if (json) throw ParseError("sample output is csv only");
            // Last positional doubles as the selector when it parses as one and a
            // curve is already available from flags or an earlier positional.
            std::vector<std::string> positionals = pos_sample;
            std::string selector_text = "0";
            bool have_flag_curve = !flag_a.empty() || !curve_file.empty();
            std::size_t curve_positionals = have_flag_curve ? 0 : 1;
            if (positionals.size() > curve_positionals) {
                selector_text = positionals.back();
                positionals.pop_back();
            }
            auto curves = resolve_curves(flag_a, flag_b, curve_file, positionals, 1);
            Selector sel = parse_selector(selector_text);
            auto [f, lambda] = prepare_single(parse_polynomial(curves[0]));
            std::vector<std::string> diags;
            auto branches = infinity_branches(f, min_exp, cfg.tol, &diags);
            for (const auto& d : diags) err << "note: " << d << "\n";
            if (lambda != 0) err << "note: sampling in sheared coordinates (lambda = "
                                 << lambda << ")\n";
            if (sel.branch >= static_cast<long>(branches.size())) {
                throw SelectorError("branch index " + std::to_string(sel.branch) +
                                    " out of range (curve has " +
                                    std::to_string(branches.size()) + " branches)");
            }
            const InfinityBranch& b = branches[sel.branch];
            if (sel.leaf >= b.ramification) {
                throw SelectorError("leaf index " + std::to_string(sel.leaf) +
                                    " out of range (branch has " +
                                    std::to_string(b.ramification) + " leaves)");
            }
            auto points = sample_leaf(Leaf{&b, sel.leaf}, cfg.radii, cfg.angle);
            out << render_samples_csv(points, sel.leaf);
            return 0;
        }

        if (c_hausdorff->parsed()) {
            if (csv) throw ParseError("hausdorff has no csv format");
            auto curves = resolve_curves(flag_a, flag_b, curve_file, pos_hausdorff, 2);
            auto fa = parse_polynomial(curves[0]);
            auto fb = parse_polynomial(curves[1]);
            std::vector<std::pair<double, double>> estimates;
            for (double R : cfg.windows) {
                estimates.emplace_back(R,
                                       hausdorff_estimate(fa, fb, R, cfg.grid_count, cfg.tol));
            }
            out << (json ? render_hausdorff_json(estimates)
                         : render_hausdorff_text(estimates));
            return 0;
        }
    } catch (const ParseError& e) {
        err << "curvasym: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateCurveError& e) {
        err << "curvasym: " << e.what() << "\n";
        return 3;
    } catch (const ExpansionError& e) {
        err << "curvasym: " << e.what() << "\n";
        return 4;
    } catch (const SelectorError& e) {
        err << "curvasym: " << e.what() << "\n";
        return 5;
    } catch (const EmptySampleError& e) {
        err << "curvasym: " << e.what() << "\n";
        return 6;
    }
    return 2;
}

}  // namespace curvasym
