#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "curvasym/cli.hpp"
#include "curves.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {
struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<const char*> args) {
    args.insert(args.begin(), "curvasym");
    std::ostringstream out, err;
    int code = curvasym::cli_run(static_cast<int>(args.size()), args.data(), out, err);
    return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("points text output") {
    auto r = run({"points", curves::kTwinA});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "lambda: 0\n"
          "(1 : 0 : 0)  multiplicity 3\n"
          "(1 : 2 : 0)  multiplicity 1\n");
}

TEST_CASE("points applies the shear and reports it in json") {
    auto r = run({"points", "--format", "json", "x^2 - y"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["lambda"] == 1);
    REQUIRE(doc["points"].size() == 1);
    CHECK(doc["points"][0]["re"] == -1.0);
    CHECK(doc["points"][0]["mult"] == 2);
}

TEST_CASE("branches json schema") {
    auto r = run({"branches", "--format", "json", curves::kParabola});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    REQUIRE(doc["branches"].size() == 1);
    const auto& b = doc["branches"][0];
    CHECK(b["N"] == 2);
    CHECK(b["degree"] == 2);
    CHECK(b["watermark"] == "-2");
    REQUIRE(b["terms"].size() == 1);
    CHECK(b["terms"][0]["exponent"] == "1/2");
    CHECK(b["terms"][0]["re"] == 1.0);
    CHECK(b["terms"][0]["im"] == 0.0);
}

TEST_CASE("compare exit codes follow the verdict") {
    auto same = run({"compare", curves::kTwinA, curves::kTwinB});
    CHECK(same.code == 0);
    CHECK(same.out.find("verdict: same") == 0);

    auto diff = run({"compare", curves::kTwinA, curves::kTwinPoints});
    CHECK(diff.code == 1);
    CHECK(diff.out.find("verdict: different") == 0);
    CHECK(diff.out.find("failure: points") != std::string::npos);
}

TEST_CASE("compare json is byte-identical across runs") {
    auto first = run({"compare", "--format", "json", curves::kTwinA, curves::kTwinB});
    auto second = run({"compare", "--format", "json", curves::kTwinA, curves::kTwinB});
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);

    json doc = json::parse(first.out);
    CHECK(doc["verdict"] == "same");
    CHECK(doc["failure_stage"].is_null());
    REQUIRE(doc["pairing"].size() == 2);
    CHECK(doc["unmatched"]["a"].empty());
    CHECK(doc["unmatched"]["b"].empty());
    for (const auto& pe : doc["pairing"]) {
        CHECK(pe["witness"]["deviation"].get<double>() <= 1e-6);
    }
}

TEST_CASE("sample emits exact csv rows for a line") {
    auto r = run({"sample", "y - 3*x - 1", "0", "--radii", "1,2"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "z_re,z_im,y_re,y_im,leaf\n"
          "1,0,4,0,0\n"
          "2,0,7,0,0\n");
}

TEST_CASE("sample resolves branch and leaf selectors") {
    auto r = run({"sample", curves::kParabola, "0:1", "--radii", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("4,0,-2,0,1\n") != std::string::npos);
}

TEST_CASE("sample tracks a decaying tail") {
    // Find the unramified branch at (1:0:0), then sample it far out.
    auto listing = run({"branches", "--format", "json", curves::kQuintic});
    REQUIRE(listing.code == 0);
    json doc = json::parse(listing.out);
    int index = -1;
    for (std::size_t i = 0; i < doc["branches"].size(); ++i) {
        const auto& b = doc["branches"][i];
        if (b["N"] == 1 && b["point"]["re"].get<double>() == 0.0) {
            index = static_cast<int>(i);
        }
    }
    REQUIRE(index >= 0);

    std::string sel = std::to_string(index);
    auto r = run({"sample", curves::kQuintic, sel.c_str(), "--radii", "100"});
    REQUIRE(r.code == 0);
    std::istringstream rows(r.out);
    std::string header, row;
    std::getline(rows, header);
    std::getline(rows, row);
    double y = 0.0;
    std::sscanf(row.c_str(), "%*f,%*f,%lf", &y);
    CHECK(std::abs(y - (-0.005)) < 1e-4);
}

TEST_CASE("hausdorff grows for scaled parabolas") {
    auto r = run({"hausdorff", curves::kParabola, "y^2 - 2*x", "--window", "10,40"});
    REQUIRE(r.code == 0);
    double h10 = 0.0, h40 = 0.0;
    std::sscanf(r.out.c_str(), "window 10: %lf\nwindow 40: %lf", &h10, &h40);
    CHECK(h10 > 0.0);
    CHECK(h40 >= 1.5 * h10);

    auto j = run({"hausdorff", "--format", "json", curves::kParabola, "y^2 - 2*x"});
    REQUIRE(j.code == 0);
    json doc = json::parse(j.out);
    REQUIRE(doc["windows"].size() == 1);
    CHECK(doc["windows"][0]["window"] == 20.0);
}

TEST_CASE("curve file feeds the first slot") {
    const char* path = "cli_curve_tmp.txt";
    {
        std::ofstream f(path);
        f << curves::kParabola << "\n";
    }
    auto r = run({"points", "--curve-file", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("multiplicity 2") != std::string::npos);

    auto cmp = run({"compare", "--curve-file", path, curves::kParabola});
    CHECK(cmp.code == 0);
    std::remove(path);

    auto missing = run({"points", "--curve-file", "no_such_file.txt"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("curvasym:") == 0);
}

TEST_CASE("shear note lands on stderr") {
    auto r = run({"sample", "x^2 - y", "0", "--radii", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("sheared") != std::string::npos);
}

TEST_CASE("error taxonomy maps to exit codes") {
    CHECK(run({"points", "y^2 + @"}).code == 2);       // parse
    CHECK(run({"points", "7"}).code == 3);             // degenerate
    CHECK(run({"sample", curves::kParabola, "banana"}).code == 5);
    CHECK(run({"sample", curves::kParabola, "9"}).code == 5);
    CHECK(run({"sample", curves::kParabola, "0:5"}).code == 5);
    CHECK(run({"hausdorff", "x*y - 10000", "y - x", "--window", "1"}).code == 6);

    CHECK(run({"points"}).code == 2);                            // missing curve
    CHECK(run({"compare", curves::kParabola}).code == 2);        // one of two
    CHECK(run({"points", "y", "x"}).code == 2);                  // extra positional
    CHECK(run({"points", "--format", "csv", "y - x"}).code == 2);
    CHECK(run({"sample", "--format", "json", curves::kParabola, "0"}).code == 2);
    CHECK(run({"points", "--format", "yaml", "y - x"}).code == 2);
    CHECK(run({"points", "--tol", "-1", "y - x"}).code == 2);
    CHECK(run({"points", "--min-exponent", "1/2", "y - x"}).code == 2);
    CHECK(run({"branches", "--no-such-flag", "y - x"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);

    auto err_line = run({"points", "7"});
    CHECK(err_line.err.find("curvasym: ") == 0);
}

TEST_CASE("help exits cleanly and lists subcommands") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    for (const char* name : {"points", "branches", "compare", "sample", "hausdorff"}) {
        CHECK(r.out.find(name) != std::string::npos);
    }
}
