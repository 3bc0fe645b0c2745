#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = amoeba::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int count(const std::string& s, const std::string& needle) {
    int c = 0;
    for (std::size_t at = s.find(needle); at != std::string::npos; at = s.find(needle, at + 1)) ++c;
    return c;
}

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("bounds --n 2 --d 2") {
    const auto r = run({"bounds", "--n", "2", "--d", "2"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("lss") == 2176);
    CHECK(j.at("bezout") == 6);
    const auto md = run({"bounds", "--n", "2", "--d", "2", "--format", "md"});
    CHECK(md.out.find("| lss | 2176 |") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"report", "--poly", "z*w"}).code == 2);
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"contour", "--poly", "1+z+w", "--phi-steps", "8"}).code == 1);
    CHECK(run({"gaussdeg", "--poly", "1+z+w", "--tol", "0"}).code == 1);
    CHECK(run({"newton", "--poly", "1 + q"}).code == 1);
    CHECK(run({"bounds", "--n", "1", "--d", "2"}).code == 1);
    CHECK(run({"gaussdeg", "--poly", "1+z+w", "--format", "svg"}).code == 1);
    CHECK(run({"grassmann", "--poly", "1+z1"}).code == 1);
    CHECK(run({"newton", "--poly", "1+z+w", "--poly-file", "/nonexistent/file"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical command lines give byte-identical JSON") {
    const std::vector<std::string> gd{"gaussdeg", "--poly", "1 + z^2 + w^2 + 0.3 z w", "--trials", "8", "--seed", "7"};
    const auto a = run(gd), b = run(gd);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const std::vector<std::string> rd{"rdegree", "--poly", "1+z+w", "--lines", "32", "--phi-steps", "256"};
    const auto c = run(rd);
    auto d = rd;
    d.insert(d.end(), {"--threads", "1"});
    CHECK(c.out == run(d).out);
    const std::vector<std::string> rp{"report", "--poly", "1+z+w", "--lines", "16", "--phi-steps", "256", "--trials", "8"};
    CHECK(run(rp).out == run(rp).out);
}

TEST_CASE("contour SVG of the line has three arcs") {
    const auto svg = temp("amoeba_cli_line.svg");
    const auto r = run({"contour", "--poly", "1+z+w", "--phi-steps", "512", "--svg", svg.string()});
    REQUIRE(r.code == 0);
    CHECK(count(slurp(svg), "<polyline") == 3);
    CHECK(json::parse(r.out).at("chains").size() == 3);
    std::filesystem::remove(svg);
}

TEST_CASE("contour SVG matches the golden file") {
    const auto r = run({"contour", "--poly", "1+z+w", "--phi-steps", "64", "--format", "svg"});
    REQUIRE(r.code == 0);
    CHECK(r.out == slurp(std::filesystem::path(GOLDEN_DIR) / "line_contour_64.svg"));
}

TEST_CASE("polynomial files and --out") {
    const auto in = temp("amoeba_cli_poly.json");
    {
        std::ofstream f(in);
        f << R"({"n": 2, "terms": [{"e": [0,0], "re": 1}, {"e": [1,0], "re": 1}, {"e": [0,1], "re": 1}]})";
    }
    const auto out = temp("amoeba_cli_out.json");
    const auto r = run({"newton", "--poly-file", in.string(), "--out", out.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const auto j = json::parse(slurp(out));
    CHECK(j.at("normalized_volume") == 1);
    CHECK(j.at("expression") == "1 + w + z");

    {
        std::ofstream f(in);
        f << "1 + z1 + z2 + z3 + z4\n2 + z1 - z2 + 3 z3 - z4^2\n";
    }
    const auto g = run({"grassmann", "--poly-file", in.string(), "--samples", "5"});
    REQUIRE(g.code == 0);
    const auto gj = json::parse(g.out);
    CHECK(gj.at("pluecker").size() == 6);
    CHECK(gj.at("variety_sample").at("max_relation_residual").get<double>() <= 1e-10);
    std::filesystem::remove(in);
    std::filesystem::remove(out);
}

TEST_CASE("custom variables and four-variable autodetection") {
    const auto r = run({"newton", "--poly", "1 + x + y^2", "--vars", "x,y"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).at("normalized_volume") == 2);
    const auto q = run({"newton", "--poly", "1 + z1 + z2 + z3 + z4"});
    REQUIRE(q.code == 0);
    CHECK(json::parse(q.out).at("polynomial").at("n") == 4);
    CHECK(json::parse(q.out).at("normalized_volume") == 1);
}
