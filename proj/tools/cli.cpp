#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "amoeba/bounds.hpp"
#include "amoeba/contour.hpp"
#include "amoeba/errors.hpp"
#include "amoeba/expr.hpp"
#include "amoeba/gaussmap.hpp"
#include "amoeba/grassmann.hpp"
#include "amoeba/io.hpp"
#include "amoeba/polytope.hpp"
#include "amoeba/rdegree.hpp"

namespace amoeba::cli {
namespace {

using io::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::vector<std::string> polys;
    std::string poly_file;
    std::string vars;
    std::uint64_t seed = 42;
    int phi_steps = kDefaultPhiSteps;
    int trials = 32;
    int lines = 512;
    std::string grid = "201,120";
    std::string window = "-3,3,-3,3";
    double tol = 1e-12;
    double cluster_tol = 1e-8;
    std::string format = "json";
    std::string out, svg, csv;
    int n = 0, d = 0;
    int samples = 20;
    unsigned threads = 0;
};

std::string trim(std::string s) {
    const auto ws = [](unsigned char ch) { return std::isspace(ch); };
    while (!s.empty() && ws(s.back())) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && ws(s[i])) ++i;
    return s.substr(i);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(trim(item));
    return parts;
}

std::vector<double> numbers(const std::string& s, std::size_t count, const std::string& flag) {
    const auto parts = split(s, ',');
    if (parts.size() != count)
        throw UsageError(flag + " expects " + std::to_string(count) + " comma-separated numbers");
    std::vector<double> v;
    for (const auto& part : parts) {
        std::size_t used = 0;
        double x = 0.0;
        try {
            x = std::stod(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != part.size() || !std::isfinite(x)) throw UsageError(flag + ": bad number '" + part + "'");
        v.push_back(x);
    }
    return v;
}

Window parse_window(const std::string& s) {
    const auto v = numbers(s, 4, "--window");
    if (!(v[0] < v[1]) || !(v[2] < v[3])) throw UsageError("--window needs x0 < x1 and y0 < y1");
    return {v[0], v[1], v[2], v[3]};
}

AmoebaGrid parse_grid(const std::string& s) {
    const auto v = numbers(s, 2, "--grid");
    if (v[0] != std::floor(v[0]) || v[1] != std::floor(v[1]) || v[0] < 2 || v[1] < 1 || v[0] > 1e6 || v[1] > 1e6)
        throw UsageError("--grid expects integers nx >= 2, ntheta >= 1");
    AmoebaGrid g;
    g.nx = static_cast<int>(v[0]);
    g.ntheta = static_cast<int>(v[1]);
    return g;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
    if (!f) throw UsageError("cannot write " + path);
}

// Without --vars: (z, w), or z1..zk when the text mentions zk.
std::vector<std::string> guess_variables(const std::vector<std::string>& texts, int expected) {
    if (expected) {
        if (expected == 2) return default_variables(2);
        std::vector<std::string> v;
        for (int i = 1; i <= expected; ++i) v.push_back("z" + std::to_string(i));
        return v;
    }
    static const std::regex indexed("\\bz([1-9])\\b");
    int k = 0;
    for (const auto& t : texts)
        for (auto it = std::sregex_iterator(t.begin(), t.end(), indexed); it != std::sregex_iterator(); ++it)
            k = std::max(k, std::stoi((*it)[1]));
    if (k == 0) return default_variables(2);
    std::vector<std::string> v;
    for (int i = 1; i <= std::max(k, 2); ++i) v.push_back("z" + std::to_string(i));
    return v;
}

struct Input {
    std::vector<LaurentPolynomial> polys;
    std::vector<std::string> vars;
};

// --poly values, then --poly-file: a JSON object, a JSON array of objects, or one
// expression per nonempty line.
Input load(const Config& c, int expected_n, std::size_t expected_count) {
    std::vector<std::string> texts = c.polys;
    std::vector<Json> jsons;
    if (!c.poly_file.empty()) {
        const std::string body = trim(read_file(c.poly_file));
        if (!body.empty() && (body[0] == '{' || body[0] == '[')) {
            Json j;
            try {
                j = Json::parse(body);
            } catch (const Json::exception& e) {
                throw UsageError(c.poly_file + ": " + e.what());
            }
            if (j.is_array())
                for (auto& e : j) jsons.push_back(e);
            else
                jsons.push_back(j);
        } else {
            for (auto& line : split(body, '\n'))
                if (!line.empty()) texts.push_back(line);
        }
    }
    if (texts.size() + jsons.size() != expected_count)
        throw UsageError("expected " + std::to_string(expected_count) + " polynomial(s) via --poly/--poly-file");

    Input in;
    if (!c.vars.empty())
        in.vars = split(c.vars, ',');
    else if (!jsons.empty())
        in.vars = guess_variables({}, expected_n ? expected_n : jsons.front().value("n", 2));
    else
        in.vars = guess_variables(texts, expected_n);
    for (const auto& t : texts) in.polys.push_back(parse_poly(t, in.vars));
    for (const auto& j : jsons) in.polys.push_back(io::polynomial_from_json(j));
    for (const auto& p : in.polys) {
        if (expected_n && p.dimension() != expected_n)
            throw UsageError("expected a polynomial in " + std::to_string(expected_n) + " variables");
        if (p.dimension() != static_cast<int>(in.vars.size()))
            throw UsageError("--vars does not match the polynomial dimension");
    }
    return in;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_format(const Config& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (c.format == f) return;
    std::string list;
    for (const char* f : allowed) list += (list.empty() ? "" : "|") + std::string(f);
    throw UsageError("--format must be one of " + list + " for this command");
}

void emit(const Config& c, const std::string& text, std::ostream& out) {
    if (c.out.empty())
        out << text;
    else
        write_file(c.out, text);
}

Json header(const std::string& command, const Input& in) {
    Json j;
    j["command"] = command;
    if (in.polys.size() == 1) {
        j["polynomial"] = io::to_json(in.polys[0]);
        j["expression"] = format_poly(in.polys[0], in.vars);
    }
    return j;
}

void cmd_newton(const Config& c, std::ostream& out) {
    require_format(c, {"json"});
    const Input in = load(c, 0, 1);
    const auto& p = in.polys[0];
    if (p.is_zero()) throw DegenerateError("newton: zero polynomial");
    const auto P = newton_polytope(p);
    Json j = header("newton", in);
    j["polytope"] = io::to_json(P);
    j["affine_dimension"] = P.affine_dimension();
    j["normalized_volume"] = normalized_volume(P);
    j["total_degree"] = total_degree(p);
    emit(c, dump(j), out);
}

void cmd_bounds(const Config& c, std::ostream& out) {
    require_format(c, {"json", "md"});
    Json j;
    j["command"] = "bounds";
    j["n"] = c.n;
    j["d"] = c.d;
    j["lss"] = io::to_json(lss_bound(c.n, c.d));
    j["bezout"] = io::to_json(bezout_bound(c.n, c.d));
    std::ostringstream md;
    md << "| quantity | value |\n|---|---|\n";
    md << "| n | " << c.n << " |\n| d | " << c.d << " |\n";
    md << "| lss | " << lss_bound(c.n, c.d) << " |\n| bezout | " << bezout_bound(c.n, c.d) << " |\n";
    if (!c.polys.empty() || !c.poly_file.empty()) {
        const Input in = load(c, 0, 1);
        const auto& p = in.polys[0];
        j["polynomial"] = io::to_json(p);
        j["bernstein"] = bernstein_bound(p);
        j["mv_sparse"] = mv_sparse_bound(p);
        md << "| bernstein | " << j["bernstein"].get<std::int64_t>() << " |\n";
        md << "| mv_sparse | " << j["mv_sparse"].get<std::int64_t>() << " |\n";
    }
    emit(c, c.format == "md" ? md.str() : dump(j), out);
}

void cmd_contour(const Config& c, std::ostream& out) {
    require_format(c, {"json", "csv", "svg"});
    const Input in = load(c, 2, 1);
    const Window window = parse_window(c.window);
    const auto trace = trace_contour(in.polys[0], c.phi_steps, c.threads);
    const auto chains = chain_points(trace.points, c.phi_steps);

    if (!c.svg.empty()) write_file(c.svg, io::render_svg(window, nullptr, chains));
    if (!c.csv.empty()) write_file(c.csv, io::contour_csv(trace.points));
    if (c.format == "svg") return emit(c, io::render_svg(window, nullptr, chains), out);
    if (c.format == "csv") return emit(c, io::contour_csv(trace.points), out);

    Json j = header("contour", in);
    Json t = io::to_json(trace);
    t.erase("points");
    t["point_count"] = trace.points.size();
    j["trace"] = std::move(t);
    j["chains"] = io::to_json(std::span<const ContourCurve>(chains));
    emit(c, dump(j), out);
}

void cmd_amoeba(const Config& c, std::ostream& out) {
    require_format(c, {"json", "csv", "svg"});
    const Input in = load(c, 2, 1);
    const Window window = parse_window(c.window);
    const auto sample = sample_amoeba(in.polys[0], window, parse_grid(c.grid), c.threads);

    if (!c.svg.empty()) write_file(c.svg, io::render_svg(window, &sample, {}));
    if (!c.csv.empty()) write_file(c.csv, io::amoeba_csv(sample));
    if (c.format == "svg") return emit(c, io::render_svg(window, &sample, {}), out);
    if (c.format == "csv") return emit(c, io::amoeba_csv(sample), out);

    Json j = header("amoeba", in);
    j["sample"] = io::to_json(sample);
    emit(c, dump(j), out);
}

void cmd_rdegree(const Config& c, std::ostream& out) {
    require_format(c, {"json", "csv"});
    const Input in = load(c, 2, 1);
    RDegreeSettings s;
    s.num_lines = c.lines;
    s.seed = c.seed;
    s.phi_steps = c.phi_steps;
    s.threads = c.threads;
    const auto est = estimate_rdegree(in.polys[0], s);

    if (!c.csv.empty()) write_file(c.csv, io::rdegree_csv(est));
    if (c.format == "csv") return emit(c, io::rdegree_csv(est), out);
    Json j = header("rdegree", in);
    j["estimate"] = io::to_json(est);
    emit(c, dump(j), out);
}

TorusSolveOptions solver_options(const Config& c) {
    TorusSolveOptions o;
    o.roots.residual = c.tol;
    o.roots.cluster = c.cluster_tol;
    return o;
}

void cmd_gaussdeg(const Config& c, std::ostream& out) {
    require_format(c, {"json"});
    const Input in = load(c, 2, 1);
    const auto g = gauss_degree_estimate(in.polys[0], c.trials, c.seed, c.threads, solver_options(c));
    Json j = header("gaussdeg", in);
    j["seed"] = c.seed;
    j["gauss_degree"] = io::to_json(g);
    emit(c, dump(j), out);
}

void cmd_grassmann(const Config& c, std::ostream& out) {
    require_format(c, {"json"});
    const Input in = load(c, 4, 2);
    const auto v = CompleteIntersection2::make(in.polys[0], in.polys[1]);
    const auto pc = pluecker_coordinates(v);

    Json j;
    j["command"] = "grassmann";
    j["f1"] = io::to_json(v.f1);
    j["f2"] = io::to_json(v.f2);
    j["d1"] = v.d1;
    j["d2"] = v.d2;
    Json coords = Json::object();
    for (const auto& [ij, p] : pc.p) {
        const std::string key = "p" + std::to_string(ij.first) + std::to_string(ij.second);
        coords[key] = {{"expression", format_poly(p, in.vars)},
                       {"polynomial", io::to_json(p)},
                       {"degree", p.is_zero() ? Json(nullptr) : Json(total_degree(p))}};
    }
    j["pluecker"] = std::move(coords);
    j["codim2_bound"] = io::to_json(codim2_bound(static_cast<int>(v.d1), static_cast<int>(v.d2)));
    j["mixed_volume_check"] = io::to_json(mv_codim2_check(newton_polytope(v.f1), newton_polytope(v.f2)));

    const auto vs = sample_variety_points(v, c.samples, c.seed, c.threads);
    double worst = 0.0;
    int degenerate = 0;
    for (const auto& z : vs.points) {
        try {
            worst = std::max(worst, pluecker_relation_residual(pc, z));
        } catch (const DegenerateError&) {
            ++degenerate;
        }
    }
    j["variety_sample"] = {{"requested", c.samples},
                           {"points", vs.points.size()},
                           {"samples", vs.samples},
                           {"abandoned", vs.abandoned},
                           {"degenerate_points", degenerate},
                           {"max_relation_residual", worst},
                           {"seed", c.seed}};
    emit(c, dump(j), out);
}

void cmd_report(const Config& c, std::ostream& out) {
    require_format(c, {"json", "md"});
    const Input in = load(c, 0, 1);
    ReportSettings s;
    s.gauss_trials = c.trials;
    s.solver = solver_options(c);
    s.rdegree.num_lines = c.lines;
    s.rdegree.seed = c.seed;
    s.rdegree.phi_steps = c.phi_steps;
    s.rdegree.threads = c.threads;
    const auto r = compare_report(in.polys[0], s);
    if (c.format == "md") return emit(c, io::bounds_markdown(r), out);
    Json j = header("report", in);
    j["seed"] = c.seed;
    j["report"] = io::to_json(r);
    emit(c, dump(j), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Amoebas, contours and degree bounds of Laurent polynomials", "amoeba"};
    app.require_subcommand(1);

    enum Flag : unsigned {
        kPoly = 1,
        kSeed = 2,
        kPhi = 4,
        kTrials = 8,
        kLines = 16,
        kWindow = 32,
        kGrid = 64,
        kTol = 128,
        kSvg = 256,
        kCsv = 512,
        kSamples = 1024
    };
    auto add = [&](const std::string& name, const std::string& help, unsigned flags) {
        CLI::App* s = app.add_subcommand(name, help);
        s->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "csv", "svg", "md"}));
        s->add_option("--out", c.out, "Write the primary output to this file");
        s->add_option("--threads", c.threads, "Worker threads (0 = hardware concurrency)");
        if (flags & kPoly) {
            s->add_option("--poly", c.polys, "Polynomial expression");
            s->add_option("--poly-file", c.poly_file, "File with an expression per line or canonical JSON");
            s->add_option("--vars", c.vars, "Comma-separated variable names");
        }
        if (flags & kSeed) s->add_option("--seed", c.seed, "Random seed")->capture_default_str();
        if (flags & kPhi)
            s->add_option("--phi-steps", c.phi_steps, "Angular slices")->check(CLI::Range(16, 1 << 22))->capture_default_str();
        if (flags & kTrials)
            s->add_option("--trials", c.trials, "Random Gauss-map fibers")->check(CLI::Range(1, 1 << 20))->capture_default_str();
        if (flags & kLines)
            s->add_option("--lines", c.lines, "Random probe lines")->check(CLI::Range(0, 1 << 24))->capture_default_str();
        if (flags & kWindow) s->add_option("--window", c.window, "x0,x1,y0,y1")->capture_default_str();
        if (flags & kGrid) s->add_option("--grid", c.grid, "nx,ntheta")->capture_default_str();
        if (flags & kTol) {
            s->add_option("--tol", c.tol, "Root backward-error tolerance")->check(CLI::PositiveNumber)->capture_default_str();
            s->add_option("--cluster-tol", c.cluster_tol, "Root clustering tolerance")
                ->check(CLI::PositiveNumber)
                ->capture_default_str();
        }
        if (flags & kSvg) s->add_option("--svg", c.svg, "Also write an SVG file");
        if (flags & kCsv) s->add_option("--csv", c.csv, "Also write a CSV file");
        if (flags & kSamples)
            s->add_option("--samples", c.samples, "Variety points to test")->check(CLI::Range(1, 1 << 20))->capture_default_str();
        return s;
    };

    add("newton", "Newton polytope and normalized volume", kPoly);
    CLI::App* bounds = add("bounds", "Closed-form degree bounds", kPoly);
    bounds->add_option("--n", c.n, "Number of variables")->required();
    bounds->add_option("--d", c.d, "Degree")->required();
    add("contour", "Trace and chain the contour", kPoly | kPhi | kWindow | kSvg | kCsv);
    add("amoeba", "Sample the amoeba on a grid", kPoly | kWindow | kGrid | kSvg | kCsv);
    add("rdegree", "Estimate the contour real degree", kPoly | kSeed | kPhi | kLines | kCsv);
    add("gaussdeg", "Estimate the logarithmic Gauss map degree", kPoly | kSeed | kTrials | kTol);
    add("grassmann", "Pluecker coordinates of a codimension-2 complete intersection", kPoly | kSeed | kSamples);
    add("report", "All bounds with empirical comparison", kPoly | kSeed | kPhi | kTrials | kLines | kTol);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "newton") cmd_newton(c, out);
        else if (name == "bounds") cmd_bounds(c, out);
        else if (name == "contour") cmd_contour(c, out);
        else if (name == "amoeba") cmd_amoeba(c, out);
        else if (name == "rdegree") cmd_rdegree(c, out);
        else if (name == "gaussdeg") cmd_gaussdeg(c, out);
        else if (name == "grassmann") cmd_grassmann(c, out);
        else if (name == "report") cmd_report(c, out);
        return kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DegenerateError& e) {
        err << "degenerate input: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitNumerical;
    }
}

}  // namespace amoeba::cli
