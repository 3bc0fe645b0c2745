#include "amoeba/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "amoeba/errors.hpp"

namespace amoeba::io {

std::string number(double v) {
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

Json to_json(const LaurentPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"e", e}, {"re", c.real()}, {"im", c.imag()}});
    return {{"n", p.dimension()}, {"terms", std::move(terms)}};
}

LaurentPolynomial polynomial_from_json(const Json& j) {
    try {
        const int n = j.at("n").get<int>();
        if (n < 1) throw DomainError("polynomial JSON: n must be positive");
        std::vector<std::pair<ExponentVector, Complex>> terms;
        for (const auto& t : j.at("terms")) {
            auto e = t.at("e").get<ExponentVector>();
            const double re = t.value("re", 0.0), im = t.value("im", 0.0);
            terms.emplace_back(std::move(e), Complex(re, im));
        }
        return LaurentPolynomial(n, terms);
    } catch (const Json::exception& e) {
        throw DomainError(std::string("polynomial JSON: ") + e.what());
    }
}

Json to_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Json to_json(const LatticePolytope& d) { return {{"dimension", d.dimension()}, {"vertices", d.vertices()}}; }

namespace {

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

}  // namespace

Json to_json(const ContourPoint& p) {
    return {{"phi", p.phi},     {"z", complex_json(p.z)}, {"w", complex_json(p.w)},
            {"x", p.x},         {"y", p.y},               {"slice", p.slice},
            {"fiber_index", p.fiber_index}, {"residual", p.residual}};
}

Json to_json(const ContourTrace& t) {
    Json pts = Json::array();
    for (const auto& p : t.points) pts.push_back(to_json(p));
    return {{"phi_steps", t.phi_steps},
            {"failed_slices", t.failed_slices},
            {"empty_slices", t.empty_slices.size()},
            {"points", std::move(pts)}};
}

Json to_json(const ContourCurve& c) {
    Json pts = Json::array();
    for (const auto& p : c.points) pts.push_back(to_json(p));
    return {{"closed", c.closed}, {"points", std::move(pts)}};
}

Json to_json(std::span<const ContourCurve> curves) {
    Json out = Json::array();
    for (const auto& c : curves) out.push_back(to_json(c));
    return out;
}

Json to_json(const AmoebaSample& s) {
    Json pts = Json::array();
    for (const auto& [x, y] : s.points) pts.push_back(Json::array({x, y}));
    return {{"window", {s.window.xmin, s.window.xmax, s.window.ymin, s.window.ymax}},
            {"grid", {{"nx", s.grid.nx}, {"ntheta", s.grid.ntheta}, {"theta0", s.grid.theta0}}},
            {"skipped_slices", s.skipped_slices},
            {"points", std::move(pts)}};
}

Json to_json(const AffineLine& l) { return {{"base", l.base}, {"direction", l.direction}}; }

Json to_json(const RDegreeEstimate& e) {
    Json hist = Json::object();
    for (const auto& [k, v] : e.histogram) hist[std::to_string(k)] = v;
    Json out = {{"max_crossings", e.max_crossings},
                {"argmax_line", to_json(e.argmax)},
                {"histogram", std::move(hist)},
                {"lines", e.lines.size()},
                {"non_transversal", e.non_transversal},
                {"no_points", e.no_points},
                {"bbox", e.bbox},
                {"curves", e.curves},
                {"points", e.points},
                {"settings",
                 {{"num_lines", e.settings.num_lines},
                  {"axis_lines", e.settings.axis_lines},
                  {"seed", e.settings.seed},
                  {"phi_steps", e.settings.phi_steps},
                  {"eps", e.settings.eps},
                  {"clip", e.settings.clip}}}};
    return out;
}

Json to_json(const GaussDegreeEstimate& g) {
    return {{"estimate", g.estimate},
            {"kouchnirenko", g.kouchnirenko},
            {"reliable", g.reliable},
            {"trials", g.counts.size()},
            {"counts", g.counts}};
}

Json to_json(const Finding& f) {
    return {{"kind", f.kind},
            {"bound", f.bound},
            {"bound_value", to_json(f.bound_value)},
            {"observed", f.observed},
            {"informational", f.informational},
            {"message", f.message}};
}

Json to_json(const BoundReport& r) {
    Json findings = Json::array();
    for (const auto& f : r.flags) findings.push_back(to_json(f));
    auto opt = [](const auto& o) -> Json { return o ? Json(*o) : Json(nullptr); };
    return {{"n", r.n},
            {"d", r.d},
            {"lss", to_json(r.lss)},
            {"bezout", to_json(r.bezout)},
            {"bernstein", r.bernstein},
            {"mv_sparse", r.mv_sparse},
            {"mv_sparse_times_factorial", to_json(r.mv_sparse_times_factorial)},
            {"q_degrees", r.q_degrees},
            {"empirical_rdegree", opt(r.empirical_rdegree)},
            {"empirical_gauss_degree", opt(r.empirical_gauss_degree)},
            {"gauss_reliable", opt(r.gauss_reliable)},
            {"phi_steps", r.phi_steps},
            {"num_lines", r.num_lines},
            {"findings", std::move(findings)},
            {"failures", r.failures}};
}

Json to_json(const Codim2Check& c) {
    Json out = {{"lhs", c.lhs},         {"rhs", c.rhs},         {"equal", c.equal},
                {"mv_1211", c.mv_1211}, {"mv_1212", c.mv_1212}, {"mv_1222", c.mv_1222}};
    if (c.scaling_value) {
        out["scaling_value"] = *c.scaling_value;
        out["scaling_holds"] = *c.scaling_holds;
    }
    return out;
}

std::string contour_csv(std::span<const ContourPoint> points) {
    std::string out = "phi,re_z,im_z,re_w,im_w,x,y,residual\n";
    for (const auto& p : points)
        out += number(p.phi) + "," + number(p.z.real()) + "," + number(p.z.imag()) + "," + number(p.w.real()) + "," +
               number(p.w.imag()) + "," + number(p.x) + "," + number(p.y) + "," + number(p.residual) + "\n";
    return out;
}

std::string chains_csv(std::span<const ContourCurve> curves) {
    std::string out = "chain,closed,phi,x,y\n";
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (const auto& p : curves[i].points)
            out += std::to_string(i) + "," + (curves[i].closed ? "1" : "0") + "," + number(p.phi) + "," + number(p.x) +
                   "," + number(p.y) + "\n";
    return out;
}

std::string amoeba_csv(const AmoebaSample& s) {
    std::string out = "x,y\n";
    for (const auto& [x, y] : s.points) out += number(x) + "," + number(y) + "\n";
    return out;
}

std::string rdegree_csv(const RDegreeEstimate& e) {
    std::string out = "line,base_x,base_y,dir_x,dir_y,crossings\n";
    for (std::size_t i = 0; i < e.lines.size(); ++i) {
        const auto& l = e.lines[i];
        out += std::to_string(i) + "," + number(l.base[0]) + "," + number(l.base[1]) + "," + number(l.direction[0]) +
               "," + number(l.direction[1]) + "," + std::to_string(e.counts[i]) + "\n";
    }
    return out;
}

std::string bounds_markdown(const BoundReport& r) {
    auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string("-"); };
    std::ostringstream md;
    md << "| quantity | value |\n|---|---|\n";
    md << "| n | " << r.n << " |\n";
    md << "| d | " << r.d << " |\n";
    md << "| lss | " << r.lss << " |\n";
    md << "| bezout | " << r.bezout << " |\n";
    md << "| bernstein | " << r.bernstein << " |\n";
    md << "| mv_sparse | " << r.mv_sparse << " |\n";
    md << "| mv_sparse x n! | " << r.mv_sparse_times_factorial << " |\n";
    for (std::size_t j = 0; j < r.q_degrees.size(); ++j)
        md << "| deg Q_" << (j + 1) << " | " << r.q_degrees[j] << " |\n";
    md << "| empirical gauss degree | " << opt(r.empirical_gauss_degree) << " |\n";
    md << "| empirical real degree | " << opt(r.empirical_rdegree) << " |\n";
    if (r.empirical_rdegree) md << "| phi steps / lines | " << r.phi_steps << " / " << r.num_lines << " |\n";
    if (!r.flags.empty()) {
        md << "\n| finding | bound | bound value | observed | informational |\n|---|---|---|---|---|\n";
        for (const auto& f : r.flags)
            md << "| " << f.kind << " | " << f.bound << " | " << f.bound_value << " | " << f.observed << " | "
               << (f.informational ? "yes" : "no") << " |\n";
    }
    for (const auto& f : r.failures) md << "\nfailure: " << f << "\n";
    return md.str();
}

namespace {

constexpr double kCanvas = 1000.0;
constexpr const char* kBackground = "#ffffff";
constexpr const char* kAxisColor = "#bbbbbb";
constexpr const char* kAmoebaColor = "#6baed6";
constexpr const char* kContourColor = "#d62728";
constexpr const char* kMarkColor = "#2ca02c";

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Window& window, const AmoebaSample* amoeba, std::span<const ContourCurve> curves,
                       std::span<const ContourPoint> marks) {
    const double wx = window.xmax - window.xmin, wy = window.ymax - window.ymin;
    if (!(wx > 0.0) || !(wy > 0.0)) throw DomainError("render_svg: window must have positive extent");
    auto px = [&](double x) { return (x - window.xmin) / wx * kCanvas; };
    auto py = [&](double y) { return (window.ymax - y) / wy * kCanvas; };
    auto inside = [&](double x, double y) {
        return x >= window.xmin && x <= window.xmax && y >= window.ymin && y <= window.ymax;
    };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n";
    s += "<defs><clipPath id=\"window\"><rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\"/></clipPath></defs>\n";
    s += std::string("<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"") + kBackground + "\"/>\n";
    if (window.xmin < 0 && window.xmax > 0)
        s += "<line x1=\"" + fixed(px(0)) + "\" y1=\"0\" x2=\"" + fixed(px(0)) + "\" y2=\"1000\" stroke=\"" +
             kAxisColor + "\" stroke-width=\"1\"/>\n";
    if (window.ymin < 0 && window.ymax > 0)
        s += "<line x1=\"0\" y1=\"" + fixed(py(0)) + "\" x2=\"1000\" y2=\"" + fixed(py(0)) + "\" stroke=\"" +
             kAxisColor + "\" stroke-width=\"1\"/>\n";

    if (amoeba) {
        s += std::string("<g fill=\"") + kAmoebaColor + "\">\n";
        for (const auto& [x, y] : amoeba->points)
            if (inside(x, y)) s += "<circle cx=\"" + fixed(px(x)) + "\" cy=\"" + fixed(py(y)) + "\" r=\"1.5\"/>\n";
        s += "</g>\n";
    }

    s += std::string("<g clip-path=\"url(#window)\" fill=\"none\" stroke=\"") + kContourColor +
         "\" stroke-width=\"2\" stroke-linejoin=\"round\">\n";
    for (const auto& c : curves) {
        // Runs of points that are inside the window or adjacent to an inside point.
        const auto& pts = c.points;
        const std::size_t m = pts.size();
        std::vector<bool> keep(m, false);
        for (std::size_t i = 0; i < m; ++i)
            if (inside(pts[i].x, pts[i].y)) {
                keep[i] = true;
                if (i > 0) keep[i - 1] = true;
                if (i + 1 < m) keep[i + 1] = true;
            }
        std::string run;
        std::size_t count = 0;
        auto flush = [&] {
            if (count >= 2) s += "<polyline points=\"" + run + "\"/>\n";
            run.clear();
            count = 0;
        };
        for (std::size_t i = 0; i < m; ++i) {
            if (!keep[i]) {
                flush();
                continue;
            }
            if (count) run += " ";
            run += fixed(px(pts[i].x)) + "," + fixed(py(pts[i].y));
            ++count;
        }
        if (c.closed && m > 2 && keep[0] && keep[m - 1] && count) {
            run += " " + fixed(px(pts[0].x)) + "," + fixed(py(pts[0].y));
            ++count;
        }
        flush();
    }
    s += "</g>\n";

    if (!marks.empty()) {
        s += std::string("<g fill=\"") + kMarkColor + "\">\n";
        for (const auto& p : marks)
            if (inside(p.x, p.y)) s += "<circle cx=\"" + fixed(px(p.x)) + "\" cy=\"" + fixed(py(p.y)) + "\" r=\"4\"/>\n";
        s += "</g>\n";
    }
    s += "</svg>\n";
    return s;
}

}  // namespace amoeba::io
