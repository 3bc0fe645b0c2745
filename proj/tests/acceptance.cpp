// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "amoeba/bounds.hpp"
#include "amoeba/contour.hpp"
#include "amoeba/gaussmap.hpp"
#include "amoeba/grassmann.hpp"
#include "amoeba/numsolve.hpp"
#include "amoeba/polytope.hpp"
#include "amoeba/random.hpp"
#include "amoeba/rdegree.hpp"

using namespace amoeba;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

LaurentPolynomial poly2(std::vector<std::pair<ExponentVector, Complex>> terms) { return LaurentPolynomial(2, terms); }

// 1. P = 1 + z^m + w^m, 32 directions, estimate m^2 within 10 s each.
Outcome criterion1() {
    Outcome o;
    for (int m = 1; m <= 3; ++m) {
        const auto p = poly2({{{0, 0}, 1.0}, {{m, 0}, 1.0}, {{0, m}, 1.0}});
        const auto t0 = Clock::now();
        const auto g = gauss_degree_estimate(p, 32, 42);
        const double dt = seconds_since(t0);
        o.detail += fmt("m=%d: %d (%.2fs) ", m, g.estimate, dt);
        if (g.estimate != m * m || dt > 10.0) o.pass = false;
    }
    return o;
}

// 2. Random full-support curves of degree 2 and 3. Oracle: per-fiber root count from a
// resultant of P and the fiber equation, counted directly here.
int oracle_fiber(const LaurentPolynomial& p, Complex a, Complex b) {
    const auto g = log_derivative(p, 0) * LaurentPolynomial(2, {{{0, 0}, b}}) -
                   log_derivative(p, 1) * LaurentPolynomial(2, {{{0, 0}, a}});
    const auto res = sylvester_resultant(p, g, 1);
    const auto roots = univariate_roots(res);
    int count = 0;
    for (const auto& r : roots.roots) {
        if (std::abs(r.value) < 1e-12) continue;
        const Complex z = r.value;
        const Complex pt[2] = {z, 1.0};
        const int kept[1] = {1};
        const auto pw = UnivariatePolynomial::from_laurent(restrict_to(p, kept, pt));
        for (const auto& w : univariate_roots(pw).roots) {
            if (std::abs(w.value) < 1e-12) continue;
            const Complex q[2] = {z, w.value};
            if (relative_residual(g, q) <= 1e-6) count += std::min(r.multiplicity, w.multiplicity);
        }
    }
    return count;
}

Outcome criterion2() {
    Outcome o;
    for (int d = 2; d <= 3; ++d)
        for (int s = 0; s < 3; ++s) {
            const auto p = random_polynomial(dense_support(2, d), 1000 + 10 * d + s);
            const auto g = gauss_degree_estimate(p, 32, 42);
            CounterRng r(7, d * 10 + s);
            const Complex a = std::polar(r.uniform(0.5, 2.0), r.phase());
            const Complex b = std::polar(r.uniform(0.5, 2.0), r.phase());
            const int oracle = oracle_fiber(p, a, b);
            o.detail += fmt("d=%d seed %d: %d/oracle %d ", d, s, g.estimate, oracle);
            if (g.estimate != d * d || oracle != d * d) o.pass = false;
        }
    return o;
}

// 3. MV(d simplex, e simplex) = d e; oracle: (V(A+B) - V(A) - V(B)) / 2 with normalized volumes.
Outcome criterion3() {
    Outcome o;
    int checked = 0;
    for (int d = 1; d <= 5; ++d)
        for (int e = 1; e <= 5; ++e) {
            const LatticePolytope A = standard_simplex(2, d), B = standard_simplex(2, e);
            const LatticePolytope pair[2] = {A, B};
            const auto mv = mixed_volume(pair);
            const auto oracle =
                (normalized_volume(minkowski_sum(A, B)) - normalized_volume(A) - normalized_volume(B)) / 2;
            if (mv != d * e || oracle != d * e) {
                o.pass = false;
                o.detail += fmt("(%d,%d): %lld ", d, e, static_cast<long long>(mv));
            }
            ++checked;
        }
    o.detail += fmt("%d pairs checked", checked);
    return o;
}

// 4. Multilinearity on random 4D pairs and the scaling law on simplices.
Outcome criterion4() {
    Outcome o;
    CounterRng rng(2024, 4);
    int equal = 0;
    for (int t = 0; t < 10; ++t) {
        std::vector<LatticePolytope> P;
        while (P.size() < 2) {
            {
                std::vector<LatticePoint> pts;
                const int k = 5 + static_cast<int>(rng.uniform(0.0, 4.0));
                for (int i = 0; i < k; ++i) {
                    LatticePoint v(4);
                    for (auto& x : v) x = static_cast<std::int64_t>(rng.uniform(0.0, 4.0));
                    pts.push_back(v);
                }
                auto poly = LatticePolytope::from_points(4, pts);
                if (poly.affine_dimension() == 4) P.push_back(std::move(poly));
            }
        }
        const auto c = mv_codim2_check(P[0], P[1]);
        if (c.equal && c.lhs == c.rhs) ++equal;
        else o.pass = false;
    }
    o.detail += fmt("random pairs %d/10 equal; ", equal);
    const auto simplex = standard_simplex(4, 1);
    int scaled = 0;
    for (int d1 = 1; d1 <= 3; ++d1)
        for (int d2 = 1; d2 <= 3; ++d2) {
            const auto c = mv_codim2_check(simplex.dilated(d1), simplex.dilated(d2), ScalingHint{simplex, d1, d2});
            const std::int64_t expect = static_cast<std::int64_t>(d1) * d2 * (d1 + d2) * (d1 + d2);
            if (c.equal && c.lhs == expect && c.rhs == expect && c.scaling_holds.value_or(false)) ++scaled;
            else o.pass = false;
        }
    o.detail += fmt("scaled simplices %d/9", scaled);
    return o;
}

// 5. Pluecker suite.
Outcome criterion5() {
    Outcome o;
    const auto t0 = Clock::now();
    double worst = 0.0;
    int bad_degree = 0, bad_support = 0, short_samples = 0, evaluated = 0;
    for (int t = 0; t < 20; ++t) {
        const int d1 = 1 + t % 3, d2 = 1 + (t / 3) % 3;
        const auto v = CompleteIntersection2::make(random_polynomial(dense_support(4, d1), 5000 + t),
                                                   random_polynomial(dense_support(4, d2), 6000 + t));
        const auto pc = pluecker_coordinates(v);
        std::set<ExponentVector> sums;
        for (const auto& [a, ca] : v.f1.terms())
            for (const auto& [b, cb] : v.f2.terms()) {
                ExponentVector s(4);
                for (int k = 0; k < 4; ++k) s[k] = a[k] + b[k];
                sums.insert(s);
            }
        for (const auto& [key, q] : pc.p) {
            if (q.is_zero()) continue;
            if (total_degree(q) != d1 + d2) ++bad_degree;
            for (const auto& e : q.support())
                if (!sums.count(e)) ++bad_support;
        }
        const auto vs = sample_variety_points(v, 100, 77 + t);
        if (vs.points.size() < 100) ++short_samples;
        for (const auto& z : vs.points) {
            worst = std::max(worst, pluecker_relation_residual(pc, z));
            ++evaluated;
        }
    }
    const double dt = seconds_since(t0);
    o.pass = bad_degree == 0 && bad_support == 0 && short_samples == 0 && worst <= 1e-10 && dt <= 60.0;
    o.detail = fmt("degree mismatches %d, support escapes %d, pairs short of 100 points %d, %d points, max residual "
                   "%.2e, %.1fs",
                   bad_degree, bad_support, short_samples, evaluated, worst, dt);
    return o;
}

// 6. Q structure over 50 random curves with d <= 4; oracle: Im((w P_w) conj(z P_z)) pointwise.
Outcome criterion6() {
    Outcome o;
    int diagonal = 0, too_high = 0, at_2d = 0, value_mismatch = 0;
    CounterRng rng(66);
    for (int t = 0; t < 50; ++t) {
        const int d = 1 + t % 4;
        const auto p = random_polynomial(dense_support(2, d), 9000 + t);
        const auto q = q_polynomial(p, 1);
        for (const auto& [ab, c] : q.terms)
            if (ab.first == ab.second) ++diagonal;
        const auto deg = q.total_degree();
        if (deg > 2 * d) ++too_high;
        if (deg == 2 * d) ++at_2d;
        for (int k = 0; k < 4; ++k) {
            const Complex z[2] = {std::polar(rng.uniform(0.5, 2.0), rng.phase()), std::polar(rng.uniform(0.5, 2.0), rng.phase())};
            const Complex zp = evaluate(log_derivative(p, 0), z), wp = evaluate(log_derivative(p, 1), z);
            const double expect = std::imag(wp * std::conj(zp));
            const double scale = std::abs(wp) * std::abs(zp) + 1e-300;
            if (std::abs(q.evaluate(z).real() - expect) > 1e-10 * scale) ++value_mismatch;
        }
    }
    o.pass = diagonal == 0 && too_high == 0 && value_mismatch == 0;
    o.detail = fmt("diagonal terms %d, degree > 2d %d, value mismatches %d; degree 2d observed in %d/50 "
                   "(stated claim 2d-1, recorded as informational)",
                   diagonal, too_high, value_mismatch, at_2d);
    return o;
}

// 7. Criticality at real points of real curves.
Outcome criterion7() {
    Outcome o;
    CounterRng rng(77);
    int found = 0, attempts = 0;
    double worst = 0.0;
    while (found < 100 && attempts < 10000) {
        ++attempts;
        const int d = 2 + attempts % 2;
        std::vector<std::pair<ExponentVector, Complex>> terms;
        for (const auto& e : dense_support(2, d)) terms.push_back({e, Complex(rng.uniform(-2.0, 2.0), 0.0)});
        const LaurentPolynomial p(2, terms);
        const double x = rng.uniform(-3.0, 3.0);
        if (std::abs(x) < 1e-3) continue;
        const Complex pt[2] = {x, 1.0};
        const int kept[1] = {1};
        const auto pw = UnivariatePolynomial::from_laurent(restrict_to(p, kept, pt));
        for (const auto& r : univariate_roots(pw).roots) {
            const Complex w = r.value;
            if (std::abs(w) < 1e-6 || std::abs(w.imag()) > 1e-9 * std::abs(w) || r.multiplicity != 1) continue;
            const Complex z[2] = {x, w.real()};
            if (relative_residual(p, z) > 1e-8) continue;
            worst = std::max(worst, criticality_residual(p, z));
            if (++found == 100) break;
        }
    }
    o.pass = found == 100 && worst <= 1e-12;
    o.detail = fmt("%d real points, max residual %.2e", found, worst);
    return o;
}

// 8. Line contour against the closed-form arcs.
struct Graph {
    // v = f(u), with (u, v) = (x, y) or swapped.
    std::function<double(double)> f;
    bool swapped;
    double umin, umax;
};

std::vector<Graph> line_arcs() {
    const double ln2 = std::log(2.0);
    auto lower = [](double u) { return std::log1p(-std::exp(u)); };
    auto upper = [](double u) { return std::log1p(std::exp(u)); };
    return {{lower, false, -4.0, -ln2}, {lower, true, -4.0, -ln2}, {upper, false, -4.0, 4.0}, {upper, true, -4.0, 4.0}};
}

double segment_distance(double px, double py, double ax, double ay, double bx, double by) {
    const double dx = bx - ax, dy = by - ay;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((px - ax) * dx + (py - ay) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(px - ax - t * dx, py - ay - t * dy);
}

// Distance from (x, y) to the union of arcs; each graph has |f'| <= 1, so the nearest
// point lies within the vertical offset of u.
double distance_to_arcs(double x, double y) {
    double best = 1e300;
    for (const auto& g : line_arcs()) {
        const double u = g.swapped ? y : x, v = g.swapped ? x : y;
        const double uc = std::clamp(u, g.umin, g.umax);
        const double r = std::hypot(u - uc, v - g.f(uc)) + 1e-9;
        const double lo = std::max(g.umin, u - r), hi = std::min(g.umax, u + r);
        const int steps = std::max(16, static_cast<int>((hi - lo) / 1e-5));
        double pu = lo, pv = g.f(lo);
        for (int i = 1; i <= steps; ++i) {
            const double cu = lo + (hi - lo) * i / steps, cv = g.f(cu);
            best = std::min(best, segment_distance(u, v, pu, pv, cu, cv));
            pu = cu;
            pv = cv;
        }
    }
    return best;
}

Outcome criterion8() {
    Outcome o;
    const auto p = poly2({{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}});
    const auto trace = trace_contour(p, 2048);
    const auto chains = chain_points(trace.points, 2048);
    auto inside = [](double x, double y) { return std::abs(x) <= 3.0 && std::abs(y) <= 3.0; };

    double forward = 0.0;
    int traced_inside = 0;
    for (const auto& pt : trace.points)
        if (inside(pt.x, pt.y)) {
            forward = std::max(forward, distance_to_arcs(pt.x, pt.y));
            ++traced_inside;
        }

    double backward = 0.0;
    int arc_samples = 0;
    for (const auto& g : line_arcs())
        for (double u = g.umin; u <= g.umax; u += 1e-3) {
            const double v = g.f(u);
            const double x = g.swapped ? v : u, y = g.swapped ? u : v;
            if (!inside(x, y)) continue;
            ++arc_samples;
            double best = 1e300;
            for (const auto& c : chains)
                for (std::size_t i = 0; i + 1 < c.points.size(); ++i)
                    best = std::min(best, segment_distance(x, y, c.points[i].x, c.points[i].y, c.points[i + 1].x,
                                                           c.points[i + 1].y));
            backward = std::max(backward, best);
        }

    const int crossings = crossing_count(chains, AffineLine::vertical(-1.0));
    const double hausdorff = std::max(forward, backward);
    o.pass = hausdorff <= 1e-3 && crossings == 2 && traced_inside > 0;
    o.detail = fmt("Hausdorff %.2e (traced->arcs %.2e over %d points, arcs->polylines %.2e over %d samples), "
                   "%zu chains, x=-1 crossings %d",
                   hausdorff, forward, traced_inside, backward, arc_samples, chains.size(), crossings);
    return o;
}

// 9. LSS closed form against an independent big-integer evaluation; monotone ratio.
BigInt lss_oracle(int n, int d) {
    BigInt r = 1;
    const int e2 = 2 * n + (n - 1) * (n - 2) / 2;
    for (int i = 0; i < e2; ++i) r *= 2;
    for (int i = 0; i < n + 1; ++i) r *= d;
    const BigInt f = BigInt(4) * d * n + 2 * (n - 1) * (n - 1) - 1;
    for (int i = 0; i < n - 1; ++i) r *= f;
    return r;
}

Outcome criterion9() {
    Outcome o;
    const BigInt v = lss_bound(2, 2);
    o.pass = v == 2176 && lss_oracle(2, 2) == 2176;
    int oracle_mismatch = 0, decreases = 0;
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 50; ++d) {
            if (lss_bound(n, d) != lss_oracle(n, d)) ++oracle_mismatch;
            if (d < 50 && lss_bound(n, d + 1) * bezout_bound(n, d) < lss_bound(n, d) * bezout_bound(n, d + 1))
                ++decreases;
        }
    o.pass = o.pass && oracle_mismatch == 0 && decreases == 0;
    o.detail = "lss(2,2) = " + v.str() + fmt(", oracle mismatches %d, ratio decreases %d", oracle_mismatch, decreases);
    return o;
}

// 10. Empirical real degree of dense conics and cubics; the line must yield a violation finding.
Outcome criterion10() {
    Outcome o;
    RDegreeSettings s;
    s.num_lines = 512;
    o.detail = fmt("phi_steps %d, %d lines; ", s.phi_steps, s.num_lines);
    for (int d = 2; d <= 3; ++d) {
        const long long bound = static_cast<long long>(d) * (2 * d - 1);
        for (int k = 0; k < 3; ++k) {
            const auto p = random_polynomial(dense_support(2, d), 3000 + 10 * d + k);
            const auto est = estimate_rdegree(p, s);
            o.detail += fmt("d=%d seed %d: %d/%lld ", d, k, est.max_crossings, bound);
            if (est.max_crossings > bound) o.pass = false;
        }
    }
    ReportSettings rs;
    const auto r = compare_report(poly2({{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}}), rs);
    bool violation = false;
    for (const auto& f : r.flags)
        if (f.kind == "bound_violation" && f.bound == "bezout" && f.observed >= 2) violation = true;
    o.detail += violation ? "; 1+z+w: bound_violation finding emitted" : "; 1+z+w: no violation finding";
    o.pass = o.pass && violation;
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"gauss degree of 1+z^m+w^m equals m^2", criterion1},
        {"dense curve gauss degree equals d^2", criterion2},
        {"MV(d simplex, e simplex) = d e", criterion3},
        {"codim-2 multilinearity and scaling", criterion4},
        {"Pluecker degrees, supports and quadric", criterion5},
        {"Q diagonal cancellation and degree <= 2d", criterion6},
        {"criticality at real points", criterion7},
        {"line contour ground truth", criterion8},
        {"LSS formula and bound ordering", criterion9},
        {"empirical real degree vs d(2d-1), line finding", criterion10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.pass) ++failures;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
