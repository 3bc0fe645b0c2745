#include "amoeba/contour.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "amoeba/errors.hpp"
#include "amoeba/log.hpp"
#include "amoeba/parallel.hpp"

namespace amoeba {

namespace {

// sin and cos of a*pi/d for a in [0, 2d), d even.
std::pair<double, double> sincos_reduced(long long a, long long d) {
    if (a >= d) {
        const auto [s, c] = sincos_reduced(a - d, d);
        return {-s, -c};
    }
    if (2 * a > d) {
        const auto [s, c] = sincos_reduced(d - a, d);
        return {s, -c};
    }
    if (2 * a == d) return {1.0, 0.0};
    if (4 * a > d) {
        const auto [s, c] = sincos_reduced(d / 2 - a, d);
        return {c, s};
    }
    if (4 * a == d) return {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2};
    const double t = std::numbers::pi * static_cast<double>(a) / static_cast<double>(d);
    return {std::sin(t), std::cos(t)};
}

struct SliceResult {
    std::vector<ContourPoint> points;
    bool failed = false;
};

double log_distance(const ContourPoint& a, const ContourPoint& b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Largest argument change of the source coordinates between two points.
double angle_jump(const ContourPoint& a, const ContourPoint& b) {
    return std::max(std::abs(std::arg(b.z / a.z)), std::abs(std::arg(b.w / a.w)));
}

constexpr double kMaxAngleJump = std::numbers::pi / 2;

bool same_point(const ContourPoint& a, const ContourPoint& b) {
    return a.slice == b.slice && std::abs(a.z - b.z) <= 1e-12 * std::abs(a.z) &&
           std::abs(a.w - b.w) <= 1e-12 * std::abs(a.w);
}

std::vector<ContourPoint> deduplicate(std::span<const ContourPoint> points) {
    std::vector<ContourPoint> out;
    for (const auto& p : points)
        if (std::none_of(out.begin(), out.end(), [&](const ContourPoint& q) { return same_point(p, q); }))
            out.push_back(p);
    return out;
}

std::vector<std::vector<int>> by_slice(const std::vector<ContourPoint>& pts, int n) {
    std::vector<std::vector<int>> slices(static_cast<std::size_t>(n));
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        const int s = pts[i].slice;
        if (s < 0 || s >= n) throw DomainError("chain_points: slice index outside [0, phi_steps)");
        slices[s].push_back(i);
    }
    return slices;
}

int infer_steps(std::span<const ContourPoint> points, int phi_steps) {
    if (phi_steps > 0) return phi_steps;
    int top = 0;
    for (const auto& p : points) top = std::max(top, p.slice + 1);
    return top;
}

}  // namespace

std::pair<double, double> sincos_pi_fraction(long long k, long long n) {
    if (n <= 0) throw DomainError("sincos_pi_fraction: n must be positive");
    const long long d = 2 * n;
    long long a = (2 * k) % (2 * d);
    if (a < 0) a += 2 * d;
    return sincos_reduced(a, d);
}

ContourTrace trace_contour(const LaurentPolynomial& p, int phi_steps, unsigned threads) {
    if (p.dimension() != 2) throw DomainError("trace_contour: plane curves only");
    if (p.is_zero() || p.is_monomial()) throw DegenerateError("trace_contour: monomial or zero polynomial");
    if (phi_steps < 16) throw DomainError("trace_contour: phi_steps must be >= 16");

    const LaurentPolynomial lz = log_derivative(p, 0);
    const LaurentPolynomial lw = log_derivative(p, 1);
    const LogGradient grad(p);
    TorusSolveOptions opts;
    opts.max_log = kMaxLogModulus;

    auto slices = parallel_map(
        static_cast<std::size_t>(phi_steps),
        [&](std::size_t k) {
            SliceResult out;
            const auto [s, c] = sincos_pi_fraction(static_cast<long long>(k), phi_steps);
            const LaurentPolynomial g = lz * Complex(s) - lw * Complex(c);
            if (g.is_zero()) {
                out.failed = true;
                return out;
            }
            std::vector<TorusPoint2> sols;
            try {
                sols = solve_torus_system(p, g, opts);
            } catch (const DegenerateError&) {
                out.failed = true;
                return out;
            } catch (const NumericalError&) {
                out.failed = true;
                return out;
            }
            const double phi = std::numbers::pi * static_cast<double>(k) / phi_steps;
            int index = 0;
            for (const auto& sol : sols) {
                const std::array<Complex, 2> pt{sol.z, sol.w};
                double crit;
                try {
                    crit = criticality_residual(grad, pt);
                } catch (const DegenerateError&) {
                    continue;
                }
                if (crit > kCriticalityTolerance) continue;
                ContourPoint cp;
                cp.phi = phi;
                cp.z = sol.z;
                cp.w = sol.w;
                cp.x = std::log(std::abs(sol.z));
                cp.y = std::log(std::abs(sol.w));
                if (std::abs(cp.x) > kMaxLogModulus || std::abs(cp.y) > kMaxLogModulus) continue;
                cp.slice = static_cast<int>(k);
                cp.fiber_index = index++;
                cp.residual = std::max(sol.residual, crit);
                out.points.push_back(cp);
            }
            return out;
        },
        threads);

    ContourTrace trace;
    trace.phi_steps = phi_steps;
    for (int k = 0; k < phi_steps; ++k) {
        auto& s = slices[k];
        if (s.failed)
            trace.failed_slices.push_back(k);
        else if (s.points.empty())
            trace.empty_slices.push_back(k);
        trace.points.insert(trace.points.end(), s.points.begin(), s.points.end());
    }
    if (!trace.failed_slices.empty())
        log::info("trace_contour: " + std::to_string(trace.failed_slices.size()) + " of " +
                  std::to_string(phi_steps) + " slices failed");
    if (2 * trace.failed_slices.size() > static_cast<std::size_t>(phi_steps))
        throw NumericalError("trace_contour: more than half of the slices failed",
                             std::numeric_limits<double>::infinity());
    return trace;
}

double default_chain_radius(std::span<const ContourPoint> points, int phi_steps) {
    const int n = infer_steps(points, phi_steps);
    if (n == 0) return 0.0;
    const std::vector<ContourPoint> pts(points.begin(), points.end());
    const auto slices = by_slice(pts, n);
    std::vector<double> steps;
    for (int s = 0; s < n; ++s) {
        const auto& next = slices[(s + 1) % n];
        for (int i : slices[s]) {
            double best = std::numeric_limits<double>::infinity();
            for (int j : next)
                if (j != i && angle_jump(pts[i], pts[j]) <= kMaxAngleJump)
                    best = std::min(best, log_distance(pts[i], pts[j]));
            if (std::isfinite(best)) steps.push_back(best);
        }
    }
    if (steps.empty()) return 0.0;
    const auto mid = steps.begin() + static_cast<std::ptrdiff_t>(steps.size() / 2);
    std::nth_element(steps.begin(), mid, steps.end());
    return 4.0 * *mid;
}

std::vector<ContourCurve> chain_points(std::span<const ContourPoint> points, int phi_steps, double radius) {
    const std::vector<ContourPoint> pts = deduplicate(points);
    const int n = infer_steps(pts, phi_steps);
    if (pts.empty()) return {};
    if (radius <= 0.0) radius = default_chain_radius(pts, n);

    const auto slices = by_slice(pts, n);
    const int m = static_cast<int>(pts.size());
    std::vector<int> next(m, -1), prev(m, -1);
    std::vector<double> incoming(m, 0.0);

    // Distance from each point to its nearest compatible successor, so steps that
    // shrink away from a tentacle are admitted as well as steps that grow into one.
    std::vector<double> ahead(m, 0.0);
    if (n > 1)
        for (int j = 0; j < m; ++j) {
            double best = std::numeric_limits<double>::infinity();
            for (int k : slices[(pts[j].slice + 1) % n])
                if (k != j && angle_jump(pts[j], pts[k]) <= kMaxAngleJump)
                    best = std::min(best, log_distance(pts[j], pts[k]));
            if (std::isfinite(best)) ahead[j] = best;
        }

    auto link_slices = [&](int s, int t) {
        struct Cand {
            double d;
            int i, j;
        };
        std::vector<Cand> cands;
        for (int i : slices[s]) {
            if (next[i] >= 0) continue;
            const double r = std::max(radius, 4.0 * incoming[i]);
            for (int j : slices[t]) {
                if (prev[j] >= 0 || j == i) continue;
                const double d = log_distance(pts[i], pts[j]);
                if (d <= std::max(r, 4.0 * ahead[j]) && angle_jump(pts[i], pts[j]) <= kMaxAngleJump) cands.push_back({d, i, j});
            }
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.d != b.d) return a.d < b.d;
            if (a.i != b.i) return a.i < b.i;
            return a.j < b.j;
        });
        for (const auto& c : cands) {
            if (next[c.i] >= 0 || prev[c.j] >= 0) continue;
            next[c.i] = c.j;
            prev[c.j] = c.i;
            incoming[c.j] = c.d;
        }
    };

    for (int s = 0; s + 1 < n; ++s) link_slices(s, s + 1);
    if (n > 1) link_slices(n - 1, 0);

    // Starting order: slice, then position in the deduplicated input.
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return pts[a].slice < pts[b].slice; });

    std::vector<ContourCurve> curves;
    std::vector<bool> seen(m, false);
    for (int start : order) {
        if (prev[start] >= 0 || seen[start]) continue;
        ContourCurve c;
        for (int i = start; i >= 0; i = next[i]) {
            seen[i] = true;
            c.points.push_back(pts[i]);
        }
        curves.push_back(std::move(c));
    }
    for (int start : order) {
        if (seen[start]) continue;
        ContourCurve c;
        c.closed = true;
        int i = start;
        do {
            seen[i] = true;
            c.points.push_back(pts[i]);
            i = next[i];
        } while (i != start);
        curves.push_back(std::move(c));
    }
    return curves;
}

std::vector<ContourPoint> cusp_candidates(const ContourCurve& curve, double velocity_tol) {
    std::vector<ContourPoint> out;
    const int m = static_cast<int>(curve.points.size());
    if (m < 3) return out;
    for (int i = 0; i < m; ++i) {
        if (!curve.closed && (i == 0 || i == m - 1)) continue;
        const ContourPoint& a = curve.points[(i + m - 1) % m];
        const ContourPoint& b = curve.points[(i + 1) % m];
        double dphi = std::fmod(b.phi - a.phi, std::numbers::pi);
        if (dphi < 0) dphi += std::numbers::pi;
        if (dphi <= 0.0) continue;
        const double image = std::hypot(b.x - a.x, b.y - a.y) / dphi;
        const double source = std::hypot(std::abs(std::log(b.z / a.z)), std::abs(std::log(b.w / a.w))) / dphi;
        if (image < velocity_tol && source >= velocity_tol) out.push_back(curve.points[i]);
    }
    return out;
}

AmoebaSample sample_amoeba(const LaurentPolynomial& p, const Window& window, const AmoebaGrid& grid,
                           unsigned threads) {
    if (p.dimension() != 2) throw DomainError("sample_amoeba: plane curves only");
    if (!(window.xmin <= window.xmax) || !(window.ymin <= window.ymax))
        throw DomainError("sample_amoeba: empty window");
    if (grid.nx < 1 || grid.ntheta < 1) throw DomainError("sample_amoeba: grid sizes must be positive");

    struct Column {
        std::vector<std::pair<double, double>> points;
        int skipped = 0;
    };
    const int kept[] = {1};
    auto columns = parallel_map(
        static_cast<std::size_t>(grid.nx),
        [&](std::size_t ix) {
            Column col;
            const double x = grid.nx == 1 ? window.xmin
                                          : window.xmin + (window.xmax - window.xmin) * static_cast<double>(ix) /
                                                              (grid.nx - 1);
            for (int j = 0; j < grid.ntheta; ++j) {
                const double theta = grid.theta0 + 2.0 * std::numbers::pi * j / grid.ntheta;
                const Complex z = std::polar(std::exp(x), theta);
                const std::array<Complex, 2> at{z, Complex{1.0, 0.0}};
                const LaurentPolynomial q = restrict_to(p, kept, at);
                if (q.is_zero() || (q.is_monomial() && q.terms().begin()->first[0] == 0)) {
                    ++col.skipped;
                    continue;
                }
                const UnivariatePolynomial u = UnivariatePolynomial::from_laurent(q);
                if (u.degree() < 1) continue;
                for (const Complex& w : aberth_roots(u).values) {
                    if (w == Complex{} || !std::isfinite(std::abs(w))) continue;
                    const std::array<Complex, 2> pt{z, w};
                    if (!(relative_residual(p, pt) <= 1e-8)) continue;
                    const double y = std::log(std::abs(w));
                    if (y < window.ymin || y > window.ymax) continue;
                    col.points.emplace_back(x, y);
                }
            }
            return col;
        },
        threads);

    AmoebaSample sample;
    sample.window = window;
    sample.grid = grid;
    for (auto& c : columns) {
        sample.points.insert(sample.points.end(), c.points.begin(), c.points.end());
        sample.skipped_slices += c.skipped;
    }
    return sample;
}

}  // namespace amoeba
