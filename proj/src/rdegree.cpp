#include "amoeba/rdegree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "amoeba/errors.hpp"
#include "amoeba/log.hpp"
#include "amoeba/parallel.hpp"
#include "amoeba/random.hpp"

namespace amoeba {

AffineLine AffineLine::through(std::array<double, 2> p, std::array<double, 2> q) {
    const double dx = q[0] - p[0], dy = q[1] - p[1];
    const double len = std::hypot(dx, dy);
    if (len == 0.0) return {p, {1.0, 0.0}};
    return {p, {dx / len, dy / len}};
}

double AffineLine::signed_distance(double x, double y) const {
    const auto n = normal();
    return n[0] * (x - base[0]) + n[1] * (y - base[1]);
}

namespace {

// Returns -1 when some vertex is within eps of the line.
int count_once(std::span<const ContourCurve> curves, const AffineLine& line, double eps) {
    int total = 0;
    for (const auto& c : curves) {
        const auto& pts = c.points;
        if (pts.empty()) continue;
        std::vector<double> s;
        s.reserve(pts.size());
        for (const auto& p : pts) {
            const double d = line.signed_distance(p.x, p.y);
            if (std::abs(d) <= eps) return -1;
            s.push_back(d);
        }
        for (std::size_t i = 1; i < s.size(); ++i)
            if ((s[i - 1] < 0) != (s[i] < 0)) ++total;
        if (c.closed && s.size() > 2 && ((s.back() < 0) != (s.front() < 0))) ++total;
    }
    return total;
}

}  // namespace

int crossing_count(std::span<const ContourCurve> curves, const AffineLine& line, double eps) {
    const auto n = line.normal();
    for (int attempt = 0; attempt <= 8; ++attempt) {
        // Offsets 0, +1, -1, +2, -2, ... in units of 3 eps.
        const int k = (attempt + 1) / 2;
        const double off = (attempt % 2 == 1 ? 1.0 : -1.0) * 3.0 * eps * k;
        AffineLine shifted = line;
        shifted.base[0] += off * n[0];
        shifted.base[1] += off * n[1];
        const int c = count_once(curves, shifted, eps);
        if (c >= 0) return c;
    }
    throw NumericalError("crossing_count: line stays non-transversal after 8 perturbations", eps);
}

RDegreeEstimate estimate_rdegree(std::span<const ContourCurve> curves, const RDegreeSettings& settings) {
    if (settings.num_lines < 0 || settings.axis_lines < 0) throw DomainError("estimate_rdegree: negative line count");
    if (!(settings.eps > 0.0)) throw DomainError("estimate_rdegree: eps must be positive");

    RDegreeEstimate est;
    est.settings = settings;
    est.curves = curves.size();
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    for (const auto& c : curves)
        for (const auto& p : c.points) {
            ++est.points;
            if (std::abs(p.x) > settings.clip || std::abs(p.y) > settings.clip) continue;
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    if (!std::isfinite(xmin)) {
        est.no_points = true;
        log::warn("estimate_rdegree: no contour points inside the clip box");
        return est;
    }
    est.bbox = {xmin, xmax, ymin, ymax};

    for (int i = 0; i < settings.axis_lines; ++i) {
        const double t = (i + 0.5) / settings.axis_lines;
        est.lines.push_back(AffineLine::vertical(xmin + t * (xmax - xmin)));
    }
    for (int i = 0; i < settings.axis_lines; ++i) {
        const double t = (i + 0.5) / settings.axis_lines;
        est.lines.push_back(AffineLine::horizontal(ymin + t * (ymax - ymin)));
    }
    const CounterRng base(settings.seed, 0x4de9ULL);
    for (int i = 0; i < settings.num_lines; ++i) {
        CounterRng r = base.substream(static_cast<std::uint64_t>(i));
        const std::array<double, 2> p{r.uniform(xmin, xmax), r.uniform(ymin, ymax)};
        const std::array<double, 2> q{r.uniform(xmin, xmax), r.uniform(ymin, ymax)};
        est.lines.push_back(AffineLine::through(p, q));
    }

    est.counts = parallel_map(
        est.lines.size(),
        [&](std::size_t i) {
            try {
                return crossing_count(curves, est.lines[i], settings.eps);
            } catch (const NumericalError&) {
                return -1;
            }
        },
        settings.threads);

    est.max_crossings = 0;
    bool have = false;
    for (std::size_t i = 0; i < est.counts.size(); ++i) {
        const int c = est.counts[i];
        if (c < 0) {
            ++est.non_transversal;
            continue;
        }
        ++est.histogram[c];
        if (!have || c > est.max_crossings) {
            est.max_crossings = c;
            est.argmax = est.lines[i];
            have = true;
        }
    }
    return est;
}

RDegreeEstimate estimate_rdegree(const LaurentPolynomial& p, const RDegreeSettings& settings) {
    const ContourTrace trace = trace_contour(p, settings.phi_steps, settings.threads);
    const auto curves = chain_points(trace.points, trace.phi_steps);
    return estimate_rdegree(curves, settings);
}

}  // namespace amoeba
