#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "amoeba/contour.hpp"
#include "amoeba/errors.hpp"

using namespace amoeba;

namespace {

LaurentPolynomial line() { return LaurentPolynomial(2, {{{0, 0}, 1.0}, {{1, 0}, 1.0}, {{0, 1}, 1.0}}); }

// Distance of (x, y) from the nearest of the three boundary arcs of the line amoeba,
// measured through the implicit equations.
double arc_defect(double x, double y) {
    const double a = std::abs(std::exp(x) + std::exp(y) - 1.0) / std::max(1.0, std::exp(std::max(x, y)));
    const double b = std::abs(std::exp(y) - std::exp(x) - 1.0) / std::max(1.0, std::exp(y));
    const double c = std::abs(std::exp(x) - std::exp(y) - 1.0) / std::max(1.0, std::exp(x));
    return std::min({a, b, c});
}

}  // namespace

TEST_CASE("sincos_pi_fraction is exact at multiples of pi/4") {
    for (long long n : {16LL, 64LL, 2048LL}) {
        CHECK(sincos_pi_fraction(0, n) == std::pair<double, double>{0.0, 1.0});
        CHECK(sincos_pi_fraction(n / 2, n) == std::pair<double, double>{1.0, 0.0});
        const auto [s1, c1] = sincos_pi_fraction(n / 4, n);
        CHECK(s1 == c1);
        const auto [s3, c3] = sincos_pi_fraction(3 * n / 4, n);
        CHECK(s3 == -c3);
    }
    for (int k = 0; k < 37; ++k) {
        const auto [s, c] = sincos_pi_fraction(k, 37);
        CHECK(std::abs(s - std::sin(k * std::numbers::pi / 37)) < 1e-15);
        CHECK(std::abs(c - std::cos(k * std::numbers::pi / 37)) < 1e-15);
    }
}

TEST_CASE("trace_contour examples on the line") {
    const int n = 64;
    const ContourTrace t = trace_contour(line(), n);
    CHECK(t.failed_slices.empty());

    int at_quarter = 0;
    for (const auto& p : t.points) {
        if (p.slice == n / 4) {
            ++at_quarter;
            CHECK(std::abs(p.x + std::log(2.0)) < 1e-12);
            CHECK(std::abs(p.y + std::log(2.0)) < 1e-12);
        }
        CHECK(p.slice != 0);
        CHECK(p.residual <= 1e-8);
        CHECK(std::abs(p.x - std::log(std::abs(p.z))) <= 1e-15 * std::max(1.0, std::abs(p.x)));
        CHECK(std::abs(p.y - std::log(std::abs(p.w))) <= 1e-15 * std::max(1.0, std::abs(p.y)));
        CHECK(arc_defect(p.x, p.y) <= 1e-6);
    }
    CHECK(at_quarter == 1);
    CHECK(std::count(t.empty_slices.begin(), t.empty_slices.end(), 0) == 1);
    CHECK(std::count(t.empty_slices.begin(), t.empty_slices.end(), n / 2) == 1);

    CHECK_THROWS_AS(trace_contour(line(), 8), DomainError);
    CHECK_THROWS_AS(trace_contour(LaurentPolynomial(2, {{{1, 1}, 1.0}}), 64), DegenerateError);
}

TEST_CASE("symmetric polynomials give a swap-symmetric contour") {
    const LaurentPolynomial p(2, {{{0, 0}, 1.0}, {{2, 0}, 1.0}, {{0, 2}, 1.0}, {{1, 1}, Complex(0.5, 0.3)},
                                  {{1, 0}, 2.0}, {{0, 1}, 2.0}});
    const auto t = trace_contour(p, 128);
    REQUIRE_FALSE(t.points.empty());
    for (const auto& a : t.points) {
        double best = 1e300;
        for (const auto& b : t.points) best = std::min(best, std::hypot(a.x - b.y, a.y - b.x));
        CHECK(best <= 1e-6);
    }
}

TEST_CASE("contour points lie on verified amoeba points at their own angle") {
    const LaurentPolynomial p = random_polynomial(dense_support(2, 2), 3);
    const auto t = trace_contour(p, 64);
    REQUIRE_FALSE(t.points.empty());
    for (const auto& c : t.points) {
        if (std::abs(c.x) > 5.0 || std::abs(c.y) > 5.0) continue;
        const Window win{c.x, c.x, -50.0, 50.0};
        const AmoebaSample s = sample_amoeba(p, win, {1, 1, std::arg(c.z)}, 1);
        double best = 1e300;
        for (const auto& [x, y] : s.points) best = std::min(best, std::abs(y - c.y));
        CHECK(best <= 1e-6);
    }
}

TEST_CASE("chain_points on the line gives three open arcs") {
    const auto t = trace_contour(line(), 512);
    const auto chains = chain_points(t.points, t.phi_steps);
    CHECK(chains.size() == 3);
    for (const auto& c : chains) {
        CHECK_FALSE(c.closed);
        CHECK(c.points.size() > 50);
        for (std::size_t i = 1; i < c.points.size(); ++i) CHECK(c.points[i].phi > c.points[i - 1].phi);
    }

    // Duplicated input yields the same chains.
    std::vector<ContourPoint> doubled = t.points;
    doubled.insert(doubled.end(), t.points.begin(), t.points.end());
    const auto again = chain_points(doubled, t.phi_steps);
    REQUIRE(again.size() == chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) CHECK(again[i].points.size() == chains[i].points.size());

    // Removing one slice splits the chain through it.
    std::vector<ContourPoint> gapped;
    for (const auto& p : t.points)
        if (p.slice != 128) gapped.push_back(p);
    CHECK(chain_points(gapped, t.phi_steps).size() == 4);

    CHECK(chain_points(std::vector<ContourPoint>{}, 16).empty());
}

TEST_CASE("closed chains through the wraparound") {
    // Synthetic loop: one point per slice on a circle.
    std::vector<ContourPoint> pts;
    const int n = 32;
    for (int k = 0; k < n; ++k) {
        ContourPoint p;
        p.slice = k;
        p.phi = k * std::numbers::pi / n;
        const double a = 2.0 * p.phi;
        p.x = std::cos(a);
        p.y = std::sin(a);
        p.z = std::polar(std::exp(p.x), 0.1);
        p.w = std::polar(std::exp(p.y), 0.2);
        pts.push_back(p);
    }
    const auto chains = chain_points(pts, n);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].closed);
    CHECK(chains[0].points.size() == static_cast<std::size_t>(n));
}

TEST_CASE("refinement keeps chains with at least five points") {
    const LaurentPolynomial p = random_polynomial(dense_support(2, 2), 11);
    const auto coarse = trace_contour(p, 128);
    const auto fine = trace_contour(p, 256);
    const auto cc = chain_points(coarse.points, coarse.phi_steps);
    const auto fc = chain_points(fine.points, fine.phi_steps);
    for (const auto& c : cc) {
        if (c.points.size() < 5) continue;
        // Some fine chain contains a majority of this chain's points.
        std::size_t best = 0;
        for (const auto& f : fc) {
            std::size_t hits = 0;
            for (const auto& a : c.points)
                for (const auto& b : f.points)
                    if (std::abs(a.z - b.z) <= 1e-9 * std::abs(a.z) && std::abs(a.w - b.w) <= 1e-9 * std::abs(a.w)) {
                        ++hits;
                        break;
                    }
            best = std::max(best, hits);
        }
        CHECK(2 * best > c.points.size());
    }
}

TEST_CASE("cusp_candidates") {
    const auto t = trace_contour(line(), 512);
    for (const auto& c : chain_points(t.points, t.phi_steps)) CHECK(cusp_candidates(c, 1e-3).empty());

    // Image goes out and back while the source keeps moving.
    ContourCurve rev;
    const double xs[] = {0.0, 0.1, 0.2, 0.3, 0.2, 0.1, 0.0};
    for (int i = 0; i < 7; ++i) {
        ContourPoint p;
        p.phi = 0.01 * i;
        p.slice = i;
        p.x = xs[i];
        p.y = 0.0;
        p.z = std::polar(std::exp(p.x), 0.05 * i);
        p.w = std::polar(1.0, -0.05 * i);
        rev.points.push_back(p);
    }
    const auto cands = cusp_candidates(rev, 1e-6);
    REQUIRE(cands.size() >= 1);
    CHECK(cands[0].slice == 3);

    ContourCurve single;
    single.points.push_back(rev.points[0]);
    CHECK(cusp_candidates(single, 1.0).empty());
}

TEST_CASE("sample_amoeba examples") {
    // x = 0 on the grid and theta hitting 2 pi / 3.
    const AmoebaSample s = sample_amoeba(line(), {-3, 3, -3, 3}, {61, 30, 0.0});
    double origin = 1e300, far = 1e300;
    for (const auto& [x, y] : s.points) {
        origin = std::min(origin, std::hypot(x, y));
        far = std::min(far, std::hypot(x + 10.0, y + 10.0));
        CHECK(x >= -3.0);
        CHECK(x <= 3.0);
        CHECK(y >= -3.0);
        CHECK(y <= 3.0);
    }
    CHECK(origin < 1e-12);
    CHECK(far > 1e-3);

    const AmoebaSample wide = sample_amoeba(line(), {-12, -8, -12, -8}, {41, 64, 0.0});
    for (const auto& [x, y] : wide.points) CHECK(std::hypot(x + 10.0, y + 10.0) > 1e-3);

    CHECK(sample_amoeba(LaurentPolynomial(2, {{{1, 1}, 1.0}}), {-1, 1, -1, 1}, {5, 5, 0.0}).points.empty());

    // 1 + z: every slice is constant in w.
    const LaurentPolynomial zonly(2, {{{0, 0}, 1.0}, {{1, 0}, 1.0}});
    CHECK(sample_amoeba(zonly, {-1, 1, -1, 1}, {3, 4, 0.0}).skipped_slices == 12);
    CHECK_THROWS_AS(sample_amoeba(line(), {1, -1, 0, 1}, {3, 3, 0.0}), DomainError);
}
