#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "amoeba/contour.hpp"

namespace amoeba {

struct AffineLine {
    std::array<double, 2> base{0.0, 0.0};
    std::array<double, 2> direction{1.0, 0.0};

    /// Line through p and q; horizontal when the points coincide.
    static AffineLine through(std::array<double, 2> p, std::array<double, 2> q);
    static AffineLine vertical(double x) { return {{x, 0.0}, {0.0, 1.0}}; }
    static AffineLine horizontal(double y) { return {{0.0, y}, {1.0, 0.0}}; }

    /// Unit normal (-d_y, d_x).
    std::array<double, 2> normal() const { return {-direction[1], direction[0]}; }
    double signed_distance(double x, double y) const;
};

/// Sign changes of the signed distance along each polyline (closing segment included
/// for closed curves). When a vertex lies within eps of the line, the line is shifted
/// along its normal by 3 eps, -3 eps, 6 eps, -6 eps, ... and recounted, at most 8 times;
/// then NumericalError.
int crossing_count(std::span<const ContourCurve> curves, const AffineLine& line, double eps = 1e-9);

struct RDegreeSettings {
    int num_lines = 512;
    std::uint64_t seed = 42;
    int phi_steps = kDefaultPhiSteps;
    double eps = 1e-9;
    /// Random lines are drawn in the bounding box of the points with |x|, |y| <= clip.
    double clip = 10.0;
    int axis_lines = 16;
    unsigned threads = 0;
};

struct RDegreeEstimate {
    int max_crossings = 0;
    AffineLine argmax;
    std::map<int, int> histogram;
    std::vector<AffineLine> lines;
    /// -1 for lines that stayed non-transversal after all retries.
    std::vector<int> counts;
    int non_transversal = 0;
    bool no_points = false;
    std::array<double, 4> bbox{0.0, 0.0, 0.0, 0.0};
    std::size_t curves = 0;
    std::size_t points = 0;
    RDegreeSettings settings;
};

/// Axis-aligned family (axis_lines vertical and horizontal lines across the box) followed
/// by num_lines random lines, line i through two points drawn from substream i, so a
/// larger num_lines extends the same line set.
RDegreeEstimate estimate_rdegree(std::span<const ContourCurve> curves, const RDegreeSettings& settings);

/// Traces and chains the contour of P first.
RDegreeEstimate estimate_rdegree(const LaurentPolynomial& p, const RDegreeSettings& settings);

}  // namespace amoeba
