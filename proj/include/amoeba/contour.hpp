#pragma once

#include <span>
#include <utility>
#include <vector>

#include "amoeba/gaussmap.hpp"
#include "amoeba/laurent.hpp"
#include "amoeba/numsolve.hpp"

namespace amoeba {

inline constexpr int kDefaultPhiSteps = 2048;
/// Points with |log|z|| or |log|w|| above this are dropped as tentacle escapees.
inline constexpr double kMaxLogModulus = 50.0;

struct ContourPoint {
    double phi = 0.0;
    Complex z, w;
    double x = 0.0, y = 0.0;  // log|z|, log|w|
    int slice = 0;
    int fiber_index = 0;
    /// max(equation residual, criticality residual).
    double residual = 0.0;
};

struct ContourTrace {
    std::vector<ContourPoint> points;
    int phi_steps = 0;
    std::vector<int> failed_slices;
    std::vector<int> empty_slices;
};

/// sin and cos of k*pi/n, exact at multiples of pi/4 so symmetric slices mirror exactly.
std::pair<double, double> sincos_pi_fraction(long long k, long long n);

/// Critical points of Log on {P = 0} over the grid phi_k = k*pi/N: for each slice
/// solves P = 0, sin(phi) zP_z - cos(phi) wP_w = 0 on the torus. Slices whose
/// elimination fails are recorded; more than half failing raises NumericalError.
ContourTrace trace_contour(const LaurentPolynomial& p, int phi_steps = kDefaultPhiSteps, unsigned threads = 0);

struct ContourCurve {
    std::vector<ContourPoint> points;
    bool closed = false;
};

/// Four times the median distance between nearest compatible points of adjacent slices.
double default_chain_radius(std::span<const ContourPoint> points, int phi_steps);

/// Links points of adjacent slices greedily by log distance. A link is admissible when
/// the log distance is within max(radius, 4 x the incoming step, 4 x the target's next
/// step) and the source arguments move by at most pi/2 per coordinate. Empty slices
/// split chains; slice N-1 links back to slice 0. radius <= 0 selects default_chain_radius. Duplicate
/// points are removed first.
std::vector<ContourCurve> chain_points(std::span<const ContourPoint> points, int phi_steps, double radius = 0.0);

/// Interior points where the central-difference image velocity drops below
/// velocity_tol while the source velocity does not.
std::vector<ContourPoint> cusp_candidates(const ContourCurve& curve, double velocity_tol);

struct Window {
    double xmin = -3.0, xmax = 3.0, ymin = -3.0, ymax = 3.0;
};

struct AmoebaGrid {
    int nx = 201;
    int ntheta = 120;
    double theta0 = 0.0;
};

struct AmoebaSample {
    std::vector<std::pair<double, double>> points;
    Window window;
    AmoebaGrid grid;
    int skipped_slices = 0;
};

/// For each grid x and angle theta, solves P(e^{x+i theta}, w) = 0 in w and keeps
/// (x, log|w|) for verified torus roots inside the window.
AmoebaSample sample_amoeba(const LaurentPolynomial& p, const Window& window, const AmoebaGrid& grid,
                           unsigned threads = 0);

}  // namespace amoeba
