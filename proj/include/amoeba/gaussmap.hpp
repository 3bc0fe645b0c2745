#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "amoeba/laurent.hpp"
#include "amoeba/numsolve.hpp"

namespace amoeba {

/// Relative criticality tolerance shared by the Gauss-map and contour code.
inline constexpr double kCriticalityTolerance = 1e-8;

/// The n logarithmic derivatives z_j dP/dz_j of one polynomial, built once.
class LogGradient {
public:
    explicit LogGradient(const LaurentPolynomial& p);

    int dimension() const noexcept { return static_cast<int>(parts_.size()); }
    const LaurentPolynomial& operator[](int axis) const { return parts_.at(axis); }

    std::vector<Complex> at(std::span<const Complex> z) const;
    /// Largest term magnitude among the parts; scale for "all coordinates vanish".
    double scale(std::span<const Complex> z) const;

private:
    std::vector<LaurentPolynomial> parts_;
};

/// Point [w_1 : ... : w_n] of the logarithmic Gauss map, scaled so that the
/// max-modulus coordinate (index `reference`) equals 1.
struct GaussValue {
    std::vector<Complex> coordinates;
    std::vector<Complex> source;
    int reference = 0;
};

/// Throws DegenerateError when every logarithmic derivative vanishes at z.
GaussValue gauss_map(const LaurentPolynomial& p, std::span<const Complex> z);
GaussValue gauss_map(const LogGradient& grad, std::span<const Complex> z);

/// max over j != ref of |Im(w_j conj(w_ref))| / (|w_j| |w_ref|), with w_ref the
/// max-modulus coordinate. Coordinates at rounding level of their own terms count
/// as zero. Zero exactly when the Gauss value is real.
double criticality_residual(const LaurentPolynomial& p, std::span<const Complex> z);
double criticality_residual(const LogGradient& grad, std::span<const Complex> z);

/// Im((z_j P_j) conj(z_r P_r)) as a polynomial in independent (z, zbar):
/// terms[(a, b)] is the coefficient of z^a zbar^b. The coefficient is
/// c_a conj(c_b) (a_j b_r - a_r b_j) / 2i, so diagonal pairs a = b vanish by
/// integer arithmetic rather than floating cancellation.
struct QPolynomial {
    int index = 1;
    int reference = 0;
    std::map<std::pair<ExponentVector, ExponentVector>, Complex> terms;
    /// Shift applied to both exponent halves when reporting degrees (Laurent input).
    ExponentVector shift;

    /// max |a| + |b| over surviving terms (after the shift); -1 when Q is zero.
    std::int64_t total_degree() const;
    bool has_diagonal_terms() const;
    /// Value at (z, conj z); real up to rounding.
    Complex evaluate(std::span<const Complex> z) const;
};

/// Q_j with reference axis 0; j is a 0-based axis in [1, n).
QPolynomial q_polynomial(const LaurentPolynomial& p, int j);

/// Direction [xi_0 : xi_1] in CP^1.
using Direction = std::pair<Complex, Complex>;

struct FiberResult {
    int count = 0;
    std::vector<TorusPoint2> points;
};

/// Regular torus solutions of {P = 0, xi_1 (z P_z) - xi_0 (w P_w) = 0}.
/// Throws DegenerateError for monomials and identically vanishing eliminations.
FiberResult fiber_count(const LaurentPolynomial& p, Direction xi, const TorusSolveOptions& options = {});

struct GaussDegreeEstimate {
    int estimate = 0;
    /// n! Vol of the Newton polytope, for comparison.
    std::int64_t kouchnirenko = 0;
    bool reliable = true;
    std::vector<int> counts;
};

/// Mode of fiber_count over `trials` random complex directions, ties toward the
/// larger count. Unreliable when more than 20% of the trials disagree with the mode.
GaussDegreeEstimate gauss_degree_estimate(const LaurentPolynomial& p, int trials, std::uint64_t seed,
                                          unsigned threads = 0, const TorusSolveOptions& options = {});

}  // namespace amoeba
