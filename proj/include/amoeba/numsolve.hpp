#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "amoeba/laurent.hpp"

namespace amoeba {

/// Dense univariate polynomial, coefficients lowest degree first.
struct UnivariatePolynomial {
    std::vector<Complex> coefficients;

    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(std::vector<Complex> c) : coefficients(std::move(c)) { trim(); }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
    bool is_zero() const noexcept { return coefficients.empty(); }
    Complex operator()(Complex x) const;
    /// Sum of |a_k| |x|^k.
    double magnitude(Complex x) const;
    double max_coefficient() const;

    /// Drops exact trailing zeros.
    void trim();
    /// Zeroes every coefficient below tol * max|a_k|, then trims.
    void trim_relative(double tol);

    /// Converts a one-variable Laurent polynomial after shifting it to
    /// nonnegative exponents; the nonzero roots are unchanged.
    static UnivariatePolynomial from_laurent(const LaurentPolynomial& p);
};

struct SolverTolerances {
    /// Backward-error target |q(r)| <= residual * sum |a_k||r|^k.
    double residual = 1e-12;
    /// Roots closer than cluster * max(1, |r|) are merged into one multiple root.
    double cluster = 1e-8;
    int max_iterations = 600;
};

struct Root {
    Complex value;
    int multiplicity = 1;
    double residual = 0.0;
};

struct RootSet {
    std::vector<Root> roots;
    int total_multiplicity() const;
};

/// Raw simultaneous-iteration output: one approximation per root, with multiplicity.
struct RootApproximations {
    std::vector<Complex> values;
    bool converged = false;
    int iterations = 0;
};

/// Aberth-Ehrlich iteration started from Newton-polygon circles, followed by
/// Newton polishing. Exact zero low-order coefficients become exact zero roots.
RootApproximations aberth_roots(const UnivariatePolynomial& q, const SolverTolerances& tol = {});

/// All complex roots, clustered. Throws DomainError for degree < 1 and
/// NumericalError (with the best backward error) when the target is missed.
RootSet univariate_roots(const UnivariatePolynomial& q, const SolverTolerances& tol = {});

/// Res_{axis}(F, G) for two bivariate polynomials with nonnegative exponents,
/// as a polynomial in the other variable. The Sylvester determinant is
/// evaluated at roots of unity and interpolated by an inverse DFT, then noise
/// coefficients below 1e-11 relative are removed.
/// Throws DomainError when either input is constant in the eliminated variable.
UnivariatePolynomial sylvester_resultant(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                         int eliminated_axis);

enum class NewtonStatus { converged, singular_jacobian, not_converged };

struct NewtonOptions {
    double tolerance = 1e-12;
    int max_steps = 50;
};

struct NewtonResult {
    Eigen::VectorXcd x;
    double residual = 0.0;
    int iterations = 0;
    NewtonStatus status = NewtonStatus::not_converged;
};

using ResidualFn = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;
using JacobianFn = std::function<Eigen::MatrixXcd(const Eigen::VectorXcd&)>;

/// Damped Newton iteration (step halving while the residual grows) until the
/// residual max-norm is <= tolerance or max_steps is reached.
NewtonResult newton_polish(const ResidualFn& residual, const JacobianFn& jacobian, Eigen::VectorXcd x0,
                           const NewtonOptions& options = {});

struct TorusPoint2 {
    Complex z;
    Complex w;
    /// max of the two relative residuals |F|/sum|c z^a|, |G|/sum|c z^a|.
    double residual = 0.0;
};

struct TorusSolveOptions {
    SolverTolerances roots;
    double accept_residual = 1e-10;
    /// Solutions with |log|z|| or |log|w|| above this are discarded.
    double max_log = 50.0;
    /// Relative distance below which two polished solutions are the same point.
    double dedupe = 1e-7;
};

/// Isolated solutions in (C*)^2 of {F = 0, G = 0}: eliminate one variable by
/// the Sylvester resultant (the other one when a polynomial is constant in
/// it), solve, back-substitute, polish both coordinates jointly and keep the
/// distinct torus points. Throws DegenerateError when the elimination is
/// identically zero (non-isolated solutions).
std::vector<TorusPoint2> solve_torus_system(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                            const TorusSolveOptions& options = {});

}  // namespace amoeba
