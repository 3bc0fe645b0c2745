#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace amoeba {

using Complex = std::complex<double>;

/// Integer exponent vector; entries may be negative. Ordered lexicographically.
using ExponentVector = std::vector<std::int64_t>;

/// Finite sum of c_a z^a over (C*)^n with complex double coefficients.
///
/// Invariants: every exponent has length dimension(), no stored coefficient
/// is zero (pruning uses exact equality), each exponent appears once.
/// Terms iterate in lexicographic exponent order.
class LaurentPolynomial {
public:
    using TermMap = std::map<ExponentVector, Complex>;

    explicit LaurentPolynomial(int dimension);

    /// Duplicate exponents in `terms` are merged by summation.
    LaurentPolynomial(int dimension, std::initializer_list<std::pair<ExponentVector, Complex>> terms);
    LaurentPolynomial(int dimension, const std::vector<std::pair<ExponentVector, Complex>>& terms);

    int dimension() const noexcept { return dimension_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    std::vector<ExponentVector> support() const;
    Complex coefficient(const ExponentVector& e) const;
    bool has_negative_exponents() const;

    /// Coordinate-wise minimum / maximum over the support. Requires nonzero.
    ExponentVector min_exponents() const;
    ExponentVector max_exponents() const;

    /// Width of the support along `axis` (max - min exponent); 0 for the zero polynomial.
    std::int64_t degree_in(int axis) const;

    /// Adds c z^e, merging with an existing term. A sum that is exactly zero is removed.
    void add_term(const ExponentVector& e, Complex c);

    /// Multiplication by the monomial z^shift.
    LaurentPolynomial shifted(const ExponentVector& shift) const;

    /// Shift so that every exponent is nonnegative and each axis attains 0.
    LaurentPolynomial normalized_shift() const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial& operator*=(Complex scalar);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, Complex s) { return a *= s; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) = default;

private:
    void check_length(const ExponentVector& e) const;

    int dimension_;
    TermMap terms_;
};

/// z^e for integer exponents, by repeated squaring.
Complex monomial_value(std::span<const Complex> z, const ExponentVector& e);

/// Sum of c_a z^a with Neumaier-compensated summation in lexicographic term order.
/// Throws DomainError when any z_j is zero or the length is wrong.
Complex evaluate(const LaurentPolynomial& p, std::span<const Complex> z);

/// Sum of |c_a| |z^a|: the natural scale for backward-error residuals.
double term_magnitude(const LaurentPolynomial& p, std::span<const Complex> z);

/// |P(z)| / term_magnitude(P, z), or 0 when the scale is 0.
double relative_residual(const LaurentPolynomial& p, std::span<const Complex> z);

/// z_j dP/dz_j = sum a_j c_a z^a (axis is 0-based). Terms with a_j = 0 drop out.
LaurentPolynomial log_derivative(const LaurentPolynomial& p, int axis);

/// dP/dz_j (axis is 0-based).
LaurentPolynomial partial_derivative(const LaurentPolynomial& p, int axis);

/// max |a| over the support. When some exponent is negative the support is
/// first translated by its coordinate-wise minimum (homogenization convention
/// for Laurent input). Throws DegenerateError on the zero polynomial.
std::int64_t total_degree(const LaurentPolynomial& p);

/// Substitutes fixed values for every axis not listed in `kept`; the result
/// lives in the kept axes in the given order.
LaurentPolynomial restrict_to(const LaurentPolynomial& p, std::span<const int> kept,
                              std::span<const Complex> point);

/// All nonnegative exponents of total degree <= d in n variables, lexicographic.
std::vector<ExponentVector> dense_support(int n, int d);

/// Coefficients with modulus uniform in [0.5, 2] and uniform phase, drawn from
/// a counter-based stream keyed by `seed`. Deterministic per (support, seed).
LaurentPolynomial random_polynomial(const std::vector<ExponentVector>& support, std::uint64_t seed);

}  // namespace amoeba
