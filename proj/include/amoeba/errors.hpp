#pragma once

#include <stdexcept>
#include <string>

namespace amoeba {

// Invalid argument or violated precondition (wrong dimension, zero point, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input is mathematically degenerate for the requested computation:
// monomials, zero polynomials, identically vanishing resultants.
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative method failed to reach its tolerance.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double best_residual)
        : std::runtime_error(what), best_residual_(best_residual) {}

    double best_residual() const noexcept { return best_residual_; }

private:
    double best_residual_;
};

}  // namespace amoeba
