#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "amoeba/laurent.hpp"
#include "amoeba/numsolve.hpp"
#include "amoeba/rdegree.hpp"

namespace amoeba {

using BigInt = boost::multiprecision::cpp_int;

/// 2^{2n+(n-1)(n-2)/2} d^{n+1} (4dn + 2(n-1)^2 - 1)^{n-1}.
BigInt lss_bound(int n, int d);

/// d (2d-1)^{n-1}.
BigInt bezout_bound(int n, int d);

/// n! Vol of the Newton polytope (n <= 4).
std::int64_t bernstein_bound(const LaurentPolynomial& p);

/// MV(D, 2D, ..., 2D) with D the Newton polytope, computed by mixed volume and
/// checked against 2^{n-1} n! Vol(D); a mismatch throws std::logic_error.
std::int64_t mv_sparse_bound(const LaurentPolynomial& p);

struct ContourDimension {
    int dimension = 0;
    /// 2m >= n: the contour is a hypersurface.
    bool hypersurface = false;
};

/// min(n-1, 2m-1) for 1 <= m <= n-1.
ContourDimension contour_dimension(int n, int m);

struct Finding {
    std::string kind;
    std::string bound;
    BigInt bound_value;
    std::int64_t observed = 0;
    /// Informational findings record a measured discrepancy with a stated claim that
    /// is not treated as a violation.
    bool informational = false;
    std::string message;
};

struct ReportSettings {
    bool empirical = true;
    int gauss_trials = 32;
    TorusSolveOptions solver;
    RDegreeSettings rdegree;
};

struct BoundReport {
    int n = 0;
    std::int64_t d = 0;
    BigInt lss, bezout;
    std::int64_t bernstein = 0;
    std::int64_t mv_sparse = 0;
    /// The same quantity with an extra n! factor, for the unnormalized reading of the
    /// mixed-volume bound.
    BigInt mv_sparse_times_factorial;
    /// Total degree of Q_j (reference axis 0) for j = 1..n-1.
    std::vector<std::int64_t> q_degrees;
    std::optional<int> empirical_rdegree;
    std::optional<int> empirical_gauss_degree;
    std::optional<bool> gauss_reliable;
    int phi_steps = 0;
    int num_lines = 0;
    std::vector<Finding> flags;
    std::vector<std::string> failures;
};

/// Fills every closed form; for n = 2 and settings.empirical also runs the Gauss degree
/// and real-degree estimators and records a finding for each observed violation.
/// Monomials throw DegenerateError.
BoundReport compare_report(const LaurentPolynomial& p, const ReportSettings& settings);

}  // namespace amoeba
