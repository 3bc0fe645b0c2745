#include "amoeba/bounds.hpp"

#include <stdexcept>

#include "amoeba/errors.hpp"
#include "amoeba/gaussmap.hpp"
#include "amoeba/polytope.hpp"

namespace amoeba {

namespace {

void check_nd(const char* what, int n, int d) {
    if (n < 2 || d < 1) throw DomainError(std::string(what) + ": requires n >= 2 and d >= 1");
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

BigInt lss_bound(int n, int d) {
    check_nd("lss_bound", n, d);
    const BigInt two = 2;
    const BigInt bd = d;
    const BigInt inner = BigInt(4) * d * n + BigInt(2) * (n - 1) * (n - 1) - 1;
    return boost::multiprecision::pow(two, 2 * n + (n - 1) * (n - 2) / 2) * boost::multiprecision::pow(bd, n + 1) *
           boost::multiprecision::pow(inner, n - 1);
}

BigInt bezout_bound(int n, int d) {
    check_nd("bezout_bound", n, d);
    return BigInt(d) * boost::multiprecision::pow(BigInt(2 * d - 1), n - 1);
}

std::int64_t bernstein_bound(const LaurentPolynomial& p) {
    if (p.dimension() > kMaxPolytopeDimension) throw DomainError("bernstein_bound: n <= 4 required");
    return normalized_volume(newton_polytope(p));
}

std::int64_t mv_sparse_bound(const LaurentPolynomial& p) {
    const int n = p.dimension();
    if (n > kMaxPolytopeDimension) throw DomainError("mv_sparse_bound: n <= 4 required");
    const LatticePolytope delta = newton_polytope(p);
    std::vector<LatticePolytope> list{delta};
    for (int i = 1; i < n; ++i) list.push_back(delta.dilated(2));
    const std::int64_t mv = mixed_volume(list);
    const std::int64_t closed = (std::int64_t{1} << (n - 1)) * normalized_volume(delta);
    if (mv != closed) throw std::logic_error("mv_sparse_bound: mixed volume disagrees with 2^{n-1} n! Vol");
    return mv;
}

ContourDimension contour_dimension(int n, int m) {
    if (m < 1 || m > n - 1) throw DomainError("contour_dimension: requires 1 <= m <= n-1");
    return {std::min(n - 1, 2 * m - 1), 2 * m >= n};
}

BoundReport compare_report(const LaurentPolynomial& p, const ReportSettings& settings) {
    const int n = p.dimension();
    if (p.is_zero() || p.is_monomial()) throw DegenerateError("compare_report: monomial or zero polynomial");
    if (n < 2 || n > kMaxPolytopeDimension) throw DomainError("compare_report: 2 <= n <= 4 required");

    BoundReport r;
    r.n = n;
    r.d = total_degree(p);
    if (r.d > 1000000) throw DomainError("compare_report: degree too large");
    const int d = static_cast<int>(r.d);
    r.lss = lss_bound(n, d);
    r.bezout = bezout_bound(n, d);
    r.bernstein = bernstein_bound(p);
    r.mv_sparse = mv_sparse_bound(p);
    r.mv_sparse_times_factorial = factorial(n) * r.mv_sparse;

    if (p.has_negative_exponents())
        r.flags.push_back({"laurent_shift", "total_degree", 0, r.d, true,
                           "negative exponents: total degree taken after shifting by the coordinate-wise minimum"});

    for (int j = 1; j < n; ++j) {
        const std::int64_t qd = q_polynomial(p, j).total_degree();
        r.q_degrees.push_back(qd);
        if (qd > 2 * r.d - 1)
            r.flags.push_back({"q_degree_above_claim", "2d-1", BigInt(2 * r.d - 1), qd, true,
                               "Q_" + std::to_string(j) + " has total degree " + std::to_string(qd) +
                                   " after diagonal cancellation"});
    }

    if (n != 2 || !settings.empirical) return r;

    r.phi_steps = settings.rdegree.phi_steps;
    r.num_lines = settings.rdegree.num_lines;
    try {
        const auto g = gauss_degree_estimate(p, settings.gauss_trials, settings.rdegree.seed, settings.rdegree.threads,
                                             settings.solver);
        r.empirical_gauss_degree = g.estimate;
        r.gauss_reliable = g.reliable;
        if (g.estimate != r.bernstein)
            r.flags.push_back({"gauss_degree_mismatch", "bernstein", BigInt(r.bernstein), g.estimate, false,
                               "estimated Gauss degree differs from n! Vol of the Newton polytope"});
    } catch (const std::exception& e) {
        r.failures.push_back(std::string("gauss_degree_estimate: ") + e.what());
    }

    try {
        const auto est = estimate_rdegree(p, settings.rdegree);
        r.empirical_rdegree = est.max_crossings;
        if (est.no_points) r.failures.push_back("estimate_rdegree: no contour points traced");
        const std::int64_t obs = est.max_crossings;
        auto check = [&](const std::string& name, const BigInt& bound) {
            if (BigInt(obs) > bound)
                r.flags.push_back({"bound_violation", name, bound, obs, false,
                                   "observed line crossings exceed the " + name + " bound"});
        };
        check("bezout", r.bezout);
        check("bernstein", BigInt(r.bernstein));
        check("mv_sparse", BigInt(r.mv_sparse));
        check("lss", r.lss);
        if (r.empirical_gauss_degree) check("gauss_degree", BigInt(*r.empirical_gauss_degree));
    } catch (const std::exception& e) {
        r.failures.push_back(std::string("estimate_rdegree: ") + e.what());
    }
    return r;
}

}  // namespace amoeba
