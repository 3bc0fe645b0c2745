#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "amoeba/bounds.hpp"
#include "amoeba/laurent.hpp"
#include "amoeba/polytope.hpp"

namespace amoeba {

/// {f1 = f2 = 0} in (C*)^4.
struct CompleteIntersection2 {
    LaurentPolynomial f1{4}, f2{4};
    std::int64_t d1 = 0, d2 = 0;

    /// Validates dimension 4 and nonzero input, and fills the total degrees.
    static CompleteIntersection2 make(LaurentPolynomial f1, LaurentPolynomial f2);
};

/// The six 2x2 minors p_ij of the logarithmic Jacobian, keyed by 0-based (i, j), i < j.
struct PlueckerVector {
    std::map<std::pair<int, int>, LaurentPolynomial> p;

    const LaurentPolynomial& at(int i, int j) const { return p.at({i, j}); }
    LaurentPolynomial& at(int i, int j) { return p.at({i, j}); }
};

/// p_ij = (z_i f1_i)(z_j f2_j) - (z_j f1_j)(z_i f2_i), expanded pairwise over the union of
/// supports so that equal rows cancel exactly.
PlueckerVector pluecker_coordinates(const CompleteIntersection2& v);

/// |p01 p23 - p02 p13 + p03 p12| / max of the three product moduli at z.
/// DegenerateError when all three products vanish.
double pluecker_relation_residual(const PlueckerVector& p, std::span<const Complex> z);

/// 2 d1 d2 (d1 + d2)^2.
BigInt codim2_bound(int d1, int d2);

struct ScalingHint {
    LatticePolytope base;
    std::int64_t d1 = 1, d2 = 1;
};

struct Codim2Check {
    /// MV(D1, D2, D1+D2, D1+D2).
    std::int64_t lhs = 0;
    /// MV(D1,D2,D1,D1) + 2 MV(D1,D2,D1,D2) + MV(D1,D2,D2,D2).
    std::int64_t rhs = 0;
    std::int64_t mv_1211 = 0, mv_1212 = 0, mv_1222 = 0;
    bool equal = false;
    /// d1 d2 (d1+d2)^2 MV(D, D, D, D), when a scaling hint is given.
    std::optional<std::int64_t> scaling_value;
    std::optional<bool> scaling_holds;
};

Codim2Check mv_codim2_check(const LatticePolytope& d1, const LatticePolytope& d2,
                            const std::optional<ScalingHint>& hint = std::nullopt);

struct VarietySample {
    std::vector<std::array<Complex, 4>> points;
    int samples = 0;
    /// Samples that produced no point: degenerate elimination or no torus solution.
    int abandoned = 0;
};

/// Fixes z3, z4 on the unit circle per sample (substream of seed), solves for (z1, z2)
/// and keeps points with both relative residuals <= 1e-8. Stops after `count` points
/// or 4 count + 16 samples.
VarietySample sample_variety_points(const CompleteIntersection2& v, int count, std::uint64_t seed,
                                    unsigned threads = 0);

}  // namespace amoeba
