#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "amoeba/laurent.hpp"

namespace amoeba {

using LatticePoint = ExponentVector;

/// Maximum ambient dimension supported by the exact hull and volume code.
inline constexpr int kMaxPolytopeDimension = 4;

/// Convex hull of finitely many lattice points in Z^n, n <= 4.
///
/// Stored in canonical form: the extreme points only, duplicate-free and
/// sorted lexicographically, so equal polytopes compare equal.
class LatticePolytope {
public:
    /// Hull of `points`, reduced to extreme points with exact integer predicates.
    static LatticePolytope from_points(int dimension, std::vector<LatticePoint> points);

    int dimension() const noexcept { return dimension_; }
    const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }

    /// Dimension of the affine hull (0 for a point).
    int affine_dimension() const;

    LatticePolytope dilated(std::int64_t k) const;
    LatticePolytope translated(const LatticePoint& offset) const;

    friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

private:
    LatticePolytope(int dimension, std::vector<LatticePoint> vertices)
        : dimension_(dimension), vertices_(std::move(vertices)) {}

    int dimension_;
    std::vector<LatticePoint> vertices_;
};

/// k times the standard simplex conv{0, e_1, ..., e_n}.
LatticePolytope standard_simplex(int n, std::int64_t k = 1);

/// Hull of the support of a nonzero polynomial in at most 4 variables.
LatticePolytope newton_polytope(const LaurentPolynomial& p);

/// n! times the Euclidean volume, exact. Zero for lower-dimensional polytopes.
std::int64_t normalized_volume(const LatticePolytope& d);

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);

/// Mixed volume normalized so that MV(D, ..., D) = normalized_volume(D), i.e. the
/// Bernstein count of a generic sparse system. Requires exactly n polytopes in Z^n.
/// Computed by inclusion-exclusion over the 2^n - 1 partial Minkowski sums.
std::int64_t mixed_volume(std::span<const LatticePolytope> polytopes);

}  // namespace amoeba
