#include "amoeba/polytope.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "amoeba/errors.hpp"

namespace amoeba {

namespace {

using I128 = __int128;
using Row = std::vector<I128>;

I128 det(std::vector<Row> m) {
    // Bareiss fraction-free elimination; every intermediate is a minor of m.
    const std::size_t n = m.size();
    if (n == 0) return 1;
    I128 sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

int rank(std::vector<Row> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m.front().size();
    int r = 0;
    I128 prev = 1;
    for (std::size_t c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

Row difference(const LatticePoint& a, const LatticePoint& b) {
    Row d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = static_cast<I128>(a[i]) - b[i];
    return d;
}

I128 abs128(I128 v) { return v < 0 ? -v : v; }

I128 gcd128(I128 a, I128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        I128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Indices of a maximal affinely independent subset, greedily in input order.
std::vector<std::size_t> affine_basis(const std::vector<LatticePoint>& pts) {
    std::vector<std::size_t> basis{0};
    std::vector<Row> dirs;
    const std::size_t n = pts.front().size();
    for (std::size_t i = 1; i < pts.size() && dirs.size() < n; ++i) {
        dirs.push_back(difference(pts[i], pts[0]));
        if (rank(dirs) == static_cast<int>(dirs.size()))
            basis.push_back(i);
        else
            dirs.pop_back();
    }
    return basis;
}

// Placing triangulation of a full-dimensional point set in Z^k, k >= 2.
// Points are inserted in order; a point strictly beyond some boundary facet is
// coned over every such facet. The boundary stays a triangulated sphere.
struct PlacingTriangulation {
    struct Facet {
        std::vector<int> verts;  // sorted, size k
        Row normal;              // outward
        I128 offset;             // normal . x <= offset on the hull
        bool alive = true;
    };

    int k;
    const std::vector<LatticePoint>& pts;
    std::vector<Facet> facets;
    Row interior;  // (k+1) times the centroid of the initial simplex
    I128 volume = 0;

    PlacingTriangulation(int dim, const std::vector<LatticePoint>& points,
                         const std::vector<std::size_t>& simplex)
        : k(dim), pts(points), interior(dim, 0) {
        for (auto s : simplex)
            for (int j = 0; j < k; ++j) interior[j] += pts[s][j];

        std::vector<Row> m;
        for (std::size_t i = 1; i < simplex.size(); ++i)
            m.push_back(difference(pts[simplex[i]], pts[simplex[0]]));
        volume = abs128(det(m));

        for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
            std::vector<int> verts;
            for (std::size_t i = 0; i < simplex.size(); ++i)
                if (i != skip) verts.push_back(static_cast<int>(simplex[i]));
            add_facet(std::move(verts));
        }

        std::vector<bool> used(pts.size(), false);
        for (auto s : simplex) used[s] = true;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (!used[i]) insert(static_cast<int>(i));
    }

    I128 side(const Facet& f, const LatticePoint& p) const {
        I128 s = -f.offset;
        for (int j = 0; j < k; ++j) s += f.normal[j] * p[j];
        return s;
    }

    void add_facet(std::vector<int> verts) {
        std::sort(verts.begin(), verts.end());
        const LatticePoint& q0 = pts[verts[0]];
        std::vector<Row> m;
        for (std::size_t i = 1; i < verts.size(); ++i) m.push_back(difference(pts[verts[i]], q0));

        Facet f;
        f.normal.assign(k, 0);
        for (int col = 0; col < k; ++col) {
            std::vector<Row> minor;
            for (const auto& r : m) {
                Row rr;
                for (int j = 0; j < k; ++j)
                    if (j != col) rr.push_back(r[j]);
                minor.push_back(std::move(rr));
            }
            const I128 c = det(std::move(minor));
            f.normal[col] = (col % 2 == 0) ? c : -c;
        }
        f.offset = 0;
        for (int j = 0; j < k; ++j) f.offset += f.normal[j] * q0[j];

        I128 at_interior = -(k + 1) * f.offset;
        for (int j = 0; j < k; ++j) at_interior += f.normal[j] * interior[j];
        if (at_interior > 0) {
            for (auto& v : f.normal) v = -v;
            f.offset = -f.offset;
        }
        f.verts = std::move(verts);
        facets.push_back(std::move(f));
    }

    void insert(int p) {
        std::map<std::vector<int>, int> ridge_count;
        bool visible_any = false;
        for (auto& f : facets) {
            if (!f.alive) continue;
            const I128 s = side(f, pts[p]);
            if (s <= 0) continue;
            visible_any = true;
            volume += s;
            f.alive = false;
            for (std::size_t drop = 0; drop < f.verts.size(); ++drop) {
                std::vector<int> ridge;
                for (std::size_t i = 0; i < f.verts.size(); ++i)
                    if (i != drop) ridge.push_back(f.verts[i]);
                ++ridge_count[ridge];
            }
        }
        if (!visible_any) return;
        for (auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            std::vector<int> verts = ridge;
            verts.push_back(p);
            add_facet(std::move(verts));
        }
    }

    // Indices of the extreme points: boundary vertices whose tight facet
    // normals span R^k.
    std::vector<int> extreme_points() const {
        std::set<std::vector<std::int64_t>> planes;
        std::set<int> candidates;
        for (const auto& f : facets) {
            if (!f.alive) continue;
            I128 g = gcd128(f.offset, 0);
            for (auto v : f.normal) g = gcd128(g, v);
            std::vector<std::int64_t> key;
            for (auto v : f.normal) key.push_back(static_cast<std::int64_t>(v / g));
            key.push_back(static_cast<std::int64_t>(f.offset / g));
            planes.insert(std::move(key));
            candidates.insert(f.verts.begin(), f.verts.end());
        }
        std::vector<int> out;
        for (int c : candidates) {
            std::vector<Row> tight;
            for (const auto& pl : planes) {
                I128 s = -static_cast<I128>(pl[k]);
                for (int j = 0; j < k; ++j) s += static_cast<I128>(pl[j]) * pts[c][j];
                if (s == 0) tight.emplace_back(pl.begin(), pl.begin() + k);
            }
            if (rank(tight) == k) out.push_back(c);
        }
        return out;
    }
};

// Affine hull data: dimension k and k coordinate axes on which the
// projection of the affine hull is injective.
struct AffineChart {
    int k = 0;
    std::vector<int> axes;
    std::vector<std::size_t> basis;
};

AffineChart chart_for(const std::vector<LatticePoint>& pts) {
    AffineChart ch;
    ch.basis = affine_basis(pts);
    ch.k = static_cast<int>(ch.basis.size()) - 1;
    const int n = static_cast<int>(pts.front().size());
    std::vector<Row> dirs;
    for (std::size_t i = 1; i < ch.basis.size(); ++i)
        dirs.push_back(difference(pts[ch.basis[i]], pts[ch.basis[0]]));

    // First k-subset of axes (lexicographic) with a nonzero k x k minor.
    std::vector<int> sel(ch.k);
    std::iota(sel.begin(), sel.end(), 0);
    while (true) {
        std::vector<Row> minor;
        for (const auto& d : dirs) {
            Row r;
            for (int a : sel) r.push_back(d[a]);
            minor.push_back(std::move(r));
        }
        if (det(std::move(minor)) != 0) break;
        int i = ch.k - 1;
        while (i >= 0 && sel[i] == n - ch.k + i) --i;
        if (i < 0) throw std::logic_error("affine chart: no injective projection");
        ++sel[i];
        for (int j = i + 1; j < ch.k; ++j) sel[j] = sel[j - 1] + 1;
    }
    ch.axes = sel;
    return ch;
}

std::vector<LatticePoint> project(const std::vector<LatticePoint>& pts, const std::vector<int>& axes) {
    std::vector<LatticePoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        LatticePoint q;
        for (int a : axes) q.push_back(p[a]);
        out.push_back(std::move(q));
    }
    return out;
}

void check_dimension(int n) {
    if (n < 1 || n > kMaxPolytopeDimension)
        throw DomainError("lattice polytopes are supported in dimensions 1.." +
                          std::to_string(kMaxPolytopeDimension) + ", got " + std::to_string(n));
}

}  // namespace

LatticePolytope LatticePolytope::from_points(int dimension, std::vector<LatticePoint> points) {
    check_dimension(dimension);
    if (points.empty()) throw DomainError("hull of an empty point set");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dimension) throw DomainError("point of wrong dimension");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() == 1) return {dimension, std::move(points)};

    const AffineChart ch = chart_for(points);
    std::vector<LatticePoint> verts;
    if (ch.k == 1) {
        const int a = ch.axes[0];
        auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                            [a](const auto& x, const auto& y) { return x[a] < y[a]; });
        verts = {*lo, *hi};
    } else {
        const auto local = project(points, ch.axes);
        PlacingTriangulation tri(ch.k, local, ch.basis);
        for (int i : tri.extreme_points()) verts.push_back(points[i]);
    }
    std::sort(verts.begin(), verts.end());
    return {dimension, std::move(verts)};
}

int LatticePolytope::affine_dimension() const {
    if (vertices_.size() <= 1) return 0;
    return static_cast<int>(affine_basis(vertices_).size()) - 1;
}

LatticePolytope LatticePolytope::dilated(std::int64_t k) const {
    if (k < 0) throw DomainError("negative dilation");
    std::vector<LatticePoint> pts = vertices_;
    for (auto& p : pts)
        for (auto& v : p) v *= k;
    return from_points(dimension_, std::move(pts));
}

LatticePolytope LatticePolytope::translated(const LatticePoint& offset) const {
    if (static_cast<int>(offset.size()) != dimension_) throw DomainError("translation of wrong dimension");
    std::vector<LatticePoint> pts = vertices_;
    for (auto& p : pts)
        for (int i = 0; i < dimension_; ++i) p[i] += offset[i];
    return {dimension_, std::move(pts)};
}

LatticePolytope standard_simplex(int n, std::int64_t k) {
    check_dimension(n);
    std::vector<LatticePoint> pts{LatticePoint(n, 0)};
    for (int i = 0; i < n; ++i) {
        LatticePoint e(n, 0);
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    return LatticePolytope::from_points(n, std::move(pts)).dilated(k);
}

LatticePolytope newton_polytope(const LaurentPolynomial& p) {
    if (p.is_zero()) throw DegenerateError("Newton polytope of the zero polynomial");
    check_dimension(p.dimension());
    return LatticePolytope::from_points(p.dimension(), p.support());
}

std::int64_t normalized_volume(const LatticePolytope& d) {
    const auto& v = d.vertices();
    const int n = d.dimension();
    if (static_cast<int>(v.size()) <= n) return 0;
    const auto basis = affine_basis(v);
    if (static_cast<int>(basis.size()) - 1 < n) return 0;
    if (n == 1) return v.back()[0] - v.front()[0];
    PlacingTriangulation tri(n, v, basis);
    return static_cast<std::int64_t>(tri.volume);
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.dimension() != b.dimension()) throw DomainError("Minkowski sum of polytopes of different dimension");
    std::vector<LatticePoint> pts;
    pts.reserve(a.vertices().size() * b.vertices().size());
    for (const auto& p : a.vertices())
        for (const auto& q : b.vertices()) {
            LatticePoint s = p;
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += q[i];
            pts.push_back(std::move(s));
        }
    return LatticePolytope::from_points(a.dimension(), std::move(pts));
}

std::int64_t mixed_volume(std::span<const LatticePolytope> polytopes) {
    if (polytopes.empty()) throw DomainError("mixed_volume: no polytopes");
    const int n = polytopes.front().dimension();
    if (static_cast<int>(polytopes.size()) != n)
        throw DomainError("mixed_volume needs exactly n polytopes in dimension n");
    for (const auto& p : polytopes)
        if (p.dimension() != n) throw DomainError("mixed_volume: mixed dimensions");

    // sums[mask] = Minkowski sum of the polytopes selected by mask, built from
    // the sum without its highest bit.
    const std::size_t full = std::size_t{1} << n;
    std::vector<LatticePolytope> sums;
    sums.reserve(full);
    sums.push_back(LatticePolytope::from_points(n, {LatticePoint(n, 0)}));
    I128 total = 0;
    for (std::size_t mask = 1; mask < full; ++mask) {
        int top = 0;
        while ((mask >> (top + 1)) != 0) ++top;
        sums.push_back(minkowski_sum(sums[mask ^ (std::size_t{1} << top)], polytopes[top]));
        const int size = std::popcount(mask);
        const I128 vol = normalized_volume(sums.back());
        total += ((n - size) % 2 == 0) ? vol : -vol;
    }
    I128 factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    if (total % factorial != 0 || total < 0)
        throw std::logic_error("mixed_volume: inclusion-exclusion sum is not a nonnegative multiple of n!");
    return static_cast<std::int64_t>(total / factorial);
}

}  // namespace amoeba
