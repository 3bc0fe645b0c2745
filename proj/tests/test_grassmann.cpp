#include "doctest.h"

#include <cmath>
#include <set>

#include "amoeba/errors.hpp"
#include "amoeba/grassmann.hpp"
#include "amoeba/random.hpp"

using namespace amoeba;

namespace {

CompleteIntersection2 linear_pair() {
    LaurentPolynomial f1(4, {{{0, 0, 0, 0}, 1.0}}), f2(4, {{{0, 0, 0, 0}, 1.0}});
    for (int i = 0; i < 4; ++i) {
        ExponentVector e(4, 0);
        e[i] = 1;
        f1.add_term(e, 1.0);
        f2.add_term(e, static_cast<double>(i + 1));
    }
    return CompleteIntersection2::make(f1, f2);
}

std::array<Complex, 4> torus_point(CounterRng& rng) {
    std::array<Complex, 4> z;
    for (auto& c : z) c = std::polar(rng.uniform(0.5, 2.0), rng.phase());
    return z;
}

LatticePolytope random_polytope(CounterRng& rng) {
    std::vector<LatticePoint> pts;
    for (int k = 0; k < 7; ++k) {
        LatticePoint p(4);
        for (auto& c : p) c = static_cast<std::int64_t>(rng.uniform(0.0, 4.0));
        pts.push_back(p);
    }
    return LatticePolytope::from_points(4, pts);
}

}  // namespace

TEST_CASE("pluecker_coordinates of the linear pair") {
    const PlueckerVector p = pluecker_coordinates(linear_pair());
    CHECK(p.p.size() == 6);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            ExponentVector e(4, 0);
            e[i] = 1;
            e[j] = 1;
            CHECK(p.at(i, j) == LaurentPolynomial(4, {{e, static_cast<double>(j - i)}}));
        }

    CounterRng rng(1);
    for (int t = 0; t < 20; ++t) {
        const auto z = torus_point(rng);
        CHECK(pluecker_relation_residual(p, z) <= 1e-12);
    }

    PlueckerVector broken = p;
    broken.at(0, 1) *= Complex(1.01);
    const auto z = torus_point(rng);
    CHECK(pluecker_relation_residual(broken, z) >= 1e-3);
}

TEST_CASE("equal rows give vanishing minors") {
    const auto f = random_polynomial(dense_support(4, 2), 5);
    const auto p = pluecker_coordinates(CompleteIntersection2::make(f, f));
    for (const auto& [k, q] : p.p) CHECK(q.is_zero());
    CounterRng rng(2);
    const auto z = torus_point(rng);
    CHECK_THROWS_AS(pluecker_relation_residual(p, z), DegenerateError);
}

TEST_CASE("random dense pairs: degrees, supports and the quadric relation") {
    CounterRng rng(3);
    for (int t = 0; t < 12; ++t) {
        const int d1 = 1 + t % 3, d2 = 1 + (t / 3) % 3;
        const auto v = CompleteIntersection2::make(random_polynomial(dense_support(4, d1), 100 + t),
                                                   random_polynomial(dense_support(4, d2), 200 + t));
        const auto p = pluecker_coordinates(v);

        std::set<ExponentVector> sums;
        for (const auto& [a, ca] : v.f1.terms())
            for (const auto& [b, cb] : v.f2.terms()) {
                ExponentVector s(4);
                for (int k = 0; k < 4; ++k) s[k] = a[k] + b[k];
                sums.insert(s);
            }
        for (const auto& [key, q] : p.p) {
            REQUIRE_FALSE(q.is_zero());
            CHECK(total_degree(q) == d1 + d2);
            for (const auto& e : q.support()) CHECK(sums.count(e) == 1);
        }

        for (int k = 0; k < 5; ++k) {
            const auto z = torus_point(rng);
            CHECK(pluecker_relation_residual(p, z) <= 1e-10);
        }
    }
}

TEST_CASE("codim2_bound") {
    CHECK(codim2_bound(1, 1) == 8);
    CHECK(codim2_bound(2, 3) == 300);
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) CHECK(codim2_bound(a, b) == codim2_bound(b, a));
    CHECK_THROWS_AS(codim2_bound(0, 1), DomainError);
}

TEST_CASE("mv_codim2_check") {
    const auto s4 = standard_simplex(4);
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            const auto r = mv_codim2_check(s4.dilated(a), s4.dilated(b), ScalingHint{s4, a, b});
            CHECK(r.equal);
            CHECK(r.lhs == a * b * (a + b) * (a + b));
            CHECK(*r.scaling_holds);
        }

    CounterRng rng(4);
    for (int t = 0; t < 4; ++t) {
        const auto d = random_polytope(rng);
        const auto r = mv_codim2_check(d, d);
        CHECK(r.equal);
        const std::vector<LatticePolytope> four{d, d, d, d};
        CHECK(r.lhs == 4 * mixed_volume(four));
    }

    const auto point = LatticePolytope::from_points(4, {{1, 1, 1, 1}});
    const auto r0 = mv_codim2_check(s4.dilated(2), point);
    CHECK(r0.lhs == 0);
    CHECK(r0.rhs == 0);

    for (int t = 0; t < 4; ++t) CHECK(mv_codim2_check(random_polytope(rng), random_polytope(rng)).equal);
}

TEST_CASE("sample_variety_points") {
    const auto lin = linear_pair();
    const auto s = sample_variety_points(lin, 10, 42);
    CHECK(s.points.size() == 10);
    const auto p = pluecker_coordinates(lin);
    for (const auto& z : s.points) {
        CHECK(std::abs(evaluate(lin.f1, z)) <= 1e-12 * term_magnitude(lin.f1, z));
        CHECK(std::abs(evaluate(lin.f2, z)) <= 1e-12 * term_magnitude(lin.f2, z));
        CHECK(pluecker_relation_residual(p, z) <= 1e-10);
    }
    const auto again = sample_variety_points(lin, 10, 42, 1);
    CHECK(again.points == s.points);
    CHECK(sample_variety_points(lin, 10, 43).points != s.points);

    const auto bad = CompleteIntersection2::make(LaurentPolynomial(4, {{{0, 0, 0, 0}, 1.0}, {{1, 0, 0, 0}, 1.0}}),
                                                 LaurentPolynomial(4, {{{0, 0, 0, 0}, 2.0}, {{1, 0, 0, 0}, 1.0}}));
    const auto none = sample_variety_points(bad, 5, 1);
    CHECK(none.points.empty());
    CHECK(none.abandoned > 0);
}
