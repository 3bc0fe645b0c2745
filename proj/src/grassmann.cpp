#include "amoeba/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "amoeba/errors.hpp"
#include "amoeba/numsolve.hpp"
#include "amoeba/parallel.hpp"
#include "amoeba/random.hpp"

namespace amoeba {

CompleteIntersection2 CompleteIntersection2::make(LaurentPolynomial f1, LaurentPolynomial f2) {
    if (f1.dimension() != 4 || f2.dimension() != 4) throw DomainError("complete intersection: 4 variables required");
    if (f1.is_zero() || f2.is_zero()) throw DegenerateError("complete intersection: zero equation");
    CompleteIntersection2 v;
    v.d1 = total_degree(f1);
    v.d2 = total_degree(f2);
    v.f1 = std::move(f1);
    v.f2 = std::move(f2);
    return v;
}

PlueckerVector pluecker_coordinates(const CompleteIntersection2& v) {
    std::set<ExponentVector> support;
    for (const auto& [e, c] : v.f1.terms()) support.insert(e);
    for (const auto& [e, c] : v.f2.terms()) support.insert(e);
    const std::vector<ExponentVector> s(support.begin(), support.end());

    PlueckerVector out;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            std::vector<std::pair<ExponentVector, Complex>> terms;
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t b = a + 1; b < s.size(); ++b) {
                    const auto& al = s[a];
                    const auto& be = s[b];
                    const std::int64_t minor = al[i] * be[j] - al[j] * be[i];
                    if (minor == 0) continue;
                    const Complex cross = v.f1.coefficient(al) * v.f2.coefficient(be) -
                                          v.f1.coefficient(be) * v.f2.coefficient(al);
                    if (cross == Complex{}) continue;
                    ExponentVector sum(4);
                    for (int k = 0; k < 4; ++k) sum[k] = al[k] + be[k];
                    terms.emplace_back(std::move(sum), static_cast<double>(minor) * cross);
                }
            out.p.emplace(std::make_pair(i, j), LaurentPolynomial(4, terms));
        }
    return out;
}

double pluecker_relation_residual(const PlueckerVector& p, std::span<const Complex> z) {
    if (z.size() != 4) throw DomainError("pluecker_relation_residual: point in (C*)^4 expected");
    auto at = [&](int i, int j) { return evaluate(p.at(i, j), z); };
    const Complex a = at(0, 1) * at(2, 3);
    const Complex b = at(0, 2) * at(1, 3);
    const Complex c = at(0, 3) * at(1, 2);
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (scale == 0.0) throw DegenerateError("pluecker_relation_residual: all minors vanish");
    return std::abs(a - b + c) / scale;
}

BigInt codim2_bound(int d1, int d2) {
    if (d1 < 1 || d2 < 1) throw DomainError("codim2_bound: degrees must be >= 1");
    const BigInt s = d1 + d2;
    return BigInt(2) * d1 * d2 * s * s;
}

Codim2Check mv_codim2_check(const LatticePolytope& d1, const LatticePolytope& d2, const std::optional<ScalingHint>& hint) {
    if (d1.dimension() != 4 || d2.dimension() != 4) throw DomainError("mv_codim2_check: polytopes in Z^4 required");
    auto mv = [](std::initializer_list<LatticePolytope> list) {
        const std::vector<LatticePolytope> v(list);
        return mixed_volume(v);
    };
    const LatticePolytope sum = minkowski_sum(d1, d2);
    Codim2Check r;
    r.lhs = mv({d1, d2, sum, sum});
    r.mv_1211 = mv({d1, d2, d1, d1});
    r.mv_1212 = mv({d1, d2, d1, d2});
    r.mv_1222 = mv({d1, d2, d2, d2});
    r.rhs = r.mv_1211 + 2 * r.mv_1212 + r.mv_1222;
    r.equal = r.lhs == r.rhs;
    if (hint) {
        const std::int64_t s = hint->d1 + hint->d2;
        r.scaling_value = hint->d1 * hint->d2 * s * s * normalized_volume(hint->base);
        r.scaling_holds = *r.scaling_value == r.lhs && *r.scaling_value == r.rhs;
    }
    return r;
}

VarietySample sample_variety_points(const CompleteIntersection2& v, int count, std::uint64_t seed, unsigned threads) {
    if (count < 0) throw DomainError("sample_variety_points: negative count");
    VarietySample out;
    if (count == 0) return out;

    struct One {
        std::vector<std::array<Complex, 4>> points;
        bool abandoned = false;
    };
    const CounterRng base(seed, 0x9a55ULL);
    const int kept[] = {0, 1};
    auto solve_one = [&](std::size_t index) {
        One r;
        CounterRng rng = base.substream(index);
        const Complex z3 = std::polar(1.0, rng.phase());
        const Complex z4 = std::polar(1.0, rng.phase());
        const std::array<Complex, 4> at{1.0, 1.0, z3, z4};
        const LaurentPolynomial g1 = restrict_to(v.f1, kept, at);
        const LaurentPolynomial g2 = restrict_to(v.f2, kept, at);
        if (g1.is_zero() || g2.is_zero()) {
            r.abandoned = true;
            return r;
        }
        try {
            for (const auto& s : solve_torus_system(g1, g2)) {
                const std::array<Complex, 4> pt{s.z, s.w, z3, z4};
                if (relative_residual(v.f1, pt) <= 1e-8 && relative_residual(v.f2, pt) <= 1e-8) r.points.push_back(pt);
            }
        } catch (const DegenerateError&) {
        } catch (const NumericalError&) {
        }
        r.abandoned = r.points.empty();
        return r;
    };

    const int max_samples = 4 * count + 16;
    const int batch = std::max(8, count / 2);
    while (static_cast<int>(out.points.size()) < count && out.samples < max_samples) {
        const int todo = std::min(batch, max_samples - out.samples);
        const auto results = parallel_map(
            static_cast<std::size_t>(todo), [&](std::size_t i) { return solve_one(out.samples + i); }, threads);
        for (const auto& r : results) {
            ++out.samples;
            if (r.abandoned) ++out.abandoned;
            for (const auto& p : r.points)
                if (static_cast<int>(out.points.size()) < count) out.points.push_back(p);
            if (static_cast<int>(out.points.size()) >= count) break;
        }
    }
    return out;
}

}  // namespace amoeba
