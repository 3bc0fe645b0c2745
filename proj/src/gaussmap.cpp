#include "amoeba/gaussmap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "amoeba/errors.hpp"
#include "amoeba/parallel.hpp"
#include "amoeba/polytope.hpp"
#include "amoeba/random.hpp"

namespace amoeba {

LogGradient::LogGradient(const LaurentPolynomial& p) {
    parts_.reserve(p.dimension());
    for (int j = 0; j < p.dimension(); ++j) parts_.push_back(log_derivative(p, j));
}

std::vector<Complex> LogGradient::at(std::span<const Complex> z) const {
    std::vector<Complex> w;
    w.reserve(parts_.size());
    for (const auto& part : parts_) w.push_back(evaluate(part, z));
    return w;
}

double LogGradient::scale(std::span<const Complex> z) const {
    double s = 0.0;
    for (const auto& part : parts_) s = std::max(s, term_magnitude(part, z));
    return s;
}

namespace {

int max_modulus_index(const std::vector<Complex>& w) {
    int ref = 0;
    for (int j = 1; j < static_cast<int>(w.size()); ++j)
        if (std::abs(w[j]) > std::abs(w[ref])) ref = j;
    return ref;
}

}  // namespace

GaussValue gauss_map(const LogGradient& grad, std::span<const Complex> z) {
    std::vector<Complex> w = grad.at(z);
    const int ref = max_modulus_index(w);
    const double top = std::abs(w[ref]);
    if (top == 0.0 || top <= 1e-14 * grad.scale(z))
        throw DegenerateError("gauss_map: all logarithmic derivatives vanish");
    const Complex pivot = w[ref];
    for (auto& v : w) v /= pivot;
    w[ref] = Complex{1.0, 0.0};
    return {std::move(w), std::vector<Complex>(z.begin(), z.end()), ref};
}

GaussValue gauss_map(const LaurentPolynomial& p, std::span<const Complex> z) {
    return gauss_map(LogGradient(p), z);
}

double criticality_residual(const LogGradient& grad, std::span<const Complex> z) {
    const std::vector<Complex> w = grad.at(z);
    const int ref = max_modulus_index(w);
    const double top = std::abs(w[ref]);
    if (top == 0.0 || top <= 1e-14 * grad.scale(z))
        throw DegenerateError("criticality_residual: all logarithmic derivatives vanish");
    double worst = 0.0;
    for (int j = 0; j < static_cast<int>(w.size()); ++j) {
        if (j == ref) continue;
        // A coordinate at rounding level of its own terms is zero, hence real.
        if (std::abs(w[j]) <= 64.0 * std::numeric_limits<double>::epsilon() * term_magnitude(grad[j], z)) continue;
        const double im = std::imag(w[j] * std::conj(w[ref]));
        worst = std::max(worst, std::abs(im) / (std::abs(w[j]) * top));
    }
    return worst;
}

double criticality_residual(const LaurentPolynomial& p, std::span<const Complex> z) {
    return criticality_residual(LogGradient(p), z);
}

// ---------------------------------------------------------------------------

std::int64_t QPolynomial::total_degree() const {
    std::int64_t best = -1;
    for (const auto& [key, c] : terms) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < key.first.size(); ++i) s += key.first[i] + key.second[i] - 2 * shift[i];
        best = std::max(best, s);
    }
    return best;
}

bool QPolynomial::has_diagonal_terms() const {
    return std::any_of(terms.begin(), terms.end(), [](const auto& t) { return t.first.first == t.first.second; });
}

Complex QPolynomial::evaluate(std::span<const Complex> z) const {
    std::vector<Complex> zbar(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) zbar[i] = std::conj(z[i]);
    Complex acc{};
    for (const auto& [key, c] : terms) acc += c * monomial_value(z, key.first) * monomial_value(zbar, key.second);
    return acc;
}

QPolynomial q_polynomial(const LaurentPolynomial& p, int j) {
    const int n = p.dimension();
    if (n < 2) throw DomainError("q_polynomial: needs n >= 2");
    if (j < 1 || j >= n) throw DomainError("q_polynomial: index must be in [1, n)");
    if (p.is_zero()) throw DegenerateError("q_polynomial: zero polynomial");

    QPolynomial q;
    q.index = j;
    q.reference = 0;
    q.shift = p.has_negative_exponents() ? p.min_exponents() : ExponentVector(n, 0);
    const Complex half_over_i{0.0, -0.5};  // 1 / (2i)
    for (const auto& [a, ca] : p.terms())
        for (const auto& [b, cb] : p.terms()) {
            const std::int64_t k = a[j] * b[0] - a[0] * b[j];
            if (k == 0) continue;
            q.terms.emplace(std::make_pair(a, b), static_cast<double>(k) * ca * std::conj(cb) * half_over_i);
        }
    return q;
}

// ---------------------------------------------------------------------------

FiberResult fiber_count(const LaurentPolynomial& p, Direction xi, const TorusSolveOptions& options) {
    if (p.dimension() != 2) throw DomainError("fiber_count: plane curves only");
    if (p.is_zero() || p.is_monomial()) throw DegenerateError("fiber_count: monomial or zero polynomial");
    if (xi.first == Complex{} && xi.second == Complex{}) throw DomainError("fiber_count: zero direction");

    const LaurentPolynomial lz = log_derivative(p, 0);
    const LaurentPolynomial lw = log_derivative(p, 1);
    const LaurentPolynomial g = lz * xi.second - lw * xi.first;
    if (g.is_zero()) throw DegenerateError("fiber_count: fiber condition vanishes identically");

    FiberResult out;
    out.points = solve_torus_system(p, g, options);
    out.count = static_cast<int>(out.points.size());
    return out;
}

GaussDegreeEstimate gauss_degree_estimate(const LaurentPolynomial& p, int trials, std::uint64_t seed,
                                          unsigned threads, const TorusSolveOptions& options) {
    if (trials < 1) throw DomainError("gauss_degree_estimate: trials must be >= 1");
    if (p.dimension() != 2) throw DomainError("gauss_degree_estimate: plane curves only");
    if (p.is_zero() || p.is_monomial()) throw DegenerateError("gauss_degree_estimate: monomial or zero polynomial");

    const CounterRng base(seed, 0x6a055ULL);
    GaussDegreeEstimate est;
    est.counts = parallel_map(
        static_cast<std::size_t>(trials),
        [&](std::size_t i) {
            CounterRng r = base.substream(i);
            const Complex a = std::polar(r.uniform(0.5, 2.0), r.phase());
            const Complex b = std::polar(r.uniform(0.5, 2.0), r.phase());
            return fiber_count(p, {a, b}, options).count;
        },
        threads);

    std::map<int, int> freq;
    for (int c : est.counts) ++freq[c];
    int best = -1, best_freq = 0;
    for (const auto& [count, f] : freq)
        if (f >= best_freq) {  // ascending keys: ties go to the larger count
            best = count;
            best_freq = f;
        }
    est.estimate = best;
    est.reliable = (trials - best_freq) <= 0.2 * trials;
    est.kouchnirenko = normalized_volume(newton_polytope(p));
    return est;
}

}  // namespace amoeba
