#include "amoeba/numsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "amoeba/errors.hpp"

namespace amoeba {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

// ---------------------------------------------------------------------------
// UnivariatePolynomial

Complex UnivariatePolynomial::operator()(Complex x) const {
    Complex acc{};
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UnivariatePolynomial::magnitude(Complex x) const {
    const double r = std::abs(x);
    double acc = 0.0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

double UnivariatePolynomial::max_coefficient() const {
    double m = 0.0;
    for (const auto& c : coefficients) m = std::max(m, std::abs(c));
    return m;
}

void UnivariatePolynomial::trim() {
    while (!coefficients.empty() && coefficients.back() == Complex{}) coefficients.pop_back();
}

void UnivariatePolynomial::trim_relative(double tol) {
    const double cutoff = tol * max_coefficient();
    for (auto& c : coefficients)
        if (std::abs(c) <= cutoff) c = Complex{};
    trim();
}

UnivariatePolynomial UnivariatePolynomial::from_laurent(const LaurentPolynomial& p) {
    if (p.dimension() != 1) throw DomainError("from_laurent: expected one variable");
    if (p.is_zero()) return {};
    const std::int64_t lo = p.min_exponents()[0];
    const std::int64_t hi = p.max_exponents()[0];
    std::vector<Complex> c(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0] - lo)] = v;
    return UnivariatePolynomial(std::move(c));
}

int RootSet::total_multiplicity() const {
    int s = 0;
    for (const auto& r : roots) s += r.multiplicity;
    return s;
}

// ---------------------------------------------------------------------------
// Roots

namespace {

// p(x)/p'(x), evaluated through the reversed polynomial when |x| > 1.
Complex newton_ratio(const std::vector<Complex>& a, Complex x, double* backward_error) {
    const int n = static_cast<int>(a.size()) - 1;
    if (std::abs(x) <= 1.0) {
        Complex p = a[n], dp{};
        double mag = std::abs(a[n]);
        const double r = std::abs(x);
        for (int k = n - 1; k >= 0; --k) {
            dp = dp * x + p;
            p = p * x + a[k];
            mag = mag * r + std::abs(a[k]);
        }
        if (backward_error) *backward_error = mag > 0 ? std::abs(p) / mag : 0.0;
        if (dp == Complex{}) return std::abs(p) == 0.0 ? Complex{} : Complex{1e300, 0.0};
        return p / dp;
    }
    // Reversed: p(x) = x^n rev(y), y = 1/x; p/p' = x / (n - y rev'(y)/rev(y)).
    const Complex y = 1.0 / x;
    Complex r = a[0], dr{};
    double mag = std::abs(a[0]);
    const double ry = std::abs(y);
    for (int k = 1; k <= n; ++k) {
        dr = dr * y + r;
        r = r * y + a[k];
        mag = mag * ry + std::abs(a[k]);
    }
    if (backward_error) *backward_error = mag > 0 ? std::abs(r) / mag : 0.0;
    if (r == Complex{}) return Complex{};
    const Complex denom = static_cast<double>(n) - y * dr / r;
    if (denom == Complex{}) return Complex{1e300, 0.0};
    return x / denom;
}

// Initial approximations on circles given by the upper convex hull of
// (k, log|a_k|) (Bini's rule), so widely spread root moduli start well.
std::vector<Complex> initial_guesses(const std::vector<Complex>& a) {
    const int n = static_cast<int>(a.size()) - 1;
    std::vector<int> idx;
    std::vector<double> lg(n + 1);
    for (int k = 0; k <= n; ++k) lg[k] = a[k] == Complex{} ? -1e300 : std::log(std::abs(a[k]));
    for (int k = 0; k <= n; ++k) {
        if (a[k] == Complex{}) continue;
        while (idx.size() >= 2) {
            const int i = idx[idx.size() - 2], j = idx.back();
            // Pop j when it lies on or below the chord from i to k.
            if ((lg[j] - lg[i]) * (k - i) <= (lg[k] - lg[i]) * (j - i))
                idx.pop_back();
            else
                break;
        }
        idx.push_back(k);
    }
    std::vector<Complex> out;
    out.reserve(n);
    constexpr double sigma = 0.7;
    for (std::size_t s = 0; s + 1 < idx.size(); ++s) {
        const int i = idx[s], j = idx[s + 1], m = j - i;
        const double radius = std::exp((lg[i] - lg[j]) / m);
        for (int t = 0; t < m; ++t) {
            const double angle = 2.0 * std::numbers::pi * (t + 0.5) / m + 2.0 * std::numbers::pi * (s + 1) / n + sigma;
            out.push_back(std::polar(radius, angle));
        }
    }
    return out;
}

}  // namespace

RootApproximations aberth_roots(const UnivariatePolynomial& q, const SolverTolerances& tol) {
    if (q.degree() < 1) throw DomainError("aberth_roots: degree must be >= 1");
    RootApproximations result;

    std::vector<Complex> a = q.coefficients;
    std::size_t zeros = 0;
    while (zeros < a.size() && a[zeros] == Complex{}) ++zeros;
    result.values.assign(zeros, Complex{});
    a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(zeros));
    const int n = static_cast<int>(a.size()) - 1;
    if (n == 0) {
        result.converged = true;
        return result;
    }
    if (n == 1) {
        result.values.push_back(-a[0] / a[1]);
        result.converged = true;
        return result;
    }

    std::vector<Complex> z = initial_guesses(a);
    std::vector<bool> done(n, false);
    int remaining = n;
    int it = 0;
    for (; it < tol.max_iterations && remaining > 0; ++it) {
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            double be = 0.0;
            const Complex ratio = newton_ratio(a, z[i], &be);
            if (be <= 4.0 * kEps) {
                done[i] = true;
                --remaining;
                continue;
            }
            Complex s{};
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            const Complex corr = ratio / (1.0 - ratio * s);
            z[i] -= corr;
            if (std::abs(corr) <= 2.0 * kEps * std::abs(z[i])) {
                done[i] = true;
                --remaining;
            }
        }
    }
    result.iterations = it;

    // Newton polish; keep a step only when it lowers the backward error.
    for (auto& x : z) {
        double be = 0.0;
        newton_ratio(a, x, &be);
        for (int k = 0; k < 5 && be > kEps; ++k) {
            const Complex cand = x - newton_ratio(a, x, nullptr);
            double be2 = 0.0;
            newton_ratio(a, cand, &be2);
            if (!(be2 < be)) break;
            x = cand;
            be = be2;
        }
    }

    result.converged = true;
    for (const auto& x : z) {
        double be = 0.0;
        newton_ratio(a, x, &be);
        if (!(be <= tol.residual) || !std::isfinite(x.real()) || !std::isfinite(x.imag()))
            result.converged = false;
    }
    result.values.insert(result.values.end(), z.begin(), z.end());
    return result;
}

RootSet univariate_roots(const UnivariatePolynomial& q, const SolverTolerances& tol) {
    if (q.degree() < 1) throw DomainError("univariate_roots: degree must be >= 1");
    const RootApproximations approx = aberth_roots(q, tol);

    auto backward = [&](Complex x) {
        const double mag = q.magnitude(x);
        return mag > 0 ? std::abs(q(x)) / mag : 0.0;
    };

    double worst = 0.0;
    for (const auto& x : approx.values) worst = std::max(worst, backward(x));
    if (!approx.converged || !(worst <= tol.residual))
        throw NumericalError("univariate_roots: no convergence after " + std::to_string(approx.iterations) +
                                 " iterations",
                             worst);

    // Single-linkage clustering in input order.
    const std::size_t n = approx.values.size();
    std::vector<int> label(n, -1);
    int next = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (label[i] >= 0) continue;
        label[i] = next;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                if (label[v] >= 0) continue;
                const double scale = std::max(1.0, std::abs(approx.values[u]));
                if (std::abs(approx.values[u] - approx.values[v]) <= tol.cluster * scale) {
                    label[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }

    RootSet out;
    for (int c = 0; c < next; ++c) {
        Complex sum{};
        int count = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (label[i] == c) {
                sum += approx.values[i];
                ++count;
            }
        Root r;
        r.value = sum / static_cast<double>(count);
        r.multiplicity = count;
        r.residual = backward(r.value);
        if (!(r.residual <= tol.residual)) {
            // The centroid of a cluster may lose accuracy; fall back to a member.
            for (std::size_t i = 0; i < n; ++i)
                if (label[i] == c && backward(approx.values[i]) < r.residual) {
                    r.value = approx.values[i];
                    r.residual = backward(r.value);
                }
        }
        out.roots.push_back(r);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Resultants

namespace {

// Coefficients of f in the eliminated variable, each a polynomial in the kept
// variable, evaluated at x. Index = power of the eliminated variable.
std::vector<Complex> coefficients_at(const LaurentPolynomial& f, int elim, Complex x) {
    const int kept = 1 - elim;
    std::vector<Complex> c(static_cast<std::size_t>(f.max_exponents()[elim] + 1));
    for (const auto& [e, v] : f.terms()) {
        Complex term = v;
        for (std::int64_t k = 0; k < e[kept]; ++k) term *= x;
        c[static_cast<std::size_t>(e[elim])] += term;
    }
    return c;
}

Eigen::MatrixXcd sylvester_matrix(const std::vector<Complex>& f, const std::vector<Complex>& g) {
    const int m = static_cast<int>(f.size()) - 1;
    const int l = static_cast<int>(g.size()) - 1;
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(m + l, m + l);
    for (int r = 0; r < l; ++r)
        for (int k = 0; k <= m; ++k) s(r, r + k) = f[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= l; ++k) s(l + r, r + k) = g[l - k];
    return s;
}

}  // namespace

UnivariatePolynomial sylvester_resultant(const LaurentPolynomial& f, const LaurentPolynomial& g,
                                         int eliminated_axis) {
    if (f.dimension() != 2 || g.dimension() != 2) throw DomainError("sylvester_resultant: bivariate input expected");
    if (eliminated_axis != 0 && eliminated_axis != 1) throw DomainError("sylvester_resultant: axis must be 0 or 1");
    if (f.is_zero() || g.is_zero()) throw DomainError("sylvester_resultant: zero polynomial");
    if (f.has_negative_exponents() || g.has_negative_exponents())
        throw DomainError("sylvester_resultant: negative exponents; shift the inputs first");
    const int elim = eliminated_axis, kept = 1 - elim;
    const std::int64_t m = f.max_exponents()[elim];
    const std::int64_t l = g.max_exponents()[elim];
    if (m < 1 || l < 1) throw DomainError("sylvester_resultant: input constant in the eliminated variable");

    const std::int64_t bound = m * g.max_exponents()[kept] + l * f.max_exponents()[kept];
    const int samples = static_cast<int>(bound + 1);

    std::vector<Complex> values(samples);
    double scale = 0.0;
    for (int j = 0; j < samples; ++j) {
        const Complex x = std::polar(1.0, 2.0 * std::numbers::pi * j / samples);
        const Eigen::MatrixXcd s = sylvester_matrix(coefficients_at(f, elim, x), coefficients_at(g, elim, x));
        values[j] = s.partialPivLu().determinant();
        double hadamard = 1.0;
        for (int r = 0; r < s.rows(); ++r) hadamard *= s.row(r).norm();
        scale = std::max(scale, hadamard);
    }

    std::vector<Complex> coeffs(samples);
    for (int k = 0; k < samples; ++k) {
        Complex acc{};
        for (int j = 0; j < samples; ++j)
            acc += values[j] * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) * k / samples);
        coeffs[k] = acc / static_cast<double>(samples);
    }

    double peak = 0.0;
    for (const auto& v : values) peak = std::max(peak, std::abs(v));
    if (peak <= 1e-11 * scale) return {};

    UnivariatePolynomial r(std::move(coeffs));
    r.trim_relative(1e-11);
    return r;
}

// ---------------------------------------------------------------------------
// Newton

NewtonResult newton_polish(const ResidualFn& residual, const JacobianFn& jacobian, Eigen::VectorXcd x0,
                           const NewtonOptions& options) {
    NewtonResult out;
    out.x = std::move(x0);
    Eigen::VectorXcd f = residual(out.x);
    out.residual = f.cwiseAbs().maxCoeff();
    if (out.residual <= options.tolerance) {
        out.status = NewtonStatus::converged;
        return out;
    }

    for (int step = 0; step < options.max_steps; ++step) {
        const Eigen::MatrixXcd j = jacobian(out.x);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(j);
        const auto& sv = svd.singularValues();
        if (sv.size() == 0 || sv(0) == 0.0 || sv(sv.size() - 1) <= 1e-14 * sv(0)) {
            out.status = NewtonStatus::singular_jacobian;
            return out;
        }
        const Eigen::VectorXcd delta = j.fullPivLu().solve(f);

        double t = 1.0;
        Eigen::VectorXcd best_x = out.x - delta;
        Eigen::VectorXcd best_f = residual(best_x);
        double best_r = best_f.cwiseAbs().maxCoeff();
        for (int h = 0; h < 8 && !(best_r < out.residual); ++h) {
            t *= 0.5;
            Eigen::VectorXcd cx = out.x - t * delta;
            Eigen::VectorXcd cf = residual(cx);
            const double cr = cf.cwiseAbs().maxCoeff();
            if (cr < best_r) {
                best_x = std::move(cx);
                best_f = std::move(cf);
                best_r = cr;
            }
        }
        ++out.iterations;
        if (!(best_r < out.residual) && delta.norm() <= 4.0 * kEps * (1.0 + out.x.norm())) break;
        if (std::isfinite(best_r)) {
            out.x = std::move(best_x);
            f = std::move(best_f);
            out.residual = best_r;
        }
        if (out.residual <= options.tolerance) {
            out.status = NewtonStatus::converged;
            return out;
        }
    }
    out.status = NewtonStatus::not_converged;
    return out;
}

// ---------------------------------------------------------------------------
// Bivariate torus systems

namespace {

struct Candidate {
    Complex z, w;
};

// Roots of a one-variable Laurent polynomial (best effort); empty when constant.
std::vector<Complex> loose_roots(const LaurentPolynomial& p, const SolverTolerances& tol) {
    UnivariatePolynomial u = UnivariatePolynomial::from_laurent(p);
    if (u.degree() < 1) return {};
    return aberth_roots(u, tol).values;
}

LaurentPolynomial restrict_axis(const LaurentPolynomial& p, int fixed_axis, Complex value) {
    const int kept[] = {1 - fixed_axis};
    Complex point[2];
    point[fixed_axis] = value;
    point[1 - fixed_axis] = Complex{1.0, 0.0};
    return restrict_to(p, kept, point);
}

void push_candidates(std::vector<Candidate>& out, int fixed_axis, Complex value,
                     const std::vector<Complex>& others) {
    for (const Complex& o : others) {
        if (fixed_axis == 0)
            out.push_back({value, o});
        else
            out.push_back({o, value});
    }
}

bool usable(Complex v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag()) && v != Complex{};
}

}  // namespace

std::vector<TorusPoint2> solve_torus_system(const LaurentPolynomial& f_in, const LaurentPolynomial& g_in,
                                            const TorusSolveOptions& options) {
    if (f_in.dimension() != 2 || g_in.dimension() != 2) throw DomainError("solve_torus_system: bivariate input expected");
    if (f_in.is_zero() || g_in.is_zero()) throw DegenerateError("solve_torus_system: identically zero equation");
    if (f_in.is_monomial() || g_in.is_monomial()) return {};

    const LaurentPolynomial f = f_in.normalized_shift();
    const LaurentPolynomial g = g_in.normalized_shift();

    std::vector<Candidate> candidates;
    const SolverTolerances& rt = options.roots;

    auto back_substitute = [&](int fixed_axis, const std::vector<Complex>& values, bool use_f, bool use_g) {
        for (const Complex& v : values) {
            if (!usable(v)) continue;
            if (use_f) push_candidates(candidates, fixed_axis, v, loose_roots(restrict_axis(f, fixed_axis, v), rt));
            if (use_g) push_candidates(candidates, fixed_axis, v, loose_roots(restrict_axis(g, fixed_axis, v), rt));
        }
    };

    int elim = -1;
    if (f.degree_in(1) > 0 && g.degree_in(1) > 0)
        elim = 1;
    else if (f.degree_in(0) > 0 && g.degree_in(0) > 0)
        elim = 0;

    if (elim >= 0) {
        const UnivariatePolynomial res = sylvester_resultant(f, g, elim);
        if (res.is_zero()) throw DegenerateError("solve_torus_system: resultant vanishes identically");
        if (res.degree() < 1) return {};
        const int kept = 1 - elim;
        back_substitute(kept, aberth_roots(res, rt).values, true, true);
    } else {
        // One equation involves a single variable: solve it and substitute.
        const bool f_uni = f.degree_in(0) == 0 || f.degree_in(1) == 0;
        const LaurentPolynomial& uni = f_uni ? f : g;
        const LaurentPolynomial& other = f_uni ? g : f;
        const int var = uni.degree_in(0) > 0 ? 0 : 1;
        const int kept[] = {var};
        const Complex unit[2] = {{1.0, 0.0}, {1.0, 0.0}};
        const LaurentPolynomial u = restrict_to(uni, kept, unit);
        for (const Complex& v : loose_roots(u, rt)) {
            if (!usable(v)) continue;
            const LaurentPolynomial rest = restrict_axis(other, var, v);
            if (rest.is_zero()) throw DegenerateError("solve_torus_system: common curve component");
            push_candidates(candidates, var, v, loose_roots(rest, rt));
        }
    }

    // Joint polishing, with each equation scaled by its size at the start point.
    std::vector<TorusPoint2> accepted;
    const LaurentPolynomial fz = partial_derivative(f, 0), fw = partial_derivative(f, 1);
    const LaurentPolynomial gz = partial_derivative(g, 0), gw = partial_derivative(g, 1);
    auto eval_at = [](const LaurentPolynomial& p, Complex z, Complex w) {
        const Complex pt[2] = {z, w};
        return evaluate(p, pt);
    };

    for (const Candidate& c : candidates) {
        if (!usable(c.z) || !usable(c.w)) continue;
        const Complex p0[2] = {c.z, c.w};
        const double sf = std::max(term_magnitude(f, p0), 1e-300);
        const double sg = std::max(term_magnitude(g, p0), 1e-300);

        auto residual = [&](const Eigen::VectorXcd& x) {
            Eigen::VectorXcd r(2);
            if (!usable(x(0)) || !usable(x(1))) {
                r.setConstant(Complex{std::numeric_limits<double>::infinity(), 0.0});
                return r;
            }
            r(0) = eval_at(f, x(0), x(1)) / sf;
            r(1) = eval_at(g, x(0), x(1)) / sg;
            return r;
        };
        auto jac = [&](const Eigen::VectorXcd& x) {
            Eigen::MatrixXcd j(2, 2);
            j(0, 0) = eval_at(fz, x(0), x(1)) / sf;
            j(0, 1) = eval_at(fw, x(0), x(1)) / sf;
            j(1, 0) = eval_at(gz, x(0), x(1)) / sg;
            j(1, 1) = eval_at(gw, x(0), x(1)) / sg;
            return j;
        };
        Eigen::VectorXcd x0(2);
        x0 << c.z, c.w;
        NewtonOptions no;
        no.tolerance = 1e-15;
        no.max_steps = 30;
        const NewtonResult nr = newton_polish(residual, jac, x0, no);
        const Complex z = nr.x(0), w = nr.x(1);
        if (!usable(z) || !usable(w)) continue;
        // One more Newton correction must be small relative to each coordinate; this
        // rejects near-zero coordinates converging to an intersection off the torus.
        {
            const Eigen::VectorXcd d = jac(nr.x).fullPivLu().solve(residual(nr.x));
            if (!(std::abs(d(0)) <= 1e-8 * std::abs(z)) || !(std::abs(d(1)) <= 1e-8 * std::abs(w))) continue;
        }
        if (std::abs(std::log(std::abs(z))) > options.max_log || std::abs(std::log(std::abs(w))) > options.max_log)
            continue;
        const Complex pt[2] = {z, w};
        const double res = std::max(relative_residual(f, pt), relative_residual(g, pt));
        if (!(res <= options.accept_residual)) continue;

        bool duplicate = false;
        for (auto& a : accepted) {
            const double d = std::abs(a.z - z) / std::abs(z) + std::abs(a.w - w) / std::abs(w);
            if (d <= options.dedupe) {
                duplicate = true;
                if (res < a.residual) a = {z, w, res};
                break;
            }
        }
        if (!duplicate) accepted.push_back({z, w, res});
    }
    return accepted;
}

}  // namespace amoeba
