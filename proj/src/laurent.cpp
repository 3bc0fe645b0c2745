#include "amoeba/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "amoeba/errors.hpp"
#include "amoeba/random.hpp"

namespace amoeba {

namespace {

// Neumaier summation, one accumulator per real component.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

Complex int_power(Complex base, std::int64_t k) {
    if (k == 0) return {1.0, 0.0};
    const bool invert = k < 0;
    std::uint64_t e = invert ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    Complex result{1.0, 0.0};
    while (e) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return invert ? Complex{1.0, 0.0} / result : result;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(int dimension) : dimension_(dimension) {
    if (dimension < 1) throw DomainError("LaurentPolynomial: dimension must be >= 1");
}

LaurentPolynomial::LaurentPolynomial(int dimension,
                                     std::initializer_list<std::pair<ExponentVector, Complex>> terms)
    : LaurentPolynomial(dimension) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial::LaurentPolynomial(int dimension,
                                     const std::vector<std::pair<ExponentVector, Complex>>& terms)
    : LaurentPolynomial(dimension) {
    for (const auto& [e, c] : terms) add_term(e, c);
}

void LaurentPolynomial::check_length(const ExponentVector& e) const {
    if (static_cast<int>(e.size()) != dimension_)
        throw DomainError("exponent of length " + std::to_string(e.size()) +
                          " in a polynomial of dimension " + std::to_string(dimension_));
}

void LaurentPolynomial::add_term(const ExponentVector& e, Complex c) {
    check_length(e);
    if (c == Complex{}) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex{}) terms_.erase(it);
    }
}

std::vector<ExponentVector> LaurentPolynomial::support() const {
    std::vector<ExponentVector> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

Complex LaurentPolynomial::coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Complex{} : it->second;
}

bool LaurentPolynomial::has_negative_exponents() const {
    for (const auto& [e, c] : terms_)
        if (std::any_of(e.begin(), e.end(), [](std::int64_t v) { return v < 0; })) return true;
    return false;
}

ExponentVector LaurentPolynomial::min_exponents() const {
    if (is_zero()) throw DegenerateError("min_exponents of the zero polynomial");
    ExponentVector m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < dimension_; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

ExponentVector LaurentPolynomial::max_exponents() const {
    if (is_zero()) throw DegenerateError("max_exponents of the zero polynomial");
    ExponentVector m = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < dimension_; ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

std::int64_t LaurentPolynomial::degree_in(int axis) const {
    if (axis < 0 || axis >= dimension_) throw DomainError("degree_in: axis out of range");
    if (is_zero()) return 0;
    return max_exponents()[axis] - min_exponents()[axis];
}

LaurentPolynomial LaurentPolynomial::shifted(const ExponentVector& shift) const {
    check_length(shift);
    LaurentPolynomial out(dimension_);
    for (const auto& [e, c] : terms_) {
        ExponentVector f = e;
        for (int i = 0; i < dimension_; ++i) f[i] += shift[i];
        out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::normalized_shift() const {
    if (is_zero()) return *this;
    ExponentVector m = min_exponents();
    for (auto& v : m) v = -v;
    return shifted(m);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    if (other.dimension_ != dimension_) throw DomainError("dimension mismatch in +");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    if (other.dimension_ != dimension_) throw DomainError("dimension mismatch in -");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(Complex scalar) {
    if (scalar == Complex{}) {
        terms_.clear();
        return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= scalar;
        if (it->second == Complex{})
            it = terms_.erase(it);
        else
            ++it;
    }
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.dimension_ != b.dimension_) throw DomainError("dimension mismatch in *");
    LaurentPolynomial out(a.dimension_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            ExponentVector e = ea;
            for (int i = 0; i < a.dimension_; ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Complex monomial_value(std::span<const Complex> z, const ExponentVector& e) {
    Complex v{1.0, 0.0};
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) v *= int_power(z[i], e[i]);
    return v;
}

namespace {

void check_point(const LaurentPolynomial& p, std::span<const Complex> z) {
    if (static_cast<int>(z.size()) != p.dimension())
        throw DomainError("evaluation point has wrong length");
    for (const Complex& v : z)
        if (v == Complex{}) throw DomainError("evaluation point has a zero coordinate");
}

}  // namespace

Complex evaluate(const LaurentPolynomial& p, std::span<const Complex> z) {
    check_point(p, z);
    CompensatedSum re, im;
    for (const auto& [e, c] : p.terms()) {
        const Complex t = c * monomial_value(z, e);
        re.add(t.real());
        im.add(t.imag());
    }
    return {re.value(), im.value()};
}

double term_magnitude(const LaurentPolynomial& p, std::span<const Complex> z) {
    check_point(p, z);
    double s = 0.0;
    for (const auto& [e, c] : p.terms()) s += std::abs(c) * std::abs(monomial_value(z, e));
    return s;
}

double relative_residual(const LaurentPolynomial& p, std::span<const Complex> z) {
    const double scale = term_magnitude(p, z);
    return scale > 0.0 ? std::abs(evaluate(p, z)) / scale : 0.0;
}

LaurentPolynomial log_derivative(const LaurentPolynomial& p, int axis) {
    if (axis < 0 || axis >= p.dimension()) throw DomainError("log_derivative: axis out of range");
    LaurentPolynomial out(p.dimension());
    for (const auto& [e, c] : p.terms())
        if (e[axis] != 0) out.add_term(e, static_cast<double>(e[axis]) * c);
    return out;
}

LaurentPolynomial partial_derivative(const LaurentPolynomial& p, int axis) {
    if (axis < 0 || axis >= p.dimension())
        throw DomainError("partial_derivative: axis out of range");
    LaurentPolynomial out(p.dimension());
    for (const auto& [e, c] : p.terms()) {
        if (e[axis] == 0) continue;
        ExponentVector f = e;
        f[axis] -= 1;
        out.add_term(f, static_cast<double>(e[axis]) * c);
    }
    return out;
}

std::int64_t total_degree(const LaurentPolynomial& p) {
    if (p.is_zero()) throw DegenerateError("total_degree of the zero polynomial");
    const LaurentPolynomial q = p.has_negative_exponents() ? p.normalized_shift() : p;
    std::int64_t best = 0;
    for (const auto& [e, c] : q.terms()) {
        std::int64_t s = 0;
        for (auto v : e) s += v;
        best = std::max(best, s);
    }
    return best;
}

LaurentPolynomial restrict_to(const LaurentPolynomial& p, std::span<const int> kept,
                              std::span<const Complex> point) {
    const int n = p.dimension();
    if (static_cast<int>(point.size()) != n) throw DomainError("restrict_to: point length");
    std::vector<bool> is_kept(n, false);
    for (int a : kept) {
        if (a < 0 || a >= n) throw DomainError("restrict_to: axis out of range");
        is_kept[a] = true;
    }
    for (int i = 0; i < n; ++i)
        if (!is_kept[i] && point[i] == Complex{}) throw DomainError("restrict_to: zero coordinate");

    LaurentPolynomial out(static_cast<int>(kept.size()));
    for (const auto& [e, c] : p.terms()) {
        Complex coef = c;
        for (int i = 0; i < n; ++i)
            if (!is_kept[i] && e[i] != 0) coef *= int_power(point[i], e[i]);
        ExponentVector f;
        f.reserve(kept.size());
        for (int a : kept) f.push_back(e[a]);
        out.add_term(f, coef);
    }
    return out;
}

std::vector<ExponentVector> dense_support(int n, int d) {
    if (n < 1 || d < 0) throw DomainError("dense_support: need n >= 1, d >= 0");
    std::vector<ExponentVector> out;
    ExponentVector e(n, 0);
    // Odometer over [0, d]^n, keeping |e| <= d.
    while (true) {
        std::int64_t s = 0;
        for (auto v : e) s += v;
        if (s <= d) out.push_back(e);
        int i = n - 1;
        while (i >= 0 && e[i] == d) e[i--] = 0;
        if (i < 0) break;
        ++e[i];
    }
    return out;
}

LaurentPolynomial random_polynomial(const std::vector<ExponentVector>& support, std::uint64_t seed) {
    if (support.empty()) throw DomainError("random_polynomial: empty support");
    const int n = static_cast<int>(support.front().size());
    LaurentPolynomial out(n);
    CounterRng rng(seed, 0x5eedULL);
    for (std::size_t k = 0; k < support.size(); ++k) {
        CounterRng term = rng.substream(k);
        const double modulus = term.uniform(0.5, 2.0);
        const double phase = term.phase();
        out.add_term(support[k], std::polar(modulus, phase));
    }
    return out;
}

}  // namespace amoeba
