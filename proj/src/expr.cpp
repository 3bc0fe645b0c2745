#include "amoeba/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace amoeba {

ParseError::ParseError(const std::string& message, std::size_t position)
    : DomainError("parse error at column " + std::to_string(position + 1) + ": " + message), position_(position) {}

std::vector<std::string> default_variables(int n) {
    if (n == 2) return {"z", "w"};
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
    return v;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {
        for (const auto& v : vars_) {
            if (v.empty() || !ident_start(v[0]) || !std::all_of(v.begin(), v.end(), ident_char))
                throw DomainError("parse_poly: invalid variable name '" + v + "'");
            if (v == "i") throw DomainError("parse_poly: 'i' is reserved for the imaginary unit");
        }
        for (std::size_t a = 0; a < vars_.size(); ++a)
            for (std::size_t b = a + 1; b < vars_.size(); ++b)
                if (vars_[a] == vars_[b]) throw DomainError("parse_poly: duplicate variable '" + vars_[a] + "'");
    }

    LaurentPolynomial parse() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
        LaurentPolynomial p = expr();
        skip();
        if (pos_ < s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return p;
    }

private:
    std::string_view s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;

    int n() const { return static_cast<int>(vars_.size()); }

    void skip() {
        while (pos_ < s_.size()) {
            if (std::isspace(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            else
                break;
        }
    }

    // Accepts '-' and U+2212 as minus.
    bool minus() {
        skip();
        if (pos_ < s_.size() && s_[pos_] == '-') {
            ++pos_;
            return true;
        }
        if (s_.substr(pos_, 3) == "\xE2\x88\x92") {
            pos_ += 3;
            return true;
        }
        return false;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    LaurentPolynomial constant(Complex c) const { return LaurentPolynomial(n(), {{ExponentVector(n(), 0), c}}); }

    LaurentPolynomial expr() {
        LaurentPolynomial acc(n());
        bool negate = false;
        if (minus())
            negate = true;
        else
            accept('+');
        LaurentPolynomial t = term();
        if (negate) t *= Complex(-1.0);
        acc += t;
        while (true) {
            if (minus()) {
                acc -= term();
            } else if (accept('+')) {
                acc += term();
            } else {
                break;
            }
        }
        return acc;
    }

    bool starts_primary() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || ident_start(c);
    }

    LaurentPolynomial term() {
        LaurentPolynomial acc = factor();
        while (true) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (starts_primary()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return acc;
    }

    LaurentPolynomial factor() {
        if (minus()) return factor() * Complex(-1.0);
        skip();
        const std::size_t at = pos_;
        LaurentPolynomial base = primary();
        if (!accept('^')) return base;
        skip();
        const std::size_t epos = pos_;
        bool paren = accept('(');
        bool neg = false;
        if (minus())
            neg = true;
        else
            accept('+');
        skip();
        const std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) throw ParseError("expected integer exponent", dstart);
        std::int64_t k = 0;
        const auto r = std::from_chars(s_.data() + dstart, s_.data() + pos_, k);
        if (r.ec != std::errc{}) throw ParseError("exponent out of range", dstart);
        if (paren && !accept(')')) throw ParseError("expected ')'", pos_);
        if (neg) k = -k;
        return power(base, k, at, epos);
    }

    LaurentPolynomial power(const LaurentPolynomial& base, std::int64_t k, std::size_t at, std::size_t epos) {
        if (k >= 0) {
            if (k > 10000) throw ParseError("exponent too large", epos);
            LaurentPolynomial r = constant(1.0);
            for (std::int64_t i = 0; i < k; ++i) r = r * base;
            return r;
        }
        if (!base.is_monomial()) throw ParseError("negative power of a non-monomial", at);
        const auto& [e, c] = *base.terms().begin();
        ExponentVector ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] * k;
        return LaurentPolynomial(n(), {{ne, std::pow(c, static_cast<double>(k))}});
    }

    LaurentPolynomial primary() {
        skip();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPolynomial inner = expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (ident_start(c)) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            const std::string_view name = s_.substr(start, pos_ - start);
            if (name == "i") return constant(Complex(0.0, 1.0));
            for (int k = 0; k < n(); ++k)
                if (vars_[k] == name) {
                    ExponentVector e(n(), 0);
                    e[k] = 1;
                    return LaurentPolynomial(n(), {{e, 1.0}});
                }
            throw ParseError("unknown variable '" + std::string(name) + "'", start);
        }
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }

    LaurentPolynomial number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        };
        digits();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            digits();
        }
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
            std::size_t q = pos_ + 1;
            if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
            if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
                pos_ = q;
                digits();
            }
        }
        double v = 0.0;
        const auto r = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (r.ec != std::errc{} || r.ptr != s_.data() + pos_) throw ParseError("malformed number", start);
        if (!std::isfinite(v)) throw ParseError("number out of range", start);
        if (pos_ < s_.size() && s_[pos_] == 'i' && (pos_ + 1 >= s_.size() || !ident_char(s_[pos_ + 1]))) {
            ++pos_;
            return constant(Complex(0.0, v));
        }
        return constant(Complex(v, 0.0));
    }
};

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

LaurentPolynomial parse_poly(std::string_view text, const std::vector<std::string>& variables) {
    if (variables.empty()) throw DomainError("parse_poly: no variables");
    return Parser(text, variables).parse();
}

std::string format_poly(const LaurentPolynomial& p, const std::vector<std::string>& variables) {
    if (static_cast<int>(variables.size()) != p.dimension())
        throw DomainError("format_poly: variable count does not match the dimension");
    if (p.is_zero()) return "0";

    std::string out;
    for (const auto& [e, c] : p.terms()) {
        std::string mono;
        for (int k = 0; k < p.dimension(); ++k) {
            if (e[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += variables[k];
            if (e[k] != 1) mono += "^" + std::to_string(e[k]);
        }
        for (int part = 0; part < 2; ++part) {
            const double v = part == 0 ? c.real() : c.imag();
            if (v == 0.0) continue;
            const bool neg = std::signbit(v);
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            const double a = std::abs(v);
            std::string coef;
            if (part == 0)
                coef = (a == 1.0 && !mono.empty()) ? "" : format_number(a);
            else
                coef = a == 1.0 ? "i" : format_number(a) + "i";
            out += coef;
            if (!mono.empty()) out += (coef.empty() ? "" : "*") + mono;
        }
    }
    return out;
}

}  // namespace amoeba
