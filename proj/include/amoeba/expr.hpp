#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "amoeba/errors.hpp"
#include "amoeba/laurent.hpp"

namespace amoeba {

class ParseError : public DomainError {
public:
    ParseError(const std::string& message, std::size_t position);
    /// 0-based byte offset into the source text.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// (z, w) for n = 2, (z1, ..., zn) otherwise.
std::vector<std::string> default_variables(int n);

/// Parses a Laurent polynomial over the given variable names.
///
/// Grammar (whitespace-insensitive):
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (['*'] factor)*
///   factor  := '-' factor | primary ['^' ['+'|'-'] integer]
///   primary := number ['i'] | 'i' | variable | '(' expr ')'
/// Numbers are decimal reals with optional exponent. Negative powers are allowed on
/// monomials only. Duplicate monomials are merged by summation. "i" is reserved for
/// the imaginary unit.
LaurentPolynomial parse_poly(std::string_view text, const std::vector<std::string>& variables);

/// Inverse of parse_poly: terms in exponent order, real and imaginary parts printed
/// as separate terms with 17 significant digits, so parsing the output reproduces
/// the term map exactly.
std::string format_poly(const LaurentPolynomial& p, const std::vector<std::string>& variables);

}  // namespace amoeba
