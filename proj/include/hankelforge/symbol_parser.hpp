#pragma once

#include <stdexcept>
#include <string>

#include "hankelforge/laurent.hpp"

namespace hankelforge {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A symbol as typed on the command line together with its parsed value.
///
/// Grammar (whitespace insignificant):
///   expr  := sign? term (sign term)*
///   term  := coeff ('*'? zpart)? | zpart
///   zpart := 'z' ('^' int)?
///   coeff := int ('/' int)?
/// Exponents may be negative; "1/2 z^5" and "1/2*z^5" are the same term.
struct SymbolExpr {
    std::string source;
    LaurentPoly poly;
};

SymbolExpr parse_symbol(const std::string& text);

/// Canonical text form, lowest exponent first; parse_symbol(print_poly(p))
/// recovers p exactly.
std::string print_poly(const LaurentPoly& p);

}  // namespace hankelforge
