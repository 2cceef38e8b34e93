#pragma once

#include "poisson/multivector.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace poisson {

/// Multivector expressions. `dx`, `dy`, `dz` are the coordinate vector
/// fields, `^` is a power after x|y|z and a wedge between generators:
///
///   expr      := term (("+" | "-") term)*
///   term      := factor ("*" factor)*
///   factor    := rational | monomial | wedgeblock
///   rational  := integer ("/" posint)?
///   monomial  := ("x" | "y" | "z") ("^" nat)?
///   wedgeblock:= gen ("^" gen)*          at most one per term
///   gen       := "dx" | "dy" | "dz"
///
/// A term may carry a leading sign. Whitespace is ignored.
class ParseError : public std::invalid_argument {
public:
    enum class Kind { syntax, mixed_degree, zero_denominator };

    ParseError(Kind kind, std::size_t position, const std::string& message);

    Kind kind() const { return kind_; }
    /// Zero-based character offset into the source text.
    std::size_t position() const { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

MultiVector parse_multivector(std::string_view text);
/// Parses a degree-0 expression.
Polynomial parse_polynomial(std::string_view text);

/// Canonical text: terms ordered by monomial (leading first) then wedge
/// index, generators ascending with the sign folded into the coefficient,
/// coefficient 1 omitted, -1 written "-1*", terms joined by " + ".
std::string format_multivector(const MultiVector& v);
std::string format_polynomial(const Polynomial& p);

}  // namespace poisson
