#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace poisson {

/// Exact rational number. mpq_class keeps results of arithmetic canonical
/// (lowest terms, positive denominator); values built by hand go through
/// make_rational so the invariant holds everywhere.
using Rational = mpq_class;

/// Raised for malformed parameters (bad tau range, zero denominators, ...).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Rational make_rational(long num, long den = 1);

/// Accepts "p/q", "-p/q" or a plain integer. Throws ParameterError.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace poisson
