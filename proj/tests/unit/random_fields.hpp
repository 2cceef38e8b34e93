#pragma once

#include "support/random_fields.hpp"

#include <doctest.h>

namespace doctest {
template <>
struct StringMaker<poisson::MultiVector> {
    static String convert(const poisson::MultiVector& v) { return poisson::format_multivector(v).c_str(); }
};
template <>
struct StringMaker<poisson::Polynomial> {
    static String convert(const poisson::Polynomial& p) { return poisson::format_polynomial(p).c_str(); }
};
}  // namespace doctest
