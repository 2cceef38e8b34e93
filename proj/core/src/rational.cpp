#include "poisson/rational.hpp"

#include <cctype>

namespace poisson {

Rational make_rational(long num, long den)
{
    if (den == 0)
        throw ParameterError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool parse_integer(std::string_view s, mpz_class& out, bool allow_sign)
{
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            return false;
    std::string digits(s);
    if (!digits.empty() && digits.front() == '+')
        digits.erase(0, 1);
    return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    mpz_class num, den(1);
    if (!parse_integer(text.substr(0, slash), num, true))
        throw ParameterError("malformed rational '" + std::string(text) + "'");
    if (slash != std::string_view::npos) {
        if (!parse_integer(text.substr(slash + 1), den, false))
            throw ParameterError("malformed rational '" + std::string(text) + "'");
        if (den == 0)
            throw ParameterError("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str(10);
}

}  // namespace poisson
