#pragma once

#include "poisson/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace poisson {

enum class Var : int { x = 0, y = 1, z = 2 };

inline constexpr std::array<Var, 3> kAllVars{Var::x, Var::y, Var::z};

/// x^i y^j z^k.
struct Monomial {
    std::array<std::uint32_t, 3> exp{0, 0, 0};

    constexpr Monomial() = default;
    constexpr Monomial(std::uint32_t i, std::uint32_t j, std::uint32_t k) : exp{i, j, k} {}

    static constexpr Monomial of(Var v)
    {
        Monomial m;
        m.exp[static_cast<int>(v)] = 1;
        return m;
    }

    constexpr std::uint32_t degree() const { return exp[0] + exp[1] + exp[2]; }
    constexpr std::uint32_t operator[](Var v) const { return exp[static_cast<int>(v)]; }

    friend constexpr Monomial operator*(const Monomial& a, const Monomial& b)
    {
        return {a.exp[0] + b.exp[0], a.exp[1] + b.exp[1], a.exp[2] + b.exp[2]};
    }
    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x < y < z: total degree first, then the
/// exponent of z, then y, then x.
constexpr bool graded_lex_less(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int v = 2; v >= 0; --v)
        if (a.exp[v] != b.exp[v])
            return a.exp[v] < b.exp[v];
    return false;
}

/// Canonical term order: leading (graded-lex largest) monomial first.
struct LeadingFirst {
    constexpr bool operator()(const Monomial& a, const Monomial& b) const
    {
        return graded_lex_less(b, a);
    }
};

/// Exact point in Q^3, used to evaluate polynomials and multivectors.
using RationalPoint = std::array<Rational, 3>;

/// Polynomial in x, y, z with rational coefficients. No zero coefficient is
/// ever stored, so structural equality is mathematical equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, LeadingFirst>;

    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static Polynomial term(const Monomial& m, const Rational& c = 1);
    static Polynomial var(Var v) { return term(Monomial::of(v)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    /// Largest total degree present; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int d) const;
    Polynomial homogeneous_part(int d) const;
    bool depends_on(Var v) const;

    /// Adds c*m in place, dropping the term if it cancels.
    void add_term(const Monomial& m, const Rational& c);

    Polynomial partial(Var v) const;
    Rational evaluate(const RationalPoint& pt) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a)
    {
        for (auto& [m, c] : a.terms_)
            c = -c;
        return a;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    TermMap terms_;
};

enum class ArithKind { add, sub, mul };

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithKind kind);

inline Polynomial partial_derivative(const Polynomial& p, Var v) { return p.partial(v); }

/// Substitutes `arg` for `v` in `p` (Horner in v).
Polynomial substitute(const Polynomial& p, Var v, const Polynomial& arg);

/// All monomials of total degree d, leading first; (d+1)(d+2)/2 of them.
std::vector<Monomial> monomials_of_degree(int d);

}  // namespace poisson
