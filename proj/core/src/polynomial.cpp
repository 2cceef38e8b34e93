#include "poisson/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace poisson {

Polynomial::Polynomial(const Rational& c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c)
{
    Polynomial p;
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const
{
    // The leading term has the largest total degree.
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool Polynomial::is_homogeneous(int d) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return static_cast<int>(t.first.degree()) == d; });
}

Polynomial Polynomial::homogeneous_part(int d) const
{
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.degree()) == d)
            out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

bool Polynomial::depends_on(Var v) const
{
    return std::any_of(terms_.begin(), terms_.end(), [v](const auto& t) { return t.first[v] > 0; });
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::partial(Var v) const
{
    const int i = static_cast<int>(v);
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.exp[i] == 0)
            continue;
        Monomial dm = m;
        --dm.exp[i];
        out.add_term(dm, c * m.exp[i]);
    }
    return out;
}

Rational Polynomial::evaluate(const RationalPoint& pt) const
{
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < 3; ++v)
            for (std::uint32_t e = 0; e < m.exp[v]; ++e)
                t *= pt[v];
        sum += t;
    }
    return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial poly_arith(const Polynomial& p, const Polynomial& q, ArithKind kind)
{
    switch (kind) {
    case ArithKind::add:
        return p + q;
    case ArithKind::sub:
        return p - q;
    case ArithKind::mul:
        return p * q;
    }
    return {};
}

Polynomial substitute(const Polynomial& p, Var v, const Polynomial& arg)
{
    const int i = static_cast<int>(v);
    // Group by the exponent of v, then Horner from the top.
    std::map<std::uint32_t, Polynomial> by_power;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        rest.exp[i] = 0;
        by_power[m.exp[i]].add_term(rest, c);
    }
    if (by_power.empty())
        return {};
    Polynomial acc;
    std::uint32_t power = by_power.rbegin()->first;
    for (std::uint32_t e = power + 1; e-- > 0;) {
        acc = acc * arg;
        if (auto it = by_power.find(e); it != by_power.end())
            acc += it->second;
    }
    return acc;
}

std::vector<Monomial> monomials_of_degree(int d)
{
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    const auto n = static_cast<std::uint32_t>(d);
    for (std::uint32_t k = 0; k <= n; ++k)
        for (std::uint32_t j = 0; j + k <= n; ++j)
            out.emplace_back(n - j - k, j, k);
    std::sort(out.begin(), out.end(), LeadingFirst{});
    return out;
}

}  // namespace poisson
