#include "poisson/expression.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace poisson {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::invalid_argument(message + " at position " + std::to_string(position)), kind_(kind), position_(position)
{
}

namespace {

enum class Tok { number, var, gen, plus, minus, star, slash, caret, end };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string text;
};

std::vector<Token> tokenize(std::string_view s)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({Tok::number, i, std::string(s.substr(i, j - i))});
            i = j;
            continue;
        }
        if (c == 'd' && i + 1 < s.size() && (s[i + 1] == 'x' || s[i + 1] == 'y' || s[i + 1] == 'z')) {
            out.push_back({Tok::gen, i, std::string(s.substr(i, 2))});
            i += 2;
            continue;
        }
        Tok kind;
        switch (c) {
        case 'x':
        case 'y':
        case 'z': kind = Tok::var; break;
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '/': kind = Tok::slash; break;
        case '^': kind = Tok::caret; break;
        default: throw ParseError(ParseError::Kind::syntax, i, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, i, std::string(1, c)});
        ++i;
    }
    out.push_back({Tok::end, s.size(), ""});
    return out;
}

Var var_of(char c) { return c == 'x' ? Var::x : c == 'y' ? Var::y : Var::z; }

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    MultiVector parse()
    {
        std::optional<int> degree;
        std::vector<std::pair<int, MultiVector>> terms;
        bool first = true;
        while (true) {
            int sign = 1;
            if (!first) {
                if (peek().kind == Tok::end)
                    break;
                if (peek().kind == Tok::plus)
                    advance();
                else if (peek().kind == Tok::minus) {
                    advance();
                    sign = -1;
                } else
                    fail("expected '+' or '-'");
            }
            first = false;
            const std::size_t start = peek().pos;
            auto [term_degree, value] = term();
            if (degree && *degree != term_degree)
                throw ParseError(ParseError::Kind::mixed_degree, start,
                                 "term of degree " + std::to_string(term_degree) + " in an expression of degree " +
                                     std::to_string(*degree));
            degree = term_degree;
            terms.emplace_back(sign, std::move(value));
        }
        MultiVector sum(*degree);
        for (auto& [sign, v] : terms)
            sum += Rational(sign) * std::move(v);
        return sum;
    }

private:
    const Token& peek() const { return tokens_[at_]; }
    const Token& advance() { return tokens_[at_++]; }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(ParseError::Kind::syntax, peek().pos, what);
    }

    std::pair<int, MultiVector> term()
    {
        Rational coefficient = 1;
        Monomial monomial;
        std::optional<std::pair<int, MultiVector>> block;
        while (peek().kind == Tok::plus || peek().kind == Tok::minus)
            if (advance().kind == Tok::minus)
                coefficient = -coefficient;
        while (true) {
            const Token& t = peek();
            switch (t.kind) {
            case Tok::number: coefficient *= rational(); break;
            case Tok::var: monomial = monomial * power(); break;
            case Tok::gen:
                if (block)
                    fail("at most one wedge block per term");
                block = wedge_block();
                break;
            default: fail(t.kind == Tok::end ? "unexpected end of input" : "expected a factor");
            }
            if (peek().kind != Tok::star)
                break;
            advance();
        }
        Polynomial coeff = Polynomial::term(monomial, coefficient);
        if (!block)
            return {0, MultiVector::scalar(coeff)};
        return {block->first, coeff * std::move(block->second)};
    }

    Rational rational()
    {
        const Token& num = advance();
        mpz_class numerator(num.text);
        if (peek().kind != Tok::slash)
            return Rational(numerator);
        advance();
        if (peek().kind != Tok::number)
            fail("expected a denominator");
        const Token& den = advance();
        mpz_class denominator(den.text);
        if (denominator == 0)
            throw ParseError(ParseError::Kind::zero_denominator, den.pos, "zero denominator");
        Rational r(numerator, denominator);
        r.canonicalize();
        return r;
    }

    Monomial power()
    {
        const Token& v = advance();
        Monomial m = Monomial::of(var_of(v.text[0]));
        if (peek().kind != Tok::caret)
            return m;
        advance();
        if (peek().kind != Tok::number)
            fail("expected an exponent");
        const Token& e = advance();
        if (e.text.size() > 6)
            throw ParseError(ParseError::Kind::syntax, e.pos, "exponent too large");
        m.exp[static_cast<int>(var_of(v.text[0]))] = static_cast<std::uint32_t>(std::stoul(e.text));
        return m;
    }

    std::pair<int, MultiVector> wedge_block()
    {
        std::vector<Var> gens{var_of(advance().text[1])};
        while (peek().kind == Tok::caret) {
            advance();
            if (peek().kind != Tok::gen)
                fail("expected dx, dy or dz after '^'");
            gens.push_back(var_of(advance().text[1]));
        }
        const int q = static_cast<int>(gens.size());
        if (q > 3)
            return {q, MultiVector(q)};
        BasisSlot slot = wedge_slot(gens);
        if (slot.index < 0)
            return {q, MultiVector(q)};
        return {q, Rational(slot.sign) * MultiVector::basis(q, slot.index)};
    }

    std::vector<Token> tokens_;
    std::size_t at_ = 0;
};

// Wedge index -> (ascending generator text, sign).
std::pair<const char*, int> wedge_text(int q, int index)
{
    switch (q) {
    case 0: return {"", 1};
    case 1: return {index == 0 ? "dx" : index == 1 ? "dy" : "dz", 1};
    case 2: return index == 0 ? std::pair{"dy^dz", 1} : index == 1 ? std::pair{"dx^dz", -1} : std::pair{"dx^dy", 1};
    default: return {"dx^dy^dz", 1};
    }
}

std::string monomial_text(const Monomial& m)
{
    std::string out;
    static constexpr char names[] = {'x', 'y', 'z'};
    for (int i = 0; i < 3; ++i) {
        if (m.exp[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += names[i];
        if (m.exp[i] > 1)
            out += '^' + std::to_string(m.exp[i]);
    }
    return out;
}

std::string term_text(const Rational& c, const Monomial& m, const char* wedge)
{
    std::string body = monomial_text(m);
    if (*wedge) {
        if (!body.empty())
            body += '*';
        body += wedge;
    }
    if (body.empty())
        return to_string(c);
    if (c == 1)
        return body;
    return to_string(c) + "*" + body;
}

}  // namespace

MultiVector parse_multivector(std::string_view text) { return Parser(text).parse(); }

Polynomial parse_polynomial(std::string_view text)
{
    MultiVector v = parse_multivector(text);
    if (v.is_zero())
        return {};
    if (v.degree() != 0)
        throw ParseError(ParseError::Kind::mixed_degree, 0, "expected a function, got a degree-" +
                                                                std::to_string(v.degree()) + " multivector");
    return v[0];
}

std::string format_multivector(const MultiVector& v)
{
    if (v.is_zero())
        return "0";
    const int q = v.degree();
    std::vector<std::tuple<Monomial, int, Rational>> terms;
    for (int w = 0; w < wedge_basis_size(q); ++w)
        for (const auto& [m, c] : v[w].terms())
            terms.emplace_back(m, w, c);
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (std::get<0>(a) != std::get<0>(b))
            return LeadingFirst{}(std::get<0>(a), std::get<0>(b));
        return std::get<1>(a) < std::get<1>(b);
    });
    std::string out;
    for (const auto& [m, w, c] : terms) {
        auto [wedge, sign] = wedge_text(q, w);
        if (!out.empty())
            out += " + ";
        out += term_text(sign * c, m, wedge);
    }
    return out;
}

std::string format_polynomial(const Polynomial& p) { return format_multivector(MultiVector::scalar(p)); }

}  // namespace poisson
