#include "poisson/lie_registry.hpp"

#include <numeric>

namespace poisson {

namespace {

constexpr std::array<std::pair<AlgebraTag, std::string_view>, 9> kNames{{
    {AlgebraTag::abelian, "abelian"},
    {AlgebraTag::heisenberg, "heisenberg"},
    {AlgebraTag::aff_x_r, "aff_x_r"},
    {AlgebraTag::euclidean, "euclidean"},
    {AlgebraTag::book, "book"},
    {AlgebraTag::semi_open_book, "semi_open_book"},
    {AlgebraTag::spiral, "spiral"},
    {AlgebraTag::sl2, "sl2"},
    {AlgebraTag::so3, "so3"},
}};

int pair_index(int i, int j)
{
    // (1,2) -> 0, (1,3) -> 1, (2,3) -> 2
    if (i == 1 && j == 2)
        return 0;
    if (i == 1 && j == 3)
        return 1;
    if (i == 2 && j == 3)
        return 2;
    throw ContractViolation("structure constant index out of range");
}

}  // namespace

std::string_view tag_name(AlgebraTag tag)
{
    for (const auto& [t, n] : kNames)
        if (t == tag)
            return n;
    return "?";
}

std::optional<AlgebraTag> tag_from_name(std::string_view name)
{
    for (const auto& [t, n] : kNames)
        if (n == name)
            return t;
    return std::nullopt;
}

bool tag_needs_tau(AlgebraTag tag) { return tag == AlgebraTag::book || tag == AlgebraTag::spiral; }

const std::vector<AlgebraTag>& all_tags()
{
    static const std::vector<AlgebraTag> tags = [] {
        std::vector<AlgebraTag> out;
        for (const auto& [t, n] : kNames)
            out.push_back(t);
        return out;
    }();
    return tags;
}

AlgebraKind::AlgebraKind(AlgebraTag tag, std::optional<Rational> tau) : tag_(tag), tau_(std::move(tau))
{
    const std::string n(tag_name(tag));
    if (tag_needs_tau(tag) != tau_.has_value())
        throw ParameterError(tag_needs_tau(tag) ? n + " requires tau" : n + " takes no tau");
    if (tag == AlgebraTag::book && (*tau_ == 0 || abs(*tau_) > 1))
        throw ParameterError("book requires 0 < |tau| <= 1, got " + to_string(*tau_));
    if (tag == AlgebraTag::spiral && *tau_ <= 0)
        throw ParameterError("spiral requires tau > 0, got " + to_string(*tau_));
}

AlgebraKind AlgebraKind::parse(std::string_view name, std::optional<std::string_view> tau)
{
    auto tag = tag_from_name(name);
    if (!tag)
        throw ParameterError("unknown algebra '" + std::string(name) + "'");
    std::optional<Rational> t;
    if (tau)
        t = parse_rational(*tau);
    return AlgebraKind(*tag, t);
}

std::string AlgebraKind::name() const { return std::string(tag_name(tag_)); }

std::string AlgebraKind::label() const
{
    return tau_ ? name() + "(tau=" + to_string(*tau_) + ")" : name();
}

std::optional<std::pair<long, long>> AlgebraKind::hyperbolic_pq() const
{
    if (tag_ != AlgebraTag::book || *tau_ > 0)
        return std::nullopt;
    // tau is canonical, so -tau = p/q is already in lowest terms with p <= q.
    return std::pair<long, long>{-tau_->get_num().get_si(), tau_->get_den().get_si()};
}

Rational StructureConstants::at(int i, int j, int k) const
{
    if (i == j)
        return 0;
    if (i > j)
        return -c[pair_index(j, i)][k - 1];
    return c[pair_index(i, j)][k - 1];
}

void StructureConstants::set(int i, int j, int k, const Rational& value)
{
    if (i > j)
        c[pair_index(j, i)][k - 1] = -value;
    else
        c[pair_index(i, j)][k - 1] = value;
}

StructureConstants structure_constants(const AlgebraKind& kind)
{
    StructureConstants sc;
    switch (kind.tag()) {
    case AlgebraTag::abelian:
        break;
    case AlgebraTag::heisenberg:  // [e1,e2] = e3
        sc.set(1, 2, 3, 1);
        break;
    case AlgebraTag::aff_x_r:  // [e1,e2] = e1
        sc.set(1, 2, 1, 1);
        break;
    case AlgebraTag::euclidean:  // [e1,e3] = -e2, [e2,e3] = e1
        sc.set(1, 3, 2, -1);
        sc.set(2, 3, 1, 1);
        break;
    case AlgebraTag::book:  // [e1,e3] = e1, [e2,e3] = tau e2
        sc.set(1, 3, 1, 1);
        sc.set(2, 3, 2, *kind.tau());
        break;
    case AlgebraTag::semi_open_book:  // [e1,e3] = e1, [e2,e3] = e1 + e2
        sc.set(1, 3, 1, 1);
        sc.set(2, 3, 1, 1);
        sc.set(2, 3, 2, 1);
        break;
    case AlgebraTag::spiral:  // [e1,e3] = tau e1 - e2, [e2,e3] = e1 + tau e2
        sc.set(1, 3, 1, *kind.tau());
        sc.set(1, 3, 2, -1);
        sc.set(2, 3, 1, 1);
        sc.set(2, 3, 2, *kind.tau());
        break;
    case AlgebraTag::sl2:  // h, e, f: [h,e] = 2e, [h,f] = -2f, [e,f] = h
        sc.set(1, 2, 2, 2);
        sc.set(1, 3, 3, -2);
        sc.set(2, 3, 1, 1);
        break;
    case AlgebraTag::so3:  // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2
        sc.set(1, 2, 3, 1);
        sc.set(2, 3, 1, 1);
        sc.set(1, 3, 2, -1);
        break;
    }
    return sc;
}

MultiVector linear_poisson(const StructureConstants& sc)
{
    MultiVector pi(2);
    constexpr std::pair<int, int> pairs[3] = {{1, 2}, {1, 3}, {2, 3}};
    for (auto [i, j] : pairs) {
        Polynomial coeff;
        for (int k = 1; k <= 3; ++k)
            coeff += sc.at(i, j, k) * Polynomial::var(static_cast<Var>(k - 1));
        auto slot = wedge_slot({static_cast<Var>(i - 1), static_cast<Var>(j - 1)});
        pi[slot.index] += slot.sign > 0 ? coeff : -coeff;
    }
    return pi;
}

MultiVector jacobi_defect(const StructureConstants& sc)
{
    MultiVector pi = linear_poisson(sc);
    return schouten_bracket(pi, pi);
}

}  // namespace poisson
