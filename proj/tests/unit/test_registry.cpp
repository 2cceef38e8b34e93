#include "random_fields.hpp"

#include "poisson/lie_registry.hpp"

#include <doctest.h>

using namespace poisson;
using namespace poisson::testing;

namespace {

std::vector<AlgebraKind> registry_sample()
{
    std::vector<AlgebraKind> kinds;
    for (AlgebraTag tag : all_tags()) {
        if (tag == AlgebraTag::book)
            for (const char* tau : {"1", "1/2", "1/3", "3/5", "-2/3", "-1", "-1/4"})
                kinds.push_back(AlgebraKind::parse("book", tau));
        else if (tag == AlgebraTag::spiral)
            for (const char* tau : {"1", "1/2", "3"})
                kinds.push_back(AlgebraKind::parse("spiral", tau));
        else
            kinds.emplace_back(tag);
    }
    return kinds;
}

}  // namespace

TEST_CASE("structure constants examples")
{
    const StructureConstants h = structure_constants(AlgebraKind(AlgebraTag::heisenberg));
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                CHECK(h.at(i, j, k) == ((i == 1 && j == 2 && k == 3) ? 1 : 0));
    CHECK(h.at(2, 1, 3) == -1);
    const StructureConstants a = structure_constants(AlgebraKind(AlgebraTag::abelian));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int k = 1; k <= 3; ++k)
                CHECK(a.at(i, j, k) == 0);
    const Rational tau = make_rational(2, 7);
    const StructureConstants s = structure_constants(AlgebraKind(AlgebraTag::spiral, tau));
    CHECK(s.at(1, 3, 1) == tau);
    CHECK(s.at(1, 3, 2) == -1);
    CHECK(s.at(2, 3, 1) == 1);
    CHECK(s.at(2, 3, 2) == tau);
}

TEST_CASE("linear Poisson bivectors")
{
    const Polynomial x = X(), y = Y(), z = Z();
    const MultiVector dz = fields::d(Var::z);
    CHECK(linear_poisson(AlgebraKind(AlgebraTag::heisenberg)) == parse_multivector("z*dx^dy"));
    CHECK(linear_poisson(AlgebraKind(AlgebraTag::euclidean)) == parse_multivector("-1*y*dx^dz + x*dy^dz"));
    CHECK(linear_poisson(AlgebraKind(AlgebraTag::euclidean)) == wedge(fields::rotation(), dz));
    CHECK(linear_poisson(AlgebraKind(AlgebraTag::aff_x_r)) == parse_multivector("x*dx^dy"));
    const Rational tau = make_rational(3, 4);
    CHECK(linear_poisson(AlgebraKind(AlgebraTag::spiral, tau)) ==
          wedge(tau * fields::euler_plane() + fields::rotation(), dz));
    CHECK(linear_poisson(AlgebraKind(AlgebraTag::book, tau)) == wedge(fields::euler_weighted(tau), dz));
    CHECK(linear_poisson(AlgebraKind(AlgebraTag::semi_open_book)) ==
          wedge(fields::euler_plane() + parse_multivector("x*dy"), dz));
    CHECK(linear_poisson(AlgebraKind(AlgebraTag::so3)) == parse_multivector("z*dx^dy + x*dy^dz + y*dz^dx"));
    CHECK(linear_poisson(AlgebraKind(AlgebraTag::abelian)).is_zero());
}

TEST_CASE("registry invariants")
{
    for (const auto& kind : registry_sample()) {
        CAPTURE(kind.label());
        const MultiVector pi = linear_poisson(kind);
        CHECK(jacobi_defect(structure_constants(kind)).is_zero());
        CHECK(pi.is_homogeneous(1));
        const AlgebraTag t = kind.tag();
        if (t == AlgebraTag::euclidean || t == AlgebraTag::book || t == AlgebraTag::semi_open_book ||
            t == AlgebraTag::spiral)
            CHECK(pi[2].is_zero());
    }
}

TEST_CASE("Jacobi defect detects non-Lie constants")
{
    StructureConstants sc;
    sc.set(1, 2, 1, 1);
    sc.set(2, 3, 2, 1);
    // [e1,[e2,e3]] + cyclic = e1
    CHECK_FALSE(jacobi_defect(sc).is_zero());
    CHECK(jacobi_defect(sc).degree() == 3);
}

TEST_CASE("algebra kind validation")
{
    CHECK_THROWS_AS(AlgebraKind::parse("book", std::nullopt), ParameterError);
    CHECK_THROWS_AS(AlgebraKind::parse("book", "3/2"), ParameterError);
    CHECK_THROWS_AS(AlgebraKind::parse("book", "0"), ParameterError);
    CHECK_THROWS_AS(AlgebraKind::parse("book", "-5/4"), ParameterError);
    CHECK_THROWS_AS(AlgebraKind::parse("spiral", "0"), ParameterError);
    CHECK_THROWS_AS(AlgebraKind::parse("spiral", "-1"), ParameterError);
    CHECK_THROWS_AS(AlgebraKind::parse("heisenberg", "1"), ParameterError);
    CHECK_THROWS_AS(AlgebraKind::parse("nope", std::nullopt), ParameterError);
    CHECK(AlgebraKind::parse("book", "-4/6").tau() == make_rational(-2, 3));
    CHECK(AlgebraKind::parse("book", "-2/3").hyperbolic_pq() == std::pair<long, long>{2, 3});
    CHECK(AlgebraKind::parse("book", "-1").hyperbolic_pq() == std::pair<long, long>{1, 1});
    CHECK_FALSE(AlgebraKind::parse("book", "1/2").hyperbolic_pq().has_value());
    CHECK(AlgebraKind::parse("book", "-2/3").label() == "book(tau=-2/3)");
    for (AlgebraTag tag : all_tags())
        CHECK(tag_from_name(tag_name(tag)) == tag);
}
