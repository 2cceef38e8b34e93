#include "family_oracle.hpp"

#include "poisson/expression.hpp"

#include <algorithm>

namespace poisson::oracle {
namespace {

Polynomial X() { return Polynomial::var(Var::x); }
Polynomial Y() { return Polynomial::var(Var::y); }
Polynomial Z() { return Polynomial::var(Var::z); }

Polynomial power(const Polynomial& p, int n)
{
    Polynomial out(1);
    for (int i = 0; i < n; ++i)
        out = out * p;
    return out;
}

MultiVector vec(const Polynomial& a, const Polynomial& b, const Polynomial& c) { return MultiVector::vector(a, b, c); }
// Cyclic components: dy^dz, dz^dx, dx^dy.
MultiVector biv(const Polynomial& a, const Polynomial& b, const Polynomial& c) { return MultiVector::bivector(a, b, c); }

// x dx^dz = -x dz^dx
MultiVector dx_dz(const Polynomial& f) { return biv(0, -f, 0); }
MultiVector dy_dz(const Polynomial& f) { return biv(f, 0, 0); }
MultiVector dx_dy(const Polynomial& f) { return biv(0, 0, f); }

Family literal(int q, int d, MultiVector v, std::string name)
{
    Family f;
    f.name = std::move(name);
    f.q = q;
    f.shift = d;
    f.ring = Ring::constants;
    f.literal = true;
    f.generator = [v = std::move(v)](const Polynomial& c) { return c * v; };
    return f;
}

Family family(std::string name, int q, int shift, Ring ring, std::function<MultiVector(const Polynomial&)> gen)
{
    Family f;
    f.name = std::move(name);
    f.q = q;
    f.shift = shift;
    f.ring = ring;
    f.generator = std::move(gen);
    return f;
}

Family invariant_family(std::string name, int q, int shift, int step, Polynomial inv,
                        std::function<MultiVector(const Polynomial&)> gen)
{
    Family f = family(std::move(name), q, shift, Ring::invariant, std::move(gen));
    f.step = step;
    f.invariant = std::move(inv);
    return f;
}

MultiVector scalar(const Polynomial& f) { return MultiVector::scalar(f); }
MultiVector top(const Polynomial& f) { return MultiVector::trivector(f); }

ExpectedWitness coboundary(MultiVector v)
{
    return {format_multivector(v), true, "stated"};
}

}  // namespace

std::size_t ring_count(const Family& f, int k)
{
    if (k < 0)
        return 0;
    const auto n = static_cast<std::size_t>(k);
    switch (f.ring) {
    case Ring::constants: return k == 0 ? 1 : 0;
    case Ring::poly_z: return 1;
    case Ring::poly_xy: return n + 1;
    case Ring::poly_xy0: return k == 0 ? 0 : n + 1;
    case Ring::poly_xyz: return (n + 1) * (n + 2) / 2;
    case Ring::invariant: return k % f.step == 0 ? 1 : 0;
    }
    return 0;
}

std::vector<Polynomial> ring_basis(const Family& f, int k)
{
    std::vector<Polynomial> out;
    if (k < 0)
        return out;
    switch (f.ring) {
    case Ring::constants:
        if (k == 0)
            out.emplace_back(1);
        break;
    case Ring::poly_z: out.push_back(power(Z(), k)); break;
    case Ring::poly_xy:
    case Ring::poly_xy0:
        if (f.ring == Ring::poly_xy0 && k == 0)
            break;
        for (int a = 0; a <= k; ++a)
            out.push_back(power(X(), a) * power(Y(), k - a));
        break;
    case Ring::poly_xyz:
        for (int a = 0; a <= k; ++a)
            for (int b = 0; a + b <= k; ++b)
                out.push_back(power(X(), a) * power(Y(), b) * power(Z(), k - a - b));
        break;
    case Ring::invariant:
        if (k % f.step == 0)
            out.push_back(power(f.invariant, k / f.step));
        break;
    }
    return out;
}

std::size_t family_dim(const std::vector<Family>& families, int q, int d)
{
    std::size_t total = 0;
    for (const auto& f : families)
        if (f.q == q)
            total += ring_count(f, d - f.shift);
    return total;
}

std::vector<Spec> all_specs()
{
    const Polynomial x = X(), y = Y(), z = Z();
    const MultiVector dz = vec(0, 0, 1);
    const MultiVector one = scalar(1);
    const MultiVector euler = vec(x, y, 0);
    std::vector<Spec> specs;

    auto book = [&](std::string id, const char* tau, std::string citation) {
        Spec s{std::move(id), AlgebraKind::parse("book", tau), std::move(citation)};
        s.expand_dmax = kGridDmax;
        s.families.push_back(literal(0, 0, one, "constants"));
        s.families.push_back(literal(1, 0, dz, "dz"));
        return s;
    };

    {
        Spec s = book("open_book_tau_1", "1", "formal cohomology of the open book, tau = 1");
        s.families.push_back(literal(1, 1, vec(y, 0, 0), "y dx"));
        s.families.push_back(literal(1, 1, vec(0, x, 0), "x dy"));
        s.families.push_back(literal(1, 1, vec(0, y, 0), "y dy"));
        s.families.push_back(literal(2, 1, dx_dz(y), "y dx^dz"));
        s.families.push_back(literal(2, 1, dy_dz(x), "x dy^dz"));
        s.families.push_back(literal(2, 1, dy_dz(y), "y dy^dz"));
        s.witnesses.push_back(coboundary(dx_dz(x) + dy_dz(y)));
        for (const Polynomial& p : {x * x, x * y, y * y})
            s.witnesses.push_back(coboundary(dx_dy(p)));
        specs.push_back(std::move(s));
    }
    for (int n : {2, 3}) {
        const std::string tau = "1/" + std::to_string(n);
        Spec s = book("open_book_tau_1_" + std::to_string(n), tau.c_str(),
                      "formal cohomology of the open book, tau = 1/n");
        s.families.push_back(literal(1, 1, vec(0, y, 0), "y dy"));
        s.families.push_back(literal(1, n, vec(power(y, n), 0, 0), "y^n dx"));
        s.families.push_back(literal(2, 1, dy_dz(y), "y dy^dz"));
        s.families.push_back(literal(2, n, dx_dz(power(y, n)), "y^n dx^dz"));
        s.witnesses.push_back(coboundary(dx_dy(power(y, n + 1))));
        specs.push_back(std::move(s));
    }
    {
        Spec s = book("open_book_tau_3_5", "3/5", "formal cohomology of the open book, generic tau");
        s.families.push_back(literal(1, 1, vec(0, y, 0), "y dy"));
        s.families.push_back(literal(2, 1, dy_dz(y), "y dy^dz"));
        specs.push_back(std::move(s));
    }
    auto hyperbolic = [&](long p, long q) {
        const std::string tau = "-" + std::to_string(p) + "/" + std::to_string(q);
        Spec s{"hyperbolic_" + std::to_string(p) + "_" + std::to_string(q), AlgebraKind::parse("book", tau),
               "formal cohomology of the hyperbolic book, tau = -p/q"};
        s.expand_dmax = kGridDmax;
        const Polynomial casimir = power(x, static_cast<int>(p)) * power(y, static_cast<int>(q));
        const int step = static_cast<int>(p + q);
        s.families.push_back(invariant_family("f", 0, 0, step, casimir, scalar));
        s.families.push_back(invariant_family("f E", 1, 1, step, casimir, [euler](const Polynomial& f) { return f * euler; }));
        s.families.push_back(invariant_family("f dz", 1, 0, step, casimir, [dz](const Polynomial& f) { return f * dz; }));
        s.families.push_back(invariant_family("f E^dz", 2, 1, step, casimir,
                                              [x, y](const Polynomial& f) { return dx_dz(f * x) + dy_dz(f * y); }));
        return s;
    };
    specs.push_back(hyperbolic(2, 3));
    specs.push_back(hyperbolic(1, 1));
    {
        Spec s{"semi_open_book", AlgebraKind(AlgebraTag::semi_open_book), "formal cohomology of the semi open book"};
        s.expand_dmax = kGridDmax;
        s.families.push_back(literal(0, 0, one, "constants"));
        s.families.push_back(literal(1, 0, dz, "dz"));
        s.families.push_back(literal(1, 1, vec(0, x, 0), "x dy"));
        s.families.push_back(literal(2, 1, dx_dz(y), "y dx^dz"));
        specs.push_back(std::move(s));
    }
    {
        Spec s{"spiral", AlgebraKind::parse("spiral", "1"), "formal cohomology of the spiral, tau = 1"};
        s.expand_dmax = kGridDmax;
        s.families.push_back(literal(0, 0, one, "constants"));
        s.families.push_back(literal(1, 0, dz, "dz"));
        s.families.push_back(literal(1, 1, euler, "E"));
        s.families.push_back(literal(2, 1, dx_dz(x) + dy_dz(y), "E^dz"));
        specs.push_back(std::move(s));
    }
    {
        Spec s{"heisenberg", AlgebraKind(AlgebraTag::heisenberg), "cohomology of the Heisenberg structure z dx^dy", true};
        s.expand_dmax = 4;
        // x dx + z dz rather than the full Euler field, which is not a cocycle
        const MultiVector scaling = vec(x, 0, z);
        s.families.push_back(family("f(z)", 0, 0, Ring::poly_z, scalar));
        s.families.push_back(family("f(z) (x dx + z dz)", 1, 1, Ring::poly_z,
                                    [scaling](const Polynomial& f) { return f * scaling; }));
        // [g, dx^dy] = g_y dx - g_x dy
        s.families.push_back(family("[g, dx^dy]", 1, -1, Ring::poly_xy0, [](const Polynomial& g) {
            return vec(g.partial(Var::y), -g.partial(Var::x), 0);
        }));
        // [h dz, dx^dy] = h_x dy^dz + h_y dz^dx
        s.families.push_back(family("[g1 dz, dx^dy]", 2, -1, Ring::poly_xy0, [](const Polynomial& g) {
            return biv(g.partial(Var::x), g.partial(Var::y), 0);
        }));
        s.families.push_back(family("[z g2 dz, dx^dy]", 2, 0, Ring::poly_xy0, [z](const Polynomial& g) {
            return biv(z * g.partial(Var::x), z * g.partial(Var::y), 0);
        }));
        s.families.push_back(family("g(x,y) dx^dy^dz", 3, 0, Ring::poly_xy, top));
        specs.push_back(std::move(s));
    }
    {
        Spec s{"aff_x_r", AlgebraKind(AlgebraTag::aff_x_r), "cohomology of the structure x dx^dy", true};
        s.expand_dmax = 4;
        s.families.push_back(family("f(z)", 0, 0, Ring::poly_z, scalar));
        s.families.push_back(family("f(z) dy", 1, 0, Ring::poly_z, [](const Polynomial& f) { return vec(0, f, 0); }));
        s.families.push_back(family("f(z) dz", 1, 0, Ring::poly_z, [](const Polynomial& f) { return vec(0, 0, f); }));
        s.families.push_back(family("f(z) dy^dz", 2, 0, Ring::poly_z, dy_dz));
        specs.push_back(std::move(s));
    }
    {
        Spec s{"euclidean", AlgebraKind(AlgebraTag::euclidean), "cohomology of the Euclidean structure T^dz", true};
        s.expand_dmax = 4;
        const Polynomial r2 = x * x + y * y;
        s.families.push_back(invariant_family("f(r2)", 0, 0, 2, r2, scalar));
        s.families.push_back(invariant_family("f(r2) E", 1, 1, 2, r2, [euler](const Polynomial& f) { return f * euler; }));
        s.families.push_back(invariant_family("f(r2) dz", 1, 0, 2, r2, [dz](const Polynomial& f) { return f * dz; }));
        s.families.push_back(invariant_family("f(r2) E^dz", 2, 1, 2, r2,
                                              [x, y](const Polynomial& f) { return dx_dz(f * x) + dy_dz(f * y); }));
        s.families.push_back(family("g(z) dx^dy", 2, 0, Ring::poly_z, dx_dy));
        s.families.push_back(family("g(z) dx^dy^dz", 3, 0, Ring::poly_z, top));
        specs.push_back(std::move(s));
    }
    auto vanishing = [&](std::string id, AlgebraTag tag, Polynomial casimir, std::string citation,
                         std::string provenance) {
        Spec s{std::move(id), AlgebraKind(tag), std::move(citation), true};
        s.expand_dmax = 4;
        s.dims_provenance = std::move(provenance);
        s.families.push_back(invariant_family("f(C)", 0, 0, 2, casimir, scalar));
        s.families.push_back(invariant_family("f(C) dx^dy^dz", 3, 0, 2, casimir, top));
        return s;
    };
    specs.push_back(vanishing("so3_vanishing", AlgebraTag::so3, x * x + y * y + z * z,
                              "cohomology of so(3)*: H1 and H2 vanish", "oracle:family_enumeration"));
    // H1 = H2 = 0 by the Whitehead lemmas; H3 then matches H0 degree by degree
    // because the Euler characteristic of every homogeneous piece is zero.
    specs.push_back(vanishing("sl2_vanishing", AlgebraTag::sl2, x * x + Rational(4) * y * z,
                              "sl(2)* by the Whitehead lemmas", "oracle:whitehead_euler_characteristic"));
    {
        Spec s{"abelian", AlgebraKind(AlgebraTag::abelian), "zero Poisson structure: all multivector fields"};
        s.expand_dmax = 2;
        for (int q = 0; q <= 3; ++q)
            for (int w = 0; w < wedge_basis_size(q); ++w) {
                const MultiVector b = MultiVector::basis(q, w);
                s.families.push_back(family("h " + format_multivector(b), q, 0, Ring::poly_xyz,
                                            [b](const Polynomial& h) { return h * b; }));
            }
        specs.push_back(std::move(s));
    }
    return specs;
}

ExpectedResult build(const Spec& spec)
{
    ExpectedResult e;
    e.id = spec.id;
    e.kind = spec.kind;
    e.citation = spec.citation;
    e.smooth_shadow = spec.smooth_shadow;
    e.grid_dmax = kGridDmax;
    e.dims_provenance = spec.dims_provenance;
    for (int q = 0; q <= 3; ++q)
        for (int d = 0; d <= kGridDmax; ++d)
            e.dims[q].push_back(family_dim(spec.families, q, d));

    const bool finite = std::all_of(spec.families.begin(), spec.families.end(),
                                    [](const Family& f) { return f.ring == Ring::constants; });
    if (finite) {
        std::array<std::size_t, 4> totals{};
        int top_degree = 0;
        for (int q = 0; q <= 3; ++q)
            for (int d = 0; d <= kGridDmax; ++d) {
                totals[q] += e.dims[q][d];
                if (e.dims[q][d] != 0)
                    top_degree = std::max(top_degree, d);
            }
        e.totals = totals;
        e.stable = true;
        e.totals_provenance = "stated";
        // stability needs three empty degrees above the last class
        e.min_dmax = top_degree + 3;
    } else {
        e.stable = false;
        e.min_dmax = 0;
    }

    for (const auto& f : spec.families)
        for (int d = std::max(0, f.shift); d <= spec.expand_dmax; ++d)
            for (const auto& m : ring_basis(f, d - f.shift))
                e.generators.push_back({f.q, d, format_multivector(f.generator(m)), f.name,
                                        f.literal ? "stated" : "oracle:family_enumeration"});
    std::stable_sort(e.generators.begin(), e.generators.end(),
                     [](const ExpectedGenerator& a, const ExpectedGenerator& b) {
                         return std::pair(a.q, a.d) < std::pair(b.q, b.d);
                     });
    e.generators_complete_dmax = spec.expand_dmax;
    e.witnesses = spec.witnesses;
    return e;
}

std::vector<ExpectedResult> build_all()
{
    std::vector<ExpectedResult> out;
    for (const auto& s : all_specs())
        out.push_back(build(s));
    return out;
}

}  // namespace poisson::oracle
